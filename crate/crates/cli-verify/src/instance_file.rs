//! Plain-text instance files.
//!
//! ```text
//! [ring]
//! p=32003
//! vars=x0,x1,x2,x3
//! quotient=
//! [F]
//! twists=-1,-1,-1,-1
//! [G]
//! twists=0
//! [phi]
//! x0; x1; x2; x3
//! [P]
//! twists=-3
//! [psi]
//! seed=7
//! ```
//!
//! Matrix rows list entries separated by `;`. `[psi]` holds either `seed=` or the
//! rows of `ψ: P -> F`. Lines starting with `#` are ignored.

use std::fmt::Write as _;

use br_construct::{validate_and_build, BrInstance};
use gralg_kernel::{Fp, GradedFreeModule, GradedRing, ModuleMap};
use groebner_engine::syzygies;
use sections_loci::{build_section, section_from_coefficients, SectionInstance, SectionSource};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiSpec {
    Seed(u64),
    Rows(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub characteristic: u32,
    pub vars: Vec<String>,
    pub quotient: Vec<String>,
    pub f: Vec<i32>,
    pub g: Vec<i32>,
    pub phi: Vec<Vec<String>>,
    pub p: Option<Vec<i32>>,
    pub psi: Option<PsiSpec>,
}

pub struct Built {
    pub br: BrInstance,
    pub section: Option<SectionInstance>,
}

fn parse_list<T: std::str::FromStr>(line: usize, v: &str) -> Result<Vec<T>, CliError> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Parse { line, msg: format!("cannot read {s:?}") }))
        .collect()
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn split_row(s: &str) -> Vec<String> {
    s.split(';').map(|e| e.trim().to_string()).collect()
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile, CliError> {
        let mut section = String::new();
        let (mut p, mut vars, mut quotient) = (None, None, Vec::new());
        let (mut f, mut g, mut pt) = (None, None, None);
        let mut phi = Vec::new();
        let mut psi_rows = Vec::new();
        let mut psi_seed = None;
        let mut phi_lines = Vec::new();
        let mut psi_lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            if let Some(name) = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
                section = name.trim().to_string();
                if !["ring", "F", "G", "phi", "P", "psi"].contains(&section.as_str()) {
                    return Err(CliError::Parse { line, msg: format!("unknown section [{section}]") });
                }
                continue;
            }
            let kv = s.split_once('=').map(|(k, v)| (k.trim(), v.trim()));
            match (section.as_str(), kv) {
                ("ring", Some(("p", v))) => {
                    p = Some(v.parse::<u32>().map_err(|_| CliError::Parse { line, msg: format!("bad prime {v:?}") })?)
                }
                ("ring", Some(("vars", v))) => vars = Some(v.split(',').map(|x| x.trim().to_string()).collect::<Vec<_>>()),
                ("ring", Some(("quotient", v))) => {
                    quotient = v.split(';').map(str::trim).filter(|x| !x.is_empty()).map(|x| (line, x.to_string())).collect()
                }
                ("F", Some(("twists", v))) => f = Some(parse_list::<i32>(line, v)?),
                ("G", Some(("twists", v))) => g = Some(parse_list::<i32>(line, v)?),
                ("P", Some(("twists", v))) => pt = Some(parse_list::<i32>(line, v)?),
                ("psi", Some(("seed", v))) => {
                    psi_seed = Some(v.parse::<u64>().map_err(|_| CliError::Parse { line, msg: format!("bad seed {v:?}") })?)
                }
                ("phi", None) => {
                    phi_lines.push(line);
                    phi.push(split_row(s));
                }
                ("psi", None) => {
                    psi_lines.push(line);
                    psi_rows.push(split_row(s));
                }
                ("", _) => return Err(CliError::Parse { line, msg: "content before the first section".into() }),
                (sec, _) => return Err(CliError::Parse { line, msg: format!("unexpected line in [{sec}]: {s:?}") }),
            }
        }
        let end = text.lines().count();
        let need = |what: &str| CliError::Parse { line: end, msg: format!("missing {what}") };
        let characteristic = p.ok_or_else(|| need("[ring] p"))?;
        let vars = vars.ok_or_else(|| need("[ring] vars"))?;
        let f = f.ok_or_else(|| need("[F] twists"))?;
        let g = g.ok_or_else(|| need("[G] twists"))?;
        let ring = GradedRing::new(
            Fp::new(characteristic).map_err(|e| CliError::Parse { line: 1, msg: e.to_string() })?,
            vars.clone(),
            Vec::new(),
        )
        .map_err(|e| CliError::Parse { line: 1, msg: e.to_string() })?;
        let canon = |line: usize, s: &str| -> Result<String, CliError> {
            let poly = ring.parse_poly(s).map_err(|e| CliError::Parse { line, msg: e.to_string() })?;
            Ok(ring.fmt_poly(&poly))
        };
        let quotient = quotient.iter().map(|(l, s)| canon(*l, s)).collect::<Result<Vec<_>, _>>()?;
        if phi.len() != g.len() {
            return Err(CliError::Parse { line: phi_lines.last().copied().unwrap_or(end), msg: format!("[phi] needs {} rows", g.len()) });
        }
        let mut phi_c = Vec::new();
        for (row, &l) in phi.iter().zip(&phi_lines) {
            if row.len() != f.len() {
                return Err(CliError::Parse { line: l, msg: format!("[phi] rows need {} entries", f.len()) });
            }
            phi_c.push(row.iter().map(|e| canon(l, e)).collect::<Result<Vec<_>, _>>()?);
        }
        let psi = match (psi_seed, psi_rows.is_empty()) {
            (Some(_), false) => return Err(CliError::Parse { line: psi_lines[0], msg: "[psi] has both seed and rows".into() }),
            (Some(s), true) => Some(PsiSpec::Seed(s)),
            (None, false) => {
                let t = pt.as_ref().map(Vec::len).ok_or_else(|| need("[P] twists"))?;
                if psi_rows.len() != f.len() {
                    return Err(CliError::Parse { line: psi_lines[0], msg: format!("[psi] needs {} rows", f.len()) });
                }
                let mut rows = Vec::new();
                for (row, &l) in psi_rows.iter().zip(&psi_lines) {
                    if row.len() != t {
                        return Err(CliError::Parse { line: l, msg: format!("[psi] rows need {t} entries") });
                    }
                    rows.push(row.iter().map(|e| canon(l, e)).collect::<Result<Vec<_>, _>>()?);
                }
                Some(PsiSpec::Rows(rows))
            }
            (None, true) => None,
        };
        if psi.is_some() && pt.is_none() {
            return Err(need("[P] twists"));
        }
        Ok(InstanceFile { characteristic, vars, quotient, f, g, phi: phi_c, p: pt, psi })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[ring]\np={}\nvars={}\nquotient={}", self.characteristic, self.vars.join(","), self.quotient.join("; "));
        let _ = writeln!(s, "[F]\ntwists={}\n[G]\ntwists={}", join(&self.f, ","), join(&self.g, ","));
        s.push_str("[phi]\n");
        for row in &self.phi {
            let _ = writeln!(s, "{}", row.join("; "));
        }
        if let Some(p) = &self.p {
            let _ = writeln!(s, "[P]\ntwists={}", join(p, ","));
        }
        match &self.psi {
            Some(PsiSpec::Seed(seed)) => {
                let _ = writeln!(s, "[psi]\nseed={seed}");
            }
            Some(PsiSpec::Rows(rows)) => {
                s.push_str("[psi]\n");
                for row in rows {
                    let _ = writeln!(s, "{}", row.join("; "));
                }
            }
            None => {}
        }
        s
    }

    pub fn ring(&self, max_degree: Option<u32>) -> Result<GradedRing, CliError> {
        let base = GradedRing::new(Fp::new(self.characteristic)?, self.vars.clone(), Vec::new())?;
        let quotient = self.quotient.iter().map(|q| base.parse_poly(q)).collect::<Result<Vec<_>, _>>()?;
        let ring = GradedRing::new(base.field(), self.vars.clone(), quotient)?;
        Ok(match max_degree {
            Some(d) => ring.with_max_degree(d),
            None => ring,
        })
    }

    fn matrix(ring: &GradedRing, rows: &[Vec<String>], source: &[i32], target: &[i32]) -> Result<ModuleMap, CliError> {
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|e| ring.parse_poly(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        ModuleMap::new(GradedFreeModule::new(source.to_vec()), GradedFreeModule::new(target.to_vec()), entries)
            .map_err(|e| CliError::Invalid(format!("map is not homogeneous of degree 0: {e}")))
    }

    pub fn build(&self, max_degree: Option<u32>) -> Result<Built, CliError> {
        let ring = self.ring(max_degree)?;
        let phi = Self::matrix(&ring, &self.phi, &self.f, &self.g)?;
        let br = validate_and_build(&ring, &phi)?;
        let section = match (&self.psi, &self.p) {
            (Some(PsiSpec::Seed(seed)), Some(p)) => Some(build_section(&br, &GradedFreeModule::new(p.clone()), SectionSource::Seed(*seed))?),
            (Some(PsiSpec::Rows(rows)), Some(p)) => {
                let psi = Self::matrix(&ring, rows, p, &self.f)?;
                let coefficients = lift_section(&br, &psi)?;
                Some(section_from_coefficients(&br, &coefficients)?)
            }
            _ => None,
        };
        Ok(Built { br, section })
    }

    /// File for `φ` with a seeded section.
    pub fn from_parts(br: &BrInstance, p: Option<&GradedFreeModule>, psi: Option<PsiSpec>) -> InstanceFile {
        let ring = &br.ring;
        InstanceFile {
            characteristic: ring.characteristic(),
            vars: ring.var_names().to_vec(),
            quotient: ring.quotient().iter().map(|q| ring.fmt_poly(q)).collect(),
            f: br.f().twists().to_vec(),
            g: br.g().twists().to_vec(),
            phi: rows_of(ring, &br.phi),
            p: p.map(|m| m.twists().to_vec()),
            psi,
        }
    }

    /// File carrying the explicit section `ψ: P -> F`.
    pub fn from_section(sec: &SectionInstance) -> InstanceFile {
        InstanceFile::from_parts(&sec.br, Some(&sec.p), Some(PsiSpec::Rows(rows_of(&sec.br.ring, &sec.psi))))
    }
}

fn rows_of(ring: &GradedRing, m: &ModuleMap) -> Vec<Vec<String>> {
    m.entries().iter().map(|row| row.iter().map(|e| ring.fmt_poly(e)).collect()).collect()
}

/// Coefficients `C` with `b_embedding ∘ C = ψ`, read off a syzygy of `[b | ψ_j]`
/// whose last entry is a unit.
pub fn lift_section(br: &BrInstance, psi: &ModuleMap) -> Result<ModuleMap, CliError> {
    let ring = &br.ring;
    let k = ring.field();
    if !br.phi.compose(psi, k)?.is_zero() {
        return Err(CliError::Invalid("phi ∘ psi is not zero: the columns of psi are not sections of B_phi".into()));
    }
    let b = &br.b_embedding;
    let mut cols = Vec::new();
    for j in 0..psi.cols() {
        let col = psi.select_columns(&[j]);
        let syz = syzygies(ring, &b.hstack(&col)?)?;
        let last = b.cols();
        let unit = (0..syz.cols()).find(|&c| {
            let e = syz.entry(last, c);
            !e.is_zero() && e.degree() == Some(0)
        });
        let Some(c) = unit else {
            return Err(CliError::Invalid(format!("column {j} of psi does not lie in B_phi")));
        };
        let scale = k.neg(k.inv(syz.entry(last, c).constant_term()));
        cols.push((0..last).map(|i| syz.entry(i, c).scale(scale, k)).collect());
    }
    Ok(ModuleMap::from_columns(b.source().clone(), cols, psi.source().twists().to_vec())?)
}
