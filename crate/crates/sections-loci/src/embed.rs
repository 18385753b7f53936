use std::collections::HashMap;

use br_construct::{random_instance, BrInstance, MAX_ATTEMPTS};
use gralg_kernel::mono::monomials_of_degree;
use gralg_kernel::random::random_form;
use gralg_kernel::{GradedFreeModule, GradedRing, Mono, ModuleMap, Polynomial};
use groebner_engine::{codim, ideal_gb, ideal_is_subset};
use rand::Rng;
use serde::Serialize;

use crate::linalg::nullspace;
use crate::locus::QuotientData;
use crate::section::{section_from_coefficients, SectionInstance};
use crate::LociError;

/// A section of `B_φ(d)` vanishing on `X` and the AG scheme `Y ⊇ X` it cuts out.
#[derive(Clone, Debug)]
pub struct AgEmbedding {
    pub section: SectionInstance,
    pub i_y: Vec<Polynomial>,
    pub y: QuotientData,
    pub contains_x: bool,
    pub gorenstein: bool,
    /// Dimension of the space of sections of degree `d` with coordinates in `I_X`.
    pub solution_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingSummary {
    pub degree: i64,
    pub dim: i32,
    pub contains_x: bool,
    pub gorenstein: bool,
    pub solution_dim: usize,
}

impl AgEmbedding {
    pub fn summary(&self) -> EmbeddingSummary {
        EmbeddingSummary {
            degree: self.y.degree,
            dim: self.y.dim,
            contains_x: self.contains_x,
            gorenstein: self.gorenstein,
            solution_dim: self.solution_dim,
        }
    }
}

/// Basis of the sections `P = R(-d) -> (generators of B_φ)` whose image in `F`
/// has every coordinate in `I_X`, as coefficient maps.
fn sections_in_ideal(inst: &BrInstance, i_x: &[Polynomial], d: i32) -> Result<Vec<ModuleMap>, LociError> {
    let ring = &inst.ring;
    let k = ring.field();
    let gb = ideal_gb(ring, i_x)?;
    let gens = inst.b_embedding.source();
    let mut candidates: Vec<(usize, Mono)> = Vec::new();
    for (b, &tw) in gens.twists().iter().enumerate() {
        let e = d + tw;
        if e >= 0 {
            candidates.extend(monomials_of_degree(ring.nvars(), e as u32).into_iter().map(|m| (b, m)));
        }
    }
    let mut index: HashMap<(usize, Mono), usize> = HashMap::new();
    let mut columns: Vec<Vec<(usize, u32)>> = Vec::with_capacity(candidates.len());
    for &(b, m) in &candidates {
        let mut col = Vec::new();
        for (row, coord) in inst.b_embedding.column(b).iter().enumerate() {
            let v = gb.normal_form(&[coord.mul_term(m, 1, k)]).remove(0);
            for &(mono, c) in v.terms() {
                let next = index.len();
                let key = *index.entry((row, mono)).or_insert(next);
                col.push((key, c));
            }
        }
        columns.push(col);
    }
    let mut a = vec![vec![0u32; candidates.len()]; index.len()];
    for (j, col) in columns.iter().enumerate() {
        for &(i, c) in col {
            a[i][j] = k.add(a[i][j], c);
        }
    }
    let p = GradedFreeModule::uniform(1, -d);
    Ok(nullspace(k, a, candidates.len())
        .into_iter()
        .map(|v| {
            let mut entries = vec![vec![Polynomial::zero()]; gens.rank()];
            for (&(b, m), &c) in candidates.iter().zip(&v) {
                if c != 0 {
                    entries[b][0] = entries[b][0].add(&Polynomial::term(m, c), k);
                }
            }
            ModuleMap::new(p.clone(), gens.clone(), entries).expect("coefficients have forced degrees")
        })
        .collect())
}

/// Finds `s ∈ H^0(B_φ(d))` with coordinates in `I_X` and returns the top-dimensional
/// part `I_Y ⊆ I_X` of its zero locus. `I_X` must have codimension `r`, `r` odd.
pub fn ag_embed<R: Rng + ?Sized>(
    inst: &BrInstance,
    i_x: &[Polynomial],
    d: i32,
    rng: &mut R,
) -> Result<AgEmbedding, LociError> {
    let ring = &inst.ring;
    let k = ring.field();
    if inst.r % 2 == 0 {
        return Err(LociError::Range(format!("rank r = {} must be odd", inst.r)));
    }
    let cx = codim(ring, i_x)?;
    if cx != inst.r as i32 {
        return Err(LociError::Range(format!("codim I_X = {cx}, need r = {}", inst.r)));
    }
    let basis = sections_in_ideal(inst, i_x, d)?;
    if basis.is_empty() {
        return Err(LociError::NoSectionFound { degree: d });
    }
    let mut last = LociError::NoSectionFound { degree: d };
    for _ in 0..MAX_ATTEMPTS {
        let mut c = basis[0].scale(0, k);
        for b in &basis {
            c = c.add(&b.scale(rng.gen_range(1..k.modulus()), k), k)?;
        }
        let section = match section_from_coefficients(inst, &c) {
            Ok(s) => s,
            Err(e @ LociError::CodimFailure { .. }) => {
                last = e;
                continue;
            }
            Err(e) => return Err(e),
        };
        let i_y = crate::top_dimensional_part(&section)?;
        let (y, _) = QuotientData::compute(ring, &i_y)?;
        let contains_x = ideal_is_subset(ring, &i_y, i_x)?;
        let gorenstein = y.is_cohen_macaulay() && y.cm_type() == 1;
        return Ok(AgEmbedding { section, i_y, y, contains_x, gorenstein, solution_dim: basis.len() });
    }
    Err(last)
}

/// Result of the even-codimension route through a hypersurface containing `X`.
#[derive(Clone, Debug)]
pub struct EvenEmbedding {
    pub hypersurface: Polynomial,
    pub quotient_ring: GradedRing,
    pub inner: AgEmbedding,
    /// `I_Y + (f)` in the ambient ring.
    pub i_y: Vec<Polynomial>,
    pub y: QuotientData,
    pub contains_x: bool,
    pub gorenstein: bool,
}

/// For `codim I_X` even: pass to `R = R'/(f)` with `f ∈ I_X` general of degree `e`, where
/// `X` has odd codimension, embed there with a generic linear `φ: R(-1)^{c} -> R`,
/// and lift the result back to `R'`.
pub fn ag_embed_even<R: Rng + ?Sized>(
    ambient: &GradedRing,
    i_x: &[Polynomial],
    e: i32,
    d: i32,
    rng: &mut R,
) -> Result<EvenEmbedding, LociError> {
    let k = ambient.field();
    let c = codim(ambient, i_x)?;
    if c % 2 != 0 || c < 2 {
        return Err(LociError::Range(format!("codim I_X = {c} must be even and at least 2")));
    }
    let mut f = Polynomial::zero();
    for g in i_x {
        let dg = g.degree().unwrap_or(0) as i32;
        f = f.add(&random_form(ambient, e - dg, rng).mul(g, k), k);
    }
    if f.is_zero() {
        return Err(LociError::Range(format!("I_X has no element of degree {e}")));
    }
    let quotient_ring = GradedRing::new(k, ambient.var_names().to_vec(), vec![f.clone()])?;
    let inst = random_instance(
        &quotient_ring,
        &GradedFreeModule::uniform(c as usize, -1),
        &GradedFreeModule::uniform(1, 0),
        rng,
    )?;
    let inner = ag_embed(&inst, i_x, d, rng)?;
    let mut i_y = inner.i_y.clone();
    i_y.push(f.clone());
    let i_y = groebner_engine::minimalize_ideal(ambient, &i_y)?;
    let (y, _) = QuotientData::compute(ambient, &i_y)?;
    let contains_x = ideal_is_subset(ambient, &i_y, i_x)?;
    let gorenstein = y.is_cohen_macaulay() && y.cm_type() == 1;
    Ok(EvenEmbedding { hypersurface: f, quotient_ring, inner, i_y, y, contains_x, gorenstein })
}
