use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap, Polynomial};

use crate::basis::GroebnerBasis;
use crate::presentation::ModulePresentation;
use crate::syzygy::{minimal_generator_indices, syzygies_modulo};
use crate::GbError;

fn nonzero(gens: &[Polynomial]) -> Vec<Polynomial> {
    gens.iter().filter(|g| !g.is_zero()).cloned().collect()
}

/// Row map `R(-deg g_1) ⊕ ... -> R`.
pub fn ideal_map(gens: &[Polynomial]) -> ModuleMap {
    let g = nonzero(gens);
    let twists = g.iter().map(|p| -(p.degree().unwrap() as i32)).collect();
    let cols = g.into_iter().map(|p| vec![p]).collect();
    ModuleMap::from_columns(GradedFreeModule::new(vec![0]), cols, twists).expect("homogeneous generators")
}

/// Generators of `I + q` in the ambient ring.
fn with_quotient(ring: &GradedRing, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut v = nonzero(gens);
    v.extend(ring.quotient().iter().cloned());
    v
}

pub fn ideal_gb(ring: &GradedRing, gens: &[Polynomial]) -> Result<GroebnerBasis, GbError> {
    let cols: Vec<Vec<Polynomial>> = with_quotient(ring, gens).into_iter().map(|g| vec![g]).collect();
    GroebnerBasis::compute(ring, &GradedFreeModule::new(vec![0]), &cols)
}

pub fn ideal_contains(ring: &GradedRing, gens: &[Polynomial], f: &Polynomial) -> Result<bool, GbError> {
    Ok(ideal_gb(ring, gens)?.contains(std::slice::from_ref(f)))
}

pub fn ideal_is_subset(ring: &GradedRing, a: &[Polynomial], b: &[Polynomial]) -> Result<bool, GbError> {
    let gb = ideal_gb(ring, b)?;
    Ok(a.iter().all(|f| gb.contains(std::slice::from_ref(f))))
}

pub fn ideal_equal(ring: &GradedRing, a: &[Polynomial], b: &[Polynomial]) -> Result<bool, GbError> {
    Ok(ideal_is_subset(ring, a, b)? && ideal_is_subset(ring, b, a)?)
}

/// Minimal generators of the image of `I` in the ring, quotient generators removed.
pub fn minimalize_ideal(ring: &GradedRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>, GbError> {
    let mut all: Vec<Polynomial> = ring.quotient().to_vec();
    let nq = all.len();
    all.extend(nonzero(gens));
    let keep = minimal_generator_indices(ring, &ideal_map(&all))?;
    Ok(keep.into_iter().filter(|&i| i >= nq).map(|i| all[i].clone()).collect())
}

pub fn ideal_sum(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    nonzero(a).into_iter().chain(nonzero(b)).collect()
}

/// `∩ I_j`, each taken together with the quotient ideal.
pub fn intersect(ring: &GradedRing, ideals: &[Vec<Polynomial>]) -> Result<Vec<Polynomial>, GbError> {
    if ideals.is_empty() {
        return Ok(vec![Polynomial::one()]);
    }
    let s = ideals.len();
    let diag = ModuleMap::from_columns(GradedFreeModule::uniform(s, 0), vec![vec![Polynomial::one(); s]], vec![0])?;
    let mut cols = Vec::new();
    let mut twists = Vec::new();
    for (j, id) in ideals.iter().enumerate() {
        for g in with_quotient(ring, id) {
            let mut c = vec![Polynomial::zero(); s];
            twists.push(-(g.degree().unwrap() as i32));
            c[j] = g;
            cols.push(c);
        }
    }
    let modulo = ModuleMap::from_columns(GradedFreeModule::uniform(s, 0), cols, twists)?;
    let syz = syzygies_modulo(ring, &diag, Some(&modulo))?;
    minimalize_ideal(ring, &syz.entries()[0])
}

/// `(I : f)`.
fn colon_element(ring: &GradedRing, gens: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>, GbError> {
    if f.is_zero() {
        return Ok(vec![Polynomial::one()]);
    }
    let d = f.degree().unwrap() as i32;
    let map = ModuleMap::from_columns(GradedFreeModule::new(vec![0]), vec![vec![f.clone()]], vec![-d])?;
    let modulo = ideal_map(&with_quotient(ring, gens));
    let syz = syzygies_modulo(ring, &map, Some(&modulo))?;
    Ok(syz.entries()[0].clone())
}

/// `(I : J)`.
pub fn quotient(ring: &GradedRing, i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>, GbError> {
    let parts = nonzero(j).iter().map(|f| colon_element(ring, i, f)).collect::<Result<Vec<_>, _>>()?;
    intersect(ring, &parts)
}

/// `(I : m^∞)`.
pub fn saturate(ring: &GradedRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>, GbError> {
    let m: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
    let mut cur = minimalize_ideal(ring, gens)?;
    let mut hs = ModulePresentation::cyclic(ring, &cur).hilbert_series()?;
    loop {
        let next = quotient(ring, &cur, &m)?;
        let nhs = ModulePresentation::cyclic(ring, &next).hilbert_series()?;
        if nhs == hs {
            return Ok(cur);
        }
        cur = next;
        hs = nhs;
    }
}

/// `dim R - dim R/I`; the unit ideal gets `dim R + 1`.
pub fn codim(ring: &GradedRing, gens: &[Polynomial]) -> Result<i32, GbError> {
    let d = ModulePresentation::cyclic(ring, gens).dimension()?;
    Ok(ring.krull_dim() - d)
}

/// Generators of `m^k`.
pub fn power_of_maximal_ideal(ring: &GradedRing, k: u32) -> Vec<Polynomial> {
    gralg_kernel::mono::monomials_of_degree(ring.nvars(), k).into_iter().map(|m| Polynomial::term(m, 1)).collect()
}
