use rand::Rng;

use crate::mono::monomials_of_degree;
use crate::{GradedFreeModule, GradedRing, ModuleMap, Polynomial};

/// Dense random form of degree `d`; coefficients uniform in `F_p`.
pub fn random_form<R: Rng + ?Sized>(ring: &GradedRing, d: i32, rng: &mut R) -> Polynomial {
    if d < 0 {
        return Polynomial::zero();
    }
    let p = ring.characteristic();
    let terms = monomials_of_degree(ring.nvars(), d as u32)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..p)))
        .filter(|t| t.1 != 0)
        .collect();
    Polynomial::from_sorted_terms(terms)
}

/// Random homogeneous matrix `source -> target` with entries of the forced degrees.
pub fn random_map<R: Rng + ?Sized>(
    ring: &GradedRing,
    source: &GradedFreeModule,
    target: &GradedFreeModule,
    rng: &mut R,
) -> ModuleMap {
    let entries = target
        .twists()
        .iter()
        .map(|&ti| source.twists().iter().map(|&sj| random_form(ring, ti - sj, rng)).collect())
        .collect();
    ModuleMap::new(source.clone(), target.clone(), entries).expect("random entries have forced degrees")
}
