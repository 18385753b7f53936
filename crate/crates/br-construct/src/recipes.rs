use gralg_kernel::random::{random_form, random_map};
use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap, Polynomial};
use groebner_engine::{codim, ideal_equal, power_of_maximal_ideal};
use rand::Rng;

use crate::instance::MAX_ATTEMPTS;
use crate::{validate_and_build, BrError, BrInstance};

/// `φ = (x_0, …, x_n): R(-1)^{n+1} -> R`; `B_φ` is the module of the cotangent bundle.
pub fn cotangent(ring: &GradedRing) -> Result<BrInstance, BrError> {
    let n1 = ring.nvars();
    let row: Vec<Polynomial> = (0..n1).map(|i| ring.var(i)).collect();
    let phi = ModuleMap::new(GradedFreeModule::uniform(n1, -1), GradedFreeModule::uniform(1, 0), vec![row])?;
    validate_and_build(ring, &phi)
}

/// Generic linear `φ: R(-1)^{n+k} -> R^k`, certified by `I(φ) = m^k`.
pub fn power_map<R: Rng + ?Sized>(ring: &GradedRing, k: usize, rng: &mut R) -> Result<BrInstance, BrError> {
    if k == 0 {
        return Err(BrError::Recipe("k must be positive".into()));
    }
    let n1 = ring.nvars();
    let target = power_of_maximal_ideal(ring, k as u32);
    for _ in 0..MAX_ATTEMPTS {
        let phi = random_map(ring, &GradedFreeModule::uniform(n1 - 1 + k, -1), &GradedFreeModule::uniform(k, 0), rng);
        let Ok(inst) = validate_and_build(ring, &phi) else { continue };
        if ideal_equal(ring, &inst.minors, &target)? {
            return Ok(inst);
        }
    }
    Err(BrError::Recipe(format!("no map with I(phi) = m^{k} after {MAX_ATTEMPTS} attempts")))
}

/// Generalized null correlation datum: a complete intersection `f_0..f_n` with
/// `deg f_{2i} + deg f_{2i+1} = c`, `φ = (f_0, …, f_n)`, and the section
/// `s = Σ_i f_{2i+1} e_{2i} - f_{2i} e_{2i+1}` of `B_φ(c)`, which vanishes nowhere.
pub fn null_correlation_recipe<R: Rng + ?Sized>(
    ring: &GradedRing,
    degrees: &[u32],
    rng: &mut R,
) -> Result<(BrInstance, ModuleMap), BrError> {
    let n1 = ring.nvars();
    if n1 % 2 != 0 {
        return Err(BrError::Recipe(format!("n = {} must be odd", n1 as i64 - 1)));
    }
    if degrees.len() != n1 || degrees.contains(&0) {
        return Err(BrError::Recipe(format!("need {n1} positive degrees")));
    }
    let c = degrees[0] + degrees[1];
    if degrees.chunks(2).any(|p| p[0] + p[1] != c) {
        return Err(BrError::Recipe(format!("degrees {degrees:?} do not pair to a constant sum")));
    }
    let k = ring.field();
    for _ in 0..MAX_ATTEMPTS {
        let fs: Vec<Polynomial> = degrees.iter().map(|&d| random_form(ring, d as i32, rng)).collect();
        if codim(ring, &fs)? != n1 as i32 {
            continue;
        }
        let source = GradedFreeModule::new(degrees.iter().map(|&d| -(d as i32)).collect());
        let phi = ModuleMap::new(source.clone(), GradedFreeModule::uniform(1, 0), vec![fs.clone()])?;
        let inst = validate_and_build(ring, &phi)?;
        let mut col = vec![Polynomial::zero(); n1];
        for i in (0..n1).step_by(2) {
            col[i] = fs[i + 1].clone();
            col[i + 1] = fs[i].scale(k.neg(1), k);
        }
        let section = ModuleMap::from_columns(source, vec![col], vec![-(c as i32)])?;
        return Ok((inst, section));
    }
    Err(BrError::Recipe("no complete intersection found".into()))
}

/// The coordinate ideal of a single section has codimension `n + 1`: no zeros on `P^n`.
pub fn is_nowhere_vanishing(ring: &GradedRing, section: &ModuleMap) -> Result<bool, BrError> {
    let coords: Vec<Polynomial> = section.column(0).into_iter().filter(|p| !p.is_zero()).collect();
    Ok(!coords.is_empty() && codim(ring, &coords)? == ring.krull_dim())
}
