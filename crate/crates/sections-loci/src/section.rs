use br_construct::{BrInstance, Validation, MAX_ATTEMPTS};
use gralg_kernel::random::random_map;
use gralg_kernel::{minors, GradedFreeModule, ModuleMap, Polynomial};
use groebner_engine::{codim, minimalize_ideal, syzygies};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::LociError;

/// How the coefficients of `ψ` against the generators of `B_φ` are chosen.
#[derive(Clone, Debug)]
pub enum SectionSource {
    Seed(u64),
    /// A map `P -> (generators of B_φ)`.
    Coefficients(ModuleMap),
}

/// `t` sections `ψ: P -> B_φ` with a validated degeneracy ideal.
#[derive(Clone, Debug)]
pub struct SectionInstance {
    pub br: BrInstance,
    pub p: GradedFreeModule,
    /// `P -> (generators of B_φ)`.
    pub coefficients: ModuleMap,
    /// `P -> F`; columns lie in `B_φ`.
    pub psi: ModuleMap,
    pub t: usize,
    /// `R(p) ≅ ∧^t P*`.
    pub p_twist: i32,
    /// Minimal generators of `I(ψ)`.
    pub ideal: Vec<Polynomial>,
    pub validation: Validation,
}

impl SectionInstance {
    pub fn r(&self) -> usize {
        self.br.r
    }

    pub fn n(&self) -> usize {
        self.br.n()
    }

    /// `r + t` odd.
    pub fn odd(&self) -> bool {
        (self.br.r + self.t) % 2 == 1
    }
}

fn check_feasible(inst: &BrInstance, p: &GradedFreeModule) -> Result<(), LociError> {
    let gens = inst.b_embedding.source().twists();
    if p.twists().iter().all(|&a| gens.iter().any(|&b| b >= a)) {
        Ok(())
    } else {
        Err(LociError::DegreeInfeasible)
    }
}

/// Pushes `coefficients` into `F` and validates `codim I(ψ) = r - t + 1`.
pub fn section_from_coefficients(inst: &BrInstance, coefficients: &ModuleMap) -> Result<SectionInstance, LociError> {
    let t = coefficients.cols();
    if t == 0 || t >= inst.r {
        return Err(LociError::Range(format!("need 1 <= t < r, got t = {t}, r = {}", inst.r)));
    }
    if coefficients.target() != inst.b_embedding.source() {
        return Err(LociError::Range("coefficients must map into the generators of B_phi".into()));
    }
    let ring = &inst.ring;
    let k = ring.field();
    let psi = inst.b_embedding.compose(coefficients, k)?;
    let mins: Vec<Polynomial> = minors(&psi, t, k).into_iter().filter(|m| !m.is_zero()).collect();
    let expected = (inst.r - t + 1) as i32;
    let actual = if mins.is_empty() { 0 } else { codim(ring, &mins)? };
    if actual != expected {
        return Err(LociError::CodimFailure { actual, expected });
    }
    let p = coefficients.source().clone();
    Ok(SectionInstance {
        br: inst.clone(),
        p_twist: -p.twists().iter().sum::<i32>(),
        p,
        coefficients: coefficients.clone(),
        psi,
        t,
        ideal: minimalize_ideal(ring, &mins)?,
        validation: Validation { codim: actual, expected, passed: true },
    })
}

/// Random or supplied sections; random choices are resampled on codimension failure.
pub fn build_section(inst: &BrInstance, p: &GradedFreeModule, source: SectionSource) -> Result<SectionInstance, LociError> {
    check_feasible(inst, p)?;
    match source {
        SectionSource::Coefficients(c) => section_from_coefficients(inst, &c),
        SectionSource::Seed(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut last = None;
            for _ in 0..MAX_ATTEMPTS {
                let c = random_map(&inst.ring, p, inst.b_embedding.source(), &mut rng);
                match section_from_coefficients(inst, &c) {
                    Err(e @ LociError::CodimFailure { .. }) => last = Some(e),
                    other => return other,
                }
            }
            Err(last.expect("at least one attempt"))
        }
    }
}

/// `I(ψ)` read off `∧^t ψ*: ∧^t B_φ* -> ∧^t P*`, with `B_φ*` generated inside the
/// dual of the generators of `B_φ` as the kernel of the dual relations.
pub fn ideal_via_dual(sec: &SectionInstance) -> Result<Vec<Polynomial>, LociError> {
    let ring = &sec.br.ring;
    let k = ring.field();
    let rel = sec.br.b_phi.relations();
    let dual_gens = if rel.cols() == 0 {
        ModuleMap::identity(&rel.target().dual())
    } else {
        syzygies(ring, &rel.dual())?
    };
    let restricted = sec.coefficients.dual().compose(&dual_gens, k)?;
    let mins: Vec<Polynomial> = minors(&restricted, sec.t, k).into_iter().filter(|m| !m.is_zero()).collect();
    Ok(minimalize_ideal(ring, &mins)?)
}

/// Some coefficient of `ψ` is a unit, so a column of `ψ` is a minimal generator of `B_φ`
/// up to the others.
pub fn hits_minimal_generator(sec: &SectionInstance) -> bool {
    !sec.coefficients.is_minimal()
}
