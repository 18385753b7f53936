use gralg_kernel::random::random_map;
use gralg_kernel::{minors, GradedFreeModule, GradedRing, ModuleMap, Polynomial};
use groebner_engine::{codim, syzygies, ModulePresentation};
use rand::Rng;
use serde::Serialize;

use crate::BrError;

/// Resampling cap for random constructions.
pub const MAX_ATTEMPTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub codim: i32,
    pub expected: i32,
    pub passed: bool,
}

/// A validated map `φ: F -> G` with `codim I(φ) = f - g + 1` and its Buchsbaum–Rim module.
#[derive(Clone, Debug)]
pub struct BrInstance {
    pub ring: GradedRing,
    pub phi: ModuleMap,
    pub r: usize,
    /// Generators of `B_φ = ker φ` as columns in `F`.
    pub b_embedding: ModuleMap,
    /// `B_φ` as the cokernel of the syzygies among those generators.
    pub b_phi: ModulePresentation,
    /// `M_φ = coker φ`.
    pub m_phi: ModulePresentation,
    pub minors: Vec<Polynomial>,
    pub validation: Validation,
}

impl BrInstance {
    pub fn f(&self) -> &GradedFreeModule {
        self.phi.source()
    }

    pub fn g(&self) -> &GradedFreeModule {
        self.phi.target()
    }

    /// `c1` with `R(-c1) ≅ ∧^f F* ⊗ ∧^g G`.
    pub fn c1(&self) -> i32 {
        koszul_complexes::splice_twist(&self.phi)
    }

    /// Projective dimension `n` with `R = K[x_0..x_n]` (or its quotient).
    pub fn n(&self) -> usize {
        self.ring.nvars() - 1
    }
}

/// Checks the shape and `codim I(φ) = f - g + 1`, then computes `B_φ` and `M_φ`.
pub fn validate_and_build(ring: &GradedRing, phi: &ModuleMap) -> Result<BrInstance, BrError> {
    let (f, g) = (phi.cols(), phi.rows());
    if g == 0 || f <= g {
        return Err(BrError::Ranks { f, g });
    }
    let r = f - g;
    let n = ring.krull_dim() as usize - 1;
    if r > n {
        return Err(BrError::RankTooLarge { r, n });
    }
    let k = ring.field();
    let mins: Vec<Polynomial> = minors(phi, g, k).into_iter().filter(|p| !p.is_zero()).collect();
    let expected = r as i32 + 1;
    let actual = if mins.is_empty() { 0 } else { codim(ring, &mins)? };
    if actual != expected {
        return Err(BrError::CodimFailure { actual, expected });
    }
    let b_embedding = syzygies(ring, phi)?;
    let b_rel = syzygies(ring, &b_embedding)?;
    Ok(BrInstance {
        ring: ring.clone(),
        phi: phi.clone(),
        r,
        b_phi: ModulePresentation::new(ring, b_rel),
        m_phi: ModulePresentation::new(ring, phi.clone()),
        b_embedding,
        minors: mins,
        validation: Validation { codim: actual, expected, passed: true },
    })
}

/// Random `φ: F -> G` with the given twists, resampled until it validates.
pub fn random_instance<R: Rng + ?Sized>(
    ring: &GradedRing,
    f: &GradedFreeModule,
    g: &GradedFreeModule,
    rng: &mut R,
) -> Result<BrInstance, BrError> {
    let mut last = None;
    for _ in 0..MAX_ATTEMPTS {
        let phi = random_map(ring, f, g, rng);
        match validate_and_build(ring, &phi) {
            Err(e @ BrError::CodimFailure { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}
