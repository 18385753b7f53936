use br_construct::random_instance;
use gralg_kernel::{GradedFreeModule, GradedRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::section::{build_section, SectionInstance, SectionSource};
use crate::LociError;

/// One randomized instance: generic linear `φ: R(-1)^{r+g} -> R^g` on `P^n` and
/// `t` sections of `B_φ` with linear coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryCase {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub g: usize,
    pub seed: u64,
}

/// Every `(n, r, t)` with `r <= n`, `1 <= t < r`, repeated over `seeds` seeds.
pub fn battery_grid(ns: &[usize], rs: &[usize], g: usize, seeds: u64) -> Vec<BatteryCase> {
    let mut out = Vec::new();
    for seed in 0..seeds {
        for &n in ns {
            for &r in rs.iter().filter(|&&r| r >= 2 && r <= n) {
                for t in 1..r {
                    out.push(BatteryCase { n, r, t, g, seed });
                }
            }
        }
    }
    out
}

pub fn build_case(case: &BatteryCase, p: u32) -> Result<SectionInstance, LociError> {
    let ring = GradedRing::polynomial(case.n + 1, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(case.seed ^ ((case.n as u64) << 40 | (case.r as u64) << 32 | (case.t as u64) << 24));
    let f = GradedFreeModule::uniform(case.r + case.g, -1);
    let g = GradedFreeModule::uniform(case.g, 0);
    let inst = random_instance(&ring, &f, &g, &mut rng)?;
    let top = inst.b_embedding.source().twists().iter().copied().min().unwrap_or(0);
    let p_mod = GradedFreeModule::uniform(case.t, top - 1);
    build_section(&inst, &p_mod, SectionSource::Seed(case.seed))
}
