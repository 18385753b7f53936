use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap};

use crate::hilbert::HilbertSeries;
use crate::presentation::ModulePresentation;
use crate::GbError;

/// Series of the ring itself: `prod (1 - t^d_j) / (1-t)^nvars` over the quotient degrees.
pub fn ring_series(ring: &GradedRing) -> HilbertSeries {
    let mut num = vec![1i64];
    for d in ring.quotient_degrees() {
        let mut next = vec![0i64; num.len() + d as usize];
        for (i, &c) in num.iter().enumerate() {
            next[i] += c;
            next[i + d as usize] -= c;
        }
        num = next;
    }
    HilbertSeries::from_numerator(ring.nvars(), 0, num)
}

/// Series of a free module over the ring.
pub fn free_series(ring: &GradedRing, m: &GradedFreeModule) -> HilbertSeries {
    ring_series(ring).tensor_free(m)
}

/// Series of `coker f` over the ring.
pub fn cokernel_series(ring: &GradedRing, f: &ModuleMap) -> Result<HilbertSeries, GbError> {
    if f.is_zero() {
        return Ok(free_series(ring, f.target()));
    }
    ModulePresentation::new(ring, f.clone()).hilbert_series()
}

/// Series of `im f` over the ring.
pub fn image_series(ring: &GradedRing, f: &ModuleMap) -> Result<HilbertSeries, GbError> {
    Ok(free_series(ring, f.target()).sub(&cokernel_series(ring, f)?))
}

/// Series of `ker(alpha) / im(beta)` for `alpha ∘ beta = 0`.
pub fn homology_series(ring: &GradedRing, alpha: &ModuleMap, beta: &ModuleMap) -> Result<HilbertSeries, GbError> {
    let mid = free_series(ring, alpha.source());
    Ok(mid.sub(&image_series(ring, alpha)?).sub(&image_series(ring, beta)?))
}
