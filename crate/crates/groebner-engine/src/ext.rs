use gralg_kernel::{FreeComplex, GradedFreeModule, GradedRing, ModuleMap, Polynomial};

use crate::basis::GroebnerBasis;
use crate::hilbert::HilbertSeries;
use crate::ideal::{intersect, minimalize_ideal};
use crate::presentation::ModulePresentation;
use crate::syzygy::{syzygies, syzygies_modulo};
use crate::GbError;

/// Presentation `Rel -> K0` of `ker(alpha) / im(beta)`, where `alpha ∘ beta = 0`.
pub fn homology_presentation(ring: &GradedRing, alpha: &ModuleMap, beta: &ModuleMap) -> Result<ModuleMap, GbError> {
    if alpha.source() != beta.target() {
        return Err(GbError::Invalid("homology of maps that do not compose".into()));
    }
    let kernel = syzygies(ring, alpha)?;
    if kernel.cols() == 0 {
        return Ok(ModuleMap::zero(GradedFreeModule::zero(), GradedFreeModule::zero()));
    }
    syzygies_modulo(ring, &kernel, Some(beta))
}

/// `d_i^*: F_{i-1}^* -> F_i^*`.
fn dual_differential(c: &FreeComplex, i: i32) -> ModuleMap {
    c.differential(i).dual()
}

/// Presentation of `H^i(Hom(F, S))` for a free complex `F`.
pub fn dual_cohomology(ring: &GradedRing, c: &FreeComplex, i: i32) -> Result<ModuleMap, GbError> {
    homology_presentation(ring, &dual_differential(c, i + 1), &dual_differential(c, i))
}

fn series_of_image(ring: &GradedRing, f: &ModuleMap) -> Result<HilbertSeries, GbError> {
    let n = ring.nvars();
    if f.is_zero() {
        return Ok(HilbertSeries::zero(n));
    }
    Ok(GroebnerBasis::of_image(ring, f)?.submodule_series())
}

/// Series of `H^i(Hom(F, S))` from Gröbner bases of the two images only.
pub fn dual_cohomology_series(ring: &GradedRing, c: &FreeComplex, i: i32) -> Result<HilbertSeries, GbError> {
    let n = ring.nvars();
    let fi = HilbertSeries::free(n, &c.term(i).dual());
    let out = series_of_image(ring, &dual_differential(c, i + 1))?;
    let inc = series_of_image(ring, &dual_differential(c, i))?;
    Ok(fi.sub(&out).sub(&inc))
}

fn shift_data(ring: &GradedRing) -> (i32, i32) {
    let c = ring.quotient().len() as i32;
    let s: i32 = ring.quotient_degrees().iter().map(|&d| d as i32).sum();
    (c, s)
}

/// `Ext^i_R(M, R)` as a module over the ring of `m`.
///
/// Over `R = S/(q)` with `q` regular of degrees `d_j`, this is `Ext^{i+c}_S(M, S)(-Σ d_j)`.
pub fn ext_module(m: &ModulePresentation, i: i32) -> Result<ModulePresentation, GbError> {
    let ring = m.ring();
    let (c, s) = shift_data(ring);
    let amb = ring.ambient();
    let res = m.ambient_resolution()?;
    let rel = dual_cohomology(&amb, res, i + c)?;
    Ok(ModulePresentation::new(ring, rel.twist(-s)))
}

/// Hilbert series of `Ext^i_R(M, R)` without building its presentation.
pub fn ext_series(m: &ModulePresentation, i: i32) -> Result<HilbertSeries, GbError> {
    let ring = m.ring();
    let (c, s) = shift_data(ring);
    let amb = ring.ambient();
    let res = m.ambient_resolution()?;
    Ok(dual_cohomology_series(&amb, res, i + c)?.twist(-s))
}

/// `Ann(M)` as an ideal of the ring of `m`.
pub fn annihilator(m: &ModulePresentation) -> Result<Vec<Polynomial>, GbError> {
    let ring = m.ring();
    let gens = m.generators();
    let rel = m.ambient_relations();
    let mut parts = Vec::with_capacity(gens.rank());
    for j in 0..gens.rank() {
        let col: Vec<Polynomial> =
            (0..gens.rank()).map(|i| if i == j { Polynomial::one() } else { Polynomial::zero() }).collect();
        let e = ModuleMap::from_columns(gens.clone(), vec![col], vec![gens.twists()[j]])?;
        let syz = syzygies_modulo(ring, &e, Some(&rel))?;
        parts.push(syz.entries()[0].clone());
    }
    intersect(ring, &parts)
}

/// Intersection of the primary components of `I` of maximal dimension.
pub fn equidimensional_hull(ring: &GradedRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>, GbError> {
    let amb = ring.ambient();
    let mut all: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    all.extend(ring.quotient().iter().cloned());
    let quot = ModulePresentation::cyclic(&amb, &all);
    let d = quot.dimension()?;
    if d < 0 {
        return Ok(vec![Polynomial::one()]);
    }
    let c = amb.nvars() as i32 - d;
    let e = ext_module(&quot, c)?;
    let ann = annihilator(&e)?;
    minimalize_ideal(ring, &ann)
}
