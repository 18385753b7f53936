use gralg_kernel::{GradedRing, Polynomial};
use groebner_engine::{
    equidimensional_hull, ext_module, ext_series, ideal_equal, saturate, BettiTable, HilbertSeries, ModulePresentation,
};
use koszul_complexes::{predict_all, CmTypeBound, LocusClass, PredictionReport};
use serde::Serialize;

use crate::claim::{Claim, Status};
use crate::section::SectionInstance;
use crate::LociError;

/// `J(ψ)`: the intersection of the primary components of `I(ψ)` of minimal codimension.
pub fn top_dimensional_part(sec: &SectionInstance) -> Result<Vec<Polynomial>, LociError> {
    Ok(equidimensional_hull(&sec.br.ring, &sec.ideal)?)
}

/// Invariants of one cyclic module `R/I`, all computed.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientData {
    pub generators: Vec<String>,
    pub dim: i32,
    pub degree: i64,
    pub depth: i32,
    pub betti: BettiTable,
    pub series: HilbertSeries,
}

impl QuotientData {
    pub fn compute(ring: &GradedRing, ideal: &[Polynomial]) -> Result<(QuotientData, ModulePresentation), LociError> {
        let m = ModulePresentation::cyclic(ring, ideal);
        let series = m.hilbert_series()?;
        let data = QuotientData {
            generators: ideal.iter().map(|p| ring.fmt_poly(p)).collect(),
            dim: series.dimension(),
            degree: series.degree(),
            depth: m.depth()?.unwrap_or(-1),
            betti: m.betti_table()?,
            series,
        };
        Ok((data, m))
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth == self.dim
    }

    /// Last total Betti number.
    pub fn cm_type(&self) -> u32 {
        self.betti.total(self.betti.projective_dimension())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Computed {
    pub codim: i32,
    pub i: QuotientData,
    pub saturation: Vec<String>,
    pub j: QuotientData,
    pub ideal_unmixed: bool,
    pub hull_equals_saturation: bool,
    pub saturated: bool,
    pub j_over_i: HilbertSeries,
    pub acm: bool,
    pub ag: bool,
    pub cm_type: u32,
    pub canonical_generators: u32,
    pub canonical_depth: i32,
    /// `HF(Ext^e(R/I, R))` for `codim < e <= n + 1`.
    pub ext: Vec<(i32, HilbertSeries)>,
}

/// Predicted and computed blocks are kept apart; claims only compare them.
#[derive(Clone, Debug, Serialize)]
pub struct LocusReport {
    pub prediction: PredictionReport,
    pub computed: Computed,
    pub claims: Vec<Claim>,
    #[serde(skip)]
    pub ideal_i: Vec<Polynomial>,
    #[serde(skip)]
    pub ideal_j: Vec<Polynomial>,
}

impl LocusReport {
    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> bool {
        crate::claim::any_failed(&self.claims)
    }
}

fn same(a: &HilbertSeries, b: &HilbertSeries) -> bool {
    a.sub(b).is_zero()
}

pub fn computed_class(j: &QuotientData) -> LocusClass {
    if !j.is_cohen_macaulay() {
        LocusClass::NotCohenMacaulay
    } else if j.cm_type() == 1 {
        LocusClass::Gorenstein
    } else {
        LocusClass::CohenMacaulay
    }
}

pub fn analyze(sec: &SectionInstance) -> Result<LocusReport, LociError> {
    let ring = &sec.br.ring;
    let (n, r, t) = (sec.n(), sec.r(), sec.t);
    let pred = predict_all(sec.br.f(), sec.br.g(), &sec.p, n)?;
    let codim = (r - t + 1) as i32;

    let (qi, mi) = QuotientData::compute(ring, &sec.ideal)?;
    let sat = saturate(ring, &sec.ideal)?;
    let hull = top_dimensional_part(sec)?;
    let (qj, mj) = QuotientData::compute(ring, &hull)?;
    let ideal_unmixed = ideal_equal(ring, &hull, &sec.ideal)?;
    let hull_equals_saturation = ideal_equal(ring, &hull, &sat)?;
    let saturated = ideal_equal(ring, &sat, &sec.ideal)?;
    let j_over_i = qi.series.sub(&qj.series);

    let ext: Vec<(i32, HilbertSeries)> =
        ((codim + 1)..=(n as i32 + 1)).map(|e| Ok((e, ext_series(&mi, e)?))).collect::<Result<_, LociError>>()?;
    let k_i = ext_module(&mi, codim)?;
    let k_j = ext_module(&mj, codim)?;
    let canonical_generators = k_i.betti_table()?.total(0);
    let canonical_depth = k_j.depth()?.unwrap_or(-1);
    let k_series = (k_i.hilbert_series()?, k_j.hilbert_series()?);

    let acm = qj.is_cohen_macaulay();
    let cm_type = qj.cm_type();
    let computed = Computed {
        codim: sec.validation.codim,
        saturation: sat.iter().map(|p| ring.fmt_poly(p)).collect(),
        ideal_unmixed,
        hull_equals_saturation,
        saturated,
        j_over_i,
        acm,
        ag: acm && cm_type == 1,
        cm_type,
        canonical_generators,
        canonical_depth,
        ext,
        i: qi,
        j: qj,
    };
    let claims = claims(&pred, &computed, codim, n, r, t, &k_series);
    Ok(LocusReport { prediction: pred, computed, claims, ideal_i: sec.ideal.clone(), ideal_j: hull })
}

fn claims(
    pred: &PredictionReport,
    c: &Computed,
    codim: i32,
    n: usize,
    r: usize,
    t: usize,
    k_series: &(HilbertSeries, HilbertSeries),
) -> Vec<Claim> {
    let mut out = Vec::new();
    out.push(Claim::check(
        "codimension",
        "has (the expected) codimension r − t + 1",
        c.codim == codim,
        format!("codim I = {}, expected {codim}", c.codim),
    ));
    out.push(Claim::check(
        "depth",
        "if r+t is odd",
        c.i.depth == pred.depth,
        format!("depth R/I = {}, predicted {}", c.i.depth, pred.depth),
    ));
    out.push(Claim::check(
        "depth lower bound",
        "The depth of R/I is at least",
        c.i.depth >= n as i32 - r as i32,
        format!("depth R/I = {} against n - r = {}", c.i.depth, n as i32 - r as i32),
    ));
    out.push(Claim::check(
        "unmixed",
        "unmixed if and only if",
        c.ideal_unmixed == pred.unmixed,
        format!("hull(I) = I: {}, predicted {}", c.ideal_unmixed, pred.unmixed),
    ));
    out.push(Claim::check(
        "hull equals saturation",
        "is not saturated if",
        c.hull_equals_saturation == pred.hull_equals_saturation,
        format!("hull(I) = sat(I): {}, predicted {}", c.hull_equals_saturation, pred.hull_equals_saturation),
    ));
    out.push(Claim::check(
        "saturated",
        "is not saturated if",
        c.saturated == pred.saturated,
        format!("sat(I) = I: {}, predicted {}", c.saturated, pred.saturated),
    ));
    out.push(Claim::check(
        "J/I",
        "I = J ∩ Q",
        same(&c.j_over_i, &pred.j_over_i),
        format!("HS(J/I) numerator {:?}, predicted {:?}", c.j_over_i.numerator(), pred.j_over_i.numerator()),
    ));

    let mut bad = Vec::new();
    for (e, s) in &c.ext {
        let expected = pred
            .cohomology
            .iter()
            .find(|x| x.ext_index == *e)
            .map(|x| x.series.clone())
            .unwrap_or_else(|| HilbertSeries::zero(s.nvars()));
        if !same(s, &expected) {
            bad.push(*e);
        }
    }
    let positions: Vec<i32> = pred.cohomology.iter().map(|x| x.j).collect();
    out.push(Claim::check(
        "cohomology",
        "if j = n+t−2i",
        bad.is_empty(),
        if bad.is_empty() {
            format!("nonzero positions {positions:?} match, all other Ext vanish")
        } else {
            format!("Ext^e mismatch at e = {bad:?}")
        },
    ));

    let class = computed_class(&c.j);
    out.push(Claim::check(
        "classification",
        "equidimensional and locally Cohen-Macaulay",
        class == pred.classification.locus && c.i.is_cohen_macaulay() == pred.classification.degeneracy_cm,
        format!(
            "X: {class:?} (predicted {:?}); R/I CM: {} (predicted {})",
            pred.classification.locus,
            c.i.is_cohen_macaulay(),
            pred.classification.degeneracy_cm
        ),
    ));
    if pred.classification.locus == LocusClass::Gorenstein {
        out.push(Claim::check("arithmetically Gorenstein", "X is arithmetically Gorenstein", c.ag, format!("CM type {}", c.cm_type)));
    } else {
        out.push(Claim::new("arithmetically Gorenstein", "X is arithmetically Gorenstein", Status::NotApplicable, "not the t = 1 even case"));
    }
    let bound = pred.classification.cm_type_bound;
    out.push(match (bound, c.acm) {
        (CmTypeBound::NotApplicable, _) => Claim::new("CM type", "Cohen-Macaulay type ≤ 1 +", Status::NotApplicable, "no bound stated"),
        (_, false) => Claim::check("CM type", "Cohen-Macaulay type ≤ 1 +", false, "X is not ACM"),
        (b, true) => Claim::check("CM type", "Cohen-Macaulay type ≤ 1 +", b.admits(c.cm_type as u64), format!("type {} against {b:?}", c.cm_type)),
    });
    let gb = pred.classification.canonical_generators_bound;
    out.push(if gb == CmTypeBound::NotApplicable {
        Claim::new("canonical generators", "Cohen-Macaulay type ≤ 1 +", Status::NotApplicable, "bound not applicable")
    } else {
        Claim::check(
            "canonical generators",
            "Cohen-Macaulay type ≤ 1 +",
            gb.admits(c.canonical_generators as u64),
            format!("{} generators of K_R/I against {gb:?}", c.canonical_generators),
        )
    });
    let depth_bound = (n as i32 - r as i32 + t as i32).min(n as i32 - r as i32 + 2);
    out.push(Claim::check(
        "canonical module depth",
        "depth of the canonical module",
        c.canonical_depth >= depth_bound,
        format!("depth K = {} against {depth_bound}", c.canonical_depth),
    ));
    out.push(Claim::check(
        "canonical modules agree",
        "are isomorphic",
        same(&k_series.0, &k_series.1),
        "HF(K_R/I) against HF(K_R/J)",
    ));
    out
}
