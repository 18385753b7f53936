use gralg_kernel::combinat::binomial;
use gralg_kernel::{exterior_power_module, symmetric_power_module, GradedFreeModule};
use groebner_engine::{BettiTable, HilbertSeries};
use serde::Serialize;

use crate::koszul::{koszul_term, spliced_terms};
use crate::KoszulError;

/// Predicted `HF(Ext^e(R/I, R))` for the local cohomology position `j = n + 1 - e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyEntry {
    pub j: i32,
    pub ext_index: i32,
    /// The symmetric power `S_i(M_φ)` that carries it.
    pub i: usize,
    pub series: HilbertSeries,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LocusClass {
    Gorenstein,
    CohenMacaulay,
    NotCohenMacaulay,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CmTypeBound {
    Exact(u64),
    AtMost(u64),
    NotApplicable,
}

impl CmTypeBound {
    pub fn admits(&self, ty: u64) -> bool {
        match *self {
            CmTypeBound::Exact(b) => ty == b,
            CmTypeBound::AtMost(b) => ty <= b,
            CmTypeBound::NotApplicable => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// `R/I(ψ)` is Cohen–Macaulay.
    pub degeneracy_cm: bool,
    /// The top-dimensional part `X`.
    pub locus: LocusClass,
    pub cm_type_bound: CmTypeBound,
    pub canonical_generators_bound: CmTypeBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedSeries {
    pub index: i32,
    pub series: HilbertSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictionReport {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    /// `R(-c1) ≅ ∧^f F* ⊗ ∧^g G`.
    pub c1: i32,
    /// `R(p) ≅ ∧^t P*`.
    pub p: i32,
    pub codim: i32,
    pub dim: i32,
    pub depth: i32,
    /// Nonzero intermediate cohomology; every other `Ext^e` with `codim < e <= n+1` vanishes.
    pub cohomology: Vec<CohomologyEntry>,
    pub vanishing_ext: Vec<i32>,
    pub unmixed: bool,
    pub saturated: bool,
    pub hull_equals_saturation: bool,
    /// `HS(J/I)`, zero when `r + t` is odd.
    pub j_over_i: HilbertSeries,
    pub classification: Classification,
    pub a_terms: Vec<GradedFreeModule>,
    pub c_terms: Vec<GradedFreeModule>,
    /// Resolution of `R/J(ψ)`: `R` in position 0, `(A_k ⊕ C_k) ⊗ ∧^t P` in position `k`.
    pub betti: BettiTable,
    pub e_homology: Vec<IndexedSeries>,
    pub e_star_cohomology: Vec<IndexedSeries>,
    pub gorenstein_table: Option<BettiTable>,
    pub even_rank_table: Option<BettiTable>,
}

fn sum_twist(m: &GradedFreeModule) -> i32 {
    m.twists().iter().sum()
}

fn line(twist: i32) -> GradedFreeModule {
    GradedFreeModule::uniform(1, twist)
}

fn direct_sum(mods: impl IntoIterator<Item = GradedFreeModule>) -> GradedFreeModule {
    mods.into_iter().fold(GradedFreeModule::zero(), |a, m| a.direct_sum(&m))
}

/// `HS(S_i(M_φ))` from the terms of `D_i(φ)`.
pub fn symmetric_power_series(nvars: usize, f: &GradedFreeModule, g: &GradedFreeModule, i: usize) -> HilbertSeries {
    spliced_terms(f, g, i).iter().enumerate().fold(HilbertSeries::zero(nvars), |acc, (q, m)| {
        let s = HilbertSeries::free(nvars, m);
        if q % 2 == 0 {
            acc.add(&s)
        } else {
            acc.sub(&s)
        }
    })
}

fn validate(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule, n: usize) -> Result<(usize, usize), KoszulError> {
    if g.rank() == 0 || f.rank() <= g.rank() {
        return Err(KoszulError::Ranks { f: f.rank(), g: g.rank() });
    }
    let (r, t) = (f.rank() - g.rank(), p.rank());
    if t == 0 || t >= r {
        return Err(KoszulError::Range(format!("need 1 <= t < r, got t = {t}, r = {r}")));
    }
    if r > n {
        return Err(KoszulError::Range(format!("need r <= n, got r = {r}, n = {n}")));
    }
    Ok((r, t))
}

/// `A_k = ⊕ ∧^i F* ⊗ S_j G* ⊗ S_{i+j-t} P` over `i + 2j = k + t - 1`, `t <= i + j`, `2(i+j) <= r+t-1`.
pub fn a_term(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule, k: usize) -> GradedFreeModule {
    let (r, t) = (f.rank() - g.rank(), p.rank());
    let total = k + t - 1;
    direct_sum((0..=total / 2).filter_map(|j| {
        let i = total - 2 * j;
        (i <= f.rank() && t <= i + j && 2 * (i + j) < r + t)
            .then(|| koszul_term(f, g, i, j).dual().tensor(&symmetric_power_module(p, i + j - t)))
    }))
}

/// `C_k = ⊕ ∧^i F ⊗ S_j G ⊗ S_{r-t-i-j} P ⊗ R(-c1)` over `i + 2j = r + 1 - t - k`, `2(i+j) <= r-t`.
pub fn c_term(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule, k: usize) -> GradedFreeModule {
    let (r, t) = (f.rank() - g.rank(), p.rank());
    let c1 = sum_twist(f) - sum_twist(g);
    if k > r + 1 - t {
        return GradedFreeModule::zero();
    }
    let total = r + 1 - t - k;
    direct_sum((0..=total / 2).filter_map(|j| {
        let i = total - 2 * j;
        (i <= f.rank() && 2 * (i + j) <= r - t).then(|| {
            koszul_term(f, g, i, j).tensor(&symmetric_power_module(p, r - t - i - j)).twist(-c1)
        })
    }))
}

/// `Σ C(f,i) C(g+j-1,j) C(i+j-1, i+j-t)` over the index set of `A_k`.
pub fn a_rank(f: usize, g: usize, t: usize, k: usize) -> i128 {
    let r = f - g;
    let total = (k + t - 1) as i64;
    let (f, g, t) = (f as i64, g as i64, t as i64);
    (0..=total / 2)
        .map(|j| (total - 2 * j, j))
        .filter(|&(i, j)| t <= i + j && 2 * (i + j) <= r as i64 + t - 1)
        .map(|(i, j)| binomial(f, i) * binomial(g + j - 1, j) * binomial(t + (i + j - t) - 1, i + j - t))
        .sum()
}

/// `Σ C(f,i) C(g+j-1,j) C(t+r-t-i-j-1, r-t-i-j)` over the index set of `C_k`.
pub fn c_rank(f: usize, g: usize, t: usize, k: usize) -> i128 {
    let r = (f - g) as i64;
    let (f, g, t, k) = (f as i64, g as i64, t as i64, k as i64);
    let total = r + 1 - t - k;
    if total < 0 {
        return 0;
    }
    (0..=total / 2)
        .map(|j| (total - 2 * j, j))
        .filter(|&(i, j)| 2 * (i + j) <= r - t)
        .map(|(i, j)| {
            let s = r - t - i - j;
            binomial(f, i) * binomial(g + j - 1, j) * binomial(t + s - 1, s)
        })
        .sum()
}

/// Predicted Betti table of `R/J(ψ)`.
pub fn predicted_betti(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule) -> BettiTable {
    let r = f.rank() - g.rank();
    let wedge_p = exterior_power_module(p, p.rank());
    let mut b = BettiTable::new();
    b.add_module(0, &line(0));
    for k in 1..=r {
        b.add_module(k as i32, &a_term(f, g, p, k).direct_sum(&c_term(f, g, p, k)).tensor(&wedge_p));
    }
    b
}

fn half_floor(x: i64) -> i64 {
    x.div_euclid(2)
}

/// `⊕_{j=0}^{ℓ} ∧^{2j+e} F* ⊗ S_{(i-e-2j)/2} G*`, `e = i mod 2`.
fn cor_sum(f: &GradedFreeModule, g: &GradedFreeModule, i: i64, ell: i64) -> GradedFreeModule {
    let e = i.rem_euclid(2);
    direct_sum((0..=ell).map(|j| {
        let s = (i - e - 2 * j) / 2;
        koszul_term(f, g, (2 * j + e) as usize, s as usize).dual()
    }))
}

/// Normalizes a single section to twist 0: `F ⊗ P*`, `G ⊗ P*`.
fn normalized(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule) -> (GradedFreeModule, GradedFreeModule, i32) {
    let a = p.twists()[0];
    let (f, g) = (f.twist(-a), g.twist(-a));
    let c1 = sum_twist(&f) - sum_twist(&g);
    (f, g, c1)
}

/// Self-dual resolution for odd rank and one section:
/// `β_k = A_k ⊕ A_{r-k}*(-c1)` for `0 < k < r`, `β_r = R(-c1)`.
pub fn gorenstein_odd_rank_table(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule) -> Option<BettiTable> {
    let r = (f.rank() - g.rank()) as i64;
    if r % 2 == 0 || p.rank() != 1 {
        return None;
    }
    let (f, g, c1) = normalized(f, g, p);
    let a = |i: i64| {
        let ell = if i % 2 == 1 { ((i - 1) / 2).min(half_floor(r - i - 2)) } else { (i / 2).min(half_floor(r - i - 1)) };
        cor_sum(&f, &g, i, ell)
    };
    let mut b = BettiTable::new();
    b.add_module(0, &line(0));
    for k in 1..r {
        b.add_module(k as i32, &a(k).direct_sum(&a(r - k).dual().twist(-c1)));
    }
    b.add_module(r as i32, &line(-c1));
    Some(b)
}

/// Even rank, one section: `β_1 = A_1`, `β_k = B_{r-k}*(-c1) ⊕ A_k`, `β_r = R(-c1) ⊕ A_r`.
pub fn even_rank_single_section_table(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule) -> Option<BettiTable> {
    let r = (f.rank() - g.rank()) as i64;
    if r % 2 == 1 || p.rank() != 1 {
        return None;
    }
    let (f, g, c1) = normalized(f, g, p);
    let ab = |i: i64, shift: i64| {
        let ell = if i % 2 == 1 {
            ((i - 1) / 2).min(half_floor(r - i - 1 - shift))
        } else {
            (i / 2).min(half_floor(r - i - shift))
        };
        cor_sum(&f, &g, i, ell)
    };
    let mut b = BettiTable::new();
    b.add_module(0, &line(0));
    b.add_module(1, &ab(1, 0));
    for k in 2..r {
        b.add_module(k as i32, &ab(r - k, 2).dual().twist(-c1).direct_sum(&ab(k, 0)));
    }
    b.add_module(r as i32, &line(-c1).direct_sum(&ab(r, 0)));
    Some(b)
}

/// Bound on the number of generators of the canonical module of `R/I(ψ)`:
/// `C(r-1, t-1) + [t <= r/2] C(r/2+g-1, g-1) C(r/2-1, t-1)`. The binomials need `r/2` to be an
/// integer; for odd `r` the bound is reported as not applicable.
pub fn canonical_generators_bound(r: usize, t: usize, g: usize) -> CmTypeBound {
    if r % 2 == 1 {
        return CmTypeBound::NotApplicable;
    }
    let (r, t, g) = (r as i64, t as i64, g as i64);
    let mut b = binomial(r - 1, t - 1);
    if t <= r / 2 {
        b += binomial(r / 2 + g - 1, g - 1) * binomial(r / 2 - 1, t - 1);
    }
    CmTypeBound::AtMost(b as u64)
}

/// Bound on the Cohen–Macaulay type of `X` when `X` is arithmetically Cohen–Macaulay.
pub fn cm_type_bound(r: usize, t: usize, g: usize) -> CmTypeBound {
    match ((r + t) % 2 == 1, t) {
        (false, 1) => CmTypeBound::Exact(1),
        (true, 1) | (false, 2) => canonical_generators_bound(r, t, g),
        _ => CmTypeBound::NotApplicable,
    }
}

/// Every closed-form prediction for a section `P -> B_φ` of a map `F -> G` over `K[x_0..x_n]`.
pub fn predict_all(f: &GradedFreeModule, g: &GradedFreeModule, p: &GradedFreeModule, n: usize) -> Result<PredictionReport, KoszulError> {
    let (r, t) = validate(f, g, p, n)?;
    let nv = n + 1;
    let odd = (r + t) % 2 == 1;
    let c1 = sum_twist(f) - sum_twist(g);
    let ptw = -sum_twist(p);
    let (ni, ri, ti) = (n as i32, r as i32, t as i32);
    let codim = ri - ti + 1;
    let dim = ni + 1 - codim;
    let depth = if odd { ni - ri + 1 } else { ni - ri };
    let sym_m = |i: usize| symmetric_power_series(nv, f, g, i);
    let wedge_p = exterior_power_module(p, t);

    let mut cohomology = Vec::new();
    for i in t.max((r + 2) / 2)..=(r + t) / 2 {
        let j = ni + ti - 2 * i as i32;
        let dual = symmetric_power_module(p, i - t).tensor(&wedge_p).dual();
        cohomology.push(CohomologyEntry { j, ext_index: ni + 1 - j, i, series: sym_m(i).tensor_free(&dual) });
    }
    let vanishing_ext =
        ((codim + 1)..=(ni + 1)).filter(|e| cohomology.iter().all(|c| c.ext_index != *e)).collect();

    let j_over_i = if odd {
        HilbertSeries::zero(nv)
    } else {
        let h = (r - t) / 2;
        sym_m(h).tensor_free(&symmetric_power_module(p, h)).tensor_free(&line(-c1)).tensor_free(&wedge_p)
    };

    let locus = match (odd, t) {
        (false, 1) => LocusClass::Gorenstein,
        (true, 1) | (false, 2) => LocusClass::CohenMacaulay,
        _ => LocusClass::NotCohenMacaulay,
    };
    let classification = Classification { degeneracy_cm: odd && t == 1, locus, cm_type_bound: cm_type_bound(r, t, g.rank()),
        canonical_generators_bound: canonical_generators_bound(r, t, g.rank()),
    };

    let mut e_homology = Vec::new();
    for j in 0..=r {
        let Some(i) = (r as i64 - 1 - 2 * j as i64).try_into().ok() else { break };
        let i: usize = i;
        if i < t || i + 3 > r {
            continue;
        }
        let s = sym_m(j).tensor_free(&symmetric_power_module(p, r - t - j)).tensor_free(&line(-c1));
        e_homology.push(IndexedSeries { index: i as i32, series: s });
    }
    let mut e_star_cohomology = Vec::new();
    for j in t..=r {
        let i = 2 * j + 1;
        if i > r + 1 {
            break;
        }
        let s = sym_m(j).tensor_free(&symmetric_power_module(p, j - t).dual());
        e_star_cohomology.push(IndexedSeries { index: i as i32, series: s });
    }

    Ok(PredictionReport {
        n,
        r,
        t,
        c1,
        p: ptw,
        codim,
        dim,
        depth,
        cohomology,
        vanishing_ext,
        unmixed: odd,
        saturated: odd || r < n,
        hull_equals_saturation: odd || r == n,
        j_over_i,
        classification,
        a_terms: (1..=r).map(|k| a_term(f, g, p, k)).collect(),
        c_terms: (1..=r).map(|k| c_term(f, g, p, k)).collect(),
        betti: predicted_betti(f, g, p),
        e_homology,
        e_star_cohomology,
        gorenstein_table: gorenstein_odd_rank_table(f, g, p),
        even_rank_table: even_rank_single_section_table(f, g, p),
    })
}
