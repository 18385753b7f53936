use groebner_engine::BettiTable;
use serde::Serialize;

use crate::claim::{Claim, Status};
use crate::locus::LocusReport;
use crate::section::{hits_minimal_generator, SectionInstance};

const ANCHOR: &str = "graded free resolution of the form";
const CAVEAT: &str = "does not correspond to a minimal generator";

/// One graded Betti number where prediction and computation differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiMismatch {
    pub index: i32,
    pub degree: i32,
    pub predicted: u32,
    pub computed: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionDiff {
    pub predicted: BettiTable,
    pub computed: BettiTable,
    pub mismatches: Vec<BettiMismatch>,
    /// Every mismatch is a predicted excess cancelling between consecutive positions
    /// in the same degree.
    pub consecutive_cancellation: bool,
    pub claims: Vec<Claim>,
}

pub fn betti_mismatches(predicted: &BettiTable, computed: &BettiTable) -> Vec<BettiMismatch> {
    let mut keys: Vec<(i32, i32)> = predicted.entries().chain(computed.entries()).map(|(i, d, _)| (i, d)).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(i, d)| {
            let (p, c) = (predicted.get(i, d), computed.get(i, d));
            (p != c).then_some(BettiMismatch { index: i, degree: d, predicted: p, computed: c })
        })
        .collect()
}

fn cancels(m: &[BettiMismatch]) -> bool {
    let excess = |i: i32, d: i32| {
        m.iter().find(|x| x.index == i && x.degree == d).map(|x| x.predicted as i64 - x.computed as i64).unwrap_or(0)
    };
    !m.is_empty()
        && m.iter().all(|x| {
            let e = x.predicted as i64 - x.computed as i64;
            e > 0 && (excess(x.index - 1, x.degree) > 0 || excess(x.index + 1, x.degree) > 0)
        })
}

/// Predicted `A_k ⊕ C_k` table against the computed minimal resolution of `R/J(ψ)`.
pub fn verify_resolution(sec: &SectionInstance, report: &LocusReport) -> ResolutionDiff {
    let predicted = report.prediction.betti.clone();
    let computed = report.computed.j.betti.clone();
    let mismatches = betti_mismatches(&predicted, &computed);
    let consecutive_cancellation = cancels(&mismatches);
    let mut claims = Vec::new();
    if hits_minimal_generator(sec) {
        let detail = format!("a column of psi is a minimal generator of B_phi; {} entries differ", mismatches.len());
        claims.push(Claim::new("resolution", CAVEAT, Status::NotApplicable, detail));
        return ResolutionDiff { predicted, computed, mismatches, consecutive_cancellation, claims };
    }
    claims.push(Claim::check("resolution", ANCHOR, mismatches.is_empty(), format!("{} entries differ", mismatches.len())));
    if let Some(table) = &report.prediction.gorenstein_table {
        claims.push(Claim::check(
            "self-dual resolution",
            ANCHOR,
            betti_mismatches(table, &computed).is_empty() && is_symmetric(&computed),
            "odd rank, t = 1",
        ));
    }
    if let Some(table) = &report.prediction.even_rank_table {
        claims.push(Claim::check("even rank resolution", ANCHOR, betti_mismatches(table, &computed).is_empty(), "even rank, t = 1"));
    }
    ResolutionDiff { predicted, computed, mismatches, consecutive_cancellation, claims }
}

/// `β_{i,d} = β_{s-i, D-d}` with `s` the projective dimension and `D` the top shift.
pub fn is_symmetric(b: &BettiTable) -> bool {
    let s = b.projective_dimension();
    let Some(top) = b.degrees(s).into_iter().max() else { return true };
    b.entries().all(|(i, d, v)| b.get(s - i, top - d) == v)
}
