use gralg_kernel::GradedFreeModule;
use groebner_engine::{ext_series, GbError, HilbertSeries};
use serde::Serialize;

use crate::wedge::symmetric_power_presentation;
use crate::{BrError, BrInstance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub projective_dimension: i32,
    pub depth: i32,
    pub checks: Vec<Check>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check { name: name.into(), passed, detail }
}

/// Computable consequences of `B_φ` being a reflexive Eilenberg–MacLane module:
/// finite projective dimension `r - 1`, `Ext^j(B_φ, R) = 0` for `j ∉ {0, r-1}`, and
/// `Ext^{r-1}(B_φ, R) ≅ S_{r-1}(M_φ) ⊗ ∧^f F* ⊗ ∧^g G` on Hilbert functions.
pub fn characterization_checks(inst: &BrInstance) -> Result<CharacterizationReport, BrError> {
    let ring = &inst.ring;
    let nv = ring.nvars();
    let b = &inst.b_phi;
    let pd = b.ambient_projective_dimension()?;
    let depth = b.depth()?.unwrap_or(-1);
    let r = inst.r as i32;
    let mut checks = vec![
        check("finite projective dimension", pd >= 0, format!("pd = {pd}")),
        check(
            "depth n - r + 2",
            depth == inst.n() as i32 - r + 2,
            format!("depth = {depth}, n = {}, r = {r}", inst.n()),
        ),
    ];
    let mut nonzero = Vec::new();
    for j in 1..=nv as i32 {
        if !ext_series(b, j)?.is_zero() {
            nonzero.push(j);
        }
    }
    let expected: Vec<i32> = if r >= 2 { vec![r - 1] } else { Vec::new() };
    checks.push(check(
        "single nonvanishing Ext",
        nonzero == expected,
        format!("nonzero Ext^j(B, R) for j in {nonzero:?}, expected {expected:?}"),
    ));
    if r >= 2 {
        let lhs = ext_series(b, r - 1)?;
        let rhs = sym_series(inst, inst.r - 1)?.tensor_free(&GradedFreeModule::uniform(1, -inst.c1()));
        checks.push(check(
            "top Ext is a symmetric power",
            lhs == rhs,
            format!("HS(Ext^{}) = {:?}, predicted {:?}", r - 1, lhs.numerator(), rhs.numerator()),
        ));
    } else {
        let free = b.hilbert_series()? == HilbertSeries::free(nv, b.generators()) && b.generators().rank() == 1;
        checks.push(check("rank one module is free", free, String::new()));
    }
    Ok(CharacterizationReport { projective_dimension: pd, depth, checks })
}

fn sym_series(inst: &BrInstance, i: usize) -> Result<HilbertSeries, GbError> {
    if i == 0 {
        return Ok(HilbertSeries::free(inst.ring.nvars(), &GradedFreeModule::uniform(1, 0)));
    }
    symmetric_power_presentation(inst, i).map_err(|e| GbError::Invalid(e.to_string()))?.hilbert_series()
}
