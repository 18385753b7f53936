use groebner_engine::{annihilator, ext_module, ideal_is_subset, power_of_maximal_ideal, ModulePresentation};
use serde::Serialize;

use crate::claim::{Claim, Status};
use crate::section::SectionInstance;
use crate::LociError;

const ANCHOR: &str = "k-Buchsbaum but not (k−1)-Buchsbaum";

#[derive(Clone, Debug, Serialize)]
pub struct AnnihilatorCheck {
    /// Local cohomology position `j`, read through `Ext^{n+1-j}(R/I, R)`.
    pub j: i32,
    pub contains_power: bool,
    pub contains_lower_power: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BuchsbaumReport {
    pub k: u32,
    pub positions: Vec<AnnihilatorCheck>,
    pub claim: Claim,
}

/// For every nonzero intermediate cohomology module of `R/I(ψ)` predicted by the
/// cohomology table, `Ann = m^k` exactly.
pub fn k_buchsbaum_check(sec: &SectionInstance, k: u32) -> Result<BuchsbaumReport, LociError> {
    if k == 0 {
        return Err(LociError::Range("k must be positive".into()));
    }
    let ring = &sec.br.ring;
    let n = sec.n() as i32;
    let pred = koszul_complexes::predict_all(sec.br.f(), sec.br.g(), &sec.p, sec.n())?;
    let m = ModulePresentation::cyclic(ring, &sec.ideal);
    let mk = power_of_maximal_ideal(ring, k);
    let lower = power_of_maximal_ideal(ring, k - 1);
    let mut positions = Vec::new();
    for entry in &pred.cohomology {
        let ann = annihilator(&ext_module(&m, n + 1 - entry.j)?)?;
        positions.push(AnnihilatorCheck {
            j: entry.j,
            contains_power: ideal_is_subset(ring, &mk, &ann)?,
            contains_lower_power: ideal_is_subset(ring, &lower, &ann)?,
        });
    }
    let claim = if positions.is_empty() {
        Claim::new("k-Buchsbaum", ANCHOR, Status::NotApplicable, "no intermediate cohomology")
    } else {
        let ok = positions.iter().all(|p| p.contains_power && !p.contains_lower_power);
        Claim::check("k-Buchsbaum", ANCHOR, ok, format!("annihilators at j = {:?} against m^{k}", pred.cohomology.iter().map(|e| e.j).collect::<Vec<_>>()))
    };
    Ok(BuchsbaumReport { k, positions, claim })
}
