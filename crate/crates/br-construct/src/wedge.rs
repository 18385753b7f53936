use groebner_engine::ModulePresentation;
use koszul_complexes::koszul_piece;

use crate::{BrError, BrInstance};

/// `∧^i B_φ* = coker(∧^{i-1} F* ⊗ G* -> ∧^i F*)`, the tail of `C_i(φ)*`.
///
/// For `i = r` this is the module exterior power, isomorphic to `I(φ)(-c1)`; its reflexive
/// hull is `R(-c1)`.
pub fn wedge_dual_presentation(inst: &BrInstance, i: usize) -> Result<ModulePresentation, BrError> {
    if i == 0 || i > inst.r {
        return Err(BrError::Range(format!("wedge index {i} outside 1..={}", inst.r)));
    }
    let piece = koszul_piece(&inst.phi, i - 1, 0, inst.ring.field())?;
    Ok(ModulePresentation::new(&inst.ring, piece.dual()))
}

/// `S_i(M_φ) = coker(F ⊗ S_{i-1} G -> S_i G)`.
pub fn symmetric_power_presentation(inst: &BrInstance, i: usize) -> Result<ModulePresentation, BrError> {
    if i == 0 {
        return Err(BrError::Range("S_0(M) is the ring itself".into()));
    }
    let piece = koszul_piece(&inst.phi, 0, i - 1, inst.ring.field())?;
    Ok(ModulePresentation::new(&inst.ring, piece))
}
