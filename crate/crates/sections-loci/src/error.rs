use br_construct::BrError;
use gralg_kernel::KernelError;
use groebner_engine::GbError;
use koszul_complexes::KoszulError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LociError {
    #[error("codim I(psi) = {actual}, expected {expected}")]
    CodimFailure { actual: i32, expected: i32 },
    #[error("no degree-0 map from P into the generators of B_phi")]
    DegreeInfeasible,
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("no section with coordinates in I_X of degree {degree}")]
    NoSectionFound { degree: i32 },
    #[error(transparent)]
    Br(#[from] BrError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
