use gralg_kernel::KernelError;
use groebner_engine::GbError;
use koszul_complexes::KoszulError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrError {
    #[error("need rank F > rank G >= 1, got f = {f}, g = {g}")]
    Ranks { f: usize, g: usize },
    #[error("rank r = {r} exceeds n = {n}")]
    RankTooLarge { r: usize, n: usize },
    #[error("codim I(phi) = {actual}, expected {expected}")]
    CodimFailure { actual: i32, expected: i32 },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("recipe precondition failed: {0}")]
    Recipe(String),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
}
