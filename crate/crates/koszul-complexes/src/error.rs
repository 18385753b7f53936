use gralg_kernel::KernelError;
use groebner_engine::GbError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KoszulError {
    #[error("need rank F > rank G >= 1, got f = {f}, g = {g}")]
    Ranks { f: usize, g: usize },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("section does not map into the kernel of phi")]
    NotASection,
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
