use gralg_kernel::KernelError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("degree cap {cap} exceeded: next S-pair or generator has degree {degree}")]
    DegreeCap { cap: u32, degree: u32 },
    #[error("input vector {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("resolution did not terminate within {0} steps")]
    ResolutionTooLong(usize),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
