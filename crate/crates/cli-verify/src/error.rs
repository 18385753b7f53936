use br_construct::BrError;
use gralg_kernel::KernelError;
use groebner_engine::GbError;
use koszul_complexes::KoszulError;
use sections_loci::LociError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("bad battery spec: {0}")]
    Battery(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Br(#[from] BrError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Loci(#[from] LociError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
