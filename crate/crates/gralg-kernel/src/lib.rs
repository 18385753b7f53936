//! Exact arithmetic over `F_p`: sparse polynomials, graded free modules, homogeneous
//! matrices and the multilinear constructions built from them.

pub mod combinat;
mod complex;
mod error;
mod field;
mod free;
mod map;
pub mod mono;
pub mod multilinear;
mod poly;
pub mod random;
mod ring;

pub use complex::FreeComplex;
pub use error::KernelError;
pub use field::{Fp, DEFAULT_CHARACTERISTIC};
pub use free::{generator_degree, GradedFreeModule};
pub use map::ModuleMap;
pub use mono::Mono;
pub use multilinear::{
    determinant, dual, exterior_power, exterior_power_module, minors, symmetric_power_map,
    symmetric_power_module, tensor_map, tensor_module,
};
pub use poly::Polynomial;
pub use ring::{GradedRing, DEFAULT_MAX_DEGREE};
