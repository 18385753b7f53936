//! Buchsbaum–Rim modules: validated construction, exterior powers of the dual,
//! the characterization checks, and the standard example families.

mod checks;
mod error;
mod instance;
mod recipes;
mod wedge;

pub use checks::{characterization_checks, CharacterizationReport, Check};
pub use error::BrError;
pub use instance::{random_instance, validate_and_build, BrInstance, Validation, MAX_ATTEMPTS};
pub use recipes::{cotangent, is_nowhere_vanishing, null_correlation_recipe, power_map};
pub use wedge::{symmetric_power_presentation, wedge_dual_presentation};
