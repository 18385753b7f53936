//! Instance files, JSON reports and the command implementations behind `brloci`.

pub mod battery;
pub mod commands;
mod error;
pub mod instance_file;
pub mod report;

pub use error::CliError;
pub use instance_file::{lift_section, InstanceFile, PsiSpec};
pub use report::{report_for, ReportJson, REPORT_VERSION};
