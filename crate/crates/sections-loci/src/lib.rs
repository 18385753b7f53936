//! Sections of Buchsbaum–Rim modules, their degeneracy loci, and the
//! predicted-against-computed verification of those loci.

mod battery;
mod buchsbaum;
mod claim;
mod embed;
mod error;
mod linalg;
mod locus;
mod resolution;
mod section;
mod tor;

pub use battery::{battery_grid, build_case, BatteryCase};
pub use buchsbaum::{k_buchsbaum_check, AnnihilatorCheck, BuchsbaumReport};
pub use claim::{any_failed, Claim, Status};
pub use embed::{ag_embed, ag_embed_even, AgEmbedding, EmbeddingSummary, EvenEmbedding};
pub use error::LociError;
pub use locus::{analyze, computed_class, top_dimensional_part, Computed, LocusReport, QuotientData};
pub use resolution::{betti_mismatches, is_symmetric, verify_resolution, BettiMismatch, ResolutionDiff};
pub use section::{build_section, hits_minimal_generator, ideal_via_dual, section_from_coefficients, SectionInstance, SectionSource};
pub use tor::{tor_splitting_check, TorInequality, TorReport};
