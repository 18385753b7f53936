//! Gröbner bases, syzygies, resolutions and derived invariants for graded modules
//! over `F_p[x_0..x_n]` and its quotients.

mod basis;
mod betti;
mod error;
mod ext;
mod gb;
mod hilbert;
mod ideal;
mod order;
mod presentation;
mod resolution;
mod series;
mod syzygy;

pub use basis::GroebnerBasis;
pub use error::GbError;
pub use hilbert::{monomial_ideal_numerator, HilbertSeries};
pub use order::{ModuleOrder, OrderKind};
pub use betti::BettiTable;
pub use presentation::{
    degree, depth, dimension, groebner_basis, hilbert_series, minimal_free_resolution, ModulePresentation,
};
pub use resolution::{minimalize, prune_presentation, resolve_cokernel};
pub use syzygy::{minimal_generator_indices, minimal_generators, quotient_relations, syzygies, syzygies_modulo};
pub use ext::{
    annihilator, dual_cohomology, dual_cohomology_series, equidimensional_hull, ext_module, ext_series,
    homology_presentation,
};
pub use ideal::{
    codim, ideal_contains, ideal_equal, ideal_gb, ideal_is_subset, ideal_map, ideal_sum, ideal_sum as sum, intersect,
    minimalize_ideal, power_of_maximal_ideal, quotient, saturate,
};
pub use series::{cokernel_series, free_series, homology_series, image_series, ring_series};
