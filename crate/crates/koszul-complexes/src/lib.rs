//! The generalized Koszul complexes of a map of free modules, the Eagon–Northcott type
//! complex of a multiple section, and the closed-form predictions derived from them.

mod basis;
mod eagon;
mod error;
mod koszul;
mod predict;

pub use eagon::{eagon_northcott_e, Block, EagonNorthcott};
pub use error::KoszulError;
pub use koszul::{
    koszul_complex_c, koszul_piece, koszul_term, splice_data, splice_twist, spliced_complex_d, spliced_terms,
    SpliceData,
};
pub use predict::{
    a_rank, a_term, c_rank, c_term, canonical_generators_bound, cm_type_bound, even_rank_single_section_table, gorenstein_odd_rank_table,
    predict_all, predicted_betti, symmetric_power_series, Classification, CmTypeBound, CohomologyEntry, IndexedSeries,
    LocusClass, PredictionReport,
};
