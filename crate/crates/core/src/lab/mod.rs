//! Cycle and path analysis: gap configurations, closed forms for C_L, type
//! tables and their refutation, exhaustive lemma checks on `C_15` and `P_12`,
//! censuses of small graphs and trees, and the cubic sharpness search.

pub mod census;
pub mod cubic;
pub mod fixtures;
pub mod gaps;
pub mod lemmas;
pub mod properties;
pub mod tables;

pub use gaps::{gap_configuration, path_gap_configuration, reconstruct_from_gaps, GapConfiguration};
pub use tables::{
    c_l_cycle_formula, c_l_path_formula, family_check, refute_surviving_types, type_table, LabFamily,
};
