//! Brute-force ground truth for differential testing. Everything here is
//! exponential in the worst case and meant for small graphs.

pub mod holes;
pub mod perfect;
pub mod properties;

pub use holes::{enumerate_holes, naive_holes, oracle_shortest_even_hole, oracle_shortest_odd_hole, HoleInventory};
pub use perfect::{oracle_is_perfect, oracle_spgt_perfect, PerfectVerdict, SpgtVerdict};
pub use properties::{
    certify_bad_paths, certify_medium, certify_spade, certify_tripod, find_any_tripod, major_report,
    x_complete_edge_count, x_gaps, BadPath, BadPathReport, MajorReport,
};
