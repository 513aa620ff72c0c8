//! Even holes: short-hole listing, clearing sets, the phase-1 scan and its
//! constructive certificate, and a desk-scale shortest-even-hole finder.

pub mod clearing;
pub mod cliques;
pub mod desk;
pub mod phase1;

pub use clearing::{clear_blockers, clearing_sets, clears, list_short_even_holes, ClearingSets, ClearingSource};
pub use cliques::maximal_cliques;
pub use desk::{
    shortest_even_hole_desk, shortest_even_hole_desk_report, EvenDeskReport, EvenSource, NoPhase2, OraclePhase2, Phase2,
};
pub use phase1::{
    construct_even_hole, phase1_scan, r_valid, sr_member, sr_members, EvenHoleError, NiceTriple, Phase1Record,
    SixTupleWitness, SrQuery,
};
