//! Exact and heuristic matching solvers.
//!
//! * [`max_matching`] / [`has_perfect_matching`] — deterministic
//!   branch-and-bound over edge sets of any k-partite hypergraph.
//! * [`rainbow_matching`] / [`rainbow_via_lift`] — exact rainbow matchings of
//!   a family, directly or through the color lift.
//! * [`konig_min_cover`], [`blossom_max_matching`],
//!   [`tutte_berge_certificate`] — 2-graph machinery with certificates.
//! * [`greedy_rainbow_heuristic`] — the sound-but-incomplete high-degree
//!   representative heuristic.

mod bipartite;
mod blossom;
mod graph;
mod matching;
mod rainbow;
mod tutte_berge;

pub use bipartite::{bipartite_max_matching, konig_min_cover};
pub use blossom::blossom_max_matching;
pub use matching::{
    has_perfect_matching, has_perfect_matching_budgeted, max_matching, max_matching_budgeted,
    Matching, SearchBudget,
};
pub use rainbow::{
    greedy_rainbow_heuristic, rainbow_matching, rainbow_matching_budgeted, rainbow_via_lift,
    rainbow_via_lift_budgeted, RainbowMatching,
};
pub use tutte_berge::{tutte_berge_certificate, TutteBergeCertificate};
