//! Exhaustive generation of diagrams and matchings, and the insertion
//! bijection between 6-point matchings and two-row up-down tableaux.

mod berele;
mod matchings;
mod webs;

pub use berele::{berele, catalan_check, count_c2_lattice_paths, max_rows, UpDownTableau};
pub use matchings::{
    enumerate_matchings, for_each_matching, freeway_to_matching, matching_to_freeway,
    noncrossing_matchings, sixpoint_filter, Matching,
};
pub use webs::{
    enumerate_acyclic, enumerate_nonpositive_curvature, FreewaySkeleton, WebClass, WebGenerator,
};
