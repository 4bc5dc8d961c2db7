//! Finite ideal topological spaces.
//!
//! A finite topology is stored as its table of minimal neighbourhoods and an
//! ideal on a finite set as its carrier `M` (the ideal is `P(M)`). On top of
//! these the crate computes the local function `A*`, the operator `Ψ` and the
//! star topology `τ*`, checks the preservation theorems for maps between ideal
//! spaces on concrete instances, and searches small cardinalities exhaustively
//! for counterexamples.

pub mod demo;
pub mod error;
pub mod ideal;
pub mod json;
pub mod maps;
pub mod search;
pub mod space;
pub mod star;
pub mod subset;
pub mod tables;
pub mod theorems;

pub use error::{Error, Result};
pub use ideal::{image_ideal, transfer_conditions, Ideal, TransferFlags};
pub use maps::{classify, is_closed_map, is_continuous, is_open_map, Continuity, FiniteMap, MapProfile};
pub use search::{
    enumerate_ideals, enumerate_maps, enumerate_topologies, find_counterexample, verify_exhaustive, SearchBounds,
    SearchMode, SearchReport,
};
pub use space::{SeparationProfile, Topology};
pub use star::IdealSpace;
pub use subset::{SubsetMask, MAX_POINTS};
pub use theorems::{check, check_all, Instance, TheoremId, Verdict, Witness};
