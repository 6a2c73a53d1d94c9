//! Partite saturation in blow-up graphs.
//!
//! A graph `G` inside the blow-up `H[n]` is partite-saturated when it holds no
//! partite copy of `H` (one vertex from each part, carrying every edge of `H`)
//! while adding any missing host edge creates one. It is extra-saturated when
//! every missing host edge lies in a new copy, copies in `G` being allowed.

pub mod constructions;
pub mod copies;
pub mod error;
pub mod graph;
pub mod host;
pub mod io;
pub mod pattern;
pub mod solve;
pub mod verify;

pub use copies::{
    count_copies_through, count_partite_copies, find_copy_through, find_partite_copy, has_copy_through,
    has_partite_copy,
};
pub use error::{Error, Result};
pub use graph::{blow_up, PartiteGraph};
pub use host::{BlowupHost, Edge, PartiteSelection, PartiteVertex};
pub use pattern::PatternGraph;
pub use verify::{is_extra_saturated, is_partite_free, is_partite_saturated, Status, Verdict, Witness};
