//! Exact combinatorics of colored graphs as they appear in colored tensor
//! models: invariants, boundaries, automorphisms, surgery, realization of
//! boundary graphs, enumeration, fundamental groups of crystallizations and
//! symbolic Ward-Takahashi bookkeeping.

pub mod automorphism;
pub mod boundary;
pub mod canon;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod perm;
pub mod pi1;
pub mod realization;
pub mod surgery;
pub mod wti;

pub use canon::{canonical_form, find_isomorphism, CanonicalCode, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{
    ColoredGraph, DisconnectedGraph, InteractionModel, OpenFeynmanGraph, ValidityReport,
};
pub use perm::Perm;
