//! Exact MV polytopes for simply-laced types, realized through Lusztig data.
//!
//! The crate provides root data and Weyl groups, reduced words and braid
//! moves, MV polytopes with their crystal structure, Demazure and opposite
//! Demazure membership, extremal MV polytopes, the finest Demazure strata,
//! crystal-graph generation and interchange formats. Every decision
//! procedure has a brute-force counterpart in [`oracle`].

pub mod bz;
pub mod config;
pub mod crystal;
pub mod demazure;
pub mod error;
pub mod graph;
pub mod io;
pub mod lusztig;
pub mod oracle;
pub mod root;
pub mod strata;
pub mod validate;
pub mod weyl;
pub mod words;

pub use config::Limits;
pub use bz::{contains, BzDatum};
pub use demazure::{MembershipReport, Method};
pub use error::{Error, Result};
pub use graph::{CrystalGraph, Edge, Node};
pub use lusztig::{Base, GgmsDatum, LusztigDatum};
pub use root::{Coweight, Family, RootDatum, Weight};
pub use weyl::{WeylElement, WeylGroup};
pub use words::{Move, MoveKind, PositionSequence, ReducedWord};
