//! Words over an alphabet of letters and their complements, folded onto plane trees.
//!
//! A word folds when its positions admit a non-crossing perfect matching that only
//! pairs complementary letters; each such matching is a plane tree whose half edges
//! carry the letters in counterclockwise order. This crate counts and enumerates
//! foldings, maps foldings to edge-colored plane trees and back, explores the local
//! move graph on the foldings of a word, and evaluates the closed-form counts built
//! on top of those bijections.
//!
//! The crate is `no_std` and only needs `alloc`. All counts are exact
//! ([`BigUint`](num_bigint::BigUint)); floating point is confined to the asymptotic
//! estimate and the growth-rate optimizer.
//!
//! Positions are 0-based throughout the API. `Display` impls and serialized
//! matchings use 1-based positions.

#![no_std]

extern crate alloc;

pub mod enumeration;
pub mod foldings;
pub mod moves;
pub mod rsets;
pub mod trees;
pub mod words;

pub use foldings::{count_foldings, enumerate_foldings, greedy_fold, GreedyFold, Matching};
pub use moves::{build_fold_graph, FoldGraph, Move, MoveKind};
pub use trees::{EdgeColoredTree, PlaneTree};
pub use words::{parse_word, Letter, Word};
