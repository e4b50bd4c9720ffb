//! Verification laboratory for deck and dadeck reconstruction machinery on
//! small graphs and digraphs: decks, reconstructible parameters, pasting
//! enumeration, theorem-level checkers, exhaustive scans and a built-in
//! corpus of known hypomorphic pairs.

pub mod adjm;
pub mod analysis;
pub mod canon;
pub mod cli;
pub mod corpus;
pub mod deck;
pub mod digraph;
pub mod kelly;
pub mod label;
pub mod params;
pub mod pasting;
pub mod search;

pub use canon::{are_isomorphic, automorphism_orbits, canonical_form, isomorphism, CanonCode, CanonicalForm};
pub use deck::{same_deck, Dadeck, Deck, Flavor};
pub use digraph::{DegreeTriple, Digraph, GraphError};
pub use label::{labeled_isomorphic, Label, LabeledDigraph};
