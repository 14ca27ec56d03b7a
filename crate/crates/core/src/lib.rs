//! Word-representable graphs and square-free word-representants.
//!
//! A word `w` over an alphabet `V` represents a graph `G = (V, E)` when two
//! distinct letters `x` and `y` alternate in `w` exactly when `xy` is an edge.
//! This crate provides the word and graph primitives, square detection and
//! elimination, the square-free ternary stream derived from the Thue-Morse
//! sequence, the constructive results built on top of them, and brute-force
//! enumeration oracles for small graphs.

pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod squares;
pub mod thue_morse;
pub mod word;

pub use constructions::{
    build_blocks, disconnected_word, disconnected_word_short, empty_graph_word, extend,
    normalize_distinct_outer_perms, normalize_no_perm_suffix, ExtensionBlocks,
};
pub use enumerate::{
    all_representing_words, check_no_squarefree_2uniform_for_complete_union, k_uniform_words,
    minimal_length_words, representation_number, squarefree_words_for_complete, Representation,
    SearchBudget,
};
pub use error::{Error, Result};
pub use graph::{derive_graph, represents, Graph};
pub use squares::{
    desquare, diag_occurrence_balance, diag_square_support, find_first_square, is_square_free,
    SquareOccurrence,
};
pub use thue_morse::{squarefree_ternary, thue_morse_bit, TernaryStream};
pub use word::{Letter, PermutationWord, Word};
