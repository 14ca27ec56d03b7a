use thiserror::Error;

use crate::word::Letter;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. The message of each variant starts
/// with the variant name so the CLI diagnostics stay grep-able.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptyWord: operation needs a non-empty word")]
    EmptyWord,
    #[error("LetterAbsent: letter {0} does not occur in the word")]
    LetterAbsent(Letter),
    #[error("SameLetter: alternation needs two distinct letters, got {0} twice")]
    SameLetter(Letter),
    #[error("NotUniform: {0}")]
    NotUniform(String),
    #[error("IndexOutOfRange: permutation index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("PositionOutOfRange: split {position} outside 0..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("LengthOutOfRange: prefix length {length} exceeds word length {len}")]
    LengthOutOfRange { length: usize, len: usize },
    #[error("NotPermutation: {0}")]
    NotPermutation(String),
    #[error("InvalidGraph: {0}")]
    InvalidGraph(String),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("NotConnected: the graph must be connected")]
    NotConnected,
    #[error("DoesNotRepresent: the word does not represent the graph")]
    DoesNotRepresent,
    #[error("CompleteGraph: the graph must not be complete")]
    CompleteGraph,
    #[error("NotComplete: {0}")]
    NotComplete(String),
    #[error("BlocksNotDistinct: {0}")]
    BlocksNotDistinct(String),
    #[error("BlockJoinClash: last letter of {from} equals first letter of {to}")]
    BlockJoinClash { from: String, to: String },
    #[error("CompleteGraphUnbounded: complete graphs have no square-free representant longer than 2n-1")]
    CompleteGraphUnbounded,
    #[error("NotSquareFree: {0}")]
    NotSquareFree(String),
    #[error("NoPermutationFreeSuffix: no rotation of at most {0} letters clears the permutation suffix")]
    NoPermutationFreeSuffix(usize),
    #[error("OuterPermutationsCoincide: rotation left initial and final permutations equal")]
    OuterPermutationsCoincide,
    #[error("ExtensionHasSquare: extended word {word} contains the square ({root})({root}) at position {start}")]
    ExtensionHasSquare { word: String, root: String, start: usize },
    #[error("ConstructionFailed: {0}")]
    ConstructionFailed(String),
    #[error("NoEdgedComponent: at least one component needs an edge; use the empty-graph word")]
    NoEdgedComponent,
    #[error("OverlappingAlphabets: letter {0} belongs to more than one component")]
    OverlappingAlphabets(Letter),
    #[error("ComponentNotRepresented: component {0} is not represented by its word")]
    ComponentNotRepresented(usize),
    #[error("ComponentComplete: component {0} is complete")]
    ComponentComplete(usize),
    #[error("NoSquareFreeRepresentation: O_2")]
    NoSquareFreeRepresentation,
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("InvalidBudget: {0}")]
    InvalidBudget(String),
    #[error("CapExceeded: {0}")]
    CapExceeded(String),
}
