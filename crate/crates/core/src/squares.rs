//! Square detection and square elimination for words representing connected
//! graphs.
//!
//! A square is a factor `XX`; it is trivial when `|X| = 1`. Detection is a
//! plain double loop over start positions and root lengths, which is plenty
//! for the word lengths handled here.

use crate::error::{Error, Result};
use crate::graph::{represents, Graph};
use crate::word::{Letter, Word};

/// A located square `XX`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareOccurrence {
    /// 1-based position of the first letter of the square.
    pub start: usize,
    pub root: Word,
    pub trivial: bool,
}

/// First square in a slice as `(0-based start, root length)`, minimising the
/// start and then the root length.
pub fn first_square_in<T: PartialEq>(s: &[T]) -> Option<(usize, usize)> {
    let n = s.len();
    (0..n).find_map(|start| {
        (1..=(n - start) / 2)
            .find(|&len| s[start..start + len] == s[start + len..start + 2 * len])
            .map(|len| (start, len))
    })
}

/// Whether some square ends at the last position of `s`. Extending a
/// square-free prefix by one letter can only create squares of this kind.
pub fn has_square_suffix<T: PartialEq>(s: &[T]) -> bool {
    let n = s.len();
    (1..=n / 2).any(|len| s[n - 2 * len..n - len] == s[n - len..])
}

fn occurrence(w: &Word, start: usize, len: usize) -> SquareOccurrence {
    SquareOccurrence { start: start + 1, root: w.factor(start, len), trivial: len == 1 }
}

pub fn find_first_square(w: &Word) -> Option<SquareOccurrence> {
    first_square_in(w.letters()).map(|(start, len)| occurrence(w, start, len))
}

/// Every square occurrence, ordered by start and then root length.
pub fn all_squares(w: &Word) -> Vec<SquareOccurrence> {
    let s = w.letters();
    let n = s.len();
    let mut out = Vec::new();
    for start in 0..n {
        for len in 1..=(n - start) / 2 {
            if s[start..start + len] == s[start + len..start + 2 * len] {
                out.push(occurrence(w, start, len));
            }
        }
    }
    out
}

pub fn is_square_free(w: &Word) -> bool {
    first_square_in(w.letters()).is_none()
}

fn check_connected_representant(w: &Word, g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !represents(w, g) {
        return Err(Error::DoesNotRepresent);
    }
    Ok(())
}

/// Removes every square from a word representing a connected graph while
/// keeping it a representant.
///
/// The first square `u·X·X·v` is rewritten to `u·X·v` when `X` has no
/// repeated letter, and to `u·X·π(X)·v` otherwise. Both rewrites shorten the
/// word, and the scan restarts from the beginning after each one.
pub fn desquare(w: &Word, g: &Graph) -> Result<Word> {
    check_connected_representant(w, g)?;
    let mut letters: Vec<Letter> = w.letters().to_vec();
    while let Some((start, len)) = first_square_in(&letters) {
        let root = Word::new(letters[start..start + len].to_vec());
        let replacement = if root.has_distinct_letters() {
            Vec::new()
        } else {
            root.initial_permutation()?.into_word().into_letters()
        };
        letters.splice(start + len..start + 2 * len, replacement);
    }
    Ok(Word::new(letters))
}

/// Square root that misses some vertex of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportViolation {
    pub square: SquareOccurrence,
    pub missing: Vec<Letter>,
}

/// Square root in which the two ends of an edge occur a different number of
/// times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceViolation {
    pub square: SquareOccurrence,
    pub edge: (Letter, Letter),
    pub counts: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareReport<V> {
    pub squares_checked: usize,
    pub violations: Vec<V>,
}

impl<V> SquareReport<V> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every square root of a representant of a connected graph
/// contains every vertex.
pub fn diag_square_support(w: &Word, g: &Graph) -> Result<SquareReport<SupportViolation>> {
    check_connected_representant(w, g)?;
    let squares = all_squares(w);
    let squares_checked = squares.len();
    let violations = squares
        .into_iter()
        .filter_map(|sq| {
            let alphabet = sq.root.alphabet();
            let missing: Vec<Letter> =
                g.vertices().iter().filter(|v| !alphabet.contains(v)).cloned().collect();
            (!missing.is_empty()).then_some(SupportViolation { square: sq, missing })
        })
        .collect();
    Ok(SquareReport { squares_checked, violations })
}

/// Checks that in every square root, adjacent vertices occur equally often.
pub fn diag_occurrence_balance(w: &Word, g: &Graph) -> Result<SquareReport<BalanceViolation>> {
    check_connected_representant(w, g)?;
    let squares = all_squares(w);
    let squares_checked = squares.len();
    let mut violations = Vec::new();
    for sq in squares {
        let counts = sq.root.counts();
        for (x, y) in g.edges() {
            let cx = counts.get(x).copied().unwrap_or(0);
            let cy = counts.get(y).copied().unwrap_or(0);
            if cx != cy {
                violations.push(BalanceViolation {
                    square: sq.clone(),
                    edge: (x.clone(), y.clone()),
                    counts: (cx, cy),
                });
            }
        }
    }
    Ok(SquareReport { squares_checked, violations })
}
