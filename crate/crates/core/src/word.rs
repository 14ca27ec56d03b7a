//! Letters, words and the permutation views of a word.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex symbol.
///
/// Numeric tokens order numerically and sort before named tokens; named
/// tokens order lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Num(u64),
    Name(String),
}

impl Letter {
    /// Parses one token. Digit strings become numeric letters unless they
    /// carry a leading zero, which would not survive a round trip.
    pub fn parse(token: &str) -> Result<Letter> {
        if token.is_empty() {
            return Err(Error::Parse("empty letter token".into()));
        }
        if token.contains(|c: char| c.is_whitespace() || c == ',' || c == '#') {
            return Err(Error::Parse(format!("invalid letter token {token:?}")));
        }
        let numeric = token.bytes().all(|b| b.is_ascii_digit())
            && (token.len() == 1 || !token.starts_with('0'));
        if numeric {
            if let Ok(n) = token.parse::<u64>() {
                return Ok(Letter::Num(n));
            }
        }
        Ok(Letter::Name(token.to_owned()))
    }

    fn is_single_char(&self) -> bool {
        match self {
            Letter::Num(n) => *n < 10,
            Letter::Name(s) => s.chars().count() == 1,
        }
    }
}

impl From<u64> for Letter {
    fn from(n: u64) -> Self {
        Letter::Num(n)
    }
}

impl From<&str> for Letter {
    fn from(s: &str) -> Self {
        Letter::parse(s).unwrap_or_else(|_| Letter::Name(s.to_owned()))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Num(n) => write!(f, "{n}"),
            Letter::Name(s) => f.write_str(s),
        }
    }
}

/// A finite sequence of letters. Immutable: every operation returns a new
/// word.
///
/// Words order shortlex (length first, then letter by letter), which is the
/// canonical order used by every enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from numeric letters, e.g. `Word::from_nums(&[1, 2, 1])`.
    pub fn from_nums(nums: &[u64]) -> Self {
        Word::new(nums.iter().copied().map(Letter::Num).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The set of distinct letters occurring in the word.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.letters.iter().cloned().collect()
    }

    pub fn count(&self, x: &Letter) -> usize {
        self.letters.iter().filter(|l| *l == x).count()
    }

    pub fn counts(&self) -> BTreeMap<Letter, usize> {
        let mut counts = BTreeMap::new();
        for l in &self.letters {
            *counts.entry(l.clone()).or_insert(0) += 1;
        }
        counts
    }

    pub fn contains(&self, x: &Letter) -> bool {
        self.letters.contains(x)
    }

    /// 0-based position of the `j`-th occurrence (1-based) of `x`.
    pub fn occurrence(&self, x: &Letter, j: usize) -> Option<usize> {
        if j == 0 {
            return None;
        }
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| *l == x)
            .nth(j - 1)
            .map(|(p, _)| p)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    /// Concatenation of a sequence of words.
    pub fn join<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word::new(parts.into_iter().flat_map(|w| w.letters.iter().cloned()).collect())
    }

    /// The contiguous factor of `len` letters starting at 0-based `start`.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word::new(self.letters[start..start + len].to_vec())
    }

    /// Subsequence keeping only the letters of `keep`, in order.
    pub fn restrict(&self, keep: &BTreeSet<Letter>) -> Word {
        Word::new(self.letters.iter().filter(|l| keep.contains(l)).cloned().collect())
    }

    /// Whether `x` and `y` alternate, i.e. the restriction to `{x, y}` has no
    /// two equal consecutive letters.
    pub fn alternates(&self, x: &Letter, y: &Letter) -> Result<bool> {
        if x == y {
            return Err(Error::SameLetter(x.clone()));
        }
        for l in [x, y] {
            if !self.contains(l) {
                return Err(Error::LetterAbsent(l.clone()));
            }
        }
        let mut prev: Option<&Letter> = None;
        for l in self.letters.iter().filter(|l| *l == x || *l == y) {
            if prev == Some(l) {
                return Ok(false);
            }
            prev = Some(l);
        }
        Ok(true)
    }

    /// `Some(k)` when every letter occurs exactly `k` times.
    pub fn uniformity(&self) -> Result<Option<usize>> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let counts = self.counts();
        let mut values = counts.values();
        let k = *values.next().expect("non-empty word has a letter");
        Ok(values.all(|&c| c == k).then_some(k))
    }

    fn uniform_k(&self) -> Result<usize> {
        self.uniformity()?
            .ok_or_else(|| Error::NotUniform(format!("{self} is not uniform")))
    }

    /// π(w): letters ordered by their leftmost occurrence.
    pub fn initial_permutation(&self) -> Result<PermutationWord> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut seen = BTreeSet::new();
        let letters = self
            .letters
            .iter()
            .filter(|l| seen.insert((*l).clone()))
            .cloned()
            .collect();
        Ok(PermutationWord(Word::new(letters)))
    }

    /// σ(w): letters ordered by their rightmost occurrence.
    pub fn final_permutation(&self) -> Result<PermutationWord> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut seen = BTreeSet::new();
        let mut letters: Vec<Letter> = self
            .letters
            .iter()
            .rev()
            .filter(|l| seen.insert((*l).clone()))
            .cloned()
            .collect();
        letters.reverse();
        Ok(PermutationWord(Word::new(letters)))
    }

    /// P_i: letters ordered by their `i`-th occurrence. Only defined for
    /// uniform words, with `1 <= i <= k`.
    pub fn ith_permutation(&self, i: usize) -> Result<PermutationWord> {
        let k = self.uniform_k()?;
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange { index: i, max: k });
        }
        let mut seen: BTreeMap<&Letter, usize> = BTreeMap::new();
        let mut letters = Vec::new();
        for l in &self.letters {
            let c = seen.entry(l).or_insert(0);
            *c += 1;
            if *c == i {
                letters.push(l.clone());
            }
        }
        Ok(PermutationWord(Word::new(letters)))
    }

    /// For `w = u·v` split after `split` letters, returns `v·u`.
    pub fn cyclic_shift(&self, split: usize) -> Result<Word> {
        if split > self.len() {
            return Err(Error::PositionOutOfRange { position: split, len: self.len() });
        }
        let mut letters = self.letters[split..].to_vec();
        letters.extend_from_slice(&self.letters[..split]);
        Ok(Word::new(letters))
    }

    /// π(w)·w.
    pub fn prepend_initial(&self) -> Result<Word> {
        Ok(self.initial_permutation()?.as_word().concat(self))
    }

    pub fn first_letter(&self) -> Result<&Letter> {
        self.letters.first().ok_or(Error::EmptyWord)
    }

    pub fn last_letter(&self) -> Result<&Letter> {
        self.letters.last().ok_or(Error::EmptyWord)
    }

    /// The first `length` letters.
    pub fn prefix(&self, length: usize) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if length > self.len() {
            return Err(Error::LengthOutOfRange { length, len: self.len() });
        }
        Ok(Word::new(self.letters[..length].to_vec()))
    }

    /// The last `length` letters (the whole word when it is shorter).
    pub fn suffix(&self, length: usize) -> Word {
        let start = self.len().saturating_sub(length);
        Word::new(self.letters[start..].to_vec())
    }

    /// `w \ l(w)`: the word without its final letter.
    pub fn without_last(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word::new(self.letters[..self.len() - 1].to_vec()))
    }

    /// Whether every letter occurs exactly once.
    pub fn has_distinct_letters(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.letters.iter().all(|l| seen.insert(l))
    }

    /// Whether the word is a permutation of exactly `alphabet`.
    pub fn is_permutation_of(&self, alphabet: &BTreeSet<Letter>) -> bool {
        self.len() == alphabet.len()
            && self.has_distinct_letters()
            && self.letters.iter().all(|l| alphabet.contains(l))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

/// Text form: tokens separated by whitespace or commas. A single contiguous
/// token without separators is read one letter per character, so `121323`
/// and `1,2,1,3,2,3` are the same word. Use separators (`10,11`, `a b`)
/// for multi-character letters.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let separated = s.contains(|c: char| c.is_whitespace() || c == ',');
        if separated {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(Letter::parse)
                .collect()
        } else {
            let mut buf = [0u8; 4];
            s.chars().map(|c| Letter::parse(c.encode_utf8(&mut buf))).collect()
        }
    }
}

/// Single-character letters are written contiguously; anything else is
/// comma-separated so the output parses back to the same word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.letters.iter().all(Letter::is_single_char);
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        if self.letters.len() == 1 && !compact {
            f.write_str(",")?;
        }
        Ok(())
    }
}

/// A word in which every letter occurs exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationWord(Word);

impl PermutationWord {
    pub fn new(word: Word) -> Result<Self> {
        if !word.has_distinct_letters() {
            return Err(Error::NotPermutation(format!("{word} repeats a letter")));
        }
        Ok(PermutationWord(word))
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl Deref for PermutationWord {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for PermutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
