//! Exhaustive search over words on a graph's vertex alphabet: all
//! representants up to a length, `k`-uniform representants, representation
//! numbers, minimal-length representants, and the square-free
//! representants of complete graphs.
//!
//! The search extends prefixes letter by letter and tracks, for each pair of
//! letters, the last letter of the pair seen and whether the pair has already
//! repeated a letter. A prefix is abandoned when an edge pair has repeated a
//! letter (it can never alternate again), or, with per-letter quotas, when a
//! non-edge pair has used up both quotas while still alternating.

use std::ops::ControlFlow;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::squares::is_square_free;
use crate::word::{Letter, Word};

/// Limits for a search. Running out of nodes is an error, never a silent
/// truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    max_length: usize,
    max_k: usize,
    node_limit: u64,
}

impl SearchBudget {
    pub fn new(max_length: usize, max_k: usize, node_limit: u64) -> Result<Self> {
        if max_length == 0 || max_k == 0 || node_limit == 0 {
            return Err(Error::InvalidBudget("every budget field must be positive".into()));
        }
        Ok(SearchBudget { max_length, max_k, node_limit })
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    pub fn node_limit(&self) -> u64 {
        self.node_limit
    }

    pub fn with_max_length(self, max_length: usize) -> Result<Self> {
        SearchBudget::new(max_length, self.max_k, self.node_limit)
    }

    pub fn with_max_k(self, max_k: usize) -> Result<Self> {
        SearchBudget::new(self.max_length, max_k, self.node_limit)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_length: 12, max_k: 4, node_limit: 50_000_000 }
    }
}

#[derive(Clone, Copy)]
struct Shape {
    max_len: usize,
    /// Exact number of occurrences of every letter.
    quota: Option<usize>,
    /// Report representants shorter than `max_len` too.
    emit_shorter: bool,
    /// Only search words starting with this letter index.
    first: Option<usize>,
}

struct Search {
    letters: Vec<Letter>,
    n: usize,
    edge: Vec<bool>,
    word: Vec<usize>,
    counts: Vec<usize>,
    /// Indexed by `min * n + max`: last letter of the pair seen so far.
    last: Vec<Option<usize>>,
    broken: Vec<bool>,
    undo: Vec<(usize, Option<usize>, bool)>,
    nodes: u64,
    limit: u64,
}

impl Search {
    fn new(g: &Graph, limit: u64) -> Result<Self> {
        if g.vertex_count() == 0 {
            return Err(Error::InvalidGraph("search needs at least one vertex".into()));
        }
        let letters: Vec<Letter> = g.vertices().iter().cloned().collect();
        let n = letters.len();
        let mut edge = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                edge[i * n + j] = g.has_edge(&letters[i], &letters[j]);
            }
        }
        Ok(Search {
            letters,
            n,
            edge,
            word: Vec::new(),
            counts: vec![0; n],
            last: vec![None; n * n],
            broken: vec![false; n * n],
            undo: Vec::new(),
            nodes: 0,
            limit,
        })
    }

    fn pair(&self, a: usize, b: usize) -> usize {
        a.min(b) * self.n + a.max(b)
    }

    /// Appends `a`; returns false when the new prefix can be pruned.
    fn push(&mut self, a: usize, quota: Option<usize>) -> bool {
        self.word.push(a);
        self.counts[a] += 1;
        let mut viable = true;
        for b in 0..self.n {
            if b == a {
                continue;
            }
            let p = self.pair(a, b);
            self.undo.push((p, self.last[p], self.broken[p]));
            if self.last[p] == Some(a) {
                self.broken[p] = true;
            }
            self.last[p] = Some(a);
            let is_edge = self.edge[a * self.n + b];
            if is_edge && self.broken[p] {
                viable = false;
            }
            if let Some(k) = quota {
                if !is_edge && !self.broken[p] && self.counts[a] == k && self.counts[b] == k {
                    viable = false;
                }
            }
        }
        viable
    }

    fn pop(&mut self) {
        let a = self.word.pop().expect("pop on empty prefix");
        self.counts[a] -= 1;
        for _ in 1..self.n {
            let (p, last, broken) = self.undo.pop().expect("undo log");
            self.last[p] = last;
            self.broken[p] = broken;
        }
    }

    fn represents_now(&self) -> bool {
        if self.counts.contains(&0) {
            return false;
        }
        (0..self.n)
            .tuple_combinations()
            .all(|(a, b)| self.edge[a * self.n + b] != self.broken[a * self.n + b])
    }

    fn to_word(&self, indices: &[usize]) -> Word {
        indices.iter().map(|&i| self.letters[i].clone()).collect()
    }

    fn run(
        &mut self,
        shape: Shape,
        visit: &mut dyn FnMut(&Search) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let depth = self.word.len();
        if depth > 0
            && (depth == shape.max_len || shape.emit_shorter)
            && self.represents_now()
            && visit(self).is_break()
        {
            return Ok(ControlFlow::Break(()));
        }
        if depth == shape.max_len {
            return Ok(ControlFlow::Continue(()));
        }
        let remaining = shape.max_len - depth - 1;
        for a in 0..self.n {
            if depth == 0 && shape.first.is_some_and(|f| f != a) {
                continue;
            }
            if shape.quota.is_some_and(|k| self.counts[a] == k) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::BudgetExceeded(format!("more than {} search nodes", self.limit)));
            }
            let viable = self.push(a, shape.quota);
            let missing = self.counts.iter().filter(|&&c| c == 0).count();
            let flow = if viable && missing <= remaining {
                self.run(shape, visit)?
            } else {
                ControlFlow::Continue(())
            };
            self.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn collect(&mut self, shape: Shape) -> Result<Vec<Word>> {
        let mut found = Vec::new();
        let _ = self.run(shape, &mut |s| {
            found.push(s.to_word(&s.word));
            ControlFlow::Continue(())
        })?;
        found.sort();
        Ok(found)
    }
}

/// Every representant of `g` with at most `max_length` letters, shortlex
/// ordered.
pub fn all_representing_words(g: &Graph, max_length: usize, budget: &SearchBudget) -> Result<Vec<Word>> {
    let mut search = Search::new(g, budget.node_limit)?;
    search.collect(Shape { max_len: max_length, quota: None, emit_shorter: true, first: None })
}

/// Every representant of `g` with exactly `length` letters, lexicographically
/// ordered.
pub fn representing_words_of_length(g: &Graph, length: usize, budget: &SearchBudget) -> Result<Vec<Word>> {
    let mut search = Search::new(g, budget.node_limit)?;
    search.collect(Shape { max_len: length, quota: None, emit_shorter: false, first: None })
}

/// Every `k`-uniform representant of `g`.
pub fn k_uniform_words(g: &Graph, k: usize, budget: &SearchBudget) -> Result<Vec<Word>> {
    if k == 0 {
        return Err(Error::NotUniform("k must be positive".into()));
    }
    let mut search = Search::new(g, budget.node_limit)?;
    let len = k * search.n;
    search.collect(Shape { max_len: len, quota: Some(k), emit_shorter: false, first: None })
}

/// Shortest representant length of `g` and every representant of that
/// length. Lengths are tried from `|V|` up to the budget's `max_length`.
pub fn minimal_length_words(g: &Graph, budget: &SearchBudget) -> Result<(usize, Vec<Word>)> {
    let n = g.vertex_count().max(1);
    for length in n..=budget.max_length {
        let words = representing_words_of_length(g, length, budget)?;
        if !words.is_empty() {
            return Ok((length, words));
        }
    }
    Err(Error::BudgetExceeded(format!("no representant with at most {} letters", budget.max_length)))
}

/// A representation number together with a uniform word witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub k: usize,
    pub witness: Word,
}

/// Least `k <= max_k` such that a `k`-uniform word represents `g`, or
/// `None` when there is none within `max_k`.
///
/// Rotating a uniform representant keeps it a representant, so only words
/// starting with the smallest vertex are searched. The witness is the
/// lexicographically least such word.
pub fn representation_number(g: &Graph, budget: &SearchBudget) -> Result<Option<Representation>> {
    let mut search = Search::new(g, budget.node_limit)?;
    for k in 1..=budget.max_k {
        let shape = Shape { max_len: k * search.n, quota: Some(k), emit_shorter: false, first: Some(0) };
        let mut witness = None;
        let _ = search.run(shape, &mut |s| {
            witness = Some(s.to_word(&s.word));
            ControlFlow::Break(())
        })?;
        if let Some(witness) = witness {
            return Ok(Some(Representation { k, witness }));
        }
    }
    Ok(None)
}

/// Largest `n` accepted by [`squarefree_words_for_complete`].
pub const COMPLETE_ENUMERATION_CAP: u64 = 7;

/// Every square-free representant of `K_n` on `1..=n`: a permutation `P`
/// followed by a proper prefix of `P`. Returns the shortlex-ordered list and
/// its length, `n * n!`.
pub fn squarefree_words_for_complete(n: u64) -> Result<(Vec<Word>, usize)> {
    if n == 0 {
        return Err(Error::InvalidGraph("K_0 has no vertices".into()));
    }
    if n > COMPLETE_ENUMERATION_CAP {
        return Err(Error::CapExceeded(format!("n = {n} exceeds {COMPLETE_ENUMERATION_CAP}")));
    }
    let size = n as usize;
    let mut words: Vec<Word> = (1..=n)
        .permutations(size)
        .flat_map(|perm| {
            (0..size).map(move |tail| {
                let mut nums = perm.clone();
                nums.extend_from_slice(&perm[..tail]);
                Word::from_nums(&nums)
            })
        })
        .collect();
    words.sort();
    words.dedup();
    let count = words.len();
    Ok((words, count))
}

/// Largest vertex total accepted by
/// [`check_no_squarefree_2uniform_for_complete_union`].
pub const COMPLETE_UNION_CAP: usize = 6;

/// Exhaustively checks that no square-free 2-uniform word represents a
/// disjoint union of at least two complete graphs. Returns `true` when none
/// exists.
pub fn check_no_squarefree_2uniform_for_complete_union(components: &[Graph]) -> Result<bool> {
    if components.len() < 2 {
        return Err(Error::InvalidGraph("need at least two components".into()));
    }
    let mut union = Graph::default();
    for (i, g) in components.iter().enumerate() {
        if g.vertex_count() == 0 || !g.is_complete() {
            return Err(Error::NotComplete(format!("component {} is not a complete graph", i + 1)));
        }
        union = union.disjoint_union(g)?;
    }
    if union.vertex_count() > COMPLETE_UNION_CAP {
        return Err(Error::CapExceeded(format!(
            "{} vertices exceed {COMPLETE_UNION_CAP}",
            union.vertex_count()
        )));
    }
    let mut search = Search::new(&union, u64::MAX)?;
    let shape = Shape { max_len: 2 * search.n, quota: Some(2), emit_shorter: false, first: None };
    let mut found = false;
    let _ = search.run(shape, &mut |s| {
        if is_square_free(&s.to_word(&s.word)) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(!found)
}
