//! Naive reference implementations over plain `u64` sequences. Nothing here
//! calls into the library except for conversions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use wordrep::{Graph, Letter, Word};

pub fn nums(w: &Word) -> Vec<u64> {
    w.letters()
        .iter()
        .map(|l| match l {
            Letter::Num(x) => *x,
            Letter::Name(s) => panic!("oracle only handles numeric letters, got {s}"),
        })
        .collect()
}

pub fn graph_parts(g: &Graph) -> (Vec<u64>, BTreeSet<(u64, u64)>) {
    let num = |l: &Letter| match l {
        Letter::Num(x) => *x,
        Letter::Name(s) => panic!("oracle only handles numeric letters, got {s}"),
    };
    let vertices = g.vertices().iter().map(num).collect();
    let edges = g.edges().iter().map(|(a, b)| (num(a).min(num(b)), num(a).max(num(b)))).collect();
    (vertices, edges)
}

/// Restriction to `{x, y}` has no two equal neighbours.
pub fn alternates(w: &[u64], x: u64, y: u64) -> bool {
    let r: Vec<u64> = w.iter().copied().filter(|&c| c == x || c == y).collect();
    r.windows(2).all(|p| p[0] != p[1])
}

/// Edge set of the graph `w` represents, over the letters it uses.
pub fn edges_of(w: &[u64]) -> BTreeSet<(u64, u64)> {
    let letters: BTreeSet<u64> = w.iter().copied().collect();
    letters
        .iter()
        .tuple_combinations()
        .filter(|(&x, &y)| alternates(w, x, y))
        .map(|(&x, &y)| (x, y))
        .collect()
}

/// Every two distinct letters occurring in `w` alternate.
pub fn all_pairs_alternate(w: &[u64]) -> bool {
    let letters: BTreeSet<u64> = w.iter().copied().collect();
    letters.iter().tuple_combinations().all(|(&x, &y)| alternates(w, x, y))
}

pub fn represents(w: &[u64], vertices: &[u64], edges: &BTreeSet<(u64, u64)>) -> bool {
    let letters: BTreeSet<u64> = w.iter().copied().collect();
    let wanted: BTreeSet<u64> = vertices.iter().copied().collect();
    letters == wanted && &edges_of(w) == edges
}

pub fn represents_graph(w: &Word, g: &Graph) -> bool {
    let (v, e) = graph_parts(g);
    represents(&nums(w), &v, &e)
}

pub fn square_free(w: &[u64]) -> bool {
    for i in 0..w.len() {
        for len in 1..=(w.len() - i) / 2 {
            if (0..len).all(|t| w[i + t] == w[i + len + t]) {
                return false;
            }
        }
    }
    true
}

/// Every word of exactly `len` letters over `alphabet`.
pub fn words_of_length(alphabet: &[u64], len: usize) -> Vec<Vec<u64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    std::iter::repeat_n(alphabet.iter().copied(), len).multi_cartesian_product().collect()
}

/// Every word of exactly `len` letters in which each letter of `alphabet`
/// occurs exactly `k` times.
pub fn uniform_words(alphabet: &[u64], k: usize) -> Vec<Vec<u64>> {
    let pool: Vec<u64> = alphabet.iter().flat_map(|&x| std::iter::repeat_n(x, k)).collect();
    let len = pool.len();
    pool.into_iter().permutations(len).unique().collect()
}

/// Brute-force representants of a graph with at most `max_len` letters.
pub fn representants(g: &Graph, max_len: usize) -> BTreeSet<Vec<u64>> {
    let (v, e) = graph_parts(g);
    (1..=max_len)
        .flat_map(|len| words_of_length(&v, len))
        .filter(|w| represents(w, &v, &e))
        .collect()
}

/// The ternary word from a materialised Thue-Morse prefix: split on zeros and
/// count ones in each gap.
pub fn ternary(len: usize) -> Vec<u64> {
    let mut t = String::new();
    let mut zeros = 0;
    let mut n: u64 = 0;
    while zeros <= len {
        let bit = if format!("{n:b}").matches('1').count() % 2 == 0 { '0' } else { '1' };
        zeros += usize::from(bit == '0');
        t.push(bit);
        n += 1;
    }
    t.split('0').skip(1).take(len).map(|run| run.len() as u64).collect()
}
