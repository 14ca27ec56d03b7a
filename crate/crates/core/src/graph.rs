//! Simple undirected graphs and the alternation semantics that ties them to
//! words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A simple graph over letters. Edges are stored as ordered pairs `(a, b)`
/// with `a < b`, so equality is plain set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    vertices: BTreeSet<Letter>,
    edges: BTreeSet<(Letter, Letter)>,
}

fn ordered(a: Letter, b: Letter) -> (Letter, Letter) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Graph {
    pub fn new(
        vertices: impl IntoIterator<Item = Letter>,
        edges: impl IntoIterator<Item = (Letter, Letter)>,
    ) -> Result<Graph> {
        let mut g = Graph { vertices: vertices.into_iter().collect(), edges: BTreeSet::new() };
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: Letter, b: Letter) -> Result<()> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at {a}")));
        }
        for v in [&a, &b] {
            if !self.vertices.contains(v) {
                return Err(Error::InvalidGraph(format!("edge endpoint {v} is not a vertex")));
            }
        }
        self.edges.insert(ordered(a, b));
        Ok(())
    }

    /// Graph on numeric vertices, e.g. `Graph::from_nums(&[1, 2, 3], &[(1, 2)])`.
    pub fn from_nums(vertices: &[u64], edges: &[(u64, u64)]) -> Result<Graph> {
        Graph::new(
            vertices.iter().copied().map(Letter::Num),
            edges.iter().map(|&(a, b)| (Letter::Num(a), Letter::Num(b))),
        )
    }

    /// K_n on vertices `1..=n`.
    pub fn complete(n: u64) -> Graph {
        let vs: Vec<u64> = (1..=n).collect();
        let es: Vec<(u64, u64)> = vs.iter().copied().tuple_combinations().collect();
        Graph::from_nums(&vs, &es).expect("complete graph is valid")
    }

    /// Edgeless graph O_n on vertices `1..=n`.
    pub fn edgeless(n: u64) -> Graph {
        let vs: Vec<u64> = (1..=n).collect();
        Graph::from_nums(&vs, &[]).expect("edgeless graph is valid")
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: u64) -> Graph {
        let vs: Vec<u64> = (1..=n).collect();
        let es: Vec<(u64, u64)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_nums(&vs, &es).expect("path is valid")
    }

    /// Cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
    pub fn cycle(n: u64) -> Graph {
        let vs: Vec<u64> = (1..=n).collect();
        let mut es: Vec<(u64, u64)> = (1..n).map(|i| (i, i + 1)).collect();
        es.push((1, n));
        Graph::from_nums(&vs, &es).expect("cycle is valid")
    }

    pub fn vertices(&self) -> &BTreeSet<Letter> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Letter, Letter)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: &Letter, b: &Letter) -> bool {
        a != b && self.edges.contains(&ordered(a.clone(), b.clone()))
    }

    /// N(x), the neighbourhood of `x`.
    pub fn neighbors(&self, x: &Letter) -> BTreeSet<Letter> {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == x {
                    Some(b.clone())
                } else if b == x {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<Graph> {
        let mut adjacency: BTreeMap<&Letter, Vec<&Letter>> =
            self.vertices.iter().map(|v| (v, Vec::new())).collect();
        for (a, b) in &self.edges {
            adjacency.get_mut(a).expect("endpoint").push(b);
            adjacency.get_mut(b).expect("endpoint").push(a);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in &self.vertices {
            if seen.contains(start) {
                continue;
            }
            let mut members = BTreeSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                members.insert(v.clone());
                for &u in &adjacency[v] {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            out.push(self.induced(&members));
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        !self.vertices.is_empty() && self.components().len() == 1
    }

    pub fn induced(&self, keep: &BTreeSet<Letter>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .cloned()
                .collect(),
        }
    }

    /// Disjoint union. Fails when the vertex sets intersect.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        if let Some(v) = self.vertices.intersection(&other.vertices).next() {
            return Err(Error::OverlappingAlphabets(v.clone()));
        }
        Ok(Graph {
            vertices: self.vertices.union(&other.vertices).cloned().collect(),
            edges: self.edges.union(&other.edges).cloned().collect(),
        })
    }

    /// Renames vertices through `map`; vertices missing from `map` keep
    /// their name.
    pub fn relabel(&self, map: &BTreeMap<Letter, Letter>) -> Result<Graph> {
        let rename = |v: &Letter| map.get(v).cloned().unwrap_or_else(|| v.clone());
        let vertices: BTreeSet<Letter> = self.vertices.iter().map(rename).collect();
        if vertices.len() != self.vertices.len() {
            return Err(Error::InvalidGraph("relabelling merges vertices".into()));
        }
        Graph::new(vertices, self.edges.iter().map(|(a, b)| (rename(a), rename(b))))
    }

    /// Adjacency bitmask over `vertices` in canonical order, minimised over
    /// every relabelling. Two graphs on the same number of vertices are
    /// isomorphic iff their keys agree. Brute force over `n!` orderings, so
    /// only meant for small graphs.
    pub fn canonical_key(&self) -> u64 {
        let vs: Vec<&Letter> = self.vertices.iter().collect();
        let n = vs.len();
        assert!(n <= 8, "canonical_key is brute force; n = {n} is too large");
        let adj: Vec<Vec<bool>> =
            vs.iter().map(|a| vs.iter().map(|b| self.has_edge(a, b)).collect()).collect();
        (0..n)
            .permutations(n)
            .map(|perm| {
                let mut key = 0u64;
                for (bit, (i, j)) in (0..n).tuple_combinations().enumerate() {
                    if adj[perm[i]][perm[j]] {
                        key |= 1 << bit;
                    }
                }
                key
            })
            .min()
            .unwrap_or(0)
    }

    /// Every labelled graph on vertices `1..=n`.
    pub fn all_on(n: u64) -> Vec<Graph> {
        let vs: Vec<u64> = (1..=n).collect();
        let pairs: Vec<(u64, u64)> = vs.iter().copied().tuple_combinations().collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let es: Vec<(u64, u64)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_nums(&vs, &es).expect("valid")
            })
            .collect()
    }

    /// One representative per isomorphism class of graphs on `1..=n`.
    pub fn all_on_up_to_isomorphism(n: u64) -> Vec<Graph> {
        let mut seen = BTreeSet::new();
        Graph::all_on(n).into_iter().filter(|g| seen.insert(g.canonical_key())).collect()
    }
}

/// Graph text format:
///
/// ```text
/// # comment
/// vertices: 1 2 3
/// 1 2
/// 2 3
/// ```
///
/// The `vertices:` header is required so isolated vertices can be listed.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens = |text: &str| -> Result<Vec<Letter>> {
                text.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(Letter::parse)
                    .collect()
            };
            match graph.as_mut() {
                None => {
                    let rest = line.strip_prefix("vertices:").ok_or_else(|| {
                        Error::Parse(format!("line {}: expected `vertices:` header", lineno + 1))
                    })?;
                    let vertices = tokens(rest)?;
                    graph = Some(Graph::new(vertices, [])?);
                }
                Some(g) => {
                    let ends = tokens(line)?;
                    let [a, b]: [Letter; 2] = ends.try_into().map_err(|_| {
                        Error::Parse(format!("line {}: an edge line needs two vertices", lineno + 1))
                    })?;
                    g.add_edge(a, b)
                        .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                }
            }
        }
        graph.ok_or_else(|| Error::Parse("missing `vertices:` header".into()))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        for (a, b) in &self.edges {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

/// The graph a word represents: vertices are the word's letters, edges are
/// the alternating pairs.
pub fn derive_graph(w: &Word) -> Result<Graph> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let alphabet = w.alphabet();
    let mut g = Graph::new(alphabet.iter().cloned(), [])?;
    for (x, y) in alphabet.iter().tuple_combinations() {
        if w.alternates(x, y)? {
            g.add_edge(x.clone(), y.clone())?;
        }
    }
    Ok(g)
}

/// Whether `w` represents `g`: same alphabet and the same alternation graph.
pub fn represents(w: &Word, g: &Graph) -> bool {
    if w.is_empty() {
        return g.vertices.is_empty();
    }
    w.alphabet() == g.vertices && derive_graph(w).is_ok_and(|d| &d == g)
}
