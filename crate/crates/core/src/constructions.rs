//! Square-free representants built from smaller ones: arbitrarily long
//! extensions of a uniform representant driven by the ternary stream,
//! words for disconnected graphs, and words for edgeless graphs.
//!
//! Every construction re-checks its output with the alternation and square
//! oracles and reports a failure instead of returning a word that breaks
//! its contract.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{represents, Graph};
use crate::squares::{find_first_square, is_square_free};
use crate::thue_morse::TernaryStream;
use crate::word::{Letter, Word};

/// Images of the ternary symbols 2, 1, 0 under the block substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionBlocks {
    block_for_2: Word,
    block_for_1: Word,
    block_for_0: Word,
}

impl ExtensionBlocks {
    /// Validates that the blocks are non-empty, share one alphabet, are
    /// pairwise distinct, and that no block ends with the letter another
    /// block starts with.
    pub fn new(block_for_2: Word, block_for_1: Word, block_for_0: Word) -> Result<Self> {
        let blocks = [&block_for_2, &block_for_1, &block_for_0];
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::EmptyWord);
        }
        let alphabet = block_for_2.alphabet();
        if blocks.iter().any(|b| b.alphabet() != alphabet) {
            return Err(Error::InvalidGraph("blocks use different alphabets".into()));
        }
        for (i, a) in blocks.iter().enumerate() {
            for b in &blocks[i + 1..] {
                if a == b {
                    return Err(Error::BlocksNotDistinct(format!("block {a} appears twice")));
                }
            }
        }
        for (i, a) in blocks.iter().enumerate() {
            for (j, b) in blocks.iter().enumerate() {
                if i != j && a.last_letter()? == b.first_letter()? {
                    return Err(Error::BlockJoinClash { from: a.to_string(), to: b.to_string() });
                }
            }
        }
        Ok(ExtensionBlocks { block_for_2, block_for_1, block_for_0 })
    }

    pub fn block_for_2(&self) -> &Word {
        &self.block_for_2
    }

    pub fn block_for_1(&self) -> &Word {
        &self.block_for_1
    }

    pub fn block_for_0(&self) -> &Word {
        &self.block_for_0
    }

    /// Image of a ternary symbol. Panics on symbols above 2.
    pub fn image(&self, symbol: u8) -> &Word {
        match symbol {
            2 => &self.block_for_2,
            1 => &self.block_for_1,
            0 => &self.block_for_0,
            _ => panic!("ternary symbol out of range: {symbol}"),
        }
    }
}

fn uniform_k(w: &Word, at_least: usize) -> Result<usize> {
    match w.uniformity()? {
        Some(k) if k >= at_least => Ok(k),
        Some(k) => Err(Error::NotUniform(format!("{w} is {k}-uniform, need k >= {at_least}"))),
        None => Err(Error::NotUniform(format!("{w} is not uniform"))),
    }
}

fn require_represents(w: &Word, g: &Graph) -> Result<()> {
    if represents(w, g) {
        Ok(())
    } else {
        Err(Error::DoesNotRepresent)
    }
}

/// Rotates the shortest possible suffix to the front so that the last `n`
/// letters no longer form a permutation of the vertices.
pub fn normalize_no_perm_suffix(w: &Word, g: &Graph) -> Result<Word> {
    uniform_k(w, 2)?;
    require_represents(w, g)?;
    let n = g.vertex_count();
    let vertices = g.vertices();
    if !w.suffix(n).is_permutation_of(vertices) {
        return Ok(w.clone());
    }
    for j in 1..=n {
        let kept = w.len() - j;
        if !w.prefix(kept)?.suffix(n).is_permutation_of(vertices) {
            return w.cyclic_shift(kept);
        }
    }
    Err(Error::NoPermutationFreeSuffix(n))
}

/// For a 2-uniform representant with `π(w) = σ(w)`, moves the last letter
/// to the front, which separates the two outer permutations.
pub fn normalize_distinct_outer_perms(w: &Word, g: &Graph) -> Result<Word> {
    uniform_k(w, 2)?;
    if w.uniformity()? != Some(2) {
        return Err(Error::NotUniform(format!("{w} is not 2-uniform")));
    }
    require_represents(w, g)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    if w.initial_permutation()? != w.final_permutation()? {
        return Ok(w.clone());
    }
    let rotated = w.cyclic_shift(w.len() - 1)?;
    if rotated.initial_permutation()? == rotated.final_permutation()? {
        return Err(Error::OuterPermutationsCoincide);
    }
    Ok(rotated)
}

/// Blocks for the ternary substitution. For `k >= 3` they are the first
/// three permutations `P_1, P_2, P_3`. For `k = 2` the word is first
/// normalised so `π ≠ σ`, and the blocks are `π(w), σ(w), w`.
pub fn build_blocks(w: &Word, g: &Graph) -> Result<ExtensionBlocks> {
    let k = uniform_k(w, 2)?;
    require_represents(w, g)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if k == 2 {
        let w = normalize_distinct_outer_perms(w, g)?;
        ExtensionBlocks::new(
            w.initial_permutation()?.into_word(),
            w.final_permutation()?.into_word(),
            w,
        )
    } else {
        ExtensionBlocks::new(
            w.ith_permutation(1)?.into_word(),
            w.ith_permutation(2)?.into_word(),
            w.ith_permutation(3)?.into_word(),
        )
    }
}

/// Appends the images of the first `blocks` ternary symbols to a normalised
/// copy of `w`.
///
/// `w` must be a square-free `k`-uniform representant (`k >= 2`) of a
/// connected, non-complete graph. For `k >= 3` the suffix normalisation is
/// applied and every block has `n` letters; for `k = 2` the outer
/// permutations are separated and the `0` block is the whole word.
pub fn extend(w: &Word, g: &Graph, blocks: usize) -> Result<Word> {
    require_represents(w, g)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraphUnbounded);
    }
    let k = uniform_k(w, 2)?;
    if let Some(sq) = find_first_square(w) {
        return Err(Error::NotSquareFree(format!(
            "{w} contains the square ({})({}) at position {}",
            sq.root, sq.root, sq.start
        )));
    }
    let base = if k == 2 { normalize_distinct_outer_perms(w, g)? } else { normalize_no_perm_suffix(w, g)? };
    let substitution = build_blocks(&base, g)?;
    let mut letters = base.into_letters();
    for symbol in TernaryStream::new().take(blocks) {
        letters.extend_from_slice(substitution.image(symbol).letters());
    }
    let out = Word::new(letters);
    if let Some(sq) = find_first_square(&out) {
        return Err(Error::ExtensionHasSquare {
            word: out.to_string(),
            root: sq.root.to_string(),
            start: sq.start,
        });
    }
    if !represents(&out, g) {
        return Err(Error::ConstructionFailed(format!("{out} does not represent the graph")));
    }
    Ok(out)
}

struct CheckedComponents<'a> {
    components: &'a [(Graph, Word)],
    union: Graph,
}

fn check_components(components: &[(Graph, Word)]) -> Result<CheckedComponents<'_>> {
    let mut union = Graph::default();
    let mut seen: BTreeSet<Letter> = BTreeSet::new();
    for (i, (g, w)) in components.iter().enumerate() {
        if !represents(w, g) {
            return Err(Error::ComponentNotRepresented(i + 1));
        }
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        if !is_square_free(w) {
            return Err(Error::NotSquareFree(format!("component {} word {w}", i + 1)));
        }
        if let Some(v) = g.vertices().iter().find(|v| seen.contains(*v)) {
            return Err(Error::OverlappingAlphabets(v.clone()));
        }
        seen.extend(g.vertices().iter().cloned());
        union = union.disjoint_union(g)?;
    }
    Ok(CheckedComponents { components, union })
}

fn verify_output(out: Word, g: &Graph) -> Result<Word> {
    if !represents(&out, g) {
        return Err(Error::ConstructionFailed(format!("{out} does not represent the union")));
    }
    if let Some(sq) = find_first_square(&out) {
        return Err(Error::ConstructionFailed(format!(
            "{out} contains the square ({})({}) at position {}",
            sq.root, sq.root, sq.start
        )));
    }
    Ok(out)
}

fn sigma(w: &Word) -> Result<Word> {
    Ok(w.final_permutation()?.into_word())
}

/// Square-free representant of a disjoint union of connected graphs, each
/// given with a square-free representant of its own:
///
/// `w_1\l · w_2 ⋯ w_n · l · σ(w_n) ⋯ σ(w_2) · σ(w_1)\l · σ(w_2) ⋯ σ(w_n) · l`
///
/// where `l` is the last letter of `w_1`. The first component with an edge
/// is moved to the front; the rest keep their order.
pub fn disconnected_word(components: &[(Graph, Word)]) -> Result<Word> {
    let checked = check_components(components)?;
    let lead = checked
        .components
        .iter()
        .position(|(g, _)| g.edge_count() > 0)
        .ok_or(Error::NoEdgedComponent)?;
    let mut words: Vec<&Word> = Vec::with_capacity(components.len());
    words.push(&components[lead].1);
    words.extend(components.iter().enumerate().filter(|(i, _)| *i != lead).map(|(_, (_, w))| w));

    let first = words[0];
    let last = Word::new(vec![first.last_letter()?.clone()]);
    let rest = &words[1..];
    let rest_sigma: Vec<Word> = rest.iter().map(|w| sigma(w)).collect::<Result<_>>()?;

    let mut parts: Vec<Word> = vec![first.without_last()?];
    parts.extend(rest.iter().map(|w| (*w).clone()));
    parts.push(last.clone());
    parts.extend(rest_sigma.iter().rev().cloned());
    parts.push(sigma(first)?.without_last()?);
    parts.extend(rest_sigma.iter().cloned());
    parts.push(last);
    verify_output(Word::join(&parts), &checked.union)
}

/// Shorter representant when component `j` (1-based) is connected, not
/// complete, and given by a `k`-uniform word with `k >= 2`:
///
/// `w_1 ⋯ w_n · σ(w_j) · σ(w_n) ⋯ σ(w_{j+1}) · σ(w_{j-1}) ⋯ σ(w_1)`
pub fn disconnected_word_short(components: &[(Graph, Word)], j: usize) -> Result<Word> {
    let checked = check_components(components)?;
    if j == 0 || j > components.len() {
        return Err(Error::IndexOutOfRange { index: j, max: components.len() });
    }
    if !components.iter().any(|(g, _)| g.edge_count() > 0) {
        return Err(Error::NoEdgedComponent);
    }
    let (gj, wj) = &components[j - 1];
    if gj.is_complete() {
        return Err(Error::ComponentComplete(j));
    }
    uniform_k(wj, 2)?;

    let mut parts: Vec<Word> = components.iter().map(|(_, w)| w.clone()).collect();
    parts.push(sigma(wj)?);
    for (i, (_, w)) in components.iter().enumerate().rev() {
        if i != j - 1 {
            parts.push(sigma(w)?);
        }
    }
    verify_output(Word::join(&parts), &checked.union)
}

/// Square-free representant of the edgeless graph on `1..=n`.
///
/// For `n >= 4` this is `2 1 3 ⋯ (n-1) · 1 2 ⋯ (n-1) · n · (n-1) ⋯ 2 1`.
/// That pattern degenerates to `2112321` for `n = 3`, so `n = 3` uses the
/// shortlex-least square-free representant `121312313` instead. `O_2` has
/// no square-free representant at all.
pub fn empty_graph_word(n: u64) -> Result<Word> {
    match n {
        0 => Err(Error::InvalidGraph("the edgeless graph needs at least one vertex".into())),
        1 => Ok(Word::from_nums(&[1])),
        2 => Err(Error::NoSquareFreeRepresentation),
        3 => Ok(Word::from_nums(&[1, 2, 1, 3, 1, 2, 3, 1, 3])),
        _ => {
            let mut nums = vec![2, 1];
            nums.extend(3..n);
            nums.extend(1..n);
            nums.push(n);
            nums.extend((1..n).rev());
            Ok(Word::from_nums(&nums))
        }
    }
}
