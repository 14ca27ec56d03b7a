mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use wordrep::squares::all_squares;
use wordrep::{
    all_representing_words, derive_graph, desquare, disconnected_word, disconnected_word_short,
    extend, find_first_square, is_square_free, squarefree_ternary, Error, Graph, SearchBudget,
    Word,
};

fn word_strategy(alphabet: u64, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=alphabet, 1..=max_len).prop_map(|v| Word::from_nums(&v))
}

fn graph_strategy(max_n: u64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u64, u64)> =
            (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let vertices: Vec<u64> = (1..=n).collect();
            let edges: Vec<(u64, u64)> =
                pairs.iter().zip(&mask).filter(|(_, &on)| on).map(|(p, _)| *p).collect();
            Graph::from_nums(&vertices, &edges).unwrap()
        })
    })
}

#[test]
fn prepend_and_rotation_keep_the_graph() {
    for n in 1..=3u64 {
        let alphabet: Vec<u64> = (1..=n).collect();
        for len in 1..=6 {
            for v in common::words_of_length(&alphabet, len) {
                let w = Word::from_nums(&v);
                let g = derive_graph(&w).unwrap();
                let prepended = w.prepend_initial().unwrap();
                assert_eq!(common::edges_of(&common::nums(&prepended)), common::edges_of(&v), "{w}");
                if w.uniformity().unwrap().is_some() {
                    for split in 0..=w.len() {
                        let shifted = w.cyclic_shift(split).unwrap();
                        assert!(common::represents_graph(&shifted, &g), "{w} shifted at {split}");
                    }
                }
            }
        }
    }
}

#[test]
fn connected_representants_have_no_trivial_squares() {
    for n in 2..=3u64 {
        let alphabet: Vec<u64> = (1..=n).collect();
        for len in 1..=8 {
            for v in common::words_of_length(&alphabet, len) {
                let w = Word::from_nums(&v);
                let g = derive_graph(&w).unwrap();
                if g.is_connected() && g.vertex_count() >= 2 {
                    assert!(all_squares(&w).iter().all(|sq| !sq.trivial), "{w}");
                }
            }
        }
    }
}

#[test]
fn pruned_enumeration_matches_brute_force() {
    let budget = SearchBudget::default();
    for n in 1..=3 {
        for g in Graph::all_on(n) {
            let pruned: BTreeSet<Vec<u64>> =
                all_representing_words(&g, 6, &budget).unwrap().iter().map(common::nums).collect();
            assert_eq!(pruned, common::representants(&g, 6), "{g}");
        }
    }
}

#[test]
fn disconnected_length_formulas() {
    let comp = |v: &[u64], e: &[(u64, u64)], w: &str| (Graph::from_nums(v, e).unwrap(), w.parse::<Word>().unwrap());
    let cases = vec![
        vec![comp(&[1, 2], &[(1, 2)], "12"), comp(&[3], &[], "3")],
        vec![comp(&[1, 2, 3], &[(1, 2), (2, 3)], "121323"), comp(&[4], &[], "4")],
        vec![comp(&[1, 2], &[(1, 2)], "12"), comp(&[3, 4, 5], &[(3, 4), (4, 5)], "343545"), comp(&[6], &[], "6")],
        vec![comp(&[1, 2, 3], &[(1, 2), (1, 3), (2, 3)], "123"), comp(&[4, 5, 6], &[(4, 5), (5, 6)], "4546")],
    ];
    for parts in &cases {
        let letters: usize = parts.iter().map(|(_, w)| w.len()).sum();
        let sizes: Vec<usize> = parts.iter().map(|(g, _)| g.vertex_count()).collect();
        let lead = parts.iter().position(|(g, _)| g.edge_count() > 0).unwrap();
        let long = disconnected_word(parts).unwrap();
        let others: usize = sizes.iter().enumerate().filter(|(i, _)| *i != lead).map(|(_, s)| s).sum();
        assert_eq!(long.len(), letters + sizes[lead] + 2 * others);
        for j in 1..=parts.len() {
            match disconnected_word_short(parts, j) {
                Ok(short) => {
                    assert_eq!(short.len(), letters + sizes.iter().sum::<usize>());
                    assert!(is_square_free(&short));
                }
                Err(Error::ComponentComplete(_) | Error::NotUniform(_) | Error::ConstructionFailed(_)) => {}
                Err(e) => panic!("unexpected {e}"),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn derived_graph_matches_oracle(w in word_strategy(5, 12)) {
        let g = derive_graph(&w).unwrap();
        prop_assert!(common::represents_graph(&w, &g));
    }

    #[test]
    fn parse_display_round_trip(w in word_strategy(9, 12)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn squares_are_real_and_complete(w in word_strategy(3, 14)) {
        let v = common::nums(&w);
        let found = all_squares(&w);
        let mut naive = 0;
        for i in 0..v.len() {
            for len in 1..=(v.len() - i) / 2 {
                if v[i..i + len] == v[i + len..i + 2 * len] {
                    naive += 1;
                }
            }
        }
        prop_assert_eq!(found.len(), naive);
        for sq in &found {
            let r = common::nums(&sq.root);
            prop_assert_eq!(&v[sq.start - 1..sq.start - 1 + r.len()], &r[..]);
            prop_assert_eq!(&v[sq.start - 1 + r.len()..sq.start - 1 + 2 * r.len()], &r[..]);
            prop_assert_eq!(sq.trivial, r.len() == 1);
        }
        prop_assert_eq!(find_first_square(&w), found.first().cloned());
        prop_assert_eq!(is_square_free(&w), common::square_free(&v));
    }

    #[test]
    fn desquare_postconditions(w in word_strategy(4, 14)) {
        let g = derive_graph(&w).unwrap();
        prop_assume!(g.is_connected());
        let out = desquare(&w, &g).unwrap();
        prop_assert!(common::square_free(&common::nums(&out)));
        prop_assert!(common::represents_graph(&out, &g));
        prop_assert!(out.len() <= w.len());
        prop_assert_eq!(desquare(&out, &g).unwrap(), out);
    }

    #[test]
    fn ternary_prefixes_nest(a in 0usize..400, b in 0usize..400) {
        let (short, long) = (a.min(b), a.max(b));
        let long_word = squarefree_ternary(long);
        prop_assert_eq!(squarefree_ternary(short), long_word.prefix(short).unwrap());
        prop_assert_eq!(common::nums(&long_word), common::ternary(long));
    }

    #[test]
    fn extension_is_monotone(a in 0usize..25, b in 0usize..25) {
        let g = Graph::path(4);
        let seed: Word = "121432434123".parse().unwrap();
        let (short, long) = (a.min(b), a.max(b));
        let s = extend(&seed, &g, short).unwrap();
        let l = extend(&seed, &g, long).unwrap();
        prop_assert!(l.letters().starts_with(s.letters()));
        prop_assert_eq!(l.len(), seed.len() + 4 * long);
    }

    #[test]
    fn search_agrees_with_oracle_on_small_graphs(g in graph_strategy(3)) {
        let words = all_representing_words(&g, 5, &SearchBudget::default()).unwrap();
        for w in &words {
            prop_assert!(common::represents_graph(w, &g));
        }
        prop_assert_eq!(words.len(), common::representants(&g, 5).len());
    }
}
