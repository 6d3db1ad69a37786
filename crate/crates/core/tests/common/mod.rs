#![allow(dead_code)]

use grammar_calculus::{Grammar, Letter, Monomial, Polynomial};
use proptest::prelude::*;

pub const LETTERS: [&str; 5] = ["a", "b", "x", "y", "z"];

/// Up to four terms over `LETTERS`, small coefficients and exponents.
pub fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (-3i64..=3, prop::collection::vec(0u32..=2, LETTERS.len()));
    prop::collection::vec(term, 0..=4).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(c, exps)| {
            (
                Monomial::from_exponents(LETTERS.iter().copied().zip(exps)),
                c.into(),
            )
        }))
    })
}

/// A random subset of `LETTERS` gets rules; the rest are constants.
pub fn grammar() -> impl Strategy<Value = Grammar> {
    (
        prop::collection::vec(any::<bool>(), LETTERS.len()),
        prop::collection::vec(poly(), LETTERS.len()),
    )
        .prop_map(|(ruled, rhs)| {
            let mut rules = Vec::new();
            let mut consts = Vec::new();
            for ((l, r), p) in LETTERS.iter().zip(ruled).zip(rhs) {
                if r {
                    rules.push((Letter::new(*l), p));
                } else {
                    consts.push(Letter::new(*l));
                }
            }
            Grammar::new(rules, consts).expect("every letter is declared")
        })
}

/// Distinct positive integers in random order.
pub fn distinct_list(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(1u32..200, 1..=max_len)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
}

/// Distinct positive integers whose first entry is the minimum.
pub fn min_first_list(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    distinct_list(max_len).prop_map(|mut w| {
        let pos = (0..w.len()).min_by_key(|&i| w[i]).unwrap();
        w.swap(0, pos);
        w
    })
}

/// Right-valley counts after inserting a new maximum after each position.
pub fn insertion_counts(w: &[u32], count: impl Fn(&[u32]) -> usize) -> (usize, usize, usize) {
    let before = count(w);
    let m = w.iter().max().unwrap() + 1;
    let (mut same, mut up, mut other) = (0, 0, 0);
    for pos in 1..=w.len() {
        let mut v = w.to_vec();
        v.insert(pos, m);
        match count(&v) as i64 - before as i64 {
            0 => same += 1,
            1 => up += 1,
            _ => other += 1,
        }
    }
    (same, up, other)
}
