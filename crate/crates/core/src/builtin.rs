//! Built-in grammars.
//!
//! | name | rules                                      | start   |
//! |------|--------------------------------------------|---------|
//! | `g1` | x → x + xy, y → y + xy                     | x       |
//! | `g2` | x → x + xy, y → y + x²                     | x       |
//! | `g3` | w → w + wx, x → x + xy, y → y + x²         | w       |
//! | `g4` | x → x + x² + xy, y → y + y² + xy           | x       |
//! | `g5` | x → x + xy², y → y + x²y                   | x, xy   |
//! | `gB` | x → xy², y → x²y                           | x, xy   |
//! | `g6` | x → x(y+z), y → y(z+x), z → z(x+y)         | x       |
//!
//! plus the two classical grammars `stirling` (x → xy, y → y) and
//! `eulerian` (x → xy, y → xy).

use crate::grammar::Grammar;
use crate::poly::{Letter, Monomial, Polynomial};

fn poly(terms: &[(i64, &[(&str, u32)])]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|(c, exps)| (Monomial::from_exponents(exps.iter().copied()), (*c).into())),
    )
}

fn grammar(rules: Vec<(&str, Polynomial)>) -> Grammar {
    Grammar::new(rules.into_iter().map(|(l, p)| (Letter::new(l), p)), [])
        .expect("built-in grammars are closed")
}

pub fn stirling() -> Grammar {
    grammar(vec![
        ("x", poly(&[(1, &[("x", 1), ("y", 1)])])),
        ("y", poly(&[(1, &[("y", 1)])])),
    ])
}

pub fn eulerian() -> Grammar {
    grammar(vec![
        ("x", poly(&[(1, &[("x", 1), ("y", 1)])])),
        ("y", poly(&[(1, &[("x", 1), ("y", 1)])])),
    ])
}

/// `g1`: opener descents of cyclically ordered partitions.
pub fn descent() -> Grammar {
    grammar(vec![
        ("x", poly(&[(1, &[("x", 1)]), (1, &[("x", 1), ("y", 1)])])),
        ("y", poly(&[(1, &[("y", 1)]), (1, &[("x", 1), ("y", 1)])])),
    ])
}

/// `g2`: opener right valleys (left peaks).
pub fn left_peak() -> Grammar {
    grammar(vec![
        ("x", poly(&[(1, &[("x", 1)]), (1, &[("x", 1), ("y", 1)])])),
        ("y", poly(&[(1, &[("y", 1)]), (1, &[("x", 2)])])),
    ])
}

/// `g3`: longest alternating subsequence of openers; start from `w`.
pub fn alternating() -> Grammar {
    grammar(vec![
        ("w", poly(&[(1, &[("w", 1)]), (1, &[("w", 1), ("x", 1)])])),
        ("x", poly(&[(1, &[("x", 1)]), (1, &[("x", 1), ("y", 1)])])),
        ("y", poly(&[(1, &[("y", 1)]), (1, &[("x", 2)])])),
    ])
}

/// `g4`: Stirling numbers times binomials.
pub fn stirling_binomial() -> Grammar {
    grammar(vec![
        (
            "x",
            poly(&[
                (1, &[("x", 1)]),
                (1, &[("x", 2)]),
                (1, &[("x", 1), ("y", 1)]),
            ]),
        ),
        (
            "y",
            poly(&[
                (1, &[("y", 1)]),
                (1, &[("y", 2)]),
                (1, &[("x", 1), ("y", 1)]),
            ]),
        ),
    ])
}

/// `g5`: Whitney/matching and Stirling/type-B products.
pub fn whitney_type_b() -> Grammar {
    grammar(vec![
        ("x", poly(&[(1, &[("x", 1)]), (1, &[("x", 1), ("y", 2)])])),
        ("y", poly(&[(1, &[("y", 1)]), (1, &[("x", 2), ("y", 1)])])),
    ])
}

/// `gB`: matching numbers from `x`, type-B Eulerian numbers from `xy`.
pub fn type_b() -> Grammar {
    grammar(vec![
        ("x", poly(&[(1, &[("x", 1), ("y", 2)])])),
        ("y", poly(&[(1, &[("x", 2), ("y", 1)])])),
    ])
}

/// `g6`: the three-species cyclic grammar.
pub fn three_species() -> Grammar {
    grammar(vec![
        (
            "x",
            poly(&[(1, &[("x", 1), ("y", 1)]), (1, &[("x", 1), ("z", 1)])]),
        ),
        (
            "y",
            poly(&[(1, &[("y", 1), ("z", 1)]), (1, &[("x", 1), ("y", 1)])]),
        ),
        (
            "z",
            poly(&[(1, &[("x", 1), ("z", 1)]), (1, &[("y", 1), ("z", 1)])]),
        ),
    ])
}

pub const NAMES: [&str; 9] = [
    "g1", "g2", "g3", "g4", "g5", "gB", "g6", "stirling", "eulerian",
];

pub fn by_name(name: &str) -> Option<Grammar> {
    Some(match name {
        "g1" => descent(),
        "g2" => left_peak(),
        "g3" => alternating(),
        "g4" => stirling_binomial(),
        "g5" => whitney_type_b(),
        "gB" => type_b(),
        "g6" => three_species(),
        "stirling" => stirling(),
        "eulerian" => eulerian(),
        _ => return None,
    })
}

/// The letter a built-in grammar's expansions conventionally start from.
pub fn default_start(name: &str) -> &'static str {
    match name {
        "g3" => "w",
        _ => "x",
    }
}
