//! Coefficient arrays read off `D^n` expansions.
//!
//! An [`IndexMap`] sends the exponent of one letter to the row index `i` and
//! of another to the column index `j` through `exponent = stride·index +
//! offset`. Other letters must either carry a fixed exponent or be declared
//! free. Any monomial that does not fit is a [`PatternViolation`], which
//! normally means the wrong grammar or the wrong map.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{Letter, Monomial, Polynomial, Style};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("monomial `{monomial}` does not fit the index map: {reason}")]
pub struct PatternViolation {
    pub monomial: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub letter: Letter,
    pub stride: u32,
    pub offset: u32,
}

impl Axis {
    pub fn new(letter: impl Into<Letter>, stride: u32, offset: u32) -> Self {
        assert!(stride > 0, "axis stride must be positive");
        Axis {
            letter: letter.into(),
            stride,
            offset,
        }
    }

    fn index(&self, e: u32) -> Option<usize> {
        if e < self.offset || !(e - self.offset).is_multiple_of(self.stride) {
            None
        } else {
            Some(((e - self.offset) / self.stride) as usize)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    i: Axis,
    j: Axis,
    fixed: BTreeMap<Letter, u32>,
    free: BTreeSet<Letter>,
}

impl IndexMap {
    pub fn new(i: Axis, j: Axis) -> Self {
        assert_ne!(i.letter, j.letter, "axes must use distinct letters");
        IndexMap {
            i,
            j,
            fixed: BTreeMap::new(),
            free: BTreeSet::new(),
        }
    }

    /// `x^i y^j -> (i, j)`.
    pub fn identity(i: &str, j: &str) -> Self {
        IndexMap::new(Axis::new(i, 1, 0), Axis::new(j, 1, 0))
    }

    /// Requires `letter` to appear with exactly this exponent in every term.
    pub fn with_fixed(mut self, letter: impl Into<Letter>, exponent: u32) -> Self {
        self.fixed.insert(letter.into(), exponent);
        self
    }

    /// Lets `letter` appear with any exponent; it is ignored for indexing.
    pub fn with_free(mut self, letter: impl Into<Letter>) -> Self {
        self.free.insert(letter.into());
        self
    }

    fn locate(&self, m: &Monomial) -> Result<(usize, usize), String> {
        for l in m.letters() {
            if *l != self.i.letter
                && *l != self.j.letter
                && !self.fixed.contains_key(l)
                && !self.free.contains(l)
            {
                return Err(format!("unexpected letter `{l}`"));
            }
        }
        for (l, &want) in &self.fixed {
            let got = m.exponent(l);
            if got != want {
                return Err(format!("`{l}` has exponent {got}, expected {want}"));
            }
        }
        let axis = |a: &Axis| {
            let e = m.exponent(&a.letter);
            a.index(e).ok_or_else(|| {
                format!(
                    "`{}` has exponent {e}, not of the form {}·k + {}",
                    a.letter, a.stride, a.offset
                )
            })
        };
        Ok((axis(&self.i)?, axis(&self.j)?))
    }
}

/// Sparse `(i, j) -> coefficient` array for one derivation depth.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoeffArray {
    pub n: usize,
    pub grammar_id: String,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl CoeffArray {
    pub fn new(n: usize, grammar_id: impl Into<String>) -> Self {
        CoeffArray {
            n,
            grammar_id: grammar_id.into(),
            entries: BTreeMap::new(),
        }
    }

    /// Zero outside the stored support, including negative indices.
    pub fn get(&self, i: i64, j: i64) -> BigInt {
        if i < 0 || j < 0 {
            return BigInt::zero();
        }
        self.entries
            .get(&(i as usize, j as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn insert(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// Largest row and column index with a stored entry.
    pub fn extent(&self) -> (usize, usize) {
        self.entries
            .keys()
            .fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }
}

#[derive(Serialize)]
struct EntryRecord {
    i: usize,
    j: usize,
    value: String,
}

impl Serialize for CoeffArray {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<EntryRecord> = self
            .entries
            .iter()
            .map(|(&(i, j), v)| EntryRecord {
                i,
                j,
                value: v.to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("CoeffArray", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("grammar_id", &self.grammar_id)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

pub fn extract_coeffs(
    p: &Polynomial,
    map: &IndexMap,
    n: usize,
    grammar_id: &str,
) -> Result<CoeffArray, PatternViolation> {
    let mut out = CoeffArray::new(n, grammar_id);
    for (m, c) in p.terms() {
        let (i, j) = map.locate(m).map_err(|reason| PatternViolation {
            monomial: Polynomial::term(1, m.clone()).to_text(Style::Explicit),
            reason,
        })?;
        // Free letters can map distinct monomials to one cell.
        let cur = out.get(i as i64, j as i64);
        out.insert(i, j, cur + c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn identity_map_on_descent_grammar() {
        let p = builtin::descent()
            .derive_n(&Polynomial::letter("x"), 2)
            .unwrap();
        let a = extract_coeffs(&p, &IndexMap::identity("x", "y"), 2, "g1").unwrap();
        let got: Vec<_> = a.entries().map(|(&k, v)| (k, v.clone())).collect();
        assert_eq!(
            got,
            vec![
                ((1, 0), big(1)),
                ((1, 1), big(3)),
                ((1, 2), big(1)),
                ((2, 1), big(1))
            ]
        );
    }

    #[test]
    fn single_letter() {
        let a = extract_coeffs(
            &Polynomial::letter("x"),
            &IndexMap::identity("x", "y"),
            0,
            "",
        )
        .unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.get(1, 0), big(1));
    }

    #[test]
    fn odd_exponent_map() {
        let xy = &Polynomial::letter("x") * &Polynomial::letter("y");
        let p = builtin::whitney_type_b().derive(&xy).unwrap();
        let map = IndexMap::new(Axis::new("x", 2, 1), Axis::new("y", 2, 1));
        let a = extract_coeffs(&p, &map, 1, "g5").unwrap();
        assert_eq!(a.get(0, 0), big(2));
        assert_eq!(a.get(0, 1), big(1));
        assert_eq!(a.get(1, 0), big(1));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn violations_are_reported() {
        let p = builtin::whitney_type_b()
            .derive(&Polynomial::letter("x"))
            .unwrap();
        // D(x) = x + xy^2 has even y-exponents; an odd-y map must reject it.
        let map = IndexMap::new(Axis::new("x", 2, 1), Axis::new("y", 2, 1));
        let err = extract_coeffs(&p, &map, 1, "g5").unwrap_err();
        assert_eq!(err.monomial, "x");

        let err = extract_coeffs(
            &Polynomial::letter("z"),
            &IndexMap::identity("x", "y"),
            0,
            "",
        )
        .unwrap_err();
        assert!(err.reason.contains("unexpected letter"));
    }

    #[test]
    fn fixed_and_free_letters() {
        let p = builtin::alternating()
            .derive_n(&Polynomial::letter("w"), 2)
            .unwrap();
        let map = IndexMap::identity("x", "y").with_fixed("w", 1);
        let t = extract_coeffs(&p, &map, 2, "g3").unwrap();
        assert_eq!(t.get(0, 0), big(1));
        assert_eq!(t.get(1, 0), big(3));
        assert_eq!(t.get(1, 1), big(1));
        assert_eq!(t.get(2, 0), big(1));
        assert!(extract_coeffs(&p, &map.clone().with_fixed("w", 2), 2, "g3").is_err());

        let g = builtin::three_species()
            .derive_n(&Polynomial::letter("x"), 2)
            .unwrap();
        let arr =
            extract_coeffs(&g, &IndexMap::identity("x", "y").with_free("z"), 2, "g6").unwrap();
        assert_eq!(arr.sum(), g.coeff_sum());
    }
}
