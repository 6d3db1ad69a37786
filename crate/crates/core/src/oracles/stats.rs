//! Statistics on lists, signed permutations and matchings.
//!
//! Lists are assumed to hold distinct positive integers.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("longest alternating subsequence of an empty list is undefined")]
    EmptyList,
}

/// Positions `i` with `w[i] > w[i+1]`.
pub fn descents(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

/// Entries `w_i`, `i < n`, larger than both neighbours, with `w_0 = 0`.
pub fn left_peaks(w: &[u32]) -> usize {
    (0..w.len().saturating_sub(1))
        .filter(|&i| {
            let prev = if i == 0 { 0 } else { w[i - 1] };
            prev < w[i] && w[i] > w[i + 1]
        })
        .count()
}

/// Entries `w_i`, `i >= 2`, smaller than both neighbours, with `w_{n+1} = ∞`.
pub fn right_valleys(w: &[u32]) -> usize {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i] && w.get(i + 1).is_none_or(|&next| w[i] < next))
        .count()
}

/// Length of the longest subsequence `s_1 > s_2 < s_3 > ...`.
pub fn las(w: &[u32]) -> Result<usize, StatError> {
    if w.is_empty() {
        return Err(StatError::EmptyList);
    }
    // odd[i]: longest odd-length alternating subsequence ending at i (next
    // step must go down); even[i]: even-length ending at i (next goes up).
    let n = w.len();
    let mut odd = vec![1usize; n];
    let mut even = vec![0usize; n];
    for i in 0..n {
        for j in 0..i {
            if w[j] > w[i] && odd[j] + 1 > even[i] {
                even[i] = odd[j] + 1;
            }
            if even[j] > 0 && w[j] < w[i] && even[j] + 1 > odd[i] {
                odd[i] = even[j] + 1;
            }
        }
    }
    Ok(odd.iter().chain(even.iter()).copied().max().unwrap_or(1))
}

/// A signed permutation of `[n]`, stored by the images of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    /// `None` unless the absolute values form a permutation of `[n]`.
    pub fn new(images: Vec<i32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return None;
            }
            seen[a] = true;
        }
        Some(SignedPermutation { images })
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }
}

/// Type-B descents: `i ∈ {0, ..., n-1}` with `π(i) > π(i+1)`, `π(0) = 0`.
pub fn des_b(p: &SignedPermutation) -> usize {
    let mut prev = 0i32;
    let mut count = 0;
    for &v in &p.images {
        if prev > v {
            count += 1;
        }
        prev = v;
    }
    count
}

/// A perfect matching of `[2n]`, pairs stored as `(smaller, larger)` sorted
/// by the smaller entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    pairs: Vec<(u32, u32)>,
}

impl Matching {
    /// `None` unless the pairs are disjoint and cover `[2n]`.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Option<Self> {
        let mut pairs: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        let size = 2 * pairs.len();
        let mut seen = vec![false; size + 1];
        for &(a, b) in &pairs {
            for v in [a, b] {
                let v = v as usize;
                if v == 0 || v > size || seen[v] {
                    return None;
                }
                seen[v] = true;
            }
        }
        Some(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.pairs {
            write!(f, "{{{a},{b}}}")?;
        }
        Ok(())
    }
}

pub fn odd_smaller_count(m: &Matching) -> usize {
    m.pairs.iter().filter(|(a, _)| a % 2 == 1).count()
}
