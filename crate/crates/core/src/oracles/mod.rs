//! Brute-force oracles: exhaustive enumeration of permutations, signed
//! permutations, perfect matchings and cyclically ordered partitions, and the
//! statistics counted over them.

pub mod enumerate;
pub mod stats;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{CyclicallyOrderedPartition, Permutations};
pub use stats::{
    des_b, descents, las, left_peaks, odd_smaller_count, right_valleys, Matching,
    SignedPermutation, StatError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{kind} enumeration at n = {n} exceeds the configured cap of {cap}")]
    BoundExceeded {
        kind: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("unknown statistic `{0}`")]
    UnknownStat(String),
}

/// Largest `n` each brute-force enumerator will accept, plus the deepest
/// derivation the verifier and CLI will run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub permutations: usize,
    pub cops: usize,
    pub signed: usize,
    pub matchings: usize,
    pub depth: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            permutations: 9,
            cops: 8,
            signed: 5,
            matchings: 7,
            depth: 24,
        }
    }
}

impl Caps {
    fn check(kind: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
        if n > cap {
            Err(OracleError::BoundExceeded { kind, n, cap })
        } else {
            Ok(())
        }
    }
}

pub fn enumerate_permutations(n: usize, caps: &Caps) -> Result<Permutations, OracleError> {
    Caps::check("permutation", n, caps.permutations)?;
    Ok(Permutations::new(n))
}

pub fn enumerate_signed(
    n: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = SignedPermutation>, OracleError> {
    Caps::check("signed permutation", n, caps.signed)?;
    Ok(enumerate::signed_permutations(n))
}

pub fn enumerate_matchings(
    n: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = Matching>, OracleError> {
    Caps::check("matching", n, caps.matchings)?;
    Ok(enumerate::matchings(n).into_iter())
}

pub fn enumerate_cops(
    n: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = CyclicallyOrderedPartition>, OracleError> {
    Caps::check("cyclically ordered partition", n, caps.cops)?;
    Ok(enumerate::cops(n).into_iter())
}

/// A statistic evaluated on the opener list of a cyclically ordered partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpenerStat {
    Descents,
    RightValleys,
    LeftPeaks,
    Las,
}

impl OpenerStat {
    pub fn eval(self, w: &[u32]) -> usize {
        match self {
            OpenerStat::Descents => descents(w),
            OpenerStat::RightValleys => right_valleys(w),
            OpenerStat::LeftPeaks => left_peaks(w),
            OpenerStat::Las => las(w).expect("opener lists are nonempty"),
        }
    }
}

impl fmt::Display for OpenerStat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpenerStat::Descents => "descents",
            OpenerStat::RightValleys => "right_valleys",
            OpenerStat::LeftPeaks => "left_peaks",
            OpenerStat::Las => "las",
        })
    }
}

impl FromStr for OpenerStat {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "descents" => OpenerStat::Descents,
            "right_valleys" => OpenerStat::RightValleys,
            "left_peaks" => OpenerStat::LeftPeaks,
            "las" => OpenerStat::Las,
            _ => return Err(OracleError::UnknownStat(s.to_string())),
        })
    }
}

/// `(blocks, statistic) -> count` over all cyclically ordered partitions of
/// `[n]`.
pub fn cop_stat_table(
    n: usize,
    stat: OpenerStat,
    caps: &Caps,
) -> Result<BTreeMap<(usize, usize), u64>, OracleError> {
    let mut out = BTreeMap::new();
    if n == 0 {
        return Ok(out);
    }
    for c in enumerate_cops(n, caps)? {
        *out.entry((c.num_blocks(), stat.eval(&c.openers())))
            .or_insert(0) += 1;
    }
    Ok(out)
}

/// Counts `u[n][k][l]` of cyclically ordered partitions of `[n]` with `k`
/// blocks and `l` right valleys among the openers, from the insertion
/// recurrence
///
/// `u(n,k,l) = k·u(n-1,k,l) + (2l+1)·u(n-1,k-1,l) + (k-2l)·u(n-1,k-1,l-1)`
///
/// with `u(1,1,0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTable {
    nmax: usize,
    cells: Vec<Vec<Vec<BigInt>>>,
}

impl UTable {
    pub fn get(&self, n: usize, k: usize, l: usize) -> BigInt {
        self.cells
            .get(n)
            .and_then(|r| r.get(k))
            .and_then(|r| r.get(l))
            .cloned()
            .unwrap_or_default()
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Nonzero entries as `((n, k, l), value)`.
    pub fn entries(&self) -> BTreeMap<(usize, usize, usize), BigInt> {
        let mut out = BTreeMap::new();
        for (n, rows) in self.cells.iter().enumerate() {
            for (k, row) in rows.iter().enumerate() {
                for (l, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out.insert((n, k, l), v.clone());
                    }
                }
            }
        }
        out
    }
}

pub fn u_table(nmax: usize) -> UTable {
    let width = nmax + 2;
    let mut cells = vec![vec![vec![BigInt::zero(); width]; width]; nmax + 1];
    if nmax >= 1 {
        cells[1][1][0] = BigInt::from(1);
    }
    for n in 2..=nmax {
        for k in 1..=n {
            let mut l = 0;
            while 2 * l < k {
                let mut v = BigInt::from(k) * &cells[n - 1][k][l];
                v += BigInt::from(2 * l + 1) * &cells[n - 1][k - 1][l];
                if l >= 1 {
                    v += BigInt::from(k - 2 * l) * &cells[n - 1][k - 1][l - 1];
                }
                cells[n][k][l] = v;
                l += 1;
            }
        }
    }
    UTable { nmax, cells }
}

/// Brute-force distributions of left peaks and of the longest alternating
/// subsequence over `S_n`, built once for every `n <= max_n`.
///
/// `P(n, k)` counts permutations of `[n]` with `k` left peaks and `a_k(n)`
/// those whose longest alternating subsequence has length `k`. Row 0 is the
/// empty permutation, counted as `P(0,0) = a_0(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationCensus {
    left_peaks: Vec<Vec<u64>>,
    las: Vec<Vec<u64>>,
}

impl PermutationCensus {
    pub fn build(max_n: usize, caps: &Caps) -> Result<Self, OracleError> {
        let mut lp = vec![vec![1u64]];
        let mut al = vec![vec![1u64]];
        for n in 1..=max_n {
            let mut peaks = vec![0u64; n + 1];
            let mut alt = vec![0u64; n + 1];
            for p in enumerate_permutations(n, caps)? {
                peaks[left_peaks(&p)] += 1;
                alt[las(&p).expect("nonempty")] += 1;
            }
            lp.push(peaks);
            al.push(alt);
        }
        Ok(PermutationCensus {
            left_peaks: lp,
            las: al,
        })
    }

    pub fn max_n(&self) -> usize {
        self.left_peaks.len() - 1
    }

    /// `P(n, k)`; zero for out-of-range `k`. Panics if `n` was not built.
    pub fn left_peak(&self, n: usize, k: i64) -> BigInt {
        row_get(&self.left_peaks[n], k)
    }

    /// `a_k(n)`; zero for out-of-range `k`. Panics if `n` was not built.
    pub fn las(&self, k: i64, n: usize) -> BigInt {
        row_get(&self.las[n], k)
    }

    pub fn left_peak_row(&self, n: usize) -> Vec<BigInt> {
        self.left_peaks[n]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect()
    }

    pub fn las_row(&self, n: usize) -> Vec<BigInt> {
        self.las[n].iter().map(|&v| BigInt::from(v)).collect()
    }
}

fn row_get(row: &[u64], k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    row.get(k as usize)
        .map(|&v| BigInt::from(v))
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{factorial, Triangles};

    #[test]
    fn caps_are_enforced() {
        let caps = Caps::default();
        assert!(enumerate_permutations(9, &caps).is_ok());
        assert_eq!(
            enumerate_permutations(10, &caps).err(),
            Some(OracleError::BoundExceeded {
                kind: "permutation",
                n: 10,
                cap: 9
            })
        );
        assert!(enumerate_cops(9, &caps).is_err());
        assert!(enumerate_signed(6, &caps).is_err());
        assert!(enumerate_matchings(8, &caps).is_err());
        assert!(cop_stat_table(9, OpenerStat::Las, &caps).is_err());
    }

    #[test]
    fn descent_table_for_three() {
        let t = cop_stat_table(3, OpenerStat::Descents, &Caps::default()).unwrap();
        let want = BTreeMap::from([((1, 0), 1), ((2, 0), 3), ((3, 0), 1), ((3, 1), 1)]);
        assert_eq!(t, want);
        let mut blocks = BTreeMap::new();
        for ((k, _), c) in &t {
            *blocks.entry(*k).or_insert(0) += c;
        }
        assert_eq!(blocks, BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
    }

    #[test]
    fn single_cop() {
        for stat in [OpenerStat::Descents, OpenerStat::RightValleys] {
            let t = cop_stat_table(1, stat, &Caps::default()).unwrap();
            assert_eq!(t, BTreeMap::from([((1, 0), 1)]));
        }
    }

    #[test]
    fn u_base_case() {
        let u = u_table(4);
        assert_eq!(u.get(1, 1, 0), BigInt::from(1));
        assert_eq!(u.entries().keys().filter(|(n, _, _)| *n == 1).count(), 1);
    }

    #[test]
    fn u_recurrence_matches_brute_force() {
        let caps = Caps::default();
        let u = u_table(8);
        for n in 1..=8 {
            let brute = cop_stat_table(n, OpenerStat::RightValleys, &caps).unwrap();
            for (&(k, l), &c) in &brute {
                assert_eq!(u.get(n, k, l), BigInt::from(c), "u({n},{k},{l})");
            }
            let from_u: usize = u.entries().keys().filter(|(m, _, _)| *m == n).count();
            assert_eq!(from_u, brute.len());
        }
    }

    #[test]
    fn u_factors_through_shorter_peak_counts() {
        // The opener list starts with its minimum, so its valley count is the
        // left-peak count of the remaining k-1 openers.
        let caps = Caps::default();
        let census = PermutationCensus::build(8, &caps).unwrap();
        let t = Triangles::build(8).unwrap();
        let u = u_table(8);
        for n in 1..=8 {
            for k in 1..=n {
                for l in 0..=k {
                    let want = t.s(n as i64, k as i64) * census.left_peak(k - 1, l as i64);
                    assert_eq!(u.get(n, k, l), want, "u({n},{k},{l})");
                }
            }
        }
        // With P(k, l) in place of P(k-1, l) the identity already fails at
        // u(3,3,1) = 1 against S(3,3)·P(3,1) = 5.
        assert_eq!(u.get(3, 3, 1), BigInt::from(1));
        assert_eq!(t.s(3, 3) * census.left_peak(3, 1), BigInt::from(5));
    }

    #[test]
    fn census_rows_sum_to_factorials() {
        let census = PermutationCensus::build(8, &Caps::default()).unwrap();
        for n in 0..=8 {
            let lp: BigInt = census.left_peak_row(n).into_iter().sum();
            let al: BigInt = census.las_row(n).into_iter().sum();
            assert_eq!(lp, factorial(n));
            assert_eq!(al, factorial(n));
        }
        assert_eq!(census.left_peak(3, 1), BigInt::from(5));
        assert_eq!(census.las(2, 2), BigInt::from(1));
        // A008971 row 4 and A186370 row 4.
        assert_eq!(census.left_peak_row(4), [1, 18, 5, 0, 0].map(BigInt::from));
        assert_eq!(census.las_row(4), [0, 1, 7, 11, 5].map(BigInt::from));
    }

    #[test]
    fn stat_names_round_trip() {
        for s in ["descents", "right_valleys", "left_peaks", "las"] {
            assert_eq!(s.parse::<OpenerStat>().unwrap().to_string(), s);
        }
        assert!("inversions".parse::<OpenerStat>().is_err());
    }
}
