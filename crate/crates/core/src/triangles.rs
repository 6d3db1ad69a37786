//! Classical number triangles, built row by row from their recurrences.
//!
//! Eulerian numbers use the 1-based convention: `eulerian(n, k)` counts
//! permutations of `[n]` with `k - 1` descents, so row `n >= 1` is supported
//! on `1..=n` and row 0 is empty.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("whitney W_{m}({n},{k}): explicit sum gives {sum} but recurrence gives {rec}")]
    InternalMismatch {
        m: u32,
        n: usize,
        k: usize,
        sum: BigInt,
        rec: BigInt,
    },
    #[error("unknown triangle `{0}`")]
    UnknownTriangle(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Stirling2,
    Eulerian,
    TypeBEulerian,
    Matching,
    Whitney(u32),
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleKind::Stirling2 => f.write_str("stirling2"),
            TriangleKind::Eulerian => f.write_str("eulerian"),
            TriangleKind::TypeBEulerian => f.write_str("type_b_eulerian"),
            TriangleKind::Matching => f.write_str("matching"),
            TriangleKind::Whitney(m) => write!(f, "whitney:{m}"),
        }
    }
}

impl FromStr for TriangleKind {
    type Err = TriangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "stirling2" => TriangleKind::Stirling2,
            "eulerian" => TriangleKind::Eulerian,
            "type_b_eulerian" => TriangleKind::TypeBEulerian,
            "matching" => TriangleKind::Matching,
            _ => match s.strip_prefix("whitney:").map(str::parse::<u32>) {
                Some(Ok(m)) if m > 0 => TriangleKind::Whitney(m),
                _ => return Err(TriangleError::UnknownTriangle(s.to_string())),
            },
        })
    }
}

/// A finished triangle. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    pub name: String,
    pub max_n: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl TriangleTable {
    fn from_rows(name: String, rows: Vec<Vec<BigInt>>) -> Self {
        let max_n = rows.len().saturating_sub(1);
        let mut entries = BTreeMap::new();
        for (n, row) in rows.into_iter().enumerate() {
            for (k, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.insert((n, k), v);
                }
            }
        }
        TriangleTable {
            name,
            max_n,
            entries,
        }
    }

    pub fn build(kind: TriangleKind, max_n: usize) -> Result<Self, TriangleError> {
        let rows = match kind {
            TriangleKind::Stirling2 => stirling_rows(max_n),
            TriangleKind::Eulerian => eulerian_rows(max_n),
            TriangleKind::TypeBEulerian => type_b_rows(max_n),
            TriangleKind::Matching => matching_rows(max_n),
            TriangleKind::Whitney(m) => whitney_rows(m, max_n)?,
        };
        Ok(Self::from_rows(kind.to_string(), rows))
    }

    /// Zero outside the support. Panics if `n > max_n`.
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        assert!(
            n <= self.max_n,
            "{}: row {n} beyond built range {}",
            self.name,
            self.max_n
        );
        if k < 0 {
            return BigInt::zero();
        }
        self.entries
            .get(&(n, k as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// Row `n` as a dense vector over `k = 0..=n`.
    pub fn row(&self, n: usize) -> Vec<BigInt> {
        (0..=n as i64).map(|k| self.get(n, k)).collect()
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.row(n).into_iter().sum()
    }
}

fn zero_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    (0..=max_n).map(|n| vec![BigInt::zero(); n + 2]).collect()
}

fn trim(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    for (n, r) in rows.iter_mut().enumerate() {
        r.truncate(n + 1);
    }
    rows
}

fn stirling_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut t = zero_rows(max_n);
    t[0][0] = BigInt::one();
    for n in 1..=max_n {
        for k in 1..=n {
            t[n][k] = &t[n - 1][k - 1] + BigInt::from(k) * &t[n - 1][k];
        }
    }
    trim(t)
}

fn eulerian_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut t = zero_rows(max_n);
    if max_n >= 1 {
        t[1][1] = BigInt::one();
    }
    for n in 2..=max_n {
        for k in 1..=n {
            t[n][k] = BigInt::from(k) * &t[n - 1][k] + BigInt::from(n - k + 1) * &t[n - 1][k - 1];
        }
    }
    trim(t)
}

fn type_b_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut t = zero_rows(max_n);
    t[0][0] = BigInt::one();
    for n in 0..max_n {
        for k in 0..=n + 1 {
            let mut v = BigInt::from(2 * k + 1) * &t[n][k];
            if k >= 1 {
                v += BigInt::from(2 * n + 3 - 2 * k) * &t[n][k - 1];
            }
            t[n + 1][k] = v;
        }
    }
    trim(t)
}

fn matching_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut t = zero_rows(max_n);
    t[0][0] = BigInt::one();
    for n in 0..max_n {
        for k in 0..=n + 1 {
            let mut v = BigInt::from(2 * k) * &t[n][k];
            if k >= 1 {
                v += BigInt::from(2 * n + 3 - 2 * k) * &t[n][k - 1];
            }
            t[n + 1][k] = v;
        }
    }
    trim(t)
}

fn whitney_sum_rows(m: u32, max_n: usize) -> Vec<Vec<BigInt>> {
    let s = stirling_rows(max_n);
    let m = BigInt::from(m);
    (0..=max_n)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    (k..=n)
                        .map(|i| binomial(n, i as i64) * m.pow((i - k) as u32) * &s[i][k])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn whitney_recurrence_rows(m: u32, max_n: usize) -> Vec<Vec<BigInt>> {
    let mut t = zero_rows(max_n);
    t[0][0] = BigInt::one();
    for n in 1..=max_n {
        for k in 0..=n {
            let mut v = BigInt::from(1 + m as usize * k) * &t[n - 1][k];
            if k >= 1 {
                v += &t[n - 1][k - 1];
            }
            t[n][k] = v;
        }
    }
    trim(t)
}

fn whitney_rows(m: u32, max_n: usize) -> Result<Vec<Vec<BigInt>>, TriangleError> {
    let sum = whitney_sum_rows(m, max_n);
    let rec = whitney_recurrence_rows(m, max_n);
    for n in 0..=max_n {
        for k in 0..=n {
            if sum[n][k] != rec[n][k] {
                return Err(TriangleError::InternalMismatch {
                    m,
                    n,
                    k,
                    sum: sum[n][k].clone(),
                    rec: rec[n][k].clone(),
                });
            }
        }
    }
    Ok(sum)
}

pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `(2n-1)!! = 1·3·5···(2n-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: usize) -> BigInt {
    (0..n).map(|i| BigInt::from(2 * i + 1)).product()
}

fn lookup(kind: TriangleKind, n: usize, k: i64) -> BigInt {
    TriangleTable::build(kind, n)
        .expect("infallible kind")
        .get(n, k)
}

pub fn stirling2(n: usize, k: i64) -> BigInt {
    lookup(TriangleKind::Stirling2, n, k)
}

pub fn eulerian(n: usize, k: i64) -> BigInt {
    lookup(TriangleKind::Eulerian, n, k)
}

pub fn type_b_eulerian(n: usize, k: i64) -> BigInt {
    lookup(TriangleKind::TypeBEulerian, n, k)
}

pub fn matching_count(n: usize, k: i64) -> BigInt {
    lookup(TriangleKind::Matching, n, k)
}

/// Whitney number of the second kind; fails if the explicit sum and the
/// recurrence disagree anywhere up to row `n`.
pub fn whitney(m: u32, n: usize, k: i64) -> Result<BigInt, TriangleError> {
    Ok(TriangleTable::build(TriangleKind::Whitney(m), n)?.get(n, k))
}

/// Every triangle the verifier consults, built once to a common depth.
#[derive(Clone, Debug)]
pub struct Triangles {
    pub stirling2: TriangleTable,
    pub eulerian: TriangleTable,
    pub type_b: TriangleTable,
    pub matching: TriangleTable,
    pub whitney2: TriangleTable,
}

impl Triangles {
    pub fn build(max_n: usize) -> Result<Self, TriangleError> {
        Ok(Triangles {
            stirling2: TriangleTable::build(TriangleKind::Stirling2, max_n)?,
            eulerian: TriangleTable::build(TriangleKind::Eulerian, max_n)?,
            type_b: TriangleTable::build(TriangleKind::TypeBEulerian, max_n)?,
            matching: TriangleTable::build(TriangleKind::Matching, max_n)?,
            whitney2: TriangleTable::build(TriangleKind::Whitney(2), max_n)?,
        })
    }

    pub fn max_n(&self) -> usize {
        self.stirling2.max_n
    }

    /// `S(n, k)`, zero for negative arguments.
    pub fn s(&self, n: i64, k: i64) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.stirling2.get(n as usize, k)
        }
    }

    pub fn euler(&self, n: i64, k: i64) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.eulerian.get(n as usize, k)
        }
    }
}
