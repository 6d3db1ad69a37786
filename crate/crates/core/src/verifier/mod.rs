//! Executable identity catalogue.
//!
//! Each suite derives the relevant grammar's expansions with the engine,
//! extracts coefficient arrays, and checks them against recurrences between
//! consecutive rows, explicit products of triangle entries, and brute-force
//! counts. Coefficient arrays always come from actual `D^n` output; no row is
//! seeded from an initial condition.

#![allow(clippy::needless_range_loop)]

mod alternating;
mod binomial;
mod descent;
mod golden;
mod peaks;
mod report;
mod three_species;
mod type_b;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::coeffs::{extract_coeffs, CoeffArray, IndexMap};
use crate::dsl::parse_polynomial;
use crate::grammar::Grammar;
use crate::oracles::{
    cop_stat_table, u_table, Caps, OpenerStat, OracleError, PermutationCensus, UTable,
};
use crate::triangles::{factorial, TriangleError, Triangles};

pub use golden::{golden_cases, GoldenCase};
pub use report::{CheckReport, Failure, Status};

pub(crate) use report::{Checker, Measure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(
        "suite {suite} needs nmax <= {max} under the current caps (got {nmax}); \
         raise the caps via the config file or environment to go further"
    )]
    BoundExceeded {
        suite: SuiteId,
        nmax: usize,
        max: usize,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    Golden,
}

impl SuiteId {
    pub const ALL: [SuiteId; 7] = [
        SuiteId::T1,
        SuiteId::T2,
        SuiteId::T3,
        SuiteId::T4,
        SuiteId::T5,
        SuiteId::T6,
        SuiteId::Golden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::T1 => "T1",
            SuiteId::T2 => "T2",
            SuiteId::T3 => "T3",
            SuiteId::T4 => "T4",
            SuiteId::T5 => "T5",
            SuiteId::T6 => "T6",
            SuiteId::Golden => "golden",
        }
    }

    /// Largest depth the suite accepts: the brute-force oracle it cannot do
    /// without sets the bound. Oracles used only for overlap checks are run
    /// as far as their caps allow.
    pub fn max_nmax(self, caps: &Caps) -> usize {
        match self {
            SuiteId::T1 => caps.cops,
            SuiteId::T2 | SuiteId::T3 => caps.permutations,
            SuiteId::T5 => caps.matchings,
            SuiteId::T4 | SuiteId::T6 | SuiteId::Golden => caps.depth,
        }
    }

    /// The grammar the suite exercises by default.
    pub fn default_grammar(self) -> Grammar {
        use crate::builtin;
        match self {
            SuiteId::T1 => builtin::descent(),
            SuiteId::T2 => builtin::left_peak(),
            SuiteId::T3 => builtin::alternating(),
            SuiteId::T4 => builtin::stirling_binomial(),
            SuiteId::T5 => builtin::whitney_type_b(),
            SuiteId::T6 => builtin::three_species(),
            SuiteId::Golden => builtin::descent(),
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Triangles and brute-force tables shared by every suite, built once up
/// front and read-only afterwards.
#[derive(Debug)]
pub struct VerifyContext {
    pub caps: Caps,
    pub nmax: usize,
    pub triangles: Triangles,
    pub census: PermutationCensus,
    pub u: UTable,
    cop_tables: BTreeMap<(OpenerStat, usize), BTreeMap<(usize, usize), u64>>,
}

impl VerifyContext {
    pub fn new(caps: Caps, nmax: usize) -> Result<Self, VerifyError> {
        let triangles = Triangles::build(nmax + 2)?;
        let census = PermutationCensus::build(nmax.min(caps.permutations), &caps)?;
        let mut cop_tables = BTreeMap::new();
        for n in 1..=(nmax + 1).min(caps.cops) {
            for stat in [
                OpenerStat::Descents,
                OpenerStat::RightValleys,
                OpenerStat::Las,
            ] {
                cop_tables.insert((stat, n), cop_stat_table(n, stat, &caps)?);
            }
        }
        Ok(VerifyContext {
            caps,
            nmax,
            triangles,
            census,
            u: u_table(nmax + 1),
            cop_tables,
        })
    }

    /// Brute-force table for COPs of `[n]`, if within the cop cap.
    pub fn cop_table(&self, stat: OpenerStat, n: usize) -> Option<&BTreeMap<(usize, usize), u64>> {
        self.cop_tables.get(&(stat, n))
    }

    /// `a_n = Σ_k k!·S(n+1, k+1)`.
    pub fn ordered_row_sum(&self, n: usize) -> BigInt {
        (0..=n)
            .map(|k| factorial(k) * self.triangles.s(n as i64 + 1, k as i64 + 1))
            .sum()
    }
}

/// Runs one suite. `grammar` replaces the suite's default grammar (the type-B
/// grammar of T5 and the golden expansions are not replaceable).
pub fn run_suite(
    id: SuiteId,
    nmax: usize,
    ctx: &VerifyContext,
    grammar: Option<&Grammar>,
) -> Result<CheckReport, VerifyError> {
    let max = id.max_nmax(&ctx.caps);
    if nmax > max {
        return Err(VerifyError::BoundExceeded {
            suite: id,
            nmax,
            max,
        });
    }
    if nmax > ctx.nmax {
        return Err(VerifyError::BoundExceeded {
            suite: id,
            nmax,
            max: ctx.nmax,
        });
    }
    let default = id.default_grammar();
    let g = grammar.unwrap_or(&default);
    Ok(match id {
        SuiteId::T1 => descent::suite_t1(ctx, g, nmax),
        SuiteId::T2 => peaks::suite_t2(ctx, g, nmax),
        SuiteId::T3 => alternating::suite_t3(ctx, g, nmax),
        SuiteId::T4 => binomial::suite_t4(ctx, g, nmax),
        SuiteId::T5 => type_b::suite_t5(ctx, g, &crate::builtin::type_b(), nmax),
        SuiteId::T6 => three_species::suite_t6(ctx, g, nmax),
        SuiteId::Golden => golden::suite_golden(ctx, nmax),
    })
}

/// Runs several suites concurrently; reports come back sorted by suite name.
pub fn run_suites(
    ids: &[SuiteId],
    nmax: usize,
    ctx: &VerifyContext,
    grammar: Option<&Grammar>,
) -> Result<Vec<CheckReport>, VerifyError> {
    for &id in ids {
        let max = id.max_nmax(&ctx.caps);
        if nmax > max {
            return Err(VerifyError::BoundExceeded {
                suite: id,
                nmax,
                max,
            });
        }
    }
    let results: Vec<Result<CheckReport, VerifyError>> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| s.spawn(move || run_suite(id, nmax, ctx, grammar)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    });
    let mut reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.suite.cmp(&b.suite));
    Ok(reports)
}

/// Coefficient arrays of `D^0(start) .. D^nmax(start)`. Derivation and
/// pattern errors are recorded as failures and end the suite early.
pub(crate) fn expand(
    ck: &mut Checker,
    g: &Grammar,
    start: &str,
    map: &IndexMap,
    nmax: usize,
    grammar_id: &str,
) -> Option<Vec<CoeffArray>> {
    let start_poly = parse_polynomial(start).expect("suite start polynomials are well formed");
    let levels = match g.derive_levels(&start_poly, nmax) {
        Ok(l) => l,
        Err(e) => {
            ck.fail(
                "derivation",
                &[],
                format!("D^n({start}) defined"),
                e.to_string(),
            );
            return None;
        }
    };
    let mut out = Vec::with_capacity(levels.len());
    for (n, p) in levels.iter().enumerate() {
        match extract_coeffs(p, map, n, grammar_id) {
            Ok(a) => {
                ck.outcome(
                    "exponent pattern",
                    &[("n", n as i64)],
                    true,
                    || unreachable!(),
                );
                out.push(a);
            }
            Err(v) => {
                ck.fail(
                    "exponent pattern",
                    &[("n", n as i64)],
                    "expected pattern".into(),
                    v.to_string(),
                );
                return None;
            }
        }
    }
    Some(out)
}

/// Square index box large enough to cover every stored entry plus a margin.
pub(crate) fn index_box(arrays: &[CoeffArray]) -> i64 {
    arrays
        .iter()
        .map(|a| {
            let (i, j) = a.extent();
            i.max(j) as i64
        })
        .max()
        .unwrap_or(0)
        + 2
}

pub(crate) fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

pub(crate) fn pow2(e: i64) -> BigInt {
    BigInt::one() << e as usize
}
