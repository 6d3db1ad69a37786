//! Stored expansions, compared byte for byte, plus the two basic expansions
//! of `x → xy, y → y` (Stirling) and `x → xy, y → xy` (Eulerian).

use num_bigint::BigInt;

use crate::builtin;
use crate::dsl::parse_polynomial;
use crate::grammar::Grammar;
use crate::poly::{Monomial, Polynomial, Style};

use super::{CheckReport, Checker, VerifyContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenCase {
    /// Built-in grammar name.
    pub grammar: &'static str,
    pub start: &'static str,
    pub n: usize,
    /// `D^n(start)` in juxtaposed style.
    pub expected: &'static str,
}

const fn case(
    grammar: &'static str,
    start: &'static str,
    n: usize,
    expected: &'static str,
) -> GoldenCase {
    GoldenCase {
        grammar,
        start,
        n,
        expected,
    }
}

const CASES: [GoldenCase; 16] = [
    case("g1", "x", 1, "x + xy"),
    case("g1", "x", 2, "x + 3xy + xy^2 + x^2y"),
    case(
        "g1",
        "x",
        3,
        "x + 7xy + 6xy^2 + xy^3 + 6x^2y + 4x^2y^2 + x^3y",
    ),
    case("g2", "x", 1, "x + xy"),
    case("g2", "x", 2, "x + 3xy + xy^2 + x^3"),
    case("g2", "x", 3, "x + 7xy + 6xy^2 + xy^3 + 6x^3 + 5x^3y"),
    case("g3", "w", 1, "w + wx"),
    case("g3", "w", 2, "w + 3wx + wxy + wx^2"),
    case(
        "g3",
        "w",
        3,
        "w + 7wx + 6wxy + wxy^2 + 6wx^2 + 3wx^2y + 2wx^3",
    ),
    case("g4", "x", 1, "x + xy + x^2"),
    case("g4", "x", 2, "x + 3xy + 2xy^2 + 3x^2 + 4x^2y + 2x^3"),
    case(
        "g4",
        "x",
        3,
        "x + 7xy + 12xy^2 + 6xy^3 + 7x^2 + 24x^2y + 18x^2y^2 + 12x^3 + 18x^3y + 6x^4",
    ),
    case("g5", "x", 1, "x + xy^2"),
    case("g5", "x", 2, "x + 4xy^2 + xy^4 + 2x^3y^2"),
    case("g5", "x*y", 1, "2xy + xy^3 + x^3y"),
    case(
        "g5",
        "x*y",
        2,
        "4xy + 6xy^3 + xy^5 + 6x^3y + 6x^3y^3 + x^5y",
    ),
];

/// Exponents of x and y carrying the k-th coefficient of row n.
type Shape = fn(usize, usize) -> (u32, u32);

pub fn golden_cases() -> &'static [GoldenCase] {
    &CASES
}

/// The stored cases are always all checked; `nmax` bounds the two basic
/// expansions.
pub(super) fn suite_golden(ctx: &VerifyContext, nmax: usize) -> CheckReport {
    let mut ck = Checker::new("golden", nmax);
    for c in golden_cases() {
        let g = builtin::by_name(c.grammar).expect("golden grammars are built in");
        let start = parse_polynomial(c.start).expect("golden starts are well formed");
        let got = match g.derive_n(&start, c.n) {
            Ok(p) => p.to_text(Style::Juxtaposed),
            Err(e) => e.to_string(),
        };
        let name = format!("{} D^n({})", c.grammar, c.start);
        let ok = got == c.expected;
        ck.outcome(&name, &[("n", c.n as i64)], ok, || {
            (c.expected.to_string(), got.clone())
        });
    }

    let t = &ctx.triangles;
    let basic: [(&str, Grammar, Shape); 2] = [
        ("D^n(x) = Σ S(n,k)·x·y^k", builtin::stirling(), |_, k| {
            (1, k as u32)
        }),
        (
            "D^n(x) = Σ E(n,k)·x^k·y^(n-k+1)",
            builtin::eulerian(),
            |n, k| (k as u32, (n - k + 1) as u32),
        ),
    ];
    for (idx, (name, g, shape)) in basic.iter().enumerate() {
        let levels = match g.derive_levels(&Polynomial::letter("x"), nmax) {
            Ok(l) => l,
            Err(e) => {
                ck.fail(name, &[], "derivation".into(), e.to_string());
                continue;
            }
        };
        for (n, got) in levels.iter().enumerate().skip(1) {
            let want = Polynomial::from_terms((1..=n).map(|k| {
                let (ex, ey) = shape(n, k);
                let c: BigInt = if idx == 0 {
                    t.s(n as i64, k as i64)
                } else {
                    t.euler(n as i64, k as i64)
                };
                (Monomial::from_exponents([("x", ex), ("y", ey)]), c)
            }));
            let ok = &want == got;
            ck.outcome(name, &[("n", n as i64)], ok, || {
                (want.to_string(), got.to_string())
            });
        }
    }
    ck.finish()
}
