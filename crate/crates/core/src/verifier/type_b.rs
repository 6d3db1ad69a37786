//! T5: x → x + xy², y → y + x²y (Whitney·matching and Stirling·type-B
//! products), and x → xy², y → x²y (matching and type-B Eulerian numbers).

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::coeffs::{Axis, IndexMap};
use crate::grammar::Grammar;
use crate::oracles::{des_b, enumerate_matchings, enumerate_signed, odd_smaller_count};
use crate::poly::{Monomial, Polynomial};
use crate::triangles::TriangleTable;

use super::{big, expand, index_box, pow2, CheckReport, Checker, Measure, VerifyContext};

pub(super) fn suite_t5(
    ctx: &VerifyContext,
    g: &Grammar,
    g_b: &Grammar,
    nmax: usize,
) -> CheckReport {
    let mut ck = Checker::new("T5", nmax);
    let t = &ctx.triangles;
    let e_map = IndexMap::new(Axis::new("x", 2, 1), Axis::new("y", 2, 0));
    let f_map = IndexMap::new(Axis::new("x", 2, 1), Axis::new("y", 2, 1));
    let Some(e) = expand(&mut ck, g, "x", &e_map, nmax, "g5") else {
        return ck.finish();
    };
    let Some(f) = expand(&mut ck, g, "x*y", &f_map, nmax, "g5") else {
        return ck.finish();
    };
    let bound = index_box(&e).max(index_box(&f));

    for n in 0..nmax {
        for i in 0..=bound {
            for j in 0..=bound {
                let idx = [("n", n as i64 + 1), ("i", i), ("j", j)];
                // e(n+1,i,j) = (2i+2j+1)e(n,i,j) + (2i+1)e(n,i,j-1) + 2j·e(n,i-1,j)
                let p = &e[n];
                let want = big(2 * i + 2 * j + 1) * p.get(i, j)
                    + big(2 * i + 1) * p.get(i, j - 1)
                    + big(2 * j) * p.get(i - 1, j);
                ck.eq("recurrence e(n+1,i,j)", &idx, &want, &e[n + 1].get(i, j));
                // f(n+1,i,j) = (2i+2j+2)f(n,i,j) + (2i+1)f(n,i,j-1) + (2j+1)f(n,i-1,j)
                let p = &f[n];
                let want = big(2 * i + 2 * j + 2) * p.get(i, j)
                    + big(2 * i + 1) * p.get(i, j - 1)
                    + big(2 * j + 1) * p.get(i - 1, j);
                ck.eq("recurrence f(n+1,i,j)", &idx, &want, &f[n + 1].get(i, j));
            }
        }
    }

    let mut e_edge = Measure::new("e(n,i,j) = W_2(n,i+j)·N(i+j,j) with i = 0 or j = 0");
    let mut f_edge = Measure::new("f(n,i,j) = 2^(n-i-j)·S(n+1,i+j+1)·B(i+j,j) with i = 0 or j = 0");
    for n in 1..=nmax {
        let n1 = n as i64;
        for i in 0..=bound {
            for j in 0..=bound {
                let k = i + j;
                let idx = [("n", n1), ("i", i), ("j", j)];
                let (e_want, f_want) = if k <= n1 {
                    (
                        t.whitney2.get(n, k) * t.matching.get(k as usize, j),
                        pow2(n1 - k) * t.s(n1 + 1, k + 1) * t.type_b.get(k as usize, j),
                    )
                } else {
                    (big(0), big(0))
                };
                if i >= 1 && j >= 1 {
                    ck.eq(
                        "e(n,i,j) = W_2(n,i+j)·N(i+j,j)",
                        &idx,
                        &e_want,
                        &e[n].get(i, j),
                    );
                    ck.eq(
                        "f(n,i,j) = 2^(n-i-j)·S(n+1,i+j+1)·B(i+j,j)",
                        &idx,
                        &f_want,
                        &f[n].get(i, j),
                    );
                } else {
                    e_edge.record(&idx, &e_want, &e[n].get(i, j));
                    f_edge.record(&idx, &f_want, &f[n].get(i, j));
                }
            }
        }
    }
    ck.note(e_edge.into_note());
    ck.note(f_edge.into_note());

    check_type_b_grammar(&mut ck, g_b, nmax, &t.matching, &t.type_b);

    let mcap = nmax.min(ctx.caps.matchings);
    for n in 0..=mcap {
        let counts = tally(
            enumerate_matchings(n, &ctx.caps)
                .expect("within cap")
                .map(|m| odd_smaller_count(&m)),
            n,
        );
        for (k, c) in counts.iter().enumerate() {
            ck.eq(
                "N(n,k) = #matchings with k odd smaller entries",
                &[("n", n as i64), ("k", k as i64)],
                &t.matching.get(n, k as i64),
                c,
            );
        }
    }
    let scap = nmax.min(ctx.caps.signed);
    for n in 0..=scap {
        let counts = tally(
            enumerate_signed(n, &ctx.caps)
                .expect("within cap")
                .map(|p| des_b(&p)),
            n,
        );
        for (k, c) in counts.iter().enumerate() {
            ck.eq(
                "B(n,k) = #signed permutations with k type-B descents",
                &[("n", n as i64), ("k", k as i64)],
                &t.type_b.get(n, k as i64),
                c,
            );
        }
    }
    ck.finish()
}

fn tally(values: impl Iterator<Item = usize>, n: usize) -> Vec<BigInt> {
    let mut counts = vec![0u64; n + 1];
    for v in values {
        counts[v] += 1;
    }
    counts.into_iter().map(BigInt::from).collect()
}

fn check_type_b_grammar(
    ck: &mut Checker,
    g: &Grammar,
    nmax: usize,
    matching: &TriangleTable,
    type_b: &TriangleTable,
) {
    let x = Polynomial::letter("x");
    let xy = &x * &Polynomial::letter("y");
    let cases: [(&str, &Polynomial, &TriangleTable, u32); 2] = [
        ("D^n(x) = Σ N(n,k)x^(2n-2k+1)y^(2k)", &x, matching, 0),
        ("D^n(xy) = Σ B(n,k)x^(2n-2k+1)y^(2k+1)", &xy, type_b, 1),
    ];
    for (name, start, table, y_shift) in cases {
        let levels = match g.derive_levels(start, nmax) {
            Ok(l) => l,
            Err(err) => {
                ck.fail(name, &[], "derivation".into(), err.to_string());
                continue;
            }
        };
        for (n, got) in levels.iter().enumerate() {
            let want = Polynomial::from_terms((0..=n).map(|k| {
                let m = Monomial::from_exponents([
                    ("x", (2 * n - 2 * k + 1) as u32),
                    ("y", 2 * k as u32 + y_shift),
                ]);
                (m, table.get(n, k as i64))
            }));
            let monos: BTreeSet<Monomial> = want
                .terms()
                .chain(got.terms())
                .map(|(m, _)| m.clone())
                .collect();
            for m in monos {
                let idx = [
                    ("n", n as i64),
                    ("x", m.exponent(&"x".into()) as i64),
                    ("y", m.exponent(&"y".into()) as i64),
                ];
                ck.eq(name, &idx, &want.coeff(&m), &got.coeff(&m));
            }
        }
    }
}
