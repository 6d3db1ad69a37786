//! T4: x → x + x² + xy, y → y + y² + xy.

use crate::coeffs::IndexMap;
use crate::grammar::Grammar;
use crate::triangles::{binomial, factorial};

use super::{big, expand, index_box, pow2, CheckReport, Checker, VerifyContext};

pub(super) fn suite_t4(ctx: &VerifyContext, g: &Grammar, nmax: usize) -> CheckReport {
    let mut ck = Checker::new("T4", nmax);
    let Some(c) = expand(&mut ck, g, "x", &IndexMap::identity("x", "y"), nmax, "g4") else {
        return ck.finish();
    };
    let t = &ctx.triangles;
    let bound = index_box(&c);

    // c(n+1,i,j) = (i+j)c(n,i,j) + (i+j-1)(c(n,i,j-1) + c(n,i-1,j)), i >= 1, j >= 0.
    for n in 0..nmax {
        for i in 1..=bound {
            for j in 0..=bound {
                let prev = &c[n];
                let want = big(i + j) * prev.get(i, j)
                    + big(i + j - 1) * (prev.get(i, j - 1) + prev.get(i - 1, j));
                ck.eq(
                    "recurrence c(n+1,i,j)",
                    &[("n", n as i64 + 1), ("i", i), ("j", j)],
                    &want,
                    &c[n + 1].get(i, j),
                );
            }
        }
    }

    for n in 1..=nmax {
        let n1 = n as i64;
        ck.eq("c(n,1,0) = 1", &[("n", n1)], &big(1), &c[n].get(1, 0));
        for i in 1..=bound {
            for j in 1..=bound {
                let k = i + j;
                let want =
                    factorial((k - 1) as usize) * t.s(n1 + 1, k) * binomial((k - 1) as usize, j);
                ck.eq(
                    "c(n,i,j) = (i+j-1)!·S(n+1,i+j)·C(i+j-1,j)",
                    &[("n", n1), ("i", i), ("j", j)],
                    &want,
                    &c[n].get(i, j),
                );
            }
        }
        let want: num_bigint::BigInt = (0..=n)
            .map(|k| pow2(k as i64) * factorial(k) * t.s(n1 + 1, k as i64 + 1))
            .sum();
        ck.eq(
            "row sum c_n = Σ 2^k·k!·S(n+1,k+1)",
            &[("n", n1)],
            &want,
            &c[n].sum(),
        );
    }
    ck.finish()
}
