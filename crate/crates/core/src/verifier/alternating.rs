//! T3: w → w + wx, x → x + xy, y → y + x² and alternating subsequences of
//! openers. Arrays are read from `D^n(w)/w`.

use crate::coeffs::IndexMap;
use crate::grammar::Grammar;
use crate::oracles::OpenerStat;

use super::{big, expand, index_box, CheckReport, Checker, Measure, VerifyContext};

pub(super) fn suite_t3(ctx: &VerifyContext, g: &Grammar, nmax: usize) -> CheckReport {
    let mut ck = Checker::new("T3", nmax);
    let map = IndexMap::identity("x", "y").with_fixed("w", 1);
    let Some(t) = expand(&mut ck, g, "w", &map, nmax, "g3") else {
        return ck.finish();
    };
    let tri = &ctx.triangles;
    let census = &ctx.census;
    let bound = index_box(&t);

    // t(n+1,i,j) = (1+i+j)t(n,i,j) + t(n,i-1,j) + i·t(n,i,j-1) + (j+1)t(n,i-2,j+1).
    for n in 0..nmax {
        for i in 0..=bound {
            for j in 0..=bound {
                let prev = &t[n];
                let want = big(1 + i + j) * prev.get(i, j)
                    + prev.get(i - 1, j)
                    + big(i) * prev.get(i, j - 1)
                    + big(j + 1) * prev.get(i - 2, j + 1);
                ck.eq(
                    "recurrence t(n+1,i,j)",
                    &[("n", n as i64 + 1), ("i", i), ("j", j)],
                    &want,
                    &t[n + 1].get(i, j),
                );
            }
        }
    }
    ck.note(format!(
        "D^0(w) = w gives t(0,1,0) = {}; an initial condition t(0,1,0) = 1 would not match and is not used",
        t[0].get(1, 0)
    ));

    let mut i_zero = Measure::new("t(n,0,j) = S(n+1,j+1)·a_0(j)");
    for n in 0..=nmax {
        ck.eq("t(n,0,0) = 1", &[("n", n as i64)], &big(1), &t[n].get(0, 0));
    }
    for n in 1..=nmax {
        let n1 = n as i64;
        for i in 0..=bound {
            for j in 0..=bound {
                let m = i + j;
                let want = if m <= census.max_n() as i64 {
                    tri.s(n1 + 1, m + 1) * census.las(i, m as usize)
                } else {
                    big(0)
                };
                let idx = [("n", n1), ("i", i), ("j", j)];
                if i >= 1 {
                    ck.eq(
                        "t(n,i,j) = S(n+1,i+j+1)·a_i(i+j)",
                        &idx,
                        &want,
                        &t[n].get(i, j),
                    );
                } else {
                    i_zero.record(&idx, &want, &t[n].get(i, j));
                }
            }
        }
        // With t(n,0,0) included the coefficient sum is a_n; the sum over
        // i >= 1 alone is a_n - 1.
        let full = t[n].sum();
        ck.eq(
            "row sum t_n = a_n",
            &[("n", n1)],
            &ctx.ordered_row_sum(n),
            &full,
        );
    }
    ck.note(i_zero.into_note());
    ck.note("t_n is the full coefficient sum of D^n(w)/w; restricted to i >= 1 it equals a_n - 1");

    let mut covered = 0;
    for n in 1..=nmax {
        let Some(table) = ctx.cop_table(OpenerStat::Las, n + 1) else {
            continue;
        };
        covered = n;
        for i in 1..=bound {
            for j in 0..=bound {
                let count = table
                    .get(&((i + j + 1) as usize, i as usize))
                    .copied()
                    .unwrap_or(0);
                ck.eq(
                    "t(n,i,j) = #COP[n+1] with i+j+1 blocks, opener las i",
                    &[("n", n as i64), ("i", i), ("j", j)],
                    &big(count),
                    &t[n].get(i, j),
                );
            }
        }
    }
    if covered < nmax {
        ck.note(format!(
            "COP comparison covers n <= {covered} (cop cap {})",
            ctx.caps.cops
        ));
    }
    ck.finish()
}
