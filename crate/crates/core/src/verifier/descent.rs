//! T1: x → x + xy, y → y + xy and opener descents.

use crate::coeffs::IndexMap;
use crate::grammar::Grammar;
use crate::oracles::OpenerStat;

use super::{big, expand, index_box, CheckReport, Checker, Measure, VerifyContext};

pub(super) fn suite_t1(ctx: &VerifyContext, g: &Grammar, nmax: usize) -> CheckReport {
    let mut ck = Checker::new("T1", nmax);
    let Some(a) = expand(&mut ck, g, "x", &IndexMap::identity("x", "y"), nmax, "g1") else {
        return ck.finish();
    };
    let t = &ctx.triangles;
    let bound = index_box(&a);
    let mut rec_j0 = Measure::new("recurrence a(n+1,i,j) at j = 0");

    // a(n+1,i,j) = (i+j)a(n,i,j) + i·a(n,i,j-1) + j·a(n,i-1,j), i,j >= 1.
    for n in 0..nmax {
        for i in 1..=bound {
            for j in 0..=bound {
                let prev = &a[n];
                let want = big(i + j) * prev.get(i, j)
                    + big(i) * prev.get(i, j - 1)
                    + big(j) * prev.get(i - 1, j);
                let got = a[n + 1].get(i, j);
                let idx = [("n", n as i64 + 1), ("i", i), ("j", j)];
                if j >= 1 {
                    ck.eq("recurrence a(n+1,i,j)", &idx, &want, &got);
                } else {
                    rec_j0.record(&idx, &want, &got);
                }
            }
        }
    }
    ck.note(rec_j0.into_note());

    for n in 1..=nmax {
        let n1 = n as i64;
        // a(n,1,0) = 1, a(n,i,0) = 0 for i >= 2.
        for i in 1..=bound {
            let want = big(if i == 1 { 1 } else { 0 });
            ck.eq(
                "a(n,i,0) boundary",
                &[("n", n1), ("i", i)],
                &want,
                &a[n].get(i, 0),
            );
        }
        for i in 1..=bound {
            for j in 1..=bound {
                let want = if i + j <= n1 + 1 {
                    t.s(n1 + 1, i + j) * t.euler(i + j - 1, i)
                } else {
                    big(0)
                };
                ck.eq(
                    "a(n,i,j) = S(n+1,i+j)·E(i+j-1,i)",
                    &[("n", n1), ("i", i), ("j", j)],
                    &want,
                    &a[n].get(i, j),
                );
            }
        }
        ck.eq(
            "row sum a_n = Σ k!·S(n+1,k+1)",
            &[("n", n1)],
            &ctx.ordered_row_sum(n),
            &a[n].sum(),
        );
    }

    // Opener descents of COPs of [n+1] with i+j blocks have i-1 descents.
    let mut covered = 0;
    for n in 1..=nmax {
        let Some(table) = ctx.cop_table(OpenerStat::Descents, n + 1) else {
            continue;
        };
        covered = n;
        for i in 1..=bound {
            for j in 1..=bound {
                let count = table
                    .get(&((i + j) as usize, (i - 1) as usize))
                    .copied()
                    .unwrap_or(0);
                ck.eq(
                    "a(n,i,j) = #COP[n+1] with i+j blocks, i-1 opener descents",
                    &[("n", n as i64), ("i", i), ("j", j)],
                    &big(count),
                    &a[n].get(i, j),
                );
            }
        }
        // Every COP with at least two blocks lands in the i,j >= 1 range.
        for (&(k, d), &count) in table {
            if k >= 2 {
                let (i, j) = (d as i64 + 1, k as i64 - d as i64 - 1);
                ck.eq(
                    "COP census lands in a(n,i,j)",
                    &[("n", n as i64), ("i", i), ("j", j)],
                    &big(count),
                    &a[n].get(i, j),
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
