//! T2: x → x + xy, y → y + x² and left peaks / right valleys of openers.

use crate::coeffs::IndexMap;
use crate::grammar::Grammar;
use crate::oracles::OpenerStat;

use super::{big, expand, index_box, CheckReport, Checker, Measure, VerifyContext};

pub(super) fn suite_t2(ctx: &VerifyContext, g: &Grammar, nmax: usize) -> CheckReport {
    let mut ck = Checker::new("T2", nmax);
    let Some(b) = expand(&mut ck, g, "x", &IndexMap::identity("x", "y"), nmax, "g2") else {
        return ck.finish();
    };
    let t = &ctx.triangles;
    let census = &ctx.census;
    let bound = index_box(&b);

    // b(n+1,i,j) = (i+j)b(n,i,j) + i·b(n,i,j-1) + (j+1)b(n,i-2,j+1), i >= 1, j >= 0.
    for n in 0..nmax {
        for i in 1..=bound {
            for j in 0..=bound {
                let prev = &b[n];
                let want = big(i + j) * prev.get(i, j)
                    + big(i) * prev.get(i, j - 1)
                    + big(j + 1) * prev.get(i - 2, j + 1);
                ck.eq(
                    "recurrence b(n+1,i,j)",
                    &[("n", n as i64 + 1), ("i", i), ("j", j)],
                    &want,
                    &b[n + 1].get(i, j),
                );
            }
        }
    }

    let mut explicit_j0 = Measure::new("b(n,2i-1,0) = S(n+1,2i-1)·P(2i-2,i-1)");
    for n in 1..=nmax {
        let n1 = n as i64;
        // Even powers of x never occur.
        for i in 0..=bound / 2 {
            for j in 0..=bound {
                if (i, j) != (0, 0) {
                    ck.eq(
                        "b(n,2i,j) = 0",
                        &[("n", n1), ("i", i), ("j", j)],
                        &big(0),
                        &b[n].get(2 * i, j),
                    );
                }
            }
        }
        for i in 1..=bound / 2 + 1 {
            for j in 0..=bound {
                let k = 2 * i - 1 + j;
                let want = if k - 1 <= census.max_n() as i64 {
                    t.s(n1 + 1, k) * census.left_peak((k - 1) as usize, i - 1)
                } else {
                    // S(n+1, k) vanishes once k > n+1 >= census range + 1.
                    big(0)
                };
                let idx = [("n", n1), ("i", i), ("j", j)];
                if j >= 1 {
                    ck.eq(
                        "b(n,2i-1,j) = S(n+1,2i-1+j)·P(2i-2+j,i-1)",
                        &idx,
                        &want,
                        &b[n].get(2 * i - 1, j),
                    );
                } else {
                    explicit_j0.record(&idx, &want, &b[n].get(2 * i - 1, j));
                }
            }
        }
        // b(n,i,j) = u(n+1, i+j, (i-1)/2) for odd i.
        for i in (1..=bound).step_by(2) {
            for j in 1..=bound {
                let want = ctx.u.get(n + 1, (i + j) as usize, ((i - 1) / 2) as usize);
                ck.eq(
                    "b(n,i,j) = u(n+1,i+j,(i-1)/2)",
                    &[("n", n1), ("i", i), ("j", j)],
                    &want,
                    &b[n].get(i, j),
                );
            }
        }
        ck.eq(
            "row sum b_n = a_n",
            &[("n", n1)],
            &ctx.ordered_row_sum(n),
            &b[n].sum(),
        );
    }
    ck.note(explicit_j0.into_note());

    // u from its recurrence against brute force and against S(n,k)·P(k-1,l).
    let mut unshifted = Measure::new("u(n,k,l) = S(n,k)·P(k,l)");
    for n in 1..=nmax + 1 {
        for k in 1..=n {
            for l in 0..=k {
                let u = ctx.u.get(n, k, l);
                let idx = [("n", n as i64), ("k", k as i64), ("l", l as i64)];
                if k - 1 <= census.max_n() {
                    let want = t.s(n as i64, k as i64) * census.left_peak(k - 1, l as i64);
                    ck.eq("u(n,k,l) = S(n,k)·P(k-1,l)", &idx, &want, &u);
                }
                if k <= census.max_n() {
                    let lit = t.s(n as i64, k as i64) * census.left_peak(k, l as i64);
                    unshifted.record(&idx, &lit, &u);
                }
            }
        }
        if let Some(table) = ctx.cop_table(OpenerStat::RightValleys, n) {
            for k in 1..=n {
                for l in 0..=k {
                    let count = table.get(&(k, l)).copied().unwrap_or(0);
                    ck.eq(
                        "u(n,k,l) = #COP[n] with k blocks, l opener right valleys",
                        &[("n", n as i64), ("k", k as i64), ("l", l as i64)],
                        &big(count),
                        &ctx.u.get(n, k, l),
                    );
                }
            }
        }
    }
    ck.note(
        "the block arrangement fixes the block holding 1, so u(n,k,l) factors as \
         S(n,k)·P(k-1,l) and not S(n,k)·P(k,l)",
    );
    ck.note(unshifted.into_note());

    // Direct COP interpretation of b.
    for n in 1..=nmax {
        let Some(table) = ctx.cop_table(OpenerStat::RightValleys, n + 1) else {
            continue;
        };
        for i in (1..=bound).step_by(2) {
            for j in 1..=bound {
                let count = table
                    .get(&((i + j) as usize, ((i - 1) / 2) as usize))
                    .copied()
                    .unwrap_or(0);
                ck.eq(
                    "b(n,i,j) = #COP[n+1] with i+j blocks, (i-1)/2 opener right valleys",
                    &[("n", n as i64), ("i", i), ("j", j)],
                    &big(count),
                    &b[n].get(i, j),
                );
            }
        }
    }
    ck.finish()
}
