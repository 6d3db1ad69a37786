//! T6: x → x(y+z), y → y(z+x), z → z(x+y). Coefficients of
//! `x^i y^j z^(n+1-i-j)` in `D^n(x)`.

use crate::coeffs::IndexMap;
use crate::dsl::parse_polynomial;
use crate::grammar::Grammar;
use crate::oracles::{descents, enumerate_permutations};

use super::{big, expand, CheckReport, Checker, VerifyContext};

pub(super) fn suite_t6(ctx: &VerifyContext, g: &Grammar, nmax: usize) -> CheckReport {
    let mut ck = Checker::new("T6", nmax);
    let start = parse_polynomial("x").expect("well formed");
    match g.derive_levels(&start, nmax) {
        Ok(levels) => {
            for (n, p) in levels.iter().enumerate() {
                for (m, _) in p.terms() {
                    ck.eq(
                        "total degree of D^n(x) terms = n+1",
                        &[("n", n as i64)],
                        &big(n as i64 + 1),
                        &big(m.total_degree()),
                    );
                }
            }
        }
        Err(e) => {
            ck.fail("derivation", &[], "D^n(x) defined".into(), e.to_string());
            return ck.finish();
        }
    }
    let map = IndexMap::identity("x", "y").with_free("z");
    let Some(gc) = expand(&mut ck, g, "x", &map, nmax, "g6") else {
        return ck.finish();
    };
    let t = &ctx.triangles;

    for n in 1..=nmax {
        let n1 = n as i64;
        for i in 1..=n1 + 1 {
            let want = t.euler(n1, i);
            ck.eq(
                "g(n,i,0) = E(n,i)",
                &[("n", n1), ("i", i)],
                &want,
                &gc[n].get(i, 0),
            );
            ck.eq(
                "g(n,i,n+1-i) = E(n,i)",
                &[("n", n1), ("i", i)],
                &want,
                &gc[n].get(i, n1 + 1 - i),
            );
        }
        for j in 0..=n1 {
            ck.eq(
                "g(n,1,j) = E(n+1,j+1)",
                &[("n", n1), ("j", j)],
                &t.euler(n1 + 1, j + 1),
                &gc[n].get(1, j),
            );
        }
    }

    // The Eulerian numbers used above against a descent census.
    let pcap = (nmax + 1).min(ctx.caps.permutations);
    for n in 1..=pcap {
        let mut counts = vec![0u64; n + 1];
        for w in enumerate_permutations(n, &ctx.caps).expect("within cap") {
            counts[descents(&w) + 1] += 1;
        }
        for (k, c) in counts.iter().enumerate().skip(1) {
            ck.eq(
                "E(n,k) = #permutations with k-1 descents",
                &[("n", n as i64), ("k", k as i64)],
                &t.euler(n as i64, k as i64),
                &big(*c),
            );
        }
    }
    if pcap < nmax + 1 {
        ck.note(format!(
            "descent census covers n <= {pcap} (permutation cap {})",
            ctx.caps.permutations
        ));
    }
    ck.finish()
}
