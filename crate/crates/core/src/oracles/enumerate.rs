//! Exhaustive enumerators. Each object is produced exactly once, in a fixed
//! order.

use std::fmt;

use super::stats::{Matching, SignedPermutation};

/// Permutations of `[n]` in lexicographic order. `n = 0` yields the empty
/// permutation once.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<u32>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            next: Some((1..=n as u32).collect()),
        }
    }
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

/// Signed permutations: for each permutation in lexicographic order, every
/// sign pattern, bit `i` of the pattern negating position `i`.
pub fn signed_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    Permutations::new(n).flat_map(move |p| {
        (0u32..1 << n).map(move |mask| {
            let images = p
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if mask >> i & 1 == 1 {
                        -(v as i32)
                    } else {
                        v as i32
                    }
                })
                .collect();
            SignedPermutation::new(images).expect("valid by construction")
        })
    })
}

/// Perfect matchings of `[2n]`: the smallest unmatched element is paired
/// with each larger unmatched element in increasing order.
pub fn matchings(n: usize) -> Vec<Matching> {
    fn go(rest: &mut Vec<u32>, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Matching>) {
        if rest.is_empty() {
            out.push(Matching::new(acc.iter().copied()).expect("valid by construction"));
            return;
        }
        let a = rest.remove(0);
        for idx in 0..rest.len() {
            let b = rest.remove(idx);
            acc.push((a, b));
            go(rest, acc, out);
            acc.pop();
            rest.insert(idx, b);
        }
        rest.insert(0, a);
    }
    let mut rest: Vec<u32> = (1..=2 * n as u32).collect();
    let mut out = Vec::new();
    go(&mut rest, &mut Vec::new(), &mut out);
    out
}

/// A cyclically ordered partition in canonical form: the first block holds
/// 1 and every block is increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicallyOrderedPartition {
    blocks: Vec<Vec<u32>>,
}

impl CyclicallyOrderedPartition {
    /// `None` unless the blocks are nonempty, increasing, cover `[n]`
    /// disjointly and the first contains 1.
    pub fn new(blocks: Vec<Vec<u32>>) -> Option<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() || b.windows(2).any(|p| p[0] >= p[1]) {
                return None;
            }
            for &v in b {
                let v = v as usize;
                if v == 0 || v > n || seen[v] {
                    return None;
                }
                seen[v] = true;
            }
        }
        if n > 0 && blocks[0][0] != 1 {
            return None;
        }
        Some(CyclicallyOrderedPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Least element of each block, in block order.
    pub fn openers(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

/// `(13)(2)`; entries are comma-separated once the ground set exceeds 9.
impl fmt::Display for CyclicallyOrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() > 9 { "," } else { "" };
        for b in &self.blocks {
            let inner: Vec<String> = b.iter().map(u32::to_string).collect();
            write!(f, "({})", inner.join(sep))?;
        }
        Ok(())
    }
}

/// Set partitions of `[n]` as restricted growth strings, blocks ordered by
/// their minima.
fn set_partitions(n: usize) -> Vec<Vec<Vec<u32>>> {
    fn go(v: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if v > n {
            out.push(blocks.clone());
            return;
        }
        for idx in 0..blocks.len() {
            blocks[idx].push(v);
            go(v + 1, n, blocks, out);
            blocks[idx].pop();
        }
        blocks.push(vec![v]);
        go(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(1, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All cyclically ordered partitions of `[n]`, ordered by number of blocks
/// and then lexicographically by block list.
pub fn cops(n: usize) -> Vec<CyclicallyOrderedPartition> {
    let mut out = Vec::new();
    for blocks in set_partitions(n) {
        if blocks.is_empty() {
            out.push(CyclicallyOrderedPartition { blocks });
            continue;
        }
        let first = blocks[0].clone();
        let rest = &blocks[1..];
        for order in Permutations::new(rest.len()) {
            let mut arranged = Vec::with_capacity(blocks.len());
            arranged.push(first.clone());
            arranged.extend(order.iter().map(|&i| rest[i as usize - 1].clone()));
            out.push(CyclicallyOrderedPartition { blocks: arranged });
        }
    }
    out.sort_by(|a, b| {
        a.num_blocks()
            .cmp(&b.num_blocks())
            .then_with(|| a.blocks.cmp(&b.blocks))
    });
    out
}
