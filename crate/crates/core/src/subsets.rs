//! Fixed-size subset sweeps in canonical order.
//!
//! The `k`-subsets of `{0..n}` are visited in ascending order of their
//! bitmask (colexicographic order). A sweep can be cut into contiguous
//! rank ranges; each range is itself a contiguous interval of encodings, so
//! partial results from the pieces merge by concatenation or addition.

use crate::graph::{VertexSet, MAX_VERTICES};

/// `C(n, k)` as `u64`; exact for `n <= 64`.
pub fn choose(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}

/// Position of a `k`-subset in the ascending sweep of all `k`-subsets.
pub fn rank(set: VertexSet) -> u64 {
    set.iter().enumerate().map(|(j, c)| choose(c, j + 1)).sum()
}

/// Inverse of [`rank`].
pub fn unrank(mut r: u64, k: usize) -> VertexSet {
    let mut set = VertexSet::EMPTY;
    for j in (1..=k).rev() {
        // largest c with C(c, j) <= r
        let mut c = j - 1;
        while choose(c + 1, j) <= r {
            c += 1;
        }
        r -= choose(c, j);
        set.insert(c);
    }
    set
}

/// Next mask with the same popcount (Gosper's hack).
#[inline]
fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// A contiguous run of the ascending `k`-subset sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetRange {
    pub n: usize,
    pub k: usize,
    /// Rank of the first subset.
    pub start: u64,
    /// Number of subsets in the run.
    pub len: u64,
}

impl SubsetRange {
    /// The whole sweep of `k`-subsets of an `n`-set.
    pub fn all(n: usize, k: usize) -> Self {
        SubsetRange {
            n,
            k,
            start: 0,
            len: choose(n, k),
        }
    }

    pub fn iter(&self) -> KSubsets {
        KSubsets {
            next: if self.len == 0 {
                0
            } else {
                unrank(self.start, self.k).bits()
            },
            remaining: self.len,
            k: self.k,
        }
    }

    /// Encodings covered, as a half-open interval of masks.
    pub fn encoding_bounds(&self) -> Option<(VertexSet, VertexSet)> {
        if self.len == 0 {
            return None;
        }
        Some((
            unrank(self.start, self.k),
            unrank(self.start + self.len - 1, self.k),
        ))
    }
}

/// Iterator over a [`SubsetRange`].
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: u64,
    remaining: u64,
    k: usize,
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next;
        self.remaining -= 1;
        if self.remaining > 0 && self.k > 0 {
            self.next = next_same_popcount(current);
        }
        Some(VertexSet::from_bits(current))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// All `k`-subsets of `{0..n}` in ascending canonical order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    debug_assert!(n <= MAX_VERTICES);
    SubsetRange::all(n, k).iter()
}

/// All `k`-subsets of `pool`, ascending by encoding.
pub fn k_subsets_of(pool: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members: Vec<usize> = pool.iter().collect();
    k_subsets(members.len(), k).map(move |idx| idx.iter().map(|j| members[j]).collect())
}

/// Splits the `k`-subset sweep into at most `parts` contiguous, non-empty
/// ranges of near-equal length.
pub fn split(n: usize, k: usize, parts: usize) -> Vec<SubsetRange> {
    let total = choose(n, k);
    let parts = (parts.max(1) as u64).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for p in 0..parts {
        let len = base + u64::from(p < extra);
        if len > 0 {
            out.push(SubsetRange { n, k, start, len });
        }
        start += len;
    }
    out
}

/// Splits at explicit rank cut points (sorted, within `0..=C(n,k)`).
pub fn split_at(n: usize, k: usize, cuts: &[u64]) -> Vec<SubsetRange> {
    let total = choose(n, k);
    let mut bounds = vec![0];
    bounds.extend(cuts.iter().map(|&c| c.min(total)));
    bounds.push(total);
    bounds.sort_unstable();
    bounds
        .windows(2)
        .map(|w| SubsetRange {
            n,
            k,
            start: w[0],
            len: w[1] - w[0],
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn choose_values() {
        assert_eq!(choose(5, 2), 10);
        assert_eq!(choose(63, 31), 916_312_070_471_295_267);
        assert_eq!(choose(3, 4), 0);
        assert_eq!(choose(0, 0), 1);
    }

    #[test]
    fn sweep_is_ascending_and_complete() {
        for n in 0..=8 {
            for k in 0..=n {
                let sets: Vec<_> = k_subsets(n, k).collect();
                assert_eq!(sets.len() as u64, choose(n, k));
                assert!(sets.windows(2).all(|w| w[0] < w[1]));
                assert!(sets
                    .iter()
                    .all(|s| s.len() == k && s.is_subset(VertexSet::full(n))));
                // brute force: filter all masks by popcount
                let brute: Vec<_> = (0u64..1 << n)
                    .filter(|m| m.count_ones() as usize == k)
                    .map(VertexSet::from_bits)
                    .collect();
                assert_eq!(sets, brute);
            }
        }
    }

    #[test]
    fn rank_unrank_inverse() {
        for (r, s) in k_subsets(9, 4).enumerate() {
            assert_eq!(rank(s), r as u64);
            assert_eq!(unrank(r as u64, 4), s);
        }
    }

    #[test]
    fn subsets_of_pool() {
        let pool: VertexSet = [1, 3, 4].into_iter().collect();
        let got: Vec<Vec<usize>> = k_subsets_of(pool, 2).map(|s| s.iter().collect()).collect();
        assert_eq!(got, vec![vec![1, 3], vec![1, 4], vec![3, 4]]);
    }

    #[test]
    fn split_covers_sweep() {
        let whole: Vec<_> = k_subsets(12, 5).collect();
        for parts in [1, 2, 3, 7, 100, 10_000] {
            let joined: Vec<_> = split(12, 5, parts).iter().flat_map(|r| r.iter()).collect();
            assert_eq!(joined, whole);
        }
        assert_eq!(split(4, 0, 3).len(), 1);
        assert_eq!(split(3, 4, 3).iter().map(|r| r.len).sum::<u64>(), 0);
    }
}
