//! Accurate dominating sets: a dominating set `D` is accurate when no
//! `|D|`-subset of `V \ D` dominates.

use crate::count::{Count, CountPolynomial};
use crate::domination::{dominated_within_budget, dominates, gamma, Sweep};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::subsets::k_subsets_of;

/// Literal definition: sweeps every `|d|`-subset of the complement.
///
/// Exponential in the inner loop; kept as the reference the fast test is
/// checked against.
pub fn is_accurate_naive(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_subset(d)?;
    if !dominates(g, d) {
        return Ok(false);
    }
    let rest = g.vertices() - d;
    Ok(!k_subsets_of(rest, d.len()).any(|s| dominates(g, s)))
}

/// Unchecked fast accuracy test.
///
/// Dominating sets are closed upwards, so a dominating subset of `V \ D`
/// with at most `|D|` vertices pads to one of exactly `|D|` whenever
/// `|V \ D| >= |D|`. When the complement is smaller than `D` no such
/// subset exists at all.
#[inline]
pub fn accurate(g: &Graph, d: VertexSet) -> bool {
    if !dominates(g, d) {
        return false;
    }
    let rest = g.vertices() - d;
    if rest.len() < d.len() {
        return true;
    }
    !dominated_within_budget(g, rest, VertexSet::EMPTY, d.len())
}

/// Whether `d` is an accurate dominating set, via the branch-and-bound
/// reformulation. Agrees with [`is_accurate_naive`] everywhere.
pub fn is_accurate(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_subset(d)?;
    Ok(accurate(g, d))
}

impl Sweep {
    pub fn count_accurate(&self, g: &Graph, i: usize) -> Result<Count> {
        self.guard(g)?;
        if i > g.order() {
            return Ok(Count::zero());
        }
        Ok(self.count_where(g.order(), i, |s| accurate(g, s)))
    }

    pub fn enumerate_accurate(&self, g: &Graph, i: usize) -> Result<Vec<VertexSet>> {
        self.guard(g)?;
        if i > g.order() {
            return Ok(Vec::new());
        }
        Ok(self.collect_where(g.order(), i, |s| accurate(g, s)))
    }

    pub fn accurate_polynomial(&self, g: &Graph) -> Result<CountPolynomial> {
        self.guard(g)?;
        let coeffs = (0..=g.order())
            .map(|i| self.count_accurate(g, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(CountPolynomial::new(coeffs))
    }

    pub fn gamma_a(&self, g: &Graph) -> Result<usize> {
        self.guard(g)?;
        // every accurate set dominates, so start at γ
        for k in gamma(g)..=g.order() {
            let found = self
                .ranges(g.order(), k)
                .iter()
                .any(|r| r.iter().any(|s| accurate(g, s)));
            if found {
                return Ok(k);
            }
        }
        unreachable!("the full vertex set is accurate")
    }
}

/// `d_a(G, i)`.
pub fn count_accurate(g: &Graph, i: usize) -> Result<Count> {
    Sweep::default().count_accurate(g, i)
}

/// Every accurate dominating set of size `i`, ascending by encoding.
pub fn enumerate_accurate(g: &Graph, i: usize) -> Result<Vec<VertexSet>> {
    Sweep::default().enumerate_accurate(g, i)
}

/// `D_a(G, x)`.
pub fn accurate_polynomial(g: &Graph) -> Result<CountPolynomial> {
    Sweep::default().accurate_polynomial(g)
}

/// `γ_a(G)`, the smallest size of an accurate dominating set.
pub fn gamma_a(g: &Graph) -> Result<usize> {
    Sweep::default().gamma_a(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};
    use crate::ops::corona_k1;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn fam(f: FamilySpec) -> Graph {
        make_family(f).unwrap()
    }

    #[test]
    fn p5_examples() {
        let g = fam(FamilySpec::Path(5));
        assert!(is_accurate_naive(&g, set(&[1, 3])).unwrap());
        assert!(!is_accurate_naive(&g, set(&[0, 3])).unwrap());
        assert!(is_accurate(&g, set(&[1, 3])).unwrap());
        assert!(!is_accurate(&g, set(&[0, 3])).unwrap());
        assert!(is_accurate_naive(&g, g.vertices()).unwrap());
    }

    #[test]
    fn c9_has_no_accurate_triples() {
        let g = fam(FamilySpec::Cycle(9));
        for s in crate::subsets::k_subsets(9, 3) {
            assert!(!is_accurate(&g, s).unwrap());
        }
    }

    #[test]
    fn p9_unique_triple() {
        let g = fam(FamilySpec::Path(9));
        assert!(is_accurate(&g, set(&[1, 4, 7])).unwrap());
        assert_eq!(enumerate_accurate(&g, 3).unwrap(), vec![set(&[1, 4, 7])]);
    }

    #[test]
    fn counts_and_lists() {
        assert_eq!(
            count_accurate(&fam(FamilySpec::Path(7)), 4).unwrap(),
            Count::from(22u64)
        );
        assert_eq!(
            count_accurate(&fam(FamilySpec::Path(6)), 3).unwrap(),
            Count::from(2u64)
        );
        assert_eq!(
            enumerate_accurate(&fam(FamilySpec::Path(6)), 3).unwrap(),
            vec![set(&[0, 1, 4]), set(&[1, 4, 5])]
        );
        assert!(enumerate_accurate(&fam(FamilySpec::Complete(2)), 1)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            accurate_polynomial(&fam(FamilySpec::Path(4))).unwrap(),
            CountPolynomial::from_u64s(&[0, 0, 0, 4, 1])
        );
        assert_eq!(
            accurate_polynomial(&fam(FamilySpec::Complete(2))).unwrap(),
            CountPolynomial::from_u64s(&[0, 0, 1])
        );
        let k1 = fam(FamilySpec::Complete(1));
        assert_eq!(
            accurate_polynomial(&corona_k1(&k1).unwrap()).unwrap(),
            CountPolynomial::from_u64s(&[0, 0, 1])
        );
    }

    #[test]
    fn gamma_a_values() {
        for n in 2..=4 {
            assert_eq!(gamma_a(&fam(FamilySpec::Friendship(n))).unwrap(), 1);
        }
        assert_eq!(gamma_a(&fam(FamilySpec::Cycle(6))).unwrap(), 4);
        assert_eq!(gamma_a(&fam(FamilySpec::Path(4))).unwrap(), 3);
        // F_1 is a triangle
        assert_eq!(gamma_a(&fam(FamilySpec::Friendship(1))).unwrap(), 2);
    }
}
