//! Registered discrepancies between published statements and the oracle.
//!
//! Each entry was established by exhaustive computation before being
//! registered here; a violation outside these regions is a regression.

/// A region of parameter points where a subject is known to disagree with
/// the oracle.
#[derive(Debug)]
pub struct KnownFinding {
    pub id: &'static str,
    pub subject: &'static str,
    pub description: &'static str,
    applies: fn(&[i64]) -> bool,
}

impl KnownFinding {
    pub fn applies(&self, point: &[i64]) -> bool {
        (self.applies)(point)
    }
}

/// Smallest `i` from which `d_a(Q_d, i) = C(2^d, i)` holds, per `d`.
pub(crate) fn hypercube_first_valid(d: i64) -> Option<i64> {
    match d {
        1 => Some(2),
        2 => Some(3),
        3 => Some(5),
        4 => Some(12),
        _ => None,
    }
}

pub static KNOWN_FINDINGS: &[KnownFinding] = &[
    KnownFinding {
        id: "corona_printed_middle_coefficient",
        subject: "corona_poly_printed",
        description: "the printed polynomial keeps 2^n - 2 at x^n for n >= 2; no n-set of the corona is accurate",
        applies: |p| matches!(p, [n, _, j] if *n >= 2 && j == n),
    },
    KnownFinding {
        id: "friendship_printed_middle_range",
        subject: "d_a_friendship_printed",
        description: "the printed count disagrees with the oracle for n <= i <= 2n",
        applies: |p| matches!(p, [n, i] if n <= i && *i <= 2 * n),
    },
    KnownFinding {
        id: "friendship_one_is_a_triangle",
        subject: "gamma_a_friendship",
        description: "F_1 is K_3, whose accurate domination number is 2, not 1",
        applies: |p| p == [1],
    },
    KnownFinding {
        id: "hypercube_small_sizes",
        subject: "d_a_hypercube",
        description: "C(2^d, i) counts every i-set; below the first valid size (2, 3, 5, 12 for d = 1..4) some are not accurate",
        applies: |p| match p {
            [d, i] => hypercube_first_valid(*d).is_some_and(|first| *i < first),
            _ => false,
        },
    },
    KnownFinding {
        id: "hypercube_q4_gamma",
        subject: "gamma_a_hypercube",
        description: "Q_4 has an accurate dominating set of size 6, below 2^3 + 1",
        applies: |p| matches!(p, [d] if *d >= 4),
    },
    KnownFinding {
        id: "book_nonzero_counts",
        subject: "d_a_book",
        description: "B_n has accurate dominating sets of size 3 <= i <= n/2 once n >= 6",
        applies: |p| matches!(p, [_, i] if *i >= 3),
    },
    KnownFinding {
        id: "llano_cycle_sum_reading",
        subject: "llano_cycle_sum",
        description: "the sum reading of the cycle closed form does not reproduce d(C_n, k)",
        applies: |_| true,
    },
    KnownFinding {
        id: "llano_cycle_product_reading",
        subject: "llano_cycle_product",
        description: "the product reading of the cycle closed form does not reproduce d(C_n, k)",
        applies: |_| true,
    },
    KnownFinding {
        id: "llano_cycle_difference_reading",
        subject: "llano_cycle_difference",
        description: "the difference reading of the cycle closed form does not reproduce d(C_n, k)",
        applies: |_| true,
    },
    KnownFinding {
        id: "cycle_recursive_overcounts",
        subject: "cycle_recursive_lower",
        description: "(n-i+1) d_a(C_{n-1}, i-1) exceeds d_a(C_n, i) at many i < n; insertions are not distinct",
        applies: |p| matches!(p, [n, i] if i < n),
    },
    KnownFinding {
        id: "path_vs_cycle_at_half",
        subject: "path_vs_cycle",
        description: "d_a(P_n, i) > d_a(C_n, i) at i = floor(n/2) for n in {3, 5, 6, 7, 9, 11}",
        applies: |p| matches!(p, [n, i] if *i == n / 2),
    },
    KnownFinding {
        id: "path_vs_cycle_below_half",
        subject: "path_vs_cycle_below_threshold",
        description: "below i = floor(n/2) the inequality is not claimed and fails, e.g. d_a(C_9, 3) = 0 < d_a(P_9, 3) = 1",
        applies: |p| matches!(p, [n, i] if *i < n / 2),
    },
];

/// The registered finding covering a violation of `subject` at `point`.
pub fn known_finding(subject: &str, point: &[i64]) -> Option<&'static KnownFinding> {
    KNOWN_FINDINGS
        .iter()
        .find(|k| k.subject == subject && k.applies(point))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert!(known_finding("d_a_friendship_printed", &[2, 2]).is_some());
        assert!(known_finding("d_a_friendship_printed", &[2, 1]).is_none());
        assert!(known_finding("corona_poly_printed", &[2, 0, 2]).is_some());
        assert!(known_finding("corona_poly_printed", &[2, 0, 3]).is_none());
        assert!(known_finding("d_a_hypercube", &[4, 11]).is_some());
        assert!(known_finding("d_a_hypercube", &[4, 12]).is_none());
        assert!(known_finding("path_upper", &[7, 4]).is_none());
    }
}
