//! Integer partitions with at least two parts, in lexicographic order.
//!
//! A partition of `n` is stored as its parts in non-decreasing order, so the
//! least partition of `n` is `(1, ..., 1)` and the greatest is
//! `(floor(n/2), ceil(n/2))`. [`Partition::successor`] steps through all
//! partitions of the same total in lexicographic order; its cost is
//! proportional to the number of parts it reads and writes, which is at most
//! `n` on either side.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Validation failure for [`Partition::new`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    /// Fewer than two parts were supplied.
    #[error("a partition needs at least two parts, got {0}")]
    TooFewParts(usize),
    /// Some part was zero.
    #[error("parts must be positive")]
    ZeroPart,
    /// The parts were not sorted in non-decreasing order.
    #[error("parts must be non-decreasing")]
    Unsorted,
}

/// A partition of a positive integer into at least two parts, kept in
/// non-decreasing order.
///
/// The derived `Ord` is the lexicographic order on the part sequences. It is
/// total over all partitions, but only comparisons between partitions of the
/// same total are meaningful to the enumeration; [`compare_partitions`]
/// checks that precondition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and wraps a sequence of parts.
    pub fn new(parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if parts.len() < 2 {
            return Err(PartitionError::TooFewParts(parts.len()));
        }
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(PartitionError::Unsorted);
        }
        Ok(Partition { parts })
    }

    /// The lexicographically least partition of `n`: all ones.
    ///
    /// # Panics
    ///
    /// Panics if `n < 2`; smaller totals cannot be split into two parts.
    pub fn minimum(n: usize) -> Partition {
        assert!(n >= 2, "no partition of {n} with at least two parts");
        Partition { parts: vec![1; n] }
    }

    /// The parts in non-decreasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True when no partition of the same total is lexicographically
    /// greater, i.e. the parts are `(floor(n/2), ceil(n/2))`.
    pub fn is_max(&self) -> bool {
        self.parts.len() == 2 && self.parts[0] == self.total() / 2
    }

    /// The immediate lexicographic successor among partitions of the same
    /// total, or `None` if `self` is the maximum.
    pub fn successor(&self) -> Option<Partition> {
        let a = &self.parts;
        let k = a.len();
        let n = self.total();
        if a[0] != n / 2 {
            let mut parts = Vec::with_capacity(k + 1);
            parts.extend_from_slice(&a[..k - 2]);
            if a[k - 1] - a[k - 2] <= 1 {
                // The tail cannot move any unit leftwards, so the next
                // prefix change is merging the last two parts.
                parts.push(a[k - 2] + a[k - 1]);
            } else {
                // Grow the second-to-last part by one unit, then lay the
                // remainder out as small as the new part allows.
                let head = a[k - 2] + 1;
                let tail = a[k - 1] - 1;
                let (q, r) = (tail / head, tail % head);
                if q > 1 {
                    parts.resize(parts.len() + q, head);
                    parts.push(head + r);
                } else {
                    parts.push(head);
                    parts.push(tail);
                }
            }
            return Some(Partition { parts });
        }
        // a[0] == n / 2 marks the maximum for every total except 3, where
        // (1, 1, 1) satisfies it as well.
        if n == 3 && a[1] != 2 {
            return Some(Partition { parts: vec![1, 2] });
        }
        None
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison of two partitions of the same total.
///
/// # Panics
///
/// Panics when the totals differ; the enumeration order is only defined
/// within a single total.
pub fn compare_partitions(a: &Partition, b: &Partition) -> Ordering {
    assert_eq!(
        a.total(),
        b.total(),
        "comparing partitions of different totals"
    );
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn new_rejects_invalid_sequences() {
        assert_eq!(
            Partition::new(vec![3]),
            Err(PartitionError::TooFewParts(1))
        );
        assert_eq!(Partition::new(vec![]), Err(PartitionError::TooFewParts(0)));
        assert_eq!(Partition::new(vec![0, 2]), Err(PartitionError::ZeroPart));
        assert_eq!(Partition::new(vec![2, 1]), Err(PartitionError::Unsorted));
        assert!(Partition::new(vec![1, 1, 4]).is_ok());
    }

    #[test]
    fn minimum_is_all_ones() {
        assert_eq!(Partition::minimum(2).parts(), &[1, 1]);
        assert_eq!(Partition::minimum(5).parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(Partition::minimum(9).parts(), &[1; 9]);
    }

    #[test]
    #[should_panic(expected = "no partition of 1")]
    fn minimum_rejects_small_totals() {
        Partition::minimum(1);
    }

    #[test]
    fn comparison_is_lexicographic() {
        assert_eq!(compare_partitions(&p(&[1, 1, 3]), &p(&[1, 2, 2])), Ordering::Less);
        assert_eq!(compare_partitions(&p(&[1, 4]), &p(&[1, 4])), Ordering::Equal);
        assert_eq!(compare_partitions(&p(&[1, 1, 2, 2]), &p(&[1, 1, 4])), Ordering::Less);
        assert_eq!(compare_partitions(&p(&[2, 3]), &p(&[1, 4])), Ordering::Greater);
    }

    #[test]
    #[should_panic(expected = "different totals")]
    fn comparison_requires_equal_totals() {
        compare_partitions(&p(&[1, 2]), &p(&[1, 3]));
    }

    #[test]
    fn is_max_detects_the_balanced_pair() {
        assert!(p(&[2, 3]).is_max());
        assert!(p(&[1, 1]).is_max());
        assert!(p(&[3, 3]).is_max());
        assert!(p(&[1, 2]).is_max());
        assert!(!p(&[1, 4]).is_max());
        assert!(!p(&[1, 2, 2]).is_max());
    }

    #[test]
    fn successor_merges_a_tight_tail() {
        assert_eq!(p(&[1, 1, 1, 2]).successor(), Some(p(&[1, 1, 3])));
        assert_eq!(p(&[1, 2, 2]).successor(), Some(p(&[1, 4])));
        assert_eq!(p(&[1, 1, 1, 1]).successor(), Some(p(&[1, 1, 2])));
    }

    #[test]
    fn successor_redistributes_a_loose_tail() {
        // One unit moves left and the rest re-spreads as evenly as allowed.
        assert_eq!(p(&[1, 4]).successor(), Some(p(&[2, 3])));
        assert_eq!(p(&[1, 5]).successor(), Some(p(&[2, 2, 2])));
        assert_eq!(p(&[1, 1, 8]).successor(), Some(p(&[1, 2, 2, 2, 3])));
        assert_eq!(p(&[1, 3]).successor(), Some(p(&[2, 2])));
    }

    #[test]
    fn successor_stops_at_the_maximum() {
        assert_eq!(p(&[1, 1]).successor(), None);
        assert_eq!(p(&[2, 3]).successor(), None);
        assert_eq!(p(&[2, 2]).successor(), None);
        assert_eq!(p(&[3, 3]).successor(), None);
    }

    #[test]
    fn total_three_needs_its_own_rule() {
        // (1, 1, 1) starts with floor(3/2) = 1 but is not the maximum.
        assert_eq!(p(&[1, 1, 1]).successor(), Some(p(&[1, 2])));
        assert_eq!(p(&[1, 2]).successor(), None);
    }

    #[test]
    fn successor_touches_linearly_many_parts() {
        // The worst case (1, n-1) rewrites the whole tail; input plus output
        // length bounds the step's work.
        for n in 4..=64 {
            let start = p(&[1, n - 1]);
            let next = start.successor().unwrap();
            assert!(next.parts().len() + start.parts().len() <= 2 * n);
            assert_eq!(next.total(), n);
        }
    }

    #[test]
    fn display_lists_parts() {
        assert_eq!(p(&[1, 2, 2]).to_string(), "(1, 2, 2)");
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..9, 2..8).prop_map(|mut parts| {
            parts.sort_unstable();
            Partition::new(parts).unwrap()
        })
    }

    proptest! {
        #[test]
        fn successor_preserves_total_and_grows(part in arb_partition()) {
            match part.successor() {
                Some(next) => {
                    prop_assert_eq!(next.total(), part.total());
                    prop_assert!(compare_partitions(&part, &next) == Ordering::Less);
                    prop_assert!(!part.is_max());
                }
                None => prop_assert!(part.is_max()),
            }
        }
    }
}
