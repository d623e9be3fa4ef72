//! Partitions, rooted partitions and the direct sum.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts. A
//! [`RootedPartition`] singles out one occurrence of a part value `k`; it is
//! stored as `(base, root_value, root_ordinal)` where the ordinal counts the
//! copies of `k` from the left, starting at 1. Two rootings at different
//! copies of the same value are different objects.
//!
//! The direct sum concatenates, value by value, the run of equal parts of
//! the left operand with the run of the right operand. For plain partitions
//! that is a multiset union; for rooted operands it decides where the root
//! lands, which is why there are separate left- and right-rooted variants.

mod counting;
mod enumerate;
mod notation;

use std::cmp::Ordering;

use thiserror::Error;

pub use counting::{count_partitions, partition_counts, statistic, statistic_row};
pub use enumerate::{enumerate_partitions, enumerate_rooted, PartitionCursor, Partitions, Rooted};
pub use notation::{Marked, NotationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing, {prev} is followed by {next}")]
    NotDecreasing { prev: u32, next: u32 },
    #[error("no part equal to {0} to root")]
    RootValueAbsent(u32),
    #[error("root ordinal {ordinal} out of range: the partition has {multiplicity} part(s) equal to {value}")]
    RootOrdinalOutOfRange { value: u32, ordinal: u32, multiplicity: u32 },
    #[error("arithmetic overflow while counting partitions of {0}")]
    Overflow(u32),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart(i));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing { prev: w[0], next: w[1] });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `count` copies of `value`.
    pub fn repeated(value: u32, count: u32) -> Self {
        assert!(value > 0 || count == 0, "parts must be positive");
        Partition { parts: vec![value; count as usize] }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Smallest part, `None` for the empty partition.
    pub fn min_part(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        // parts are sorted decreasingly, so the run of `value` is contiguous
        let start = self.parts.partition_point(|&p| p > value);
        let end = self.parts.partition_point(|&p| p >= value);
        (end - start) as u32
    }

    /// Distinct part values with their multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Removes `count` copies of `value`. Panics if there are fewer.
    fn without(&self, value: u32, count: u32) -> Partition {
        let start = self.parts.partition_point(|&p| p > value);
        let available = self.multiplicity(value);
        assert!(count <= available, "cannot remove {count} copies of {value}");
        let mut parts = self.parts.clone();
        parts.drain(start..start + count as usize);
        Partition { parts }
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// A partition with one distinguished occurrence of a part value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedPartition {
    base: Partition,
    root_value: u32,
    root_ordinal: u32,
}

impl RootedPartition {
    pub fn new(base: Partition, root_value: u32, root_ordinal: u32) -> Result<Self, PartitionError> {
        let multiplicity = base.multiplicity(root_value);
        if multiplicity == 0 {
            return Err(PartitionError::RootValueAbsent(root_value));
        }
        if root_ordinal == 0 || root_ordinal > multiplicity {
            return Err(PartitionError::RootOrdinalOutOfRange {
                value: root_value,
                ordinal: root_ordinal,
                multiplicity,
            });
        }
        Ok(RootedPartition { base, root_value, root_ordinal })
    }

    /// `count` copies of `value` with the first one rooted (`count ≥ 1`).
    pub fn run(value: u32, count: u32) -> Self {
        assert!(value > 0 && count > 0, "a rooted run needs at least one positive part");
        RootedPartition {
            base: Partition::repeated(value, count),
            root_value: value,
            root_ordinal: 1,
        }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn root_value(&self) -> u32 {
        self.root_value
    }

    pub fn root_ordinal(&self) -> u32 {
        self.root_ordinal
    }

    pub fn weight(&self) -> u64 {
        self.base.weight()
    }

    pub fn min_part(&self) -> u32 {
        self.base.min_part().expect("rooted partitions are never empty")
    }

    /// Index of the root in `base.parts()`.
    pub fn root_index(&self) -> usize {
        self.base.parts.partition_point(|&p| p > self.root_value) + self.root_ordinal as usize - 1
    }

    /// Number of parts equal to the root value at or after the root.
    pub fn trailing_run(&self) -> u32 {
        self.base.multiplicity(self.root_value) - self.root_ordinal + 1
    }

    pub fn into_base(self) -> Partition {
        self.base
    }
}

/// Merges two weakly decreasing part lists.
fn merge(left: &[u32], right: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        match left[i].cmp(&right[j]) {
            Ordering::Less => {
                out.push(right[j]);
                j += 1;
            }
            _ => {
                out.push(left[i]);
                i += 1;
            }
        }
    }
    out.extend_from_slice(&left[i..]);
    out.extend_from_slice(&right[j..]);
    out
}

/// Direct sum of two unrooted partitions.
pub fn direct_sum(left: &Partition, right: &Partition) -> Partition {
    Partition { parts: merge(&left.parts, &right.parts) }
}

/// `left ⊕ right` with the root on the right operand: the copies of the root
/// value coming from `left` precede the right operand's run.
pub fn direct_sum_rooted(left: &Partition, right: &RootedPartition) -> RootedPartition {
    RootedPartition {
        base: direct_sum(left, &right.base),
        root_value: right.root_value,
        root_ordinal: left.multiplicity(right.root_value) + right.root_ordinal,
    }
}

/// `left ⊕ right` with the root on the left operand; the ordinal is unchanged.
pub fn direct_sum_rooted_left(left: &RootedPartition, right: &Partition) -> RootedPartition {
    RootedPartition {
        base: direct_sum(&left.base, right),
        root_value: left.root_value,
        root_ordinal: left.root_ordinal,
    }
}

/// Splits off the root together with the equal parts to its right.
///
/// The tail is `m` copies of the root value with the first rooted, where `m`
/// is [`RootedPartition::trailing_run`]. `direct_sum_rooted(&rest, &tail)`
/// gives back the input.
pub fn split_trailing_root(rooted: &RootedPartition) -> (Partition, RootedPartition) {
    let m = rooted.trailing_run();
    let rest = rooted.base.without(rooted.root_value, m);
    (rest, RootedPartition::run(rooted.root_value, m))
}

/// Splits `λ` into the parts `≥ threshold` and the parts `< threshold`.
pub fn split_small_parts(partition: &Partition, threshold: u32) -> (Partition, Partition) {
    let cut = partition.parts.partition_point(|&p| p >= threshold);
    (
        Partition { parts: partition.parts[..cut].to_vec() },
        Partition { parts: partition.parts[cut..].to_vec() },
    )
}

/// Number of parts equal to `k`.
pub fn f_k(partition: &Partition, k: u32) -> u32 {
    partition.multiplicity(k)
}

/// Number of distinct part values occurring at least `k` times.
pub fn g_k(partition: &Partition, k: u32) -> u32 {
    partition.multiplicities().iter().filter(|&&(_, m)| m >= k).count() as u32
}
