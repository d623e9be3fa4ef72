use super::{Partition, RootedPartition};

/// Walks the partitions of `n` with every part `≥ min_part` in
/// lexicographically decreasing order, reusing one buffer.
///
/// This is a depth-first search over weakly decreasing part sequences: each
/// step decrements the last part that can still shrink and refills the
/// remainder greedily, backing out of branches that would leave a positive
/// remainder smaller than `min_part`.
#[derive(Debug, Clone)]
pub struct PartitionCursor {
    n: u32,
    min_part: u32,
    parts: Vec<u32>,
    remaining: u32,
    started: bool,
    done: bool,
}

impl PartitionCursor {
    pub fn new(n: u32, min_part: u32) -> Self {
        assert!(min_part >= 1, "min_part must be positive");
        PartitionCursor {
            n,
            min_part,
            parts: Vec::new(),
            remaining: n,
            started: false,
            done: false,
        }
    }

    /// Greedily fills the remainder with the largest admissible parts.
    /// Returns false on a dead end.
    fn descend(&mut self) -> bool {
        while self.remaining > 0 {
            let cap = self.parts.last().copied().unwrap_or(self.n);
            let next = cap.min(self.remaining);
            if next < self.min_part {
                return false;
            }
            self.parts.push(next);
            self.remaining -= next;
        }
        true
    }

    fn backtrack(&mut self) -> bool {
        while let Some(last) = self.parts.pop() {
            self.remaining += last;
            let smaller = last - 1;
            if smaller >= self.min_part {
                self.parts.push(smaller);
                self.remaining -= smaller;
                if self.descend() {
                    return true;
                }
            }
        }
        false
    }

    /// Advances to the next partition and returns its parts.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.backtrack()
        } else {
            self.started = true;
            self.descend() || self.backtrack()
        };
        if found {
            Some(&self.parts)
        } else {
            self.done = true;
            None
        }
    }
}

/// Iterator over partitions; see [`enumerate_partitions`].
#[derive(Debug, Clone)]
pub struct Partitions {
    cursor: PartitionCursor,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.cursor
            .advance()
            .map(|parts| Partition::from_sorted_unchecked(parts.to_vec()))
    }
}

/// Partitions of `n` with smallest part at least `min_part`, in
/// lexicographically decreasing order. For `n = 0` this yields the empty
/// partition once.
pub fn enumerate_partitions(n: u32, min_part: u32) -> Partitions {
    Partitions { cursor: PartitionCursor::new(n, min_part) }
}

/// Iterator over rooted partitions; see [`enumerate_rooted`].
#[derive(Debug, Clone)]
pub struct Rooted {
    inner: Partitions,
    value: u32,
    current: Option<Partition>,
    ordinal: u32,
    multiplicity: u32,
}

impl Iterator for Rooted {
    type Item = RootedPartition;

    fn next(&mut self) -> Option<RootedPartition> {
        loop {
            if let Some(base) = &self.current {
                if self.ordinal < self.multiplicity {
                    self.ordinal += 1;
                    return Some(RootedPartition {
                        base: base.clone(),
                        root_value: self.value,
                        root_ordinal: self.ordinal,
                    });
                }
            }
            let base = self.inner.next()?;
            self.multiplicity = base.multiplicity(self.value);
            self.ordinal = 0;
            self.current = Some(base);
        }
    }
}

/// Every partition of `n` with smallest part `≥ min_part`, rooted at each
/// copy of `k` in turn. Yields `statistic(n, k, min_part)` items.
pub fn enumerate_rooted(n: u32, k: u32, min_part: u32) -> Rooted {
    Rooted {
        inner: enumerate_partitions(n, min_part),
        value: k,
        current: None,
        ordinal: 0,
        multiplicity: 0,
    }
}
