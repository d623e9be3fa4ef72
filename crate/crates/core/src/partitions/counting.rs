use super::PartitionError;

/// `counts[w]` = number of partitions of `w` into parts `≥ min_part`, for
/// `w` in `0..=max_n`. Standard coin-change recurrence, one part size at a
/// time.
pub fn partition_counts(max_n: u32, min_part: u32) -> Result<Vec<u128>, PartitionError> {
    assert!(min_part >= 1, "min_part must be positive");
    let len = max_n as usize + 1;
    let mut counts = vec![0u128; len];
    counts[0] = 1;
    for part in min_part as usize..len {
        for w in part..len {
            counts[w] = counts[w]
                .checked_add(counts[w - part])
                .ok_or(PartitionError::Overflow(w as u32))?;
        }
    }
    Ok(counts)
}

/// Number of partitions of `n` with smallest part at least `min_part`.
pub fn count_partitions(n: u32, min_part: u32) -> Result<u128, PartitionError> {
    Ok(partition_counts(n, min_part)?[n as usize])
}

/// Total number of parts equal to `k` over the partitions of `n` whose parts
/// are all `≥ r`.
///
/// Computed as `Σ_{j ≥ 1} count_partitions(n − j·k, r)`: the partitions of
/// `n` with at least `j` copies of `k` are in bijection with partitions of
/// `n − j·k` (remove `j` copies), and summing over `j` counts each copy once.
/// This needs `k ≥ r` so that the removed copies are themselves admissible.
pub fn statistic(n: u32, k: u32, r: u32) -> Result<u128, PartitionError> {
    if k == 0 || k < r {
        return Ok(0);
    }
    let counts = partition_counts(n, r)?;
    shifted_sum(&counts, n, k)
}

/// `[statistic(n, k, r) for k in 1..=k_max]`, sharing one count table.
pub fn statistic_row(n: u32, r: u32, k_max: u32) -> Result<Vec<u128>, PartitionError> {
    let counts = partition_counts(n, r)?;
    (1..=k_max)
        .map(|k| if k < r { Ok(0) } else { shifted_sum(&counts, n, k) })
        .collect()
}

fn shifted_sum(counts: &[u128], n: u32, k: u32) -> Result<u128, PartitionError> {
    let (n, k) = (n as usize, k as usize);
    (1..=n / k).try_fold(0u128, |acc, j| {
        acc.checked_add(counts[n - j * k]).ok_or(PartitionError::Overflow(n as u32))
    })
}
