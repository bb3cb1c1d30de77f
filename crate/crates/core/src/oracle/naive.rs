use itertools::Itertools;

use crate::partitions::{PartSeq, PartValue};

/// Every generic sequence with support in positions `1..=max_len` and
/// part sizes at most `max_size`, found by filtering all vectors of values.
/// Exponential; meant only for validating the real enumerators.
pub fn all_part_seqs(max_len: usize, max_size: u64) -> Vec<PartSeq> {
    let values: Vec<PartValue> = std::iter::once(PartValue::ZERO)
        .chain((1..=max_size).flat_map(|k| [PartValue::bar(k), PartValue::plain(k)]))
        .collect();
    let mut out: Vec<PartSeq> = (0..max_len)
        .map(|_| values.iter().copied())
        .multi_cartesian_product()
        .filter_map(|v| PartSeq::new(v).ok())
        .collect();
    out.push(PartSeq::empty());
    out.sort();
    out.dedup();
    out
}

/// The non-increasing members of [`all_part_seqs`].
pub fn all_over_partitions(max_len: usize, max_size: u64) -> Vec<PartSeq> {
    all_part_seqs(max_len, max_size)
        .into_iter()
        .filter(PartSeq::is_non_increasing)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_counts() {
        // (), (1~), (1), (0,1~), (0,1), (1,1~), (1,1)
        assert_eq!(all_part_seqs(2, 1).len(), 7);
        assert_eq!(all_over_partitions(2, 1).len(), 5);
    }
}
