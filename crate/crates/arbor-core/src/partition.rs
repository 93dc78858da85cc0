//! Integer partitions, used to index the power-sum basis.

use alloc::vec::Vec;

/// A partition: weakly decreasing positive parts.
///
/// The derived `Ord` is lexicographic on the part vectors, which is what
/// the serialization order is built from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// All partitions of `m`, in no particular order. Empty input gives the
/// empty partition.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(m, m, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalizes_order() {
        assert_eq!(Partition::new(vec![1, 3, 2]).parts(), &[3, 2, 1]);
    }

    #[test]
    fn partition_counts() {
        // p(0)..p(8) = 1, 1, 2, 3, 5, 7, 11, 15, 22
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22];
        for (m, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of(m as u32).len(), count, "p({m})");
        }
    }

    #[test]
    fn partitions_are_valid() {
        for p in partitions_of(9) {
            assert_eq!(p.size(), 9);
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
