use std::fmt;

use crate::partition::Partition;

/// An even-length sequence of non-negative integers read as consecutive
/// pairs `(e[2j], e[2j+1])`.
///
/// This is the working representation for every pair-based rewrite: the
/// paired form of an odd-and-distinct partition, the intermediates of pair
/// insertion and the pairwise form of Sylvester's map. An odd-length input
/// is padded with a trailing 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PairedComposition {
    entries: Vec<u64>,
}

impl PairedComposition {
    pub fn from_entries(mut entries: Vec<u64>) -> Self {
        if entries.len() % 2 == 1 {
            entries.push(0);
        }
        Self { entries }
    }

    /// The parts of `p`, padded to even length.
    pub fn from_partition(p: &Partition) -> Self {
        Self::from_entries(p.parts().to_vec())
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<u64> {
        &mut self.entries
    }

    pub fn pair_count(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pair `j` (0-based).
    pub fn pair(&self, j: usize) -> (u64, u64) {
        (self.entries[2 * j], self.entries[2 * j + 1])
    }

    pub(crate) fn set_pair(&mut self, j: usize, pair: (u64, u64)) {
        self.entries[2 * j] = pair.0;
        self.entries[2 * j + 1] = pair.1;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.chunks_exact(2).map(|c| (c[0], c[1]))
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn alternating_sum(&self) -> i64 {
        self.pairs().map(|(a, b)| a as i64 - b as i64).sum()
    }

    pub fn odd_entry_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e % 2 == 1).count()
    }

    /// Inserts `pair` in front of all other pairs.
    pub fn prepend(&mut self, pair: (u64, u64)) {
        self.entries.splice(0..0, [pair.0, pair.1]);
    }

    /// Converts to a partition if the entries are non-increasing and zeros
    /// occur only at the end.
    pub fn to_partition(&self) -> Option<Partition> {
        Partition::from_padded(self.entries.clone())
    }
}

/// Pairs separated by vertical bars: `15,14 | 21,19 | 1,0`.
impl fmt::Display for PairedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (j, (a, b)) in self.pairs().enumerate() {
            if j > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{a},{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_and_display() {
        let c = PairedComposition::from_entries(vec![7, 5, 3]);
        assert_eq!(c.entries(), &[7, 5, 3, 0]);
        assert_eq!(c.to_string(), "7,5 | 3,0");
        assert_eq!(c.to_partition().unwrap().parts(), &[7, 5, 3]);
    }

    #[test]
    fn non_monotone_is_not_a_partition() {
        let c = PairedComposition::from_entries(vec![15, 14, 21, 19]);
        assert!(c.to_partition().is_none());
        let c = PairedComposition::from_entries(vec![2, 0, 1, 0]);
        assert!(c.to_partition().is_none());
    }
}
