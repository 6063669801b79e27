//! Partition statistics and runs of odd parts.

use crate::partition::Partition;

/// A maximal chain `2m−1, 2m−3, …, 2m−2k+1` of consecutive odd values, each
/// occurring in the partition with odd multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    /// The largest term `2m−1`.
    pub largest: u64,
    /// The number of terms `k`.
    pub count: u64,
}

impl Run {
    /// The smallest term `2m−2k+1`.
    pub fn smallest(&self) -> u64 {
        self.largest + 2 - 2 * self.count
    }

    /// `k` odd and `k < m`. A run ending in 1 is never odd.
    pub fn is_odd_run(&self) -> bool {
        let m = self.largest.div_ceil(2);
        self.count % 2 == 1 && self.count < m
    }

    /// The terms, largest first.
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.count).map(move |i| self.largest - 2 * i)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartitionStats {
    /// Number of parts.
    pub length: usize,
    /// Number of odd parts.
    pub odd_parts: usize,
    /// Alternating sum λ_1 − λ_2 + λ_3 − …
    pub alt_sum: u64,
    /// Number of values occurring with odd multiplicity.
    pub odd_mult_parts: usize,
    /// Number of odd runs.
    pub odd_runs: usize,
}

impl Partition {
    /// Runs in decreasing order of their largest term. Even values and odd
    /// values of even multiplicity never belong to a run.
    pub fn runs(&self) -> Vec<Run> {
        let mut runs: Vec<Run> = Vec::new();
        for (value, mult) in self.multiplicities() {
            if value % 2 == 0 || mult % 2 == 0 {
                continue;
            }
            match runs.last_mut() {
                Some(run) if run.smallest() == value + 2 => run.count += 1,
                _ => runs.push(Run {
                    largest: value,
                    count: 1,
                }),
            }
        }
        runs
    }

    pub fn odd_run_count(&self) -> usize {
        self.runs().iter().filter(|r| r.is_odd_run()).count()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            length: self.len(),
            odd_parts: self.odd_part_count(),
            alt_sum: self.alternating_sum(),
            odd_mult_parts: self.odd_multiplicity_count(),
            odd_runs: self.odd_run_count(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(largest: u64, count: u64) -> Run {
        Run { largest, count }
    }

    #[test]
    fn four_runs_two_odd() {
        let lam = Partition::from_multiplicities(&[
            (23, 1),
            (21, 1),
            (19, 2),
            (17, 1),
            (15, 5),
            (13, 1),
            (9, 3),
            (5, 1),
            (3, 1),
            (1, 1),
        ])
        .unwrap();
        let runs = lam.runs();
        assert_eq!(runs, vec![run(23, 2), run(17, 3), run(9, 1), run(5, 3)]);
        let odd: Vec<_> = runs.iter().filter(|r| r.is_odd_run()).copied().collect();
        assert_eq!(odd, vec![run(17, 3), run(9, 1)]);
        assert_eq!(lam.stats().odd_runs, 2);
    }

    #[test]
    fn runs_of_odd_distinct() {
        let lam = Partition::new(vec![29, 21, 19, 17, 13, 11, 7, 5, 1]).unwrap();
        assert_eq!(
            lam.runs(),
            vec![run(29, 1), run(21, 3), run(13, 2), run(7, 2), run(1, 1)]
        );
        assert!(Partition::new(vec![2, 2]).unwrap().runs().is_empty());
    }

    #[test]
    fn worked_example_stats() {
        let lam =
            Partition::from_multiplicities(&[(13, 4), (11, 2), (9, 1), (5, 5), (3, 3), (1, 4)])
                .unwrap();
        let s = lam.stats();
        assert_eq!(s.length, 19);
        assert_eq!(s.odd_mult_parts, 3);
        assert_eq!(Partition::empty().stats(), PartitionStats::default());
    }

    #[test]
    fn run_terms() {
        assert_eq!(run(17, 3).terms().collect::<Vec<_>>(), vec![17, 15, 13]);
        assert_eq!(run(17, 3).smallest(), 13);
        assert!(!run(5, 3).is_odd_run());
        assert!(!run(1, 1).is_odd_run());
        assert!(run(3, 1).is_odd_run());
    }
}
