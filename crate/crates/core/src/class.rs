//! The partition classes and their membership predicates.

use std::fmt;
use std::str::FromStr;

use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionClass {
    /// All parts odd.
    Odd,
    /// All parts distinct.
    Distinct,
    /// Odd and distinct.
    OddDistinct,
    /// Splitting partitions.
    Splitting,
    /// Spin regular partitions.
    SpinRegular,
    /// Distinct partitions whose pair gaps are 1 or 2.
    DistinctGapsLe2,
    /// Odd partitions with no repeated part below `ℓ + ℓ_r − 1`.
    OddDistinctSmall,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 7] = [
        Self::Odd,
        Self::Distinct,
        Self::OddDistinct,
        Self::Splitting,
        Self::SpinRegular,
        Self::DistinctGapsLe2,
        Self::OddDistinctSmall,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Self::Odd => "O",
            Self::Distinct => "D",
            Self::OddDistinct => "OD",
            Self::Splitting => "S",
            Self::SpinRegular => "SR",
            Self::DistinctGapsLe2 => "Dle2",
            Self::OddDistinctSmall => "ODS",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::Odd => "odd partitions",
            Self::Distinct => "distinct partitions",
            Self::OddDistinct => "odd-and-distinct partitions",
            Self::Splitting => "splitting partitions",
            Self::SpinRegular => "spin regular partitions",
            Self::DistinctGapsLe2 => "distinct partitions with pair gaps 1 or 2",
            Self::OddDistinctSmall => "odd partitions with distinct small parts",
        }
    }

    pub fn contains(self, p: &Partition) -> bool {
        match self {
            Self::Odd => p.is_odd(),
            Self::Distinct => p.is_distinct(),
            Self::OddDistinct => p.is_odd() && p.is_distinct(),
            Self::Splitting => is_splitting(p),
            Self::SpinRegular => is_spin_regular(p),
            Self::DistinctGapsLe2 => p.is_distinct() && pair_gaps_le2(p),
            Self::OddDistinctSmall => is_odd_distinct_small(p),
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown partition class {0:?} (expected one of O, D, OD, S, SR, Dle2, ODS)")]
pub struct UnknownClass(pub String);

impl FromStr for PartitionClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

impl Partition {
    pub fn is_member(&self, class: PartitionClass) -> bool {
        class.contains(self)
    }
}

/// Pair gaps `p_{2j−1} − p_{2j}` for every pair including the zero-padded one.
fn pair_gaps_le2(p: &Partition) -> bool {
    (0..p.len().div_ceil(2)).all(|j| {
        let gap = p.part(2 * j) - p.part(2 * j + 1);
        gap == 1 || gap == 2
    })
}

fn is_splitting(p: &Partition) -> bool {
    p.is_distinct()
        && pair_gaps_le2(p)
        && (0..p.len().div_ceil(2)).all(|j| (p.part(2 * j) + p.part(2 * j + 1)) % 4 != 2)
}

fn is_spin_regular(p: &Partition) -> bool {
    p.parts().windows(2).all(|w| {
        let gap = w[0].saturating_sub(w[1]);
        if w[0] % 2 == 0 && w[1] % 2 == 0 {
            gap >= 6
        } else {
            gap >= 4
        }
    })
}

fn is_odd_distinct_small(p: &Partition) -> bool {
    if !p.is_odd() {
        return false;
    }
    // an empty index range leaves only the oddness condition
    let bound = (p.len() + p.odd_run_count()).saturating_sub(2) as u64;
    p.multiplicities()
        .iter()
        .all(|&(value, mult)| value > bound || mult <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn splitting_examples() {
        assert!(p(&[7, 5, 3, 2]).is_member(PartitionClass::Splitting));
        assert!(p(&[23, 21, 17, 15, 11, 10, 9, 7, 5, 4, 1]).is_member(PartitionClass::Splitting));
        // padded pair (2, 0) has sum 2 mod 4
        assert!(!p(&[2]).is_member(PartitionClass::Splitting));
        assert!(p(&[2]).is_member(PartitionClass::DistinctGapsLe2));
        assert!(!p(&[3, 2, 2, 1]).is_member(PartitionClass::Splitting));
        assert!(!p(&[6, 4]).is_member(PartitionClass::Splitting));
    }

    #[test]
    fn empty_is_in_every_class() {
        for class in PartitionClass::ALL {
            assert!(Partition::empty().is_member(class), "{class}");
        }
    }

    #[test]
    fn spin_regular_gaps() {
        assert!(p(&[9, 5, 1]).is_member(PartitionClass::SpinRegular));
        assert!(!p(&[8, 4]).is_member(PartitionClass::SpinRegular));
        assert!(p(&[10, 4]).is_member(PartitionClass::SpinRegular));
        assert!(!p(&[5, 2]).is_member(PartitionClass::SpinRegular));
        assert!(!p(&[3, 3]).is_member(PartitionClass::SpinRegular));
    }

    #[test]
    fn ods_bound() {
        // ℓ = 2, no odd runs: bound 0, so repeats are allowed
        assert!(p(&[1, 1]).is_member(PartitionClass::OddDistinctSmall));
        // ℓ = 4, ℓ_r = 0: 1 may not repeat
        assert!(!p(&[5, 3, 1, 1]).is_member(PartitionClass::OddDistinctSmall));
        assert!(p(&[3, 3, 3, 1]).is_member(PartitionClass::OddDistinctSmall));
        assert!(!p(&[4]).is_member(PartitionClass::OddDistinctSmall));
    }

    #[test]
    fn parse_tags() {
        assert_eq!(
            "dle2".parse::<PartitionClass>().unwrap(),
            PartitionClass::DistinctGapsLe2
        );
        assert!("X".parse::<PartitionClass>().is_err());
    }
}
