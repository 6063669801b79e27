//! Exhaustive partition generation and class counting.

use std::collections::BTreeMap;

use crate::{Partition, PartitionClass};

/// Streams the partitions of `n` in reverse-lexicographic order, starting
/// from `(n)` and ending at `(1^n)`. `n = 0` yields the empty partition once.
pub fn partitions_of(n: u64) -> Partitions {
    Partitions {
        current: if n == 0 {
            Some(Vec::new())
        } else {
            Some(vec![n])
        },
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_sorted(parts.clone());
        self.current = successor(parts);
        Some(out)
    }
}

/// Decrements the last part above 1 and refills the tail greedily with
/// parts no larger than it.
fn successor(mut parts: Vec<u64>) -> Option<Vec<u64>> {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    let k = parts.len().checked_sub(ones + 1)?;
    let v = parts[k] - 1;
    let mut rest = ones as u64 + 1;
    parts.truncate(k);
    parts.push(v);
    while rest > 0 {
        let next = rest.min(v);
        parts.push(next);
        rest -= next;
    }
    Some(parts)
}

pub fn class_members(n: u64, class: PartitionClass) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(move |p| p.is_member(class))
}

/// `p(0..=max_n)` by Euler's pentagonal recurrence
/// `p(n) = Σ_{k≥1} (−1)^{k+1} (p(n − k(3k−1)/2) + p(n − k(3k+1)/2))`.
pub fn partition_counts(max_n: usize) -> Vec<u64> {
    let mut p = vec![0i64; max_n + 1];
    p[0] = 1;
    for n in 1..=max_n {
        let mut total = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Class sizes at a fixed weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCountRow {
    pub n: u64,
    pub counts: BTreeMap<PartitionClass, u64>,
}

impl ClassCountRow {
    pub fn count(&self, class: PartitionClass) -> Option<u64> {
        self.counts.get(&class).copied()
    }

    /// The equalities `O = D`, `OD = S` and `SR = Dle2 = ODS` that fail,
    /// among those whose classes were counted.
    pub fn violations(&self) -> Vec<String> {
        use PartitionClass::*;
        let groups: [&[PartitionClass]; 3] = [
            &[Odd, Distinct],
            &[OddDistinct, Splitting],
            &[SpinRegular, DistinctGapsLe2, OddDistinctSmall],
        ];
        let mut out = Vec::new();
        for group in groups {
            let present: Vec<(PartitionClass, u64)> = group
                .iter()
                .filter_map(|&c| self.count(c).map(|v| (c, v)))
                .collect();
            if present.windows(2).any(|w| w[0].1 != w[1].1) {
                let desc: Vec<String> = present.iter().map(|(c, v)| format!("{c}={v}")).collect();
                out.push(format!("n={}: {}", self.n, desc.join(" != ")));
            }
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().is_empty()
    }
}

pub fn count_row(n: u64, classes: &[PartitionClass]) -> ClassCountRow {
    let mut counts: BTreeMap<PartitionClass, u64> = classes.iter().map(|&c| (c, 0)).collect();
    for p in partitions_of(n) {
        for (&class, count) in counts.iter_mut() {
            if p.is_member(class) {
                *count += 1;
            }
        }
    }
    ClassCountRow { n, counts }
}

/// One row per `n = 0..=max_n`, counting every class.
pub fn counting_table(max_n: u64) -> Vec<ClassCountRow> {
    counting_table_for(max_n, &PartitionClass::ALL)
}

pub fn counting_table_for(max_n: u64, classes: &[PartitionClass]) -> Vec<ClassCountRow> {
    (0..=max_n).map(|n| count_row(n, classes)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        assert_eq!(
            partitions_of(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        let four: Vec<Vec<u64>> = partitions_of(4).map(Partition::into_parts).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(30).count(), 5604);
    }

    #[test]
    fn pentagonal_values() {
        let p = partition_counts(60);
        assert_eq!(&p[..8], &[1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p[30], 5604);
        assert_eq!(p[60], 966467);
    }

    #[test]
    fn zero_row_is_all_ones() {
        let row = count_row(0, &PartitionClass::ALL);
        assert!(row.counts.values().all(|&c| c == 1));
    }

    #[test]
    fn class_member_examples() {
        let s17: Vec<Partition> = class_members(17, PartitionClass::Splitting).collect();
        assert!(s17.contains(&Partition::new(vec![7, 5, 3, 2]).unwrap()));
        let o1: Vec<Partition> = class_members(1, PartitionClass::Odd).collect();
        let d1: Vec<Partition> = class_members(1, PartitionClass::Distinct).collect();
        assert_eq!(o1, d1);
        assert_eq!(
            class_members(9, PartitionClass::OddDistinct).count(),
            class_members(9, PartitionClass::Splitting).count()
        );
    }

    #[test]
    fn violations_are_reported() {
        let mut row = count_row(5, &PartitionClass::ALL);
        assert!(row.is_consistent());
        row.counts.insert(PartitionClass::Odd, 99);
        assert_eq!(row.violations().len(), 1);
    }
}
