//! The canonical partition value and its elementary operations.

use std::fmt;

use crate::composition::PairedComposition;
use crate::error::{Error, Result};

/// An integer partition: a non-increasing sequence of positive parts.
///
/// Values are always stored in canonical form, so equality is multiset
/// equality of the parts. The empty partition is the unique partition of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Builds a partition from `(part, multiplicity)` pairs.
    pub fn from_multiplicities(pairs: &[(u64, usize)]) -> Result<Self> {
        let mut parts = Vec::with_capacity(pairs.iter().map(|&(_, m)| m).sum());
        for &(part, mult) in pairs {
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Caller guarantees `parts` is non-increasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    /// Non-increasing entries with trailing zeros allowed; zeros are dropped.
    /// Returns `None` if the entries are not non-increasing.
    pub(crate) fn from_padded(mut entries: Vec<u64>) -> Option<Self> {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        if entries.windows(2).all(|w| w[0] >= w[1]) && !entries.contains(&0) {
            Some(Self { parts: entries })
        } else {
            None
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u64 {
        self.part(0)
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The transpose: part `i` counts the parts that are at least `i`.
    pub fn conjugate(&self) -> Self {
        let mut conj = vec![0u64; self.largest() as usize];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self::from_sorted(conj)
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u64) -> usize {
        // parts are sorted descending, so the equal block is contiguous
        let start = self.parts.partition_point(|&p| p > value);
        let end = self.parts.partition_point(|&p| p >= value);
        end - start
    }

    /// Distinct part values with their multiplicities, largest first.
    pub fn multiplicities(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// λ_1 − λ_2 + λ_3 − …
    pub fn alternating_sum(&self) -> u64 {
        let mut total = 0u64;
        for pair in self.parts.chunks(2) {
            total += pair[0] - pair.get(1).copied().unwrap_or(0);
        }
        total
    }

    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Number of distinct values occurring with odd multiplicity.
    pub fn odd_multiplicity_count(&self) -> usize {
        self.multiplicities()
            .iter()
            .filter(|(_, m)| m % 2 == 1)
            .count()
    }

    /// Disjoint union of the parts of `self` and `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Self::from_sorted(parts)
    }

    /// Every part repeated twice.
    pub fn square(&self) -> Self {
        Self::from_sorted(self.parts.iter().flat_map(|&p| [p, p]).collect())
    }

    /// Every part multiplied by `factor`, which must be positive.
    pub fn scale(&self, factor: u64) -> Self {
        assert!(factor > 0, "scale factor must be positive");
        Self::from_sorted(self.parts.iter().map(|&p| p * factor).collect())
    }

    /// Writes `self = α² ∘ β` with `β` distinct.
    ///
    /// `β` holds one copy of each value with odd multiplicity and `α` holds
    /// `⌊m/2⌋` copies of each value of multiplicity `m`.
    pub fn split_square_free(&self) -> (Self, Self) {
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for (value, mult) in self.multiplicities() {
            alpha.extend(std::iter::repeat_n(value, mult / 2));
            if mult % 2 == 1 {
                beta.push(value);
            }
        }
        (Self::from_sorted(alpha), Self::from_sorted(beta))
    }

    /// Replaces each odd part `p` by `((p+1)/2, (p−1)/2)` and each even part
    /// by `(p/2+1, p/2−1)`.
    pub fn double(&self) -> PairedComposition {
        let mut entries = Vec::with_capacity(2 * self.len());
        for &p in &self.parts {
            if p % 2 == 1 {
                entries.extend([p.div_ceil(2), (p - 1) / 2]);
            } else {
                entries.extend([p / 2 + 1, p / 2 - 1]);
            }
        }
        PairedComposition::from_entries(entries)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Self::new(parts)
    }
}

impl<const N: usize> TryFrom<[u64; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [u64; N]) -> Result<Self> {
        Self::new(parts.to_vec())
    }
}

/// Multiset notation, largest part first: `13^2,11,5^2,3,1^2`.
/// The empty partition prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (i, (value, mult)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if mult == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{mult}")?;
            }
        }
        Ok(())
    }
}
