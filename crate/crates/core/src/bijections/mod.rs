//! Bijections between odd and distinct partitions and their inverses.

use std::fmt;
use std::str::FromStr;

use crate::composition::PairedComposition;
use crate::error::{Error, Result};
use crate::{Partition, PartitionClass};

pub mod bressoud;
pub mod extension;
pub mod glaisher;
pub mod sylvester;
pub mod trace;

pub use bressoud::{
    bressoud_forward, bressoud_forward_original, bressoud_inverse, pair_interchange, pairing,
    read_pairing, reverse_pair_interchange,
};
pub use extension::{
    check_insertable, extend_forward, extend_inverse, extend_inverse_stages, extend_stages,
    pair_insert, pair_insert_stepwise, ExtensionStages, InverseStages,
};
pub use glaisher::{glaisher_forward, glaisher_inverse};
pub use sylvester::{
    shifted_layout, sylvester_anchor, sylvester_forward, sylvester_inverse,
    sylvester_inverse_from_rows, sylvester_pairwise, SylvesterAnchor,
};
pub use trace::{Rule, TraceStep};

pub(crate) fn require(p: &Partition, class: PartitionClass) -> Result<()> {
    if p.is_member(class) {
        Ok(())
    } else {
        Err(Error::NotInClass {
            class,
            partition: p.clone(),
        })
    }
}

/// The four maps, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Glaisher,
    Sylvester,
    Bressoud,
    /// The extension of Bressoud's map to all odd partitions.
    New,
}

impl Bijection {
    pub const ALL: [Bijection; 4] = [Self::Glaisher, Self::Sylvester, Self::Bressoud, Self::New];

    pub fn name(self) -> &'static str {
        match self {
            Self::Glaisher => "glaisher",
            Self::Sylvester => "sylvester",
            Self::Bressoud => "bressoud",
            Self::New => "new",
        }
    }

    pub fn domain(self) -> PartitionClass {
        match self {
            Self::Bressoud => PartitionClass::OddDistinct,
            _ => PartitionClass::Odd,
        }
    }

    pub fn codomain(self) -> PartitionClass {
        match self {
            Self::Bressoud => PartitionClass::Splitting,
            _ => PartitionClass::Distinct,
        }
    }

    pub fn forward(self, lambda: &Partition) -> Result<Partition> {
        match self {
            Self::Glaisher => glaisher_forward(lambda),
            Self::Sylvester => sylvester_forward(lambda),
            Self::Bressoud => bressoud_forward(lambda),
            Self::New => extend_forward(lambda),
        }
    }

    pub fn inverse(self, mu: &Partition) -> Result<Partition> {
        match self {
            Self::Glaisher => glaisher_inverse(mu),
            Self::Sylvester => sylvester_inverse(mu),
            Self::Bressoud => bressoud_inverse(mu),
            Self::New => extend_inverse(mu),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown bijection {0:?} (expected glaisher, sylvester, bressoud or new)")]
pub struct UnknownBijection(pub String);

impl FromStr for Bijection {
    type Err = UnknownBijection;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownBijection(s.to_string()))
    }
}

/// The rewrite steps of a derivation. The last step's `after` is the image
/// (with a trailing 0 when its length is odd).
///
/// Sylvester traces the pairwise construction, Bressoud traces the pairing
/// followed by pair interchanges, and the new map prepends the pairs of the
/// distinct part's pairing, sorts them by pair interchanges, then records
/// each pair insertion. Glaisher's map has no pair-based derivation.
pub fn trace(bijection: Bijection, lambda: &Partition) -> Result<Vec<TraceStep>> {
    let mut steps = Vec::new();
    match bijection {
        Bijection::Glaisher => return Err(Error::NoTrace("glaisher")),
        Bijection::Sylvester => {
            sylvester::sylvester_pairwise_traced(lambda, trace::Recorder::on(&mut steps))?;
        }
        Bijection::Bressoud => {
            bressoud::bressoud_forward_traced(lambda, trace::Recorder::on(&mut steps))?;
        }
        Bijection::New => {
            extension::extend_forward_traced(lambda, &mut steps)?;
        }
    }
    Ok(steps)
}

/// Reverse pair interchanges of Bressoud's inverse. Only Bressoud's map has
/// a step-by-step inverse.
pub fn trace_inverse(bijection: Bijection, mu: &Partition) -> Result<Vec<TraceStep>> {
    if bijection != Bijection::Bressoud {
        return Err(Error::NoTrace("this inverse"));
    }
    let mut steps = Vec::new();
    bressoud::bressoud_inverse_traced(mu, trace::Recorder::on(&mut steps))?;
    Ok(steps)
}

/// The composition a trace starts from.
pub fn trace_start(steps: &[TraceStep]) -> Option<&PairedComposition> {
    steps.first().map(|s| &s.before)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bressoud_trace_has_four_interchanges() {
        let steps = trace(Bijection::Bressoud, &p(&[29, 21, 19, 17, 13, 11, 7, 5, 1])).unwrap();
        assert_eq!(steps[0].rule, Rule::Double);
        assert_eq!(
            steps[0].after.to_string(),
            "15,14 | 21,19 | 9,8 | 13,11 | 7,5 | 1,0"
        );
        let interchanges: Vec<usize> = steps[1..].iter().map(|s| s.position).collect();
        assert!(steps[1..].iter().all(|s| s.rule == Rule::PairInterchange));
        assert_eq!(interchanges, vec![0, 2, 1, 3]);
        assert_eq!(
            steps.last().unwrap().after.to_string(),
            "23,21 | 17,15 | 11,10 | 9,7 | 5,4 | 1,0"
        );
    }

    #[test]
    fn sylvester_trace_ends_at_image() {
        let steps = trace(Bijection::Sylvester, &p(&[13, 13, 11, 5, 5, 3, 1, 1])).unwrap();
        assert_eq!(steps.iter().filter(|s| s.rule == Rule::Prepend).count(), 8);
        assert_eq!(
            steps.last().unwrap().after.to_string(),
            "14,11 | 10,8 | 6,3"
        );
    }

    #[test]
    fn new_trace_of_one_is_a_single_prepend() {
        let steps = trace(Bijection::New, &p(&[1])).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].rule, Rule::Prepend);
        assert_eq!(steps[0].after.entries(), &[1, 0]);
    }

    #[test]
    fn traces_preserve_sums() {
        let lam =
            Partition::from_multiplicities(&[(13, 4), (11, 2), (9, 1), (5, 5), (3, 3), (1, 4)])
                .unwrap();
        let steps = trace(Bijection::New, &lam).unwrap();
        for s in &steps {
            if s.rule.preserves_sum() {
                assert_eq!(s.before.sum(), s.after.sum(), "{:?}", s);
            }
        }
        let last = &steps.last().unwrap().after;
        assert_eq!(
            last.to_partition().unwrap(),
            p(&[28, 22, 20, 16, 13, 7, 6, 4, 3, 2])
        );
    }

    #[test]
    fn glaisher_has_no_trace() {
        assert_eq!(
            trace(Bijection::Glaisher, &p(&[1])),
            Err(Error::NoTrace("glaisher"))
        );
    }
}
