use std::fmt;

use crate::composition::PairedComposition;

/// The rewrite applied in one [`TraceStep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `(a+1,a | 2b+1,2b−1) ↦ (2b+3,2b+1 | a−1,a−2)`, and the Sylvester form
    /// `(a,a−1 | b,c) ↦ (b+1,c+1 | a−1,a−2)`.
    PairInterchange,
    /// `(2b+1,2b−1 | a+1,a) ↦ (a+3,a+2 | 2b−1,2b−3)`.
    ReversePairInterchange,
    /// `(x,x−2 | g,h) ↦ (g+2,h+2 | x−2,x−4)` while inserting a pair.
    InsertionInterchange,
    /// A leading `(1,0)` or `(2,0)` pair absorbed into the pair after it.
    ExceptionalMerge,
    /// Forming the paired composition of an odd-and-distinct partition.
    Double,
    /// A new pair placed in front.
    Prepend,
    /// Adding 2 to each of the first `2a−1` parts.
    AddTwoPrefix,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Self::PairInterchange => "pair-interchange",
            Self::ReversePairInterchange => "reverse-pair-interchange",
            Self::InsertionInterchange => "insertion-interchange",
            Self::ExceptionalMerge => "exceptional-merge",
            Self::Double => "double",
            Self::Prepend => "prepend",
            Self::AddTwoPrefix => "add-two-prefix",
        }
    }

    /// Whether the rule leaves the entry sum unchanged.
    pub fn preserves_sum(self) -> bool {
        !matches!(self, Self::Prepend | Self::AddTwoPrefix)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One rewrite step of a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub before: PairedComposition,
    pub after: PairedComposition,
    pub rule: Rule,
    /// 0-based index of the (left) pair the rule was applied at.
    pub position: usize,
}

/// Collects steps when tracing is enabled; a no-op otherwise.
pub(crate) struct Recorder<'a> {
    steps: Option<&'a mut Vec<TraceStep>>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn off() -> Self {
        Self { steps: None }
    }

    pub(crate) fn on(steps: &'a mut Vec<TraceStep>) -> Self {
        Self { steps: Some(steps) }
    }

    pub(crate) fn snapshot(&self, c: &PairedComposition) -> Option<PairedComposition> {
        self.steps.as_ref().map(|_| c.clone())
    }

    pub(crate) fn push(
        &mut self,
        before: Option<PairedComposition>,
        rule: Rule,
        position: usize,
        after: &PairedComposition,
    ) {
        if let (Some(steps), Some(before)) = (self.steps.as_mut(), before) {
            steps.push(TraceStep {
                before,
                after: after.clone(),
                rule,
                position,
            });
        }
    }
}
