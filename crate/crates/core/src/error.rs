use thiserror::Error;

use crate::{PairedComposition, Partition, PartitionClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive integers")]
    NonPositivePart,

    #[error("{partition} is not in {class} ({})", class.description())]
    NotInClass {
        class: PartitionClass,
        partition: Partition,
    },

    #[error("pairs {index} and {next} of {composition} do not match the {rule} pattern", next = index + 1)]
    PatternMismatch {
        rule: &'static str,
        composition: PairedComposition,
        index: usize,
    },

    #[error("cannot insert the pair {part}^2 into {gamma}: {reason}")]
    InsertionPrecondition {
        gamma: Partition,
        part: u64,
        reason: &'static str,
    },

    #[error("{0} does not read off a paired composition of an odd-and-distinct partition")]
    NotAPairing(PairedComposition),

    #[error("no step-by-step trace is defined for {0}")]
    NoTrace(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
