//! Integer partitions and the bijections between partitions into odd parts
//! and partitions into distinct parts: Glaisher, Sylvester, Bressoud and an
//! extension of Bressoud's map to all odd partitions. Includes exhaustive
//! enumeration, class counting, a verification oracle and diagram rendering.

pub mod bijections;
pub mod class;
pub mod composition;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod partition;
pub mod stats;
pub mod verify;

pub use bijections::{trace, trace_inverse, Bijection, Rule, TraceStep};
pub use class::{PartitionClass, UnknownClass};
pub use composition::PairedComposition;
pub use error::{Error, Result};
pub use partition::Partition;
pub use stats::{PartitionStats, Run};
