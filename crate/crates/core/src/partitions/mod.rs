//! Parts, generic sequences, over-partitions and their statistics.

mod family;
mod index_set;
mod part;
mod seq;
mod stats;

pub use family::{is_member, FamilyTag};
pub use index_set::{s_floor, IndexSet, ModMShape};
pub use part::{cmp, diff, PartValue};
pub use seq::{conjugate, s_weight, weight, OverPartition, PartSeq};
pub use stats::{rho_stats, theta_stats, RhoStats, ThetaStats};
