//! Brute-force enumerators producing the combinatorial side of each
//! identity, independently of the series builders.

mod blocks;
mod lhs;
mod naive;
mod over;
mod plane;
mod table;

pub use blocks::{block_table, BlockEnum};
pub use lhs::{over_table, theta_assignment, Statistic, ThetaZ};
pub use naive::{all_over_partitions, all_part_seqs};
pub use over::{DegreePrune, OverEnum};
pub use plane::{enum_plane_partitions, PlanePartition, MAX_PLANE_WEIGHT};
pub use table::CountTable;
