pub mod blocks;
pub mod cli;
pub mod colored;
pub mod error;
pub mod grounded;
pub mod oracle;
pub mod params;
pub mod partitions;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
