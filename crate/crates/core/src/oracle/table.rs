use num_bigint::BigInt;

use crate::series::{Caps, Monomial, Series};

/// Counts of enumerated objects per `(weight, monomial)`, truncated at the
/// same caps as the series they are compared with.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    series: Series,
}

impl CountTable {
    pub fn new(caps: Caps) -> Self {
        CountTable {
            series: Series::zero(caps),
        }
    }

    pub fn caps(&self) -> Caps {
        self.series.caps()
    }

    /// Records one object; anything beyond the caps is ignored.
    pub fn add(&mut self, weight: u64, m: Monomial) {
        if weight <= self.caps().q as u64 {
            self.series.add_at(weight as u32, m, BigInt::from(1));
        }
    }

    pub fn as_series(&self) -> &Series {
        &self.series
    }

    pub fn into_series(self) -> Series {
        self.series
    }

    pub fn canonical_lines(&self) -> Vec<String> {
        self.series.canonical_lines()
    }

    /// Number of objects per weight.
    pub fn counts(&self) -> Vec<BigInt> {
        self.series.counts()
    }
}
