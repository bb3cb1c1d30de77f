use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{IndexSet, PartValue};

/// A finitely supported sequence of parts (an element of the set of generic
/// sequences). Trailing zeros are implicit and never stored.
///
/// Each overlined value occurs at most once, and an overlined `k~` sits
/// after every plain occurrence of `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct PartSeq {
    parts: Vec<PartValue>,
}

impl PartSeq {
    pub fn empty() -> Self {
        PartSeq::default()
    }

    pub fn new(mut parts: Vec<PartValue>) -> Result<Self> {
        while parts.last().is_some_and(|p| p.is_zero()) {
            parts.pop();
        }
        let mut seen_bar = HashSet::new();
        for (i, p) in parts.iter().enumerate() {
            if !p.is_overlined() {
                continue;
            }
            if !seen_bar.insert(p.size()) {
                return Err(Error::InvalidPartSeq(format!(
                    "overlined part {p} occurs more than once"
                )));
            }
            if let Some(j) = parts[i + 1..]
                .iter()
                .position(|q| !q.is_overlined() && q.size() == p.size())
            {
                return Err(Error::InvalidPartSeq(format!(
                    "overlined {p} at position {} precedes plain {} at position {}",
                    i + 1,
                    p.size(),
                    i + j + 2
                )));
            }
        }
        Ok(PartSeq { parts })
    }

    /// Parts from plain sizes (no overlines).
    pub fn from_sizes(sizes: &[u64]) -> Self {
        let parts = sizes.iter().map(|&s| PartValue::plain(s)).collect();
        PartSeq::new(parts).expect("plain sequences are always valid")
    }

    /// Part at 1-based position `i`; zero past the support.
    pub fn get(&self, i: usize) -> PartValue {
        assert!(i >= 1, "positions are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(PartValue::ZERO)
    }

    pub fn parts(&self) -> &[PartValue] {
        &self.parts
    }

    /// Length of the stored prefix (position of the last non-zero part).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part size, `M(lambda)`.
    pub fn max_size(&self) -> u64 {
        self.parts.iter().map(|p| p.size()).max().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.size()).sum()
    }

    pub fn s_weight(&self, s: &IndexSet) -> u64 {
        let mut total = 0;
        for k in 1.. {
            let Some(i) = s.nth(k) else { break };
            if i as usize > self.parts.len() {
                break;
            }
            total += self.get(i as usize).size();
        }
        total
    }

    pub fn contains(&self, v: PartValue) -> bool {
        self.parts.contains(&v)
    }

    pub fn is_non_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The conjugate: part `i` has size `#{j : lambda_j >= i~}` and is
    /// overlined exactly when `i~` is a part.
    pub fn conjugate(&self) -> OverPartition {
        let m = self.max_size();
        let mut counts = vec![0u64; m as usize + 2];
        let mut bars = vec![false; m as usize + 2];
        for p in &self.parts {
            counts[p.size() as usize] += 1;
            if p.is_overlined() {
                bars[p.size() as usize] = true;
            }
        }
        // counts[i] becomes #{j : size(lambda_j) >= i}
        for i in (1..=m as usize).rev() {
            counts[i] += counts[i + 1];
        }
        let parts = (1..=m as usize)
            .map(|i| PartValue::new(counts[i], bars[i]).expect("overlined column has a part"))
            .collect();
        OverPartition(PartSeq { parts })
    }
}

pub fn conjugate(lambda: &PartSeq) -> OverPartition {
    lambda.conjugate()
}

pub fn weight(lambda: &PartSeq) -> u64 {
    lambda.weight()
}

pub fn s_weight(lambda: &PartSeq, s: &IndexSet) -> u64 {
    lambda.s_weight(s)
}

impl fmt::Display for PartSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            fmt::Display::fmt(p, f)?;
        }
        f.write_str(")")
    }
}

impl FromStr for PartSeq {
    type Err = Error;

    /// Accepts `(4,4~,3)`, `4,4~,3`, `4 4~ 3` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<PartValue>>>()?;
        PartSeq::new(parts)
    }
}

/// A non-increasing [`PartSeq`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct OverPartition(PartSeq);

impl OverPartition {
    pub fn empty() -> Self {
        OverPartition::default()
    }

    pub fn new(parts: Vec<PartValue>) -> Result<Self> {
        PartSeq::new(parts)?.try_into()
    }

    pub fn from_sizes(sizes: &[u64]) -> Result<Self> {
        PartSeq::from_sizes(sizes).try_into()
    }

    pub fn as_seq(&self) -> &PartSeq {
        &self.0
    }

    pub fn into_seq(self) -> PartSeq {
        self.0
    }

    /// Builds without validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(parts: Vec<PartValue>) -> Self {
        debug_assert!(PartSeq::new(parts.clone()).is_ok_and(|p| p.is_non_increasing()));
        OverPartition(PartSeq { parts })
    }
}

impl TryFrom<PartSeq> for OverPartition {
    type Error = Error;

    fn try_from(seq: PartSeq) -> Result<Self> {
        if let Some(i) = seq.parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotOverPartition(format!(
                "{seq} increases at position {}",
                i + 1
            )));
        }
        Ok(OverPartition(seq))
    }
}

impl Deref for OverPartition {
    type Target = PartSeq;

    fn deref(&self) -> &PartSeq {
        &self.0
    }
}

impl fmt::Display for OverPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for OverPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<PartSeq>()?.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> PartSeq {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates_of_worked_example() {
        let expected = seq("(6~,5~,3~,2~)");
        assert_eq!(*seq("(4,4~,3~,2,2~,1~)").conjugate(), expected);
        assert_eq!(*seq("(2,4,4~,2~,3~,1~)").conjugate(), expected);
        // with a plain 3 the third column carries no mark
        assert_eq!(*seq("(2,4,4~,2~,3,1~)").conjugate(), seq("(6~,5~,3,2~)"));
        assert_eq!(*PartSeq::empty().conjugate(), PartSeq::empty());
    }

    #[test]
    fn weights() {
        assert_eq!(seq("(2,4,4~,2~,3,1~)").weight(), 16);
        assert_eq!(PartSeq::empty().weight(), 0);
        assert_eq!(seq("(5~)").weight(), 5);
    }

    #[test]
    fn s_weights() {
        let lambda = seq("(6,5,5~,4~,3,3,1~)");
        assert_eq!(lambda.s_weight(&IndexSet::odds()), 6 + 5 + 3 + 1);
        assert_eq!(lambda.s_weight(&IndexSet::all()), lambda.weight());
        let tail: IndexSet = "list:2,3".parse().unwrap();
        assert_eq!(seq("(3)").s_weight(&tail), 0);
    }

    #[test]
    fn invariants_are_checked() {
        assert!("(2~,2)".parse::<PartSeq>().is_err());
        assert!("(3~,1,3~)".parse::<PartSeq>().is_err());
        assert!("(2,4,4~,2~,3,1~)".parse::<PartSeq>().is_ok());
        assert!("(1,2)".parse::<OverPartition>().is_err());
        assert!("(2,2~,1)".parse::<OverPartition>().is_ok());
        assert_eq!(seq("(3,0,0)").len(), 1);
        assert_eq!(seq("(3,0,2)").get(2), PartValue::ZERO);
    }
}
