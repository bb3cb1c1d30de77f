use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A part: a non-negative integer, or an overlined positive integer.
///
/// Parts are totally ordered by `0 < 1~ < 1 < 2~ < 2 < ...`: sizes compare
/// first, and at equal size the overlined part is the smaller one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct PartValue {
    size: u64,
    overlined: bool,
}

impl PartValue {
    pub const ZERO: PartValue = PartValue {
        size: 0,
        overlined: false,
    };

    pub fn new(size: u64, overlined: bool) -> Result<Self> {
        if overlined && size == 0 {
            return Err(Error::InvalidPartSeq("zero cannot be overlined".into()));
        }
        Ok(PartValue { size, overlined })
    }

    pub const fn plain(size: u64) -> Self {
        PartValue { size, overlined: false }
    }

    /// Overlined `size`. Panics when `size == 0`.
    pub fn bar(size: u64) -> Self {
        assert!(size >= 1, "zero cannot be overlined");
        PartValue { size, overlined: true }
    }

    pub fn size(self) -> u64 {
        self.size
    }

    pub fn is_overlined(self) -> bool {
        self.overlined
    }

    pub fn is_zero(self) -> bool {
        self.size == 0
    }

    /// Size difference `a - b`; overlines are ignored, so `diff(3, 3~) == 0`.
    pub fn diff(self, other: PartValue) -> i64 {
        self.size as i64 - other.size as i64
    }

    /// The predecessor in the part order (`2 -> 2~ -> 1 -> 1~ -> 0`).
    pub fn pred(self) -> Option<PartValue> {
        match (self.size, self.overlined) {
            (0, _) => None,
            (s, false) => Some(PartValue::bar(s)),
            (s, true) => Some(PartValue::plain(s - 1)),
        }
    }

    /// Sort key realising the total order: `2 * size - overlined`.
    fn rank(self) -> u64 {
        2 * self.size - u64::from(self.overlined)
    }
}

pub fn cmp(a: PartValue, b: PartValue) -> Ordering {
    a.cmp(&b)
}

pub fn diff(a: PartValue, b: PartValue) -> i64 {
    a.diff(b)
}

impl Ord for PartValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for PartValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Machine form is `k` or `k~`; the alternate flag (`{:#}`) renders a
/// combining overline instead.
impl fmt::Display for PartValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.overlined, f.alternate()) {
            (false, _) => write!(f, "{}", self.size),
            (true, false) => write!(f, "{}~", self.size),
            (true, true) => {
                for ch in self.size.to_string().chars() {
                    write!(f, "{ch}\u{0305}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for PartValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, overlined) = match s.strip_suffix('~') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let size = digits
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad part `{s}`")))?;
        PartValue::new(size, overlined)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_chain() {
        let chain = [
            PartValue::ZERO,
            PartValue::bar(1),
            PartValue::plain(1),
            PartValue::bar(2),
            PartValue::plain(2),
        ];
        for w in chain.windows(2) {
            assert_eq!(cmp(w[0], w[1]), Ordering::Less);
        }
        assert_eq!(cmp(PartValue::plain(3), PartValue::plain(3)), Ordering::Equal);
    }

    #[test]
    fn size_difference_ignores_overline() {
        assert_eq!(diff(PartValue::plain(3), PartValue::bar(3)), 0);
        assert_eq!(diff(PartValue::bar(5), PartValue::plain(2)), 3);
        assert_eq!(diff(PartValue::ZERO, PartValue::plain(4)), -4);
        // 3 > 3~ although their difference is zero
        assert!(PartValue::plain(3) > PartValue::bar(3));
    }

    #[test]
    fn zero_is_never_overlined() {
        assert!(PartValue::new(0, true).is_err());
        assert!("0~".parse::<PartValue>().is_err());
    }

    #[test]
    fn text_forms() {
        let v: PartValue = "12~".parse().unwrap();
        assert_eq!(v, PartValue::bar(12));
        assert_eq!(v.to_string(), "12~");
        assert_eq!(format!("{:#}", PartValue::bar(4)), "4\u{0305}");
        assert_eq!(PartValue::bar(2).pred(), Some(PartValue::plain(1)));
    }
}
