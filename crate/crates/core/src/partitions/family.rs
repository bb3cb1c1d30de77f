use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::PartSeq;

/// The sub-families of over-partitions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FamilyTag {
    /// All over-partitions.
    Pbar,
    /// Partitions (no overlined parts).
    P,
    /// Over-partitions whose positive parts are all overlined.
    Dbar,
    /// Over-partitions containing `i~` for every `0 < i~ <= lambda_1`.
    Fbar,
    /// Fewer than `m` plain occurrences of every size.
    PbarM(u64),
    /// Partitions with fewer than `m` occurrences of every size.
    PM(u64),
    /// `PbarM(m)` members with `lambda_i - lambda_{i+1} = [lambda_i overlined]`
    /// whenever `m` does not divide `i`.
    FbarM(u64),
}

impl FamilyTag {
    pub const BASIC: [FamilyTag; 4] = [FamilyTag::Pbar, FamilyTag::P, FamilyTag::Dbar, FamilyTag::Fbar];

    pub fn modulus(self) -> Option<u64> {
        match self {
            FamilyTag::PbarM(m) | FamilyTag::PM(m) | FamilyTag::FbarM(m) => Some(m),
            _ => None,
        }
    }

    /// Whether members may contain overlined parts.
    pub fn allows_overlines(self) -> bool {
        !matches!(self, FamilyTag::P | FamilyTag::PM(_))
    }

    /// Whether members may contain plain positive parts.
    pub fn allows_plain(self) -> bool {
        !matches!(self, FamilyTag::Dbar)
    }

    fn validate(self) -> Result<Self> {
        if self.modulus() == Some(0) {
            return Err(Error::InvalidParams("family modulus must be at least 1".into()));
        }
        Ok(self)
    }
}

pub fn is_member(lambda: &PartSeq, family: FamilyTag) -> bool {
    family.contains(lambda)
}

impl FamilyTag {
    pub fn contains(self, lambda: &PartSeq) -> bool {
        if !lambda.is_non_increasing() {
            return false;
        }
        let parts = lambda.parts();
        match self {
            FamilyTag::Pbar => true,
            FamilyTag::P => parts.iter().all(|p| !p.is_overlined()),
            FamilyTag::Dbar => parts.iter().all(|p| p.is_overlined()),
            FamilyTag::Fbar => {
                let bars: Vec<u64> = parts.iter().filter(|p| p.is_overlined()).map(|p| p.size()).collect();
                (1..=lambda.max_size()).all(|i| bars.contains(&i))
            }
            FamilyTag::PbarM(m) => plain_multiplicity_below(parts, m),
            FamilyTag::PM(m) => parts.iter().all(|p| !p.is_overlined()) && plain_multiplicity_below(parts, m),
            FamilyTag::FbarM(m) => {
                plain_multiplicity_below(parts, m)
                    && (1..=parts.len()).filter(|i| !(*i as u64).is_multiple_of(m)).all(|i| {
                        let (a, b) = (lambda.get(i), lambda.get(i + 1));
                        a.diff(b) == i64::from(a.is_overlined())
                    })
            }
        }
    }
}

fn plain_multiplicity_below(parts: &[crate::partitions::PartValue], m: u64) -> bool {
    parts
        .chunk_by(|a, b| a == b)
        .all(|run| run[0].is_overlined() || (run.len() as u64) < m)
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Pbar => f.write_str("Pbar"),
            FamilyTag::P => f.write_str("P"),
            FamilyTag::Dbar => f.write_str("Dbar"),
            FamilyTag::Fbar => f.write_str("Fbar"),
            FamilyTag::PbarM(m) => write!(f, "Pbar_m:{m}"),
            FamilyTag::PM(m) => write!(f, "P_m:{m}"),
            FamilyTag::FbarM(m) => write!(f, "Fbar_m:{m}"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let modulus = |rest: &str| {
            rest.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad family modulus in `{s}`")))
        };
        let tag = match s {
            "Pbar" => FamilyTag::Pbar,
            "P" => FamilyTag::P,
            "Dbar" => FamilyTag::Dbar,
            "Fbar" => FamilyTag::Fbar,
            _ => {
                if let Some(rest) = s.strip_prefix("Pbar_m:") {
                    FamilyTag::PbarM(modulus(rest)?)
                } else if let Some(rest) = s.strip_prefix("P_m:") {
                    FamilyTag::PM(modulus(rest)?)
                } else if let Some(rest) = s.strip_prefix("Fbar_m:") {
                    FamilyTag::FbarM(modulus(rest)?)
                } else {
                    return Err(Error::Parse(format!(
                        "unknown family `{s}` (expected Pbar, P, Dbar, Fbar, Pbar_m:<m>, P_m:<m> or Fbar_m:<m>)"
                    )));
                }
            }
        };
        tag.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> PartSeq {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let a = seq("(4,4~,3~,2,2~,1~)");
        assert!(is_member(&a, FamilyTag::Fbar));
        assert!(!is_member(&a, FamilyTag::Dbar));
        let b = seq("(4~,2~,1~)");
        assert!(is_member(&b, FamilyTag::Dbar));
        assert!(!is_member(&b, FamilyTag::Fbar));
        assert!(!is_member(&seq("(2,4,4~,2~,3,1~)"), FamilyTag::Pbar));
        assert!(is_member(&seq("(4,4,3,2,2,1)"), FamilyTag::P));
    }

    #[test]
    fn empty_is_everywhere() {
        let e = PartSeq::empty();
        for f in FamilyTag::BASIC {
            assert!(is_member(&e, f));
        }
        for m in 1..4 {
            assert!(is_member(&e, FamilyTag::PbarM(m)));
            assert!(is_member(&e, FamilyTag::PM(m)));
            assert!(is_member(&e, FamilyTag::FbarM(m)));
        }
    }

    #[test]
    fn mod_m_families() {
        assert!(is_member(&seq("(2,2,2~,1)"), FamilyTag::PbarM(3)));
        assert!(!is_member(&seq("(2,2,2,1)"), FamilyTag::PbarM(3)));
        assert!(!is_member(&seq("(2,2~)"), FamilyTag::PM(3)));
        // every index is divisible by 1, so Fbar_m:1 = Pbar_m:1 = Dbar
        assert!(is_member(&seq("(5~,2~)"), FamilyTag::FbarM(1)));
        // m = 2: lambda_1 - lambda_2 must be [lambda_1 overlined]
        assert!(is_member(&seq("(3~,2,1~)"), FamilyTag::FbarM(2)));
        assert!(!is_member(&seq("(3~,2,2~)"), FamilyTag::FbarM(2)));
        assert!(!is_member(&seq("(3,2)"), FamilyTag::FbarM(2)));
        assert!(!is_member(&seq("(2,2,1~)"), FamilyTag::FbarM(2)));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["Pbar", "P", "Dbar", "Fbar", "Pbar_m:3", "P_m:2", "Fbar_m:4"] {
            assert_eq!(s.parse::<FamilyTag>().unwrap().to_string(), s);
        }
        assert!("Pbar_m:0".parse::<FamilyTag>().is_err());
        assert!("Q".parse::<FamilyTag>().is_err());
    }
}
