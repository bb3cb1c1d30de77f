//! Colored parts relative to an index set `S`, the color sequence `C(lambda)`,
//! and the bijections `Psi_S` and `Phi_S`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{FamilyTag, IndexSet, ModMShape, OverPartition, PartSeq, PartValue};
use crate::series::{ColorIndex, Monomial, Var};

/// A part of a given size carrying a color.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ColoredPart {
    pub size: u64,
    pub color: ColorIndex,
}

impl ColoredPart {
    pub fn new(size: u64, color: ColorIndex) -> Result<Self> {
        if color.is_c0() && size != 0 {
            return Err(Error::InvalidColoredPart(format!("c0 only colors 0, got size {size}")));
        }
        Ok(ColoredPart { size, color })
    }

    /// The part colored by `c_v`, sized by `S`.
    pub fn from_index(v: PartValue, s: &IndexSet) -> Self {
        ColoredPart {
            size: s.floor(v),
            color: ColorIndex::of_part(v),
        }
    }

    /// Whether the color is legal for the size: `floor_S(j) = size`.
    pub fn is_valid_for(&self, s: &IndexSet) -> bool {
        if self.color.is_c0() {
            self.size == 0
        } else {
            s.floor_size(self.color.index()) == self.size
        }
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.size, self.color)
    }
}

impl FromStr for ColoredPart {
    type Err = Error;

    /// `size@c(i)`, `size@c(i~)` or `0@c0`.
    fn from_str(s: &str) -> Result<Self> {
        let (size, color) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("expected size@color, got `{s}`")))?;
        let size = size
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad size in `{s}`")))?;
        ColoredPart::new(size, color.parse()?)
    }
}

/// A colored sequence over an explicit index set. Trailing `0@c0` parts
/// are implicit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredSeq {
    parts: Vec<ColoredPart>,
    s: IndexSet,
}

impl ColoredSeq {
    /// Checks each color against its size and the color indices against
    /// the generic-sequence invariants.
    pub fn new(mut parts: Vec<ColoredPart>, s: IndexSet) -> Result<Self> {
        while parts.last().is_some_and(|p| p.color.is_c0()) {
            parts.pop();
        }
        for (i, p) in parts.iter().enumerate() {
            if !p.is_valid_for(&s) {
                return Err(Error::InvalidColoredPart(format!(
                    "part {} is {p}, but {} has size {} in {s}",
                    i + 1,
                    p.color,
                    s.floor_size(p.color.index())
                )));
            }
        }
        let seq = ColoredSeq { parts, s };
        PartSeq::new(seq.index_values())?;
        Ok(seq)
    }

    pub fn empty(s: IndexSet) -> Self {
        ColoredSeq { parts: Vec::new(), s }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.s
    }

    fn index_values(&self) -> Vec<PartValue> {
        self.parts.iter().map(|p| p.color.as_part()).collect()
    }

    /// The color indices read as a sequence of part values (`c0 -> 0`).
    pub fn index_seq(&self) -> PartSeq {
        PartSeq::new(self.index_values()).expect("checked at construction")
    }

    /// Sum of the part sizes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Product of the colors, `c0` excluded.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_vars(
            self.parts
                .iter()
                .filter(|p| !p.color.is_c0())
                .map(|p| Var::Color(p.color)),
        )
    }
}

impl fmt::Display for ColoredSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl ColoredSeq {
    /// Parses `(2@c(3),1@c(1~))` relative to `s`.
    pub fn parse_with(text: &str, s: IndexSet) -> Result<Self> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<ColoredPart>>>()?;
        ColoredSeq::new(parts, s)
    }
}

/// `C(lambda)`: the product of `c_{conj(lambda)_i}` over the positive
/// conjugate parts.
pub fn color_sequence(lambda: &PartSeq) -> Monomial {
    Monomial::from_vars(
        lambda
            .conjugate()
            .parts()
            .iter()
            .map(|&v| Var::Color(ColorIndex::of_part(v))),
    )
}

/// `Psi_S`: part `lambda_i` becomes `floor_S(lambda_i)` colored `c_{lambda_i}`.
pub fn psi_s(lambda: &OverPartition, s: &IndexSet) -> ColoredSeq {
    let parts = lambda.parts().iter().map(|&v| ColoredPart::from_index(v, s)).collect();
    ColoredSeq { parts, s: s.clone() }
}

/// `Phi_S = Psi_S o conjugation`. Its weight is the S-weight of `lambda`
/// and its monomial is `C(lambda)`.
pub fn phi_s(lambda: &OverPartition, s: &IndexSet) -> ColoredSeq {
    psi_s(&lambda.conjugate(), s)
}

/// Inverse of [`phi_s`]: read the color indices back and conjugate.
pub fn phi_s_inverse(mu: &ColoredSeq) -> Result<OverPartition> {
    let idx = mu.index_seq();
    if !idx.is_non_increasing() {
        return Err(Error::NotOverPartition(format!(
            "color indices of {mu} are not non-increasing"
        )));
    }
    Ok(idx.conjugate())
}

/// The basic colored families containing `mu`, in the order
/// `Pbar, P, Dbar, Fbar`.
pub fn colored_family_of(mu: &ColoredSeq) -> Vec<FamilyTag> {
    let idx = mu.index_seq();
    FamilyTag::BASIC.into_iter().filter(|f| f.contains(&idx)).collect()
}

/// The congruence table for periodic index sets: a part colored by
/// `c_j` (reduced mod `m`) has size `= 0 mod t` when `j < s_1`, a positive
/// size `= 0 mod t` when `j >= s_t`, and size `= i mod t` when
/// `s_i <= j < s_{i+1}`.
pub fn mod_m_color_check(mu: &ColoredSeq, shape: &ModMShape) -> bool {
    let s = IndexSet::mod_m(shape.clone());
    let t = shape.t();
    let firsts = shape.s();
    mu.parts().iter().all(|p| {
        if p.color.is_c0() {
            return p.size == 0;
        }
        if !p.is_valid_for(&s) {
            return false;
        }
        let r = p.color.reduce_mod(shape.m()).index();
        if r < firsts[0] {
            p.size % t == 0
        } else if r >= firsts[firsts.len() - 1] {
            p.size % t == 0 && p.size > 0
        } else {
            let i = firsts.partition_point(|&x| x <= r) as u64;
            p.size % t == i
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> OverPartition {
        s.parse().unwrap()
    }

    #[test]
    fn color_sequence_examples() {
        assert!(color_sequence(&PartSeq::empty()).is_one());
        assert_eq!(color_sequence(&PartSeq::from_sizes(&[1])).to_string(), "c(1)");
        let lambda: PartSeq = "(2,4,4~,2~,3~,1~)".parse().unwrap();
        assert_eq!(color_sequence(&lambda).to_string(), "c(2~)*c(3~)*c(5~)*c(6~)");
    }

    #[test]
    fn psi_and_phi_examples() {
        let odds = IndexSet::odds();
        assert_eq!(psi_s(&op("(3,1)"), &odds).to_string(), "(2@c(3),1@c(1))");
        assert_eq!(psi_s(&op("(2~)"), &odds).to_string(), "(1@c(2~))");
        let mu = phi_s(&op("(4,3,1)"), &odds);
        assert_eq!(mu.to_string(), "(2@c(3),1@c(2),1@c(2),1@c(1))");
        assert_eq!(mu.weight(), 5);
        assert_eq!(phi_s_inverse(&mu).unwrap(), op("(4,3,1)"));
        let mu = phi_s(&op("(2~,1)"), &odds);
        assert_eq!(mu.to_string(), "(1@c(2),1@c(1~))");
        assert_eq!(phi_s_inverse(&mu).unwrap(), op("(2~,1)"));
        assert_eq!(phi_s_inverse(&ColoredSeq::empty(odds)).unwrap(), OverPartition::empty());
    }

    #[test]
    fn validity() {
        let odds = IndexSet::odds();
        assert!(ColoredSeq::parse_with("(2@c(3),1@c(2))", odds.clone()).is_ok());
        assert!(matches!(
            ColoredSeq::parse_with("(1@c(3))", odds.clone()),
            Err(Error::InvalidColoredPart(_))
        ));
        assert!("1@c0".parse::<ColoredPart>().is_err());
        let mu = ColoredSeq::parse_with("(1@c(1),0@c0,0@c0)", odds).unwrap();
        assert_eq!(mu.parts().len(), 1);
    }

    #[test]
    fn families_of_images() {
        let odds = IndexSet::odds();
        let f = phi_s(&op("(4,4~,3~,2,2~,1~)"), &odds);
        assert!(colored_family_of(&f).contains(&FamilyTag::Dbar));
        let empty = ColoredSeq::empty(odds);
        assert_eq!(colored_family_of(&empty), FamilyTag::BASIC.to_vec());
    }

    #[test]
    fn mod_m_table() {
        // m = 3, t = 1, s = (2): S = {2, 5, 8, ...}
        let shape = ModMShape::new(3, vec![2]).unwrap();
        let s = IndexSet::mod_m(shape.clone());
        for text in ["(4,3~,1)", "(6,6~,2,1~)", "()"] {
            assert!(mod_m_color_check(&phi_s(&op(text), &s), &shape), "{text}");
        }
        // c_1 has size 0, so a part 1@c(1) is mis-sized
        let bad = ColoredSeq {
            parts: vec![ColoredPart {
                size: 1,
                color: ColorIndex::plain(1),
            }],
            s: s.clone(),
        };
        assert!(!mod_m_color_check(&bad, &shape));
    }
}
