use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::PartValue;

/// A color `c_i` or `c_i~`; index 0 is the sentinel `c_0`.
///
/// Colors sort by `(index, overlined)`, so `c_1 < c_1~ < c_2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ColorIndex {
    index: u64,
    overlined: bool,
}

impl ColorIndex {
    pub const C0: ColorIndex = ColorIndex {
        index: 0,
        overlined: false,
    };

    pub fn new(index: u64, overlined: bool) -> Result<Self> {
        if overlined && index == 0 {
            return Err(Error::InvalidColoredPart("c_0 has no overlined twin".into()));
        }
        Ok(ColorIndex { index, overlined })
    }

    pub const fn plain(index: u64) -> Self {
        ColorIndex {
            index,
            overlined: false,
        }
    }

    /// `c_i~`. Panics when `index == 0`.
    pub fn bar(index: u64) -> Self {
        assert!(index >= 1, "c_0 has no overlined twin");
        ColorIndex { index, overlined: true }
    }

    /// The color indexed by a part value (`0 -> c_0`, `k -> c_k`, `k~ -> c_k~`).
    pub fn of_part(v: PartValue) -> Self {
        ColorIndex {
            index: v.size(),
            overlined: v.is_overlined(),
        }
    }

    /// The part value carried as this color's index.
    pub fn as_part(self) -> PartValue {
        PartValue::new(self.index, self.overlined).expect("overlined colors have positive index")
    }

    pub fn index(self) -> u64 {
        self.index
    }

    pub fn is_overlined(self) -> bool {
        self.overlined
    }

    pub fn is_c0(self) -> bool {
        self.index == 0
    }

    /// Periodic identification `c_{i+jm} = c_i` onto indices `1..=m`;
    /// `c_0` is left alone.
    pub fn reduce_mod(self, m: u64) -> Self {
        if self.index == 0 {
            return self;
        }
        ColorIndex {
            index: (self.index - 1) % m + 1,
            overlined: self.overlined,
        }
    }
}

impl fmt::Display for ColorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.index, self.overlined) {
            (0, _) => f.write_str("c0"),
            (i, false) => write!(f, "c({i})"),
            (i, true) => write!(f, "c({i}~)"),
        }
    }
}

impl FromStr for ColorIndex {
    type Err = Error;

    /// `c0`, `c(3)`, `c(3~)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "c0" {
            return Ok(ColorIndex::C0);
        }
        let inner = s
            .strip_prefix("c(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad color `{s}`")))?;
        let v: PartValue = inner.parse()?;
        Ok(ColorIndex::of_part(v))
    }
}

/// A polynomial variable: a color, or a named symbol such as `x`, `y1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    Color(ColorIndex),
    /// `Sym(name, 0)` prints as `x`, `Sym(name, i)` as `x<i>`.
    Sym(char, u32),
}

impl Var {
    pub fn sym(name: char) -> Self {
        Var::Sym(name, 0)
    }
}

impl From<ColorIndex> for Var {
    fn from(c: ColorIndex) -> Self {
        Var::Color(c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Color(c) => write!(f, "{c}"),
            Var::Sym(n, 0) => write!(f, "{n}"),
            Var::Sym(n, i) => write!(f, "{n}{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('c') && (s == "c0" || s.starts_with("c(")) {
            return s.parse().map(Var::Color);
        }
        let mut chars = s.chars();
        match chars.next() {
            Some(n) if n.is_ascii_lowercase() && n != 'c' && n != 'q' => {
                let rest = chars.as_str();
                if rest.is_empty() {
                    Ok(Var::Sym(n, 0))
                } else {
                    let i = rest
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad symbol `{s}`")))?;
                    Ok(Var::Sym(n, i))
                }
            }
            _ => Err(Error::Parse(format!("bad variable `{s}`"))),
        }
    }
}

/// A product of variables with positive exponents, kept sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: impl Into<Var>) -> Self {
        Monomial(vec![(v.into(), 1)])
    }

    /// Product of the given variables (with repetition).
    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        let mut vs: Vec<Var> = vars.into_iter().collect();
        vs.sort_unstable();
        let mut out: Vec<(Var, u32)> = Vec::new();
        for v in vs {
            match out.last_mut() {
                Some((w, e)) if *w == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        Monomial(out)
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in powers {
            if e > 0 {
                m = m.mul(&Monomial(vec![(v, e)]));
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree over all variables.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, k)| (*v, k * e)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match e {
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Inverse of `Display`: `1`, `x`, `c(1)^2*c(3~)*y`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut powers = Vec::new();
        for factor in s.split('*') {
            let (base, exp) = match factor.rsplit_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            powers.push((base.parse::<Var>()?, exp));
        }
        Ok(Monomial::from_powers(powers))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_order_and_text() {
        assert!(ColorIndex::plain(1) < ColorIndex::bar(1));
        assert!(ColorIndex::bar(1) < ColorIndex::plain(2));
        assert!(ColorIndex::C0 < ColorIndex::plain(1));
        for s in ["c0", "c(3)", "c(12~)"] {
            assert_eq!(s.parse::<ColorIndex>().unwrap().to_string(), s);
        }
        assert!("c(0~)".parse::<ColorIndex>().is_err());
        assert_eq!(ColorIndex::bar(7).reduce_mod(3), ColorIndex::bar(1));
        assert_eq!(ColorIndex::plain(6).reduce_mod(3), ColorIndex::plain(3));
    }

    #[test]
    fn monomial_products() {
        let a = Monomial::from_vars([Var::Color(ColorIndex::plain(3)), Var::sym('x')]);
        let b = Monomial::var(ColorIndex::plain(3));
        let ab = a.mul(&b);
        assert_eq!(ab.to_string(), "c(3)^2*x");
        assert_eq!(ab.degree(), 3);
        assert_eq!(ab, "c(3)^2*x".parse().unwrap());
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!("y2*c(1~)".parse::<Monomial>().unwrap().to_string(), "c(1~)*y2");
    }
}
