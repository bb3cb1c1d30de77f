use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::{ColorIndex, Monomial, Poly, Var};

/// Image of a single color under a specialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Subst {
    Keep,
    One,
    Zero,
    To(Var),
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subst::Keep => f.write_str("keep"),
            Subst::One => f.write_str("1"),
            Subst::Zero => f.write_str("0"),
            Subst::To(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Subst {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "keep" => Ok(Subst::Keep),
            "1" => Ok(Subst::One),
            "0" => Ok(Subst::Zero),
            other => other.parse().map(Subst::To),
        }
    }
}

/// A specialization of colors, applied identically to both sides of an
/// identity. Rules for a specific color override the class rules
/// (`all`, `plain`, `bar`); symbols are never substituted.
///
/// Text form: comma- or semicolon-separated `key=value` pairs, for example
/// `all=1`, `bar=0,c(3)=keep` or `c(1)=x,c(2~)=c(1~)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColorAssignment {
    plain: Subst,
    bar: Subst,
    specific: BTreeMap<ColorIndex, Subst>,
}

impl Default for ColorAssignment {
    fn default() -> Self {
        ColorAssignment::identity()
    }
}

impl ColorAssignment {
    pub fn identity() -> Self {
        ColorAssignment {
            plain: Subst::Keep,
            bar: Subst::Keep,
            specific: BTreeMap::new(),
        }
    }

    /// Every color set to 1.
    pub fn all_one() -> Self {
        ColorAssignment {
            plain: Subst::One,
            bar: Subst::One,
            specific: BTreeMap::new(),
        }
    }

    pub fn with_plain(mut self, s: Subst) -> Self {
        self.plain = s;
        self
    }

    pub fn with_bar(mut self, s: Subst) -> Self {
        self.bar = s;
        self
    }

    pub fn set(mut self, c: ColorIndex, s: Subst) -> Result<Self> {
        self.specific.insert(c, s);
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let targets = self
            .specific
            .values()
            .chain([&self.plain, &self.bar])
            .filter_map(|s| match s {
                Subst::To(Var::Color(d)) => Some(*d),
                _ => None,
            });
        for d in targets {
            if self.rule(d) != Subst::Keep {
                return Err(Error::InvalidParams(format!("chained color substitution through {d}")));
            }
        }
        Ok(())
    }

    /// The rule applied to color `c`.
    pub fn rule(&self, c: ColorIndex) -> Subst {
        if c.is_c0() {
            return Subst::One;
        }
        if let Some(s) = self.specific.get(&c) {
            return *s;
        }
        if c.is_overlined() {
            self.bar
        } else {
            self.plain
        }
    }

    pub fn is_identity(&self) -> bool {
        self.plain == Subst::Keep && self.bar == Subst::Keep && self.specific.values().all(|s| *s == Subst::Keep)
    }

    /// Whether any variable survives under this assignment for colors of
    /// the given class; used to decide whether the color cap bounds sizes.
    pub fn tracks(&self, c: ColorIndex) -> bool {
        matches!(self.rule(c), Subst::Keep | Subst::To(_))
    }

    /// Image of a variable: `None` for zero, `Some(None)` for one.
    pub fn apply_var(&self, v: Var) -> Option<Option<Var>> {
        match v {
            Var::Sym(..) => Some(Some(v)),
            Var::Color(c) => match self.rule(c) {
                Subst::Keep => Some(Some(v)),
                Subst::One => Some(None),
                Subst::Zero => None,
                Subst::To(w) => Some(Some(w)),
            },
        }
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Option<Monomial> {
        let mut powers = Vec::with_capacity(m.powers().len());
        for &(v, e) in m.powers() {
            if let Some(w) = self.apply_var(v)? {
                powers.push((w, e));
            }
        }
        Some(Monomial::from_powers(powers))
    }

    pub fn apply_poly(&self, p: &Poly) -> Poly {
        p.map_monomials(|m| self.apply_monomial(m))
    }

    /// The polynomial standing for color `c` (0, 1 or a variable).
    pub fn color(&self, c: ColorIndex) -> Poly {
        match self.apply_var(Var::Color(c)) {
            None => Poly::zero(),
            Some(None) => Poly::one(),
            Some(Some(v)) => Poly::var(v),
        }
    }
}

impl fmt::Display for ColorAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.plain == self.bar {
            if self.plain != Subst::Keep {
                parts.push(format!("all={}", self.plain));
            }
        } else {
            if self.plain != Subst::Keep {
                parts.push(format!("plain={}", self.plain));
            }
            if self.bar != Subst::Keep {
                parts.push(format!("bar={}", self.bar));
            }
        }
        for (c, s) in &self.specific {
            parts.push(format!("{c}={s}"));
        }
        if parts.is_empty() {
            f.write_str("keep")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for ColorAssignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut a = ColorAssignment::identity();
        for item in s.split([',', ';']).map(str::trim).filter(|i| !i.is_empty()) {
            if item == "keep" {
                continue;
            }
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in color assignment, got `{item}`")))?;
            let value: Subst = value.parse()?;
            match key.trim() {
                "all" => {
                    a.plain = value;
                    a.bar = value;
                }
                "plain" => a.plain = value,
                "bar" => a.bar = value,
                k => {
                    let c: ColorIndex = k.parse()?;
                    if c.is_c0() {
                        return Err(Error::InvalidParams("c0 is fixed to 1".into()));
                    }
                    a.specific.insert(c, value);
                }
            }
        }
        a.validate()?;
        Ok(a)
    }
}
