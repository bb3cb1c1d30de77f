use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::series::{Monomial, Var};

/// A polynomial in color (and symbol) variables with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, 1)
    }

    pub fn var(v: impl Into<Var>) -> Self {
        Poly::monomial(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    /// Smallest total degree among the terms; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Drops every term of total degree above `d` (no-op for `None`).
    pub fn truncate(&mut self, d: Option<u32>) {
        if let Some(d) = d {
            self.terms.retain(|m, _| m.degree() <= d);
        }
    }

    /// Product, keeping only terms of total degree at most `d`.
    pub fn mul_trunc(&self, other: &Poly, d: Option<u32>) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if d.is_some_and(|d| da > d) {
                continue;
            }
            for (mb, cb) in &other.terms {
                if d.is_some_and(|d| da + mb.degree() > d) {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_trunc(other, None)
    }

    /// Ring homomorphism given by a per-monomial map; `None` sends the
    /// monomial to zero.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Option<Monomial>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some(image) = f(m) {
                out.add_term(image, c.clone());
            }
        }
        out
    }

    /// Sum of all coefficients (every variable set to 1).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        Poly::monomial(m)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ColorIndex;

    fn c(i: u64) -> Poly {
        Poly::var(ColorIndex::plain(i))
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let mut p = Poly::one();
        p.add_assign(&c(1));
        let sq = p.mul(&p);
        assert_eq!(sq.to_string(), "1 + 2*c(1) + c(1)^2");
        let mut diff = sq.clone();
        diff.sub_assign(&sq);
        assert!(diff.is_zero());
        assert_eq!(sq.mul_trunc(&p, Some(1)).to_string(), "1 + 3*c(1)");
        assert_eq!(p.neg().to_string(), "-1 - c(1)");
    }
}
