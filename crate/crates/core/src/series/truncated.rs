use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{Monomial, Poly};

/// Truncation caps: q-degrees above `q` and total color degree above
/// `color` (when set) are discarded.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Caps {
    pub q: u32,
    pub color: Option<u32>,
}

impl Caps {
    pub fn new(q: u32, color: Option<u32>) -> Self {
        Caps { q, color }
    }

    pub fn bounded(q: u32, color: u32) -> Self {
        Caps::new(q, Some(color))
    }

    pub fn unbounded(q: u32) -> Self {
        Caps::new(q, None)
    }
}

impl fmt::Display for Caps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color {
            Some(d) => write!(f, "N={},D={d}", self.q),
            None => write!(f, "N={},D=inf", self.q),
        }
    }
}

/// A q-series truncated at `caps`, with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    caps: Caps,
    coeffs: Vec<Poly>,
}

impl Series {
    pub fn zero(caps: Caps) -> Self {
        Series {
            caps,
            coeffs: vec![Poly::zero(); caps.q as usize + 1],
        }
    }

    pub fn one(caps: Caps) -> Self {
        Series::term(Poly::one(), 0, caps)
    }

    /// `p * q^k`, truncated.
    pub fn term(mut p: Poly, k: u32, caps: Caps) -> Self {
        let mut s = Series::zero(caps);
        if k <= caps.q {
            p.truncate(caps.color);
            s.coeffs[k as usize] = p;
        }
        s
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Coefficient of `q^d` (zero beyond the cap).
    pub fn coeff(&self, d: u32) -> &Poly {
        static ZERO: std::sync::OnceLock<Poly> = std::sync::OnceLock::new();
        self.coeffs
            .get(d as usize)
            .unwrap_or_else(|| ZERO.get_or_init(Poly::zero))
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn add_at(&mut self, d: u32, m: Monomial, c: BigInt) {
        if d > self.caps.q || self.caps.color.is_some_and(|cap| m.degree() > cap) {
            return;
        }
        self.coeffs[d as usize].add_term(m, c);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    fn check_caps(&self, other: &Series) -> Result<()> {
        if self.caps != other.caps {
            return Err(Error::CapMismatch {
                left: self.caps.to_string(),
                right: other.caps.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign(b);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_caps(other)?;
        let n = self.caps.q as usize;
        let mut out = Series::zero(self.caps);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul_trunc(&other.coeffs[j], self.caps.color);
                out.coeffs[i + j].add_assign(&prod);
            }
        }
        Ok(out)
    }

    pub fn scale_poly(&self, p: &Poly) -> Series {
        let mut out = Series::zero(self.caps);
        for (d, c) in self.coeffs.iter().enumerate() {
            out.coeffs[d] = c.mul_trunc(p, self.caps.color);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut out = Series::one(self.caps);
        for _ in 0..e {
            out = out.mul(self).expect("same caps");
        }
        out
    }

    /// Multiplies in place by `1 + a q^k`.
    pub fn mul_one_plus(&mut self, a: &Poly, k: u32) {
        self.mul_binomial(a, k, true);
    }

    /// Multiplies in place by `1 - a q^k`.
    pub fn mul_one_minus(&mut self, a: &Poly, k: u32) {
        self.mul_binomial(a, k, false);
    }

    fn mul_binomial(&mut self, a: &Poly, k: u32, plus: bool) {
        if k > self.caps.q || a.is_zero() {
            return;
        }
        let (k, n) = (k as usize, self.caps.q as usize);
        let d = self.caps.color;
        // descending so that each source coefficient is still the old one
        for i in (k..=n).rev() {
            let src = &self.coeffs[i - k];
            if src.is_zero() {
                continue;
            }
            let shifted = src.mul_trunc(a, d);
            if plus {
                self.coeffs[i].add_assign(&shifted);
            } else {
                self.coeffs[i].sub_assign(&shifted);
            }
        }
    }

    /// Multiplies in place by `1 / (1 - a q^k)`.
    ///
    /// For `k = 0` the geometric series in `a` only terminates through the
    /// color cap, so `a` must lack a constant term and the color cap must be
    /// finite.
    pub fn div_one_minus(&mut self, a: &Poly, k: u32) -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        if k == 0 {
            if !a.constant_term().is_zero() {
                return Err(Error::Singular(format!(
                    "1/(1 - ({a})) has a constant term in the denominator"
                )));
            }
            let Some(cap) = self.caps.color else {
                return Err(Error::NonTerminating(format!(
                    "1/(1 - ({a})) at q-degree 0 needs a finite color cap"
                )));
            };
            let min = a.min_degree().unwrap_or(1).max(1);
            let mut power = self.clone();
            for _ in 0..=(cap / min) {
                power = power.scale_poly(a);
                if power.is_zero() {
                    break;
                }
                *self = self.add(&power)?;
            }
            return Ok(());
        }
        if k > self.caps.q {
            return Ok(());
        }
        let (k, n) = (k as usize, self.caps.q as usize);
        for i in k..=n {
            if self.coeffs[i - k].is_zero() {
                continue;
            }
            let shifted = self.coeffs[i - k].mul_trunc(a, self.caps.color);
            self.coeffs[i].add_assign(&shifted);
        }
        Ok(())
    }

    /// Reinterprets under tighter caps.
    pub fn restrict(&self, caps: Caps) -> Series {
        let mut out = Series::zero(caps);
        for (d, c) in self.coeffs.iter().enumerate().take(caps.q as usize + 1) {
            let mut c = c.clone();
            c.truncate(caps.color);
            out.coeffs[d] = c;
        }
        out
    }

    /// Canonical text: one line `q^d : coeff[*monomial]` per non-zero term,
    /// ordered by q-degree then monomial.
    pub fn canonical_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (d, p) in self.coeffs.iter().enumerate() {
            for (m, c) in p.terms() {
                if m.is_one() {
                    out.push(format!("q^{d} : {c}"));
                } else {
                    out.push(format!("q^{d} : {c}*{m}"));
                }
            }
        }
        out
    }

    /// Coefficient sums per q-degree (all variables set to 1).
    pub fn counts(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(Poly::coefficient_sum).collect()
    }
}

/// `1 / (1 - m q^k)` truncated at `caps`.
pub fn geometric_inverse(m: &Monomial, k: u32, caps: Caps) -> Result<Series> {
    if k == 0 && m.is_one() {
        return Err(Error::Singular("1/(1 - 1) is singular".into()));
    }
    let mut s = Series::one(caps);
    s.div_one_minus(&Poly::monomial(m.clone()), k)?;
    Ok(s)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.canonical_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
