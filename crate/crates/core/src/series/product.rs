use crate::error::{Error, Result};
use crate::series::{Caps, Poly, Series};

/// Exponents `shift + k * step` for `k < n` that stay within the q-cap.
fn factor_exponents(shift: u32, step: u32, n: Option<u64>, q_cap: u32, what: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut k: u64 = 0;
    loop {
        if n.is_some_and(|n| k >= n) {
            break;
        }
        let e = shift as u64 + k * step as u64;
        if e > q_cap as u64 {
            break;
        }
        if step == 0 && n.is_none() {
            return Err(Error::NonTerminating(format!(
                "{what} with q-step 0 and infinitely many factors"
            )));
        }
        out.push(e as u32);
        k += 1;
    }
    Ok(out)
}

impl Series {
    /// Multiplies in place by `(a q^shift; q^step)_n = prod_{k<n} (1 - a q^{shift + k step})`;
    /// `n = None` is the infinite product.
    pub fn mul_pochhammer(&mut self, a: &Poly, shift: u32, step: u32, n: Option<u64>) -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        for e in factor_exponents(shift, step, n, self.caps().q, "pochhammer")? {
            self.mul_one_minus(a, e);
        }
        Ok(())
    }

    /// Multiplies in place by `1 / (a q^shift; q^step)_n`.
    pub fn div_pochhammer(&mut self, a: &Poly, shift: u32, step: u32, n: Option<u64>) -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        for e in factor_exponents(shift, step, n, self.caps().q, "inverse pochhammer")? {
            self.div_one_minus(a, e)?;
        }
        Ok(())
    }
}

/// `(a q^shift; q^step)_n` truncated at `caps`.
pub fn pochhammer(a: &Poly, shift: u32, step: u32, n: Option<u64>, caps: Caps) -> Result<Series> {
    let mut s = Series::one(caps);
    s.mul_pochhammer(a, shift, step, n)?;
    Ok(s)
}

/// `(a_1, ..., a_j; q^step)_n`, each `a_i` given with its own q-shift.
pub fn pochhammer_multi(args: &[(Poly, u32)], step: u32, n: Option<u64>, caps: Caps) -> Result<Series> {
    let mut s = Series::one(caps);
    for (a, shift) in args {
        s.mul_pochhammer(a, *shift, step, n)?;
    }
    Ok(s)
}

/// `1 / (a q^shift; q^step)_n` truncated at `caps`.
pub fn pochhammer_inverse(a: &Poly, shift: u32, step: u32, n: Option<u64>, caps: Caps) -> Result<Series> {
    let mut s = Series::one(caps);
    s.div_pochhammer(a, shift, step, n)?;
    Ok(s)
}
