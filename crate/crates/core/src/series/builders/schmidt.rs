use crate::error::{Error, Result};
use crate::partitions::IndexSet;
use crate::series::{Caps, ColorAssignment, ColorIndex, Poly, Series};

/// The three product shapes indexed by `i >= 1` with factor exponent `floor_S(i)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductKind {
    /// `(1 + c_i~ q^w) / (1 - c_i q^w)`
    Over,
    /// `1 / (1 - c_i q^w)`
    Plain,
    /// `1 + c_i~ q^w`
    Flat,
}

/// Which factor the distinct-part sum divides by.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DistinctForm {
    /// `c_j~ q^w / (1 - c_j q^w)`.
    Display,
    /// `c_j~ q^w / (1 + c_j q^w)`.
    Plus,
}

fn last_index(s: &IndexSet, caps: Caps) -> Result<u64> {
    s.nth(caps.q as usize + 1).ok_or_else(|| {
        Error::NonTerminating(format!(
            "{s} has fewer than {} elements, so infinitely many factors sit below q^{}",
            caps.q + 1,
            caps.q + 1
        ))
    })
}

/// `prod_{i >= 1}` of the factor `kind` at `q^{floor_S(i)}`.
pub fn s_product(kind: ProductKind, s: &IndexSet, caps: Caps, assign: &ColorAssignment) -> Result<Series> {
    let end = last_index(s, caps)?;
    let mut out = Series::one(caps);
    for i in 1..end {
        let w = s.floor_size(i) as u32;
        if kind != ProductKind::Plain {
            out.mul_one_plus(&assign.color(ColorIndex::bar(i)), w);
        }
        if kind != ProductKind::Flat {
            out.div_one_minus(&assign.color(ColorIndex::plain(i)), w)?;
        }
    }
    Ok(out)
}

/// `sum_{i >= 1} prod_{j < i} c_j~ q^{floor_S(j)} / (1 -+ c_j q^{floor_S(j)})`.
pub fn s_distinct_sum(s: &IndexSet, caps: Caps, assign: &ColorAssignment, form: DistinctForm) -> Result<Series> {
    if s.nth(caps.q as usize + 1).is_none() && caps.color.is_none() {
        last_index(s, caps)?;
    }
    let mut sum = Series::zero(caps);
    let mut prefix = Series::one(caps);
    for j in 1u64.. {
        sum = sum.add(&prefix)?;
        let w = s.floor_size(j) as u32;
        let c = assign.color(ColorIndex::plain(j));
        prefix = prefix.mul(&Series::term(assign.color(ColorIndex::bar(j)), w, caps))?;
        match form {
            DistinctForm::Display => prefix.div_one_minus(&c, w)?,
            DistinctForm::Plus => prefix.div_one_minus(&c.neg(), w)?,
        }
        if prefix.is_zero() {
            break;
        }
        if j > 100_000 {
            return Err(Error::NonTerminating(format!(
                "distinct-part sum over {s} does not vanish at {caps}"
            )));
        }
    }
    Ok(sum)
}

/// `prod_{n >= 1} (1 - q^n)^{-n}`.
pub fn macmahon(caps: Caps) -> Series {
    let mut out = Series::one(caps);
    for n in 1..=caps.q {
        for _ in 0..n {
            out.div_one_minus(&Poly::one(), n).expect("positive exponent");
        }
    }
    out
}

/// `prod_{n >= 1} ((1 + q^n) / (1 - q^n))^{e(n)}`.
pub fn over_power_product(caps: Caps, e: impl Fn(u32) -> u64) -> Series {
    let mut out = Series::one(caps);
    for n in 1..=caps.q {
        for _ in 0..e(n) {
            out.mul_one_plus(&Poly::one(), n);
            out.div_one_minus(&Poly::one(), n).expect("positive exponent");
        }
    }
    out
}

/// `1 / (q; q)_inf^k`.
pub fn partition_power(caps: Caps, k: u32) -> Series {
    let mut out = Series::one(caps);
    for _ in 0..k {
        out.div_pochhammer(&Poly::one(), 1, 1, None).expect("positive step");
    }
    out
}

fn fibonacci(n: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// The five closed forms for triangular, square, Fibonacci and
/// power-of-two index sets.
pub fn index_set_products(item: u8, caps: Caps) -> Result<Series> {
    Ok(match item {
        1 => macmahon(caps),
        2 => partition_power(caps, 1).mul(&macmahon(caps))?,
        3 => partition_power(caps, 1).mul(&macmahon(caps).pow(2))?,
        4 => over_power_product(caps, fibonacci),
        5 => over_power_product(caps, |n| 1u64 << (n - 1)),
        _ => return Err(Error::InvalidParams(format!("no closed form numbered {item}"))),
    })
}
