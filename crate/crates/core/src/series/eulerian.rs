use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{Poly, Series};

pub const MAX_EULERIAN_N: usize = 10;

static DESCENT_COUNTS: [OnceLock<Vec<u64>>; MAX_EULERIAN_N + 1] = [const { OnceLock::new() }; MAX_EULERIAN_N + 1];

/// Number of permutations of `1..=n` per descent set, indexed by bitmask
/// (bit `i - 1` set when `sigma(i) > sigma(i + 1)`).
pub fn descent_set_counts(n: usize) -> Result<&'static [u64]> {
    if n == 0 || n > MAX_EULERIAN_N {
        return Err(Error::TooLarge(format!(
            "permutation enumeration supports 1 <= n <= {MAX_EULERIAN_N}, got {n}"
        )));
    }
    Ok(DESCENT_COUNTS[n].get_or_init(|| {
        let mut counts = vec![0u64; 1 << (n - 1)];
        for perm in (0..n).permutations(n) {
            let mask = perm
                .iter()
                .tuple_windows()
                .enumerate()
                .filter(|(_, (a, b))| a > b)
                .fold(0usize, |acc, (i, _)| acc | (1 << i));
            counts[mask] += 1;
        }
        counts
    }))
}

/// `E~_n(x_1, y_1, ..., x_n, y_n) =
///  (y_n + x_n) sum_{sigma in S_n} prod_{i<n} (y_i^{[sigma(i) > sigma(i+1)]} + x_i)`,
/// with every argument a series at common caps.
pub fn eulerian_bar(n: usize, x: &[Series], y: &[Series]) -> Result<Series> {
    if x.len() != n || y.len() != n {
        return Err(Error::InvalidParams(format!(
            "eulerian_bar({n}) needs {n} x and {n} y arguments, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    let counts = descent_set_counts(n)?;
    let caps = y[n - 1].caps();
    let one = Series::one(caps);
    // factor i is (1 + x_i) off the descent set and (y_i + x_i) on it
    let off: Vec<Series> = (0..n - 1).map(|i| one.add(&x[i])).collect::<Result<_>>()?;
    let on: Vec<Series> = (0..n - 1).map(|i| y[i].add(&x[i])).collect::<Result<_>>()?;
    let mut sum = Series::zero(caps);
    for (mask, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let mut term = Series::term(Poly::constant(count), 0, caps);
        for i in 0..n - 1 {
            term = term.mul(if mask >> i & 1 == 1 { &on[i] } else { &off[i] })?;
        }
        sum = sum.add(&term)?;
    }
    sum.mul(&y[n - 1].add(&x[n - 1])?)
}

/// `E_n(y_1, ..., y_{n-1}) = E~_n(0, y_1, ..., 0, y_{n-1}, 0, 1)`, the
/// descent-set generating polynomial of `S_n`.
pub fn eulerian(n: usize, y: &[Series]) -> Result<Series> {
    if n == 0 || y.len() + 1 != n {
        return Err(Error::InvalidParams(format!(
            "eulerian({n}) needs {} arguments, got {}",
            n.saturating_sub(1),
            y.len()
        )));
    }
    let caps = y.first().map(Series::caps);
    let Some(caps) = caps else {
        // E_1 = 1; there are no arguments to take caps from
        return Err(Error::InvalidParams(
            "eulerian(1) has no arguments; use eulerian_poly".into(),
        ));
    };
    let zeros = vec![Series::zero(caps); n];
    let mut ys = y.to_vec();
    ys.push(Series::one(caps));
    eulerian_bar(n, &zeros, &ys)
}

/// `E_n` as a plain polynomial in the given argument polynomials.
pub fn eulerian_poly(n: usize, y: &[Poly]) -> Result<Poly> {
    if n == 0 || y.len() + 1 != n {
        return Err(Error::InvalidParams(format!(
            "eulerian({n}) needs {} arguments, got {}",
            n.saturating_sub(1),
            y.len()
        )));
    }
    let counts = descent_set_counts(n)?;
    let mut sum = Poly::zero();
    for (mask, &count) in counts.iter().enumerate() {
        let mut term = Poly::constant(BigInt::from(count));
        for (i, yi) in y.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term = term.mul(yi);
            }
        }
        sum.add_assign(&term);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{pochhammer, Caps, Var};

    fn sym(name: char, i: u32) -> Poly {
        Poly::var(Var::Sym(name, i))
    }

    #[test]
    fn small_eulerian_polynomials() {
        assert_eq!(eulerian_poly(1, &[]).unwrap(), Poly::one());
        let e2 = eulerian_poly(2, &[sym('y', 1)]).unwrap();
        assert_eq!(e2.to_string(), "1 + y1");
        let e3 = eulerian_poly(3, &[sym('y', 1), sym('y', 2)]).unwrap();
        assert_eq!(e3.to_string(), "1 + 2*y1 + y1*y2 + 2*y2");
    }

    #[test]
    fn descent_counts_sum_to_factorial() {
        for n in 1..=7 {
            let total: u64 = descent_set_counts(n).unwrap().iter().sum();
            assert_eq!(total, (1..=n as u64).product::<u64>());
        }
        assert!(matches!(descent_set_counts(11), Err(Error::TooLarge(_))));
    }

    #[test]
    fn eulerian_bar_two() {
        // (y2 + x2) [(1 + x1) + (y1 + x1)]
        let caps = Caps::unbounded(0);
        let s = |name, i| Series::term(sym(name, i), 0, caps);
        let got = eulerian_bar(2, &[s('x', 1), s('x', 2)], &[s('y', 1), s('y', 2)]).unwrap();
        let mut inner = Poly::one();
        inner.add_assign(&sym('x', 1).scale(&2.into()));
        inner.add_assign(&sym('y', 1));
        let mut outer = sym('y', 2);
        outer.add_assign(&sym('x', 2));
        assert_eq!(got.coeff(0), &inner.mul(&outer));
    }

    #[test]
    fn q_specialization() {
        // E~_n(0, q, 0, q^2, ..., 0, 1) = (q;q)_n / (1-q)^n
        for n in 1..=6usize {
            let caps = Caps::unbounded(24);
            let zeros = vec![Series::zero(caps); n];
            let mut ys: Vec<Series> = (1..n).map(|i| Series::term(Poly::one(), i as u32, caps)).collect();
            ys.push(Series::one(caps));
            let lhs = eulerian_bar(n, &zeros, &ys).unwrap();
            let mut rhs = pochhammer(&Poly::one(), 1, 1, Some(n as u64), caps).unwrap();
            for _ in 0..n {
                rhs.div_one_minus(&Poly::one(), 1).unwrap();
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
