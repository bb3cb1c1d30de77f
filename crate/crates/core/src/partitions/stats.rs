use crate::error::{Error, Result};
use crate::partitions::PartSeq;

/// The mod-`m` statistics `rho_1..rho_m` and `rho_1~..rho_m~`.
///
/// `plain[j - 1]` holds `rho_j` and `bar[j - 1]` holds `rho_j~`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RhoStats {
    pub plain: Vec<u64>,
    pub bar: Vec<u64>,
}

/// `rho_j = sum_i (lambda_{j+im} - lambda_{j+1+im} - [lambda_{j+im} overlined])`
/// and `rho_j~ = #{i >= 0 : lambda_{j+im} overlined}`.
///
/// A negative term can only come from a sequence that is not an
/// over-partition; it is reported as corrupted input.
pub fn rho_stats(lambda: &PartSeq, m: u64) -> Result<RhoStats> {
    if m == 0 {
        return Err(Error::InvalidParams("rho statistics need m >= 1".into()));
    }
    let m = m as usize;
    let mut plain = vec![0i64; m];
    let mut bar = vec![0u64; m];
    for p in 1..=lambda.len() {
        let (a, b) = (lambda.get(p), lambda.get(p + 1));
        let j = (p - 1) % m;
        let over = i64::from(a.is_overlined());
        let term = a.diff(b) - over;
        if term < 0 {
            return Err(Error::Corrupted(format!(
                "negative rho term at position {p} of {lambda}"
            )));
        }
        plain[j] += term;
        bar[j] += over as u64;
    }
    Ok(RhoStats {
        plain: plain.into_iter().map(|v| v as u64).collect(),
        bar,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ThetaStats {
    pub theta1: u64,
    pub theta2: u64,
    pub theta3: u64,
    pub theta4: u64,
}

/// `theta_1 = sum_i lambda_{1+im} - lambda_{l+im}`,
/// `theta_2 = sum_i lambda_{l+im} - lambda_{m+im}`,
/// `theta_3 = sum_i lambda_{m+im} - lambda_{m+1+im}`,
/// `theta_4 = #{i >= 1 : lambda_{im} overlined}`.
pub fn theta_stats(lambda: &PartSeq, m: u64, l: u64) -> Result<ThetaStats> {
    if m == 0 || l == 0 || l > m {
        return Err(Error::InvalidParams(format!(
            "theta statistics need 1 <= l <= m, got m={m}, l={l}"
        )));
    }
    let (m, l) = (m as usize, l as usize);
    let size = |p: usize| lambda.get(p).size() as i64;
    let mut t = [0i64; 3];
    let mut theta4 = 0;
    let mut base = 0;
    while base < lambda.len() {
        t[0] += size(base + 1) - size(base + l);
        t[1] += size(base + l) - size(base + m);
        t[2] += size(base + m) - size(base + m + 1);
        if lambda.get(base + m).is_overlined() {
            theta4 += 1;
        }
        base += m;
    }
    if t.iter().any(|v| *v < 0) {
        return Err(Error::Corrupted(format!("negative theta statistic for {lambda}")));
    }
    Ok(ThetaStats {
        theta1: t[0] as u64,
        theta2: t[1] as u64,
        theta3: t[2] as u64,
        theta4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> PartSeq {
        s.parse().unwrap()
    }

    #[test]
    fn rho_examples() {
        let r = rho_stats(&PartSeq::empty(), 3).unwrap();
        assert_eq!(r.plain, vec![0, 0, 0]);
        assert_eq!(r.bar, vec![0, 0, 0]);

        let r = rho_stats(&seq("(2,1)"), 2).unwrap();
        assert_eq!((r.plain.as_slice(), r.bar.as_slice()), (&[1, 1][..], &[0, 0][..]));

        let r = rho_stats(&seq("(2~,1)"), 2).unwrap();
        assert_eq!((r.plain.as_slice(), r.bar.as_slice()), (&[0, 1][..], &[1, 0][..]));
    }

    #[test]
    fn rho_total_is_largest_part() {
        let lambda = seq("(7,5,5~,3,3~,2,1~)");
        let r = rho_stats(&lambda, 3).unwrap();
        let total: u64 = r.plain.iter().chain(&r.bar).sum();
        assert_eq!(total, 7);
    }

    #[test]
    fn rho_rejects_increasing_input() {
        assert!(matches!(rho_stats(&seq("(1,2)"), 2), Err(Error::Corrupted(_))));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_stats(&PartSeq::empty(), 3, 2).unwrap(), ThetaStats::default());
        let t = theta_stats(&seq("(3,2,1)"), 3, 2).unwrap();
        assert_eq!((t.theta1, t.theta2, t.theta3, t.theta4), (1, 1, 1, 0));
        let t = theta_stats(&seq("(1~)"), 1, 1).unwrap();
        assert_eq!(t.theta4, 1);
        assert_eq!(t.theta3, 1);
        assert!(theta_stats(&PartSeq::empty(), 2, 3).is_err());
    }
}
