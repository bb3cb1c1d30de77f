use crate::colored::color_sequence;
use crate::error::Result;
use crate::oracle::{CountTable, DegreePrune, OverEnum};
use crate::partitions::{rho_stats, theta_stats, PartSeq};
use crate::series::{Caps, ColorAssignment, ColorIndex, Monomial, Subst, Var};

/// Which power of `z` the theta rows track.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThetaZ {
    /// `z^{theta_3}` (`c_m = c_m~ = z`).
    Three,
    /// `z^{theta_4}` (`c_m = 1`, `c_m~ = z`).
    Four,
}

/// The monomial attached to each enumerated over-partition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Statistic {
    /// Always 1.
    Trivial,
    /// `C(lambda)`.
    Color,
    /// `prod_j c_j^{rho_j} c_j~^{rho_j~}` for modulus `m`.
    Rho(u64),
    /// `x^{theta_1} y^{theta_2} z^{theta_3 or theta_4}`.
    Theta { m: u64, l: u64, z: ThetaZ },
}

impl Statistic {
    pub fn monomial(&self, lambda: &PartSeq) -> Result<Monomial> {
        Ok(match *self {
            Statistic::Trivial => Monomial::one(),
            Statistic::Color => color_sequence(lambda),
            Statistic::Rho(m) => {
                let r = rho_stats(lambda, m)?;
                Monomial::from_powers((1..=m).flat_map(|j| {
                    let i = j as usize - 1;
                    [
                        (Var::Color(ColorIndex::plain(j)), r.plain[i] as u32),
                        (Var::Color(ColorIndex::bar(j)), r.bar[i] as u32),
                    ]
                }))
            }
            Statistic::Theta { m, l, z } => {
                let t = theta_stats(lambda, m, l)?;
                let zexp = match z {
                    ThetaZ::Three => t.theta3,
                    ThetaZ::Four => t.theta4,
                };
                Monomial::from_powers([
                    (Var::sym('x'), t.theta1 as u32),
                    (Var::sym('y'), t.theta2 as u32),
                    (Var::sym('z'), zexp as u32),
                ])
            }
        })
    }

    /// Incremental degree pruning equivalent to this statistic followed
    /// by `assign`, when the color cap is finite.
    pub fn prune(&self, assign: &ColorAssignment, caps: Caps) -> Option<DegreePrune> {
        let cap = caps.color?;
        let (reduce, assign) = match *self {
            Statistic::Trivial => return None,
            Statistic::Color => (None, assign.clone()),
            Statistic::Rho(m) => (Some(m), assign.clone()),
            Statistic::Theta { m, l, z } => (Some(m), theta_assignment(m, l, z)),
        };
        Some(DegreePrune { reduce, assign, cap })
    }
}

/// The substitution turning the mod-`m` color monomial into the theta
/// monomial: `x` below `l`, `y` from `l` to `m - 1`, `z` at `m`.
pub fn theta_assignment(m: u64, l: u64, z: ThetaZ) -> ColorAssignment {
    let mut a = ColorAssignment::identity();
    for j in 1..=m {
        let v = if j < l {
            Var::sym('x')
        } else if j < m {
            Var::sym('y')
        } else {
            Var::sym('z')
        };
        a = a.set(ColorIndex::bar(j), Subst::To(v)).expect("symbols never chain");
        let plain = if j == m && z == ThetaZ::Four {
            Subst::One
        } else {
            Subst::To(v)
        };
        a = a.set(ColorIndex::plain(j), plain).expect("symbols never chain");
    }
    a
}

/// Left-hand side table: every member of `e`, weighted by its S-weight,
/// with monomial `stat` specialized by `assign`.
pub fn over_table(e: &OverEnum, stat: Statistic, assign: &ColorAssignment, caps: Caps) -> Result<CountTable> {
    let mut e = e.clone();
    e.max_s_weight = caps.q as u64;
    if let Some(p) = stat.prune(assign, caps) {
        e.prune = Some(p);
    }
    let mut table = CountTable::new(caps);
    let mut err = None;
    e.for_each(|lambda, w| {
        if err.is_some() {
            return;
        }
        match stat.monomial(lambda) {
            Ok(m) => {
                if let Some(m) = assign.apply_monomial(&m) {
                    table.add(w, m);
                }
            }
            Err(e) => err = Some(e),
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(table),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::all_over_partitions;
    use crate::partitions::{FamilyTag, IndexSet, ModMShape};

    fn naive_table(
        family: FamilyTag,
        s: &IndexSet,
        stat: Statistic,
        assign: &ColorAssignment,
        caps: Caps,
    ) -> CountTable {
        let mut t = CountTable::new(caps);
        for lambda in all_over_partitions(5, 4) {
            if family.contains(&lambda) {
                if let Some(m) = assign.apply_monomial(&stat.monomial(&lambda).unwrap()) {
                    t.add(lambda.s_weight(s), m);
                }
            }
        }
        t
    }

    #[test]
    fn pruned_enumeration_matches_naive_filter() {
        let families = [
            FamilyTag::Pbar,
            FamilyTag::P,
            FamilyTag::Dbar,
            FamilyTag::Fbar,
            FamilyTag::PbarM(2),
            FamilyTag::PM(2),
            FamilyTag::FbarM(2),
            FamilyTag::PbarM(3),
            FamilyTag::FbarM(3),
        ];
        let even = IndexSet::mod_m(ModMShape::new(2, vec![2]).unwrap());
        let cases = [
            (
                IndexSet::all(),
                Caps::unbounded(4),
                Statistic::Trivial,
                ColorAssignment::identity(),
            ),
            (
                IndexSet::all(),
                Caps::bounded(4, 3),
                Statistic::Color,
                ColorAssignment::identity(),
            ),
            (
                IndexSet::odds(),
                Caps::bounded(2, 4),
                Statistic::Color,
                ColorAssignment::identity(),
            ),
            (
                IndexSet::odds(),
                Caps::bounded(2, 2),
                Statistic::Rho(2),
                "c(2)=1".parse().unwrap(),
            ),
            (
                even.clone(),
                Caps::bounded(2, 2),
                Statistic::Color,
                ColorAssignment::identity(),
            ),
            (
                even.clone(),
                Caps::bounded(2, 2),
                Statistic::Rho(2),
                ColorAssignment::identity(),
            ),
            (
                even,
                Caps::bounded(2, 2),
                Statistic::Theta {
                    m: 2,
                    l: 2,
                    z: ThetaZ::Four,
                },
                ColorAssignment::identity(),
            ),
        ];
        for family in families {
            for (s, caps, stat, assign) in &cases {
                let e = OverEnum::new(family, s.clone(), caps.q as u64);
                let got = over_table(&e, *stat, assign, *caps).unwrap();
                let want = naive_table(family, s, *stat, assign, *caps);
                assert_eq!(got, want, "{family} {s} {caps} {stat:?}");
            }
        }
    }

    #[test]
    fn rho_monomial_is_reduced_color_sequence() {
        for lambda in all_over_partitions(5, 4) {
            for m in 1..=3 {
                let rho = Statistic::Rho(m).monomial(&lambda).unwrap();
                let reduced = Monomial::from_powers(color_sequence(&lambda).powers().iter().map(|&(v, e)| match v {
                    Var::Color(c) => (Var::Color(c.reduce_mod(m)), e),
                    other => (other, e),
                }));
                assert_eq!(rho, reduced, "{lambda} mod {m}");
            }
        }
    }
}
