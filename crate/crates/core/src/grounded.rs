//! Colored integers grounded in `c_0`, ordered
//! `c_0 < c_1~ < c_1 < c_2~ < ... < c_{m-1} < c_m~`, with flat and regular
//! chains and the map `alpha_S` onto colored over-partitions.

use std::collections::BTreeMap;
use std::fmt;

use crate::colored::{ColoredPart, ColoredSeq};
use crate::error::{Error, Result};
use crate::oracle::{CountTable, OverEnum};
use crate::partitions::{FamilyTag, IndexSet, ModMShape, OverPartition, PartValue};
use crate::series::{Caps, ColorIndex, Monomial, Var};

/// The colors `c_0, c_1~, c_1, ..., c_{m-1}, c_m~` and their `epsilon`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EpsilonContext {
    m: u64,
}

impl EpsilonContext {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("the modulus must be at least 1".into()));
        }
        Ok(EpsilonContext { m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Position in the color order, or `None` for a color outside the context.
    pub fn rank(&self, c: ColorIndex) -> Option<u64> {
        let i = c.index();
        match c.is_overlined() {
            false if i < self.m => Some(2 * i),
            true if (1..=self.m).contains(&i) => Some(2 * i - 1),
            _ => None,
        }
    }

    /// All colors in increasing order.
    pub fn colors(&self) -> Vec<ColorIndex> {
        let mut out = vec![ColorIndex::C0];
        for i in 1..self.m {
            out.push(ColorIndex::bar(i));
            out.push(ColorIndex::plain(i));
        }
        out.push(ColorIndex::bar(self.m));
        out
    }

    /// `epsilon(c, d) = [c < d] + [c = d overlined]`.
    pub fn epsilon(&self, c: ColorIndex, d: ColorIndex) -> u64 {
        let (rc, rd) = (
            self.rank(c).expect("color in context"),
            self.rank(d).expect("color in context"),
        );
        u64::from(rc < rd) + u64::from(c == d && c.is_overlined())
    }

    /// `epsilon` over [`colors`](Self::colors) in order.
    pub fn matrix(&self) -> Vec<Vec<u64>> {
        let cs = self.colors();
        cs.iter()
            .map(|&c| cs.iter().map(|&d| self.epsilon(c, d)).collect())
            .collect()
    }

    /// `a` covers `b` flatly: `a - b = epsilon`.
    pub fn flat_step(&self, a: ColoredInt, b: ColoredInt) -> bool {
        a.value == b.value + self.epsilon(a.color, b.color)
    }

    /// `a - b >= epsilon`.
    pub fn regular_step(&self, a: ColoredInt, b: ColoredInt) -> bool {
        a.value >= b.value + self.epsilon(a.color, b.color)
    }
}

/// A non-negative integer carrying a color of the context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ColoredInt {
    pub value: u64,
    pub color: ColorIndex,
}

impl ColoredInt {
    pub const GROUND: ColoredInt = ColoredInt {
        value: 0,
        color: ColorIndex::C0,
    };

    pub fn new(value: u64, color: ColorIndex) -> Self {
        ColoredInt { value, color }
    }
}

impl fmt::Display for ColoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value, self.color)
    }
}

/// A chain `(pi_0, ..., pi_s)` with `pi_s = 0@c0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GroundedPartition {
    parts: Vec<ColoredInt>,
}

impl GroundedPartition {
    pub fn ground() -> Self {
        GroundedPartition {
            parts: vec![ColoredInt::GROUND],
        }
    }

    pub fn new(parts: Vec<ColoredInt>) -> Result<Self> {
        if parts.last() != Some(&ColoredInt::GROUND) {
            return Err(Error::InvalidColoredPart("a grounded partition ends with 0@c0".into()));
        }
        Ok(GroundedPartition { parts })
    }

    /// All entries, the ground included.
    pub fn parts(&self) -> &[ColoredInt] {
        &self.parts
    }

    /// `pi_0, ..., pi_{s-1}`.
    pub fn internal(&self) -> &[ColoredInt] {
        &self.parts[..self.parts.len() - 1]
    }

    pub fn weight(&self) -> u64 {
        self.internal().iter().map(|p| p.value).sum()
    }

    /// Product of the internal colors, `c_0` left out.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_vars(
            self.internal()
                .iter()
                .filter(|p| !p.color.is_c0())
                .map(|p| Var::Color(p.color)),
        )
    }

    fn in_context(&self, ctx: &EpsilonContext) -> bool {
        self.parts.iter().all(|p| ctx.rank(p.color).is_some())
    }

    fn last_internal_not_ground(&self) -> bool {
        self.parts.len() < 2 || self.parts[self.parts.len() - 2] != ColoredInt::GROUND
    }
}

impl fmt::Display for GroundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn is_flat(pi: &GroundedPartition, ctx: &EpsilonContext) -> bool {
    pi.in_context(ctx) && pi.last_internal_not_ground() && pi.parts.windows(2).all(|w| ctx.flat_step(w[0], w[1]))
}

pub fn is_regular(pi: &GroundedPartition, ctx: &EpsilonContext) -> bool {
    pi.in_context(ctx)
        && pi.internal().iter().all(|p| !p.color.is_c0())
        && pi.parts.windows(2).all(|w| ctx.regular_step(w[0], w[1]))
}

/// Member of the set both flat and regular partitions live in.
pub fn is_grounded(pi: &GroundedPartition, ctx: &EpsilonContext) -> bool {
    pi.in_context(ctx) && pi.last_internal_not_ground() && pi.parts.windows(2).all(|w| ctx.regular_step(w[0], w[1]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroundedKind {
    Flat,
    Regular,
    /// Every chain under the regular relation.
    All,
}

/// Visits every grounded partition of `kind` with weight at most
/// `weight_cap` and at most `color_cap` internal parts not colored `c_0`.
/// Chains are grown upward from the ground.
pub fn enumerate_grounded(
    kind: GroundedKind,
    ctx: &EpsilonContext,
    weight_cap: u64,
    color_cap: u32,
    mut visit: impl FnMut(&GroundedPartition),
) {
    let mut st = Grow {
        kind,
        ctx,
        colors: ctx.colors(),
        weight_cap,
        color_cap,
        stack: vec![ColoredInt::GROUND],
        visit: &mut visit,
    };
    st.grow(0, 0);
}

pub fn grounded_partitions(
    kind: GroundedKind,
    ctx: &EpsilonContext,
    weight_cap: u64,
    color_cap: u32,
) -> Vec<GroundedPartition> {
    let mut out = Vec::new();
    enumerate_grounded(kind, ctx, weight_cap, color_cap, |p| out.push(p.clone()));
    out.sort();
    out
}

struct Grow<'a, F: FnMut(&GroundedPartition)> {
    kind: GroundedKind,
    ctx: &'a EpsilonContext,
    colors: Vec<ColorIndex>,
    weight_cap: u64,
    color_cap: u32,
    stack: Vec<ColoredInt>,
    visit: &'a mut F,
}

impl<F: FnMut(&GroundedPartition)> Grow<'_, F> {
    fn grow(&mut self, weight: u64, degree: u32) {
        let pi = GroundedPartition {
            parts: self.stack.iter().rev().copied().collect(),
        };
        (self.visit)(&pi);
        let top = *self.stack.last().expect("the ground is never popped");
        for i in 0..self.colors.len() {
            let c = self.colors[i];
            if c.is_c0() && self.kind == GroundedKind::Regular {
                continue;
            }
            let d = degree + u32::from(!c.is_c0());
            if d > self.color_cap {
                continue;
            }
            let low = top.value + self.ctx.epsilon(c, top.color);
            let high = match self.kind {
                GroundedKind::Flat => low,
                _ => self.weight_cap - weight,
            };
            for v in low..=high.min(self.weight_cap - weight) {
                let p = ColoredInt::new(v, c);
                if p == ColoredInt::GROUND && self.stack.len() == 1 {
                    continue;
                }
                self.stack.push(p);
                self.grow(weight + v, d);
                self.stack.pop();
            }
        }
    }
}

fn count_by_content(pis: &[GroundedPartition], caps: Caps) -> CountTable {
    let mut t = CountTable::new(caps);
    for pi in pis {
        t.add(pi.weight(), pi.monomial());
    }
    t
}

/// Flat and regular counts per `(weight, colors without c_0)`, which the
/// generalized Glaisher identity says agree.
pub fn glaisher_tables(ctx: &EpsilonContext, weight_cap: u64, color_cap: u32) -> (CountTable, CountTable) {
    let caps = Caps::bounded(weight_cap as u32, color_cap);
    let flat = grounded_partitions(GroundedKind::Flat, ctx, weight_cap, color_cap);
    let regular = grounded_partitions(GroundedKind::Regular, ctx, weight_cap, color_cap);
    (count_by_content(&flat, caps), count_by_content(&regular, caps))
}

/// The part value `alpha_S` sends `j@c_i` to, read as a color index:
/// `i + j m`, overlined with `c`.
pub fn alpha_index(p: ColoredInt, m: u64) -> PartValue {
    PartValue::new(p.color.index() + p.value * m, p.color.is_overlined()).expect("overlined colors have positive index")
}

/// `alpha_S`: `j@c_i` becomes the part `floor_S(i + j m)` colored `c_{i+jm}`.
pub fn alpha_s(pi: &GroundedPartition, shape: &ModMShape) -> Result<ColoredSeq> {
    let ctx = EpsilonContext::new(shape.m())?;
    if !pi.in_context(&ctx) {
        return Err(Error::InvalidColoredPart(format!(
            "{pi} uses a color outside modulus {}",
            shape.m()
        )));
    }
    let s = IndexSet::mod_m(shape.clone());
    let parts = pi
        .internal()
        .iter()
        .map(|&p| ColoredPart::from_index(alpha_index(p, shape.m()), &s))
        .collect();
    ColoredSeq::new(parts, s)
}

/// The grounded-partition color of the part value `v`: `c_{i+jm} -> c_i`,
/// with `c_m` identified with `c_0`.
pub fn grounded_color(v: PartValue, m: u64) -> ColorIndex {
    let c = ColorIndex::of_part(v).reduce_mod(m);
    if !c.is_overlined() && c.index() == m {
        ColorIndex::C0
    } else {
        c
    }
}

fn grounded_monomial(mu: &OverPartition, m: u64) -> Monomial {
    Monomial::from_vars(
        mu.parts()
            .iter()
            .map(|&v| grounded_color(v, m))
            .filter(|c| !c.is_c0())
            .map(Var::Color),
    )
}

/// `mu_i - mu_{i+1} <= m - 1 + [mu_i overlined]`, including the last part
/// against 0.
pub fn has_bounded_gaps(mu: &OverPartition, m: u64) -> bool {
    let mut parts = mu.parts().to_vec();
    parts.push(PartValue::ZERO);
    parts
        .windows(2)
        .all(|w| w[0].diff(w[1]) as u64 <= m - 1 + u64::from(w[0].is_overlined()))
}

/// No plain positive part divisible by `m`.
pub fn avoids_ground_color(mu: &OverPartition, m: u64) -> bool {
    mu.parts()
        .iter()
        .all(|v| v.is_zero() || v.is_overlined() || v.size() % m != 0)
}

/// Over-partitions `mu` with `sum floor_S(mu_i) <= weight_cap` and at most
/// `color_cap` parts not colored `c_0`, with that weight.
pub fn floor_weighted_over_partitions(shape: &ModMShape, weight_cap: u64, color_cap: u32) -> Vec<(OverPartition, u64)> {
    let s = IndexSet::mod_m(shape.clone());
    let top = s.nth(weight_cap as usize + 1).expect("periodic sets are infinite") - 1;
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fill_floor(
        &s,
        shape.m(),
        PartValue::plain(top),
        weight_cap,
        color_cap,
        &mut parts,
        &mut out,
    );
    out.sort();
    out
}

fn fill_floor(
    s: &IndexSet,
    m: u64,
    bound: PartValue,
    budget: u64,
    colors: u32,
    parts: &mut Vec<PartValue>,
    out: &mut Vec<(OverPartition, u64)>,
) {
    let mu = OverPartition::new(parts.clone()).expect("non-increasing with distinct overlines");
    let w = mu.parts().iter().map(|&v| s.floor(v)).sum();
    out.push((mu, w));
    let mut v = bound;
    while !v.is_zero() {
        let next = v.pred().expect("positive");
        let cost = s.floor(v);
        let colored = !grounded_color(v, m).is_c0();
        let repeat_bar = v.is_overlined() && parts.last() == Some(&v);
        if cost <= budget && (!colored || colors > 0) && !repeat_bar {
            parts.push(v);
            fill_floor(s, m, v, budget - cost, colors - u32::from(colored), parts, out);
            parts.pop();
        }
        v = next;
    }
}

/// The two sides of the colored Glaisher corollary for a periodic index
/// set: over-partitions with bounded gaps against those avoiding `c_0`,
/// per `(weight, colors)`.
pub fn glaisher_corollary_tables(shape: &ModMShape, weight_cap: u64, color_cap: u32) -> (CountTable, CountTable) {
    let m = shape.m();
    let caps = Caps::bounded(weight_cap as u32, color_cap);
    let mut gaps = CountTable::new(caps);
    let mut avoid = CountTable::new(caps);
    for (mu, w) in floor_weighted_over_partitions(shape, weight_cap, color_cap) {
        let c = grounded_monomial(&mu, m);
        if has_bounded_gaps(&mu, m) {
            gaps.add(w, c.clone());
        }
        if avoids_ground_color(&mu, m) {
            avoid.add(w, c);
        }
    }
    (gaps, avoid)
}

/// Checks that `alpha_S` sends flat partitions onto the bounded-gap side,
/// regular partitions onto the side avoiding `c_0`, and all grounded
/// partitions onto all over-partitions, transporting weight and colors.
/// Returns one line per violation.
pub fn alpha_transport_violations(shape: &ModMShape, weight_cap: u64, color_cap: u32) -> Result<Vec<String>> {
    let m = shape.m();
    let t = shape.t();
    let ctx = EpsilonContext::new(m)?;
    let all = floor_weighted_over_partitions(shape, weight_cap, color_cap);
    let mut bad = Vec::new();
    for kind in [GroundedKind::Flat, GroundedKind::Regular, GroundedKind::All] {
        let mut image: BTreeMap<OverPartition, u64> = BTreeMap::new();
        for pi in grounded_partitions(kind, &ctx, weight_cap, color_cap) {
            let lambda = alpha_s(&pi, shape)?;
            let mu = OverPartition::try_from(lambda.index_seq())?;
            let shift: u64 = pi.internal().iter().map(|p| shape.residue_shift(p.color.index())).sum();
            let expect = t * pi.weight() + shift;
            if lambda.weight() != expect {
                bad.push(format!("{pi}: weight {} but q -> q^t gives {expect}", lambda.weight()));
            }
            if grounded_monomial(&mu, m) != pi.monomial() {
                bad.push(format!("{pi}: colors of {mu} differ"));
            }
            if lambda.weight() <= weight_cap {
                *image.entry(mu).or_default() += 1;
            }
        }
        let want: BTreeMap<OverPartition, u64> = all
            .iter()
            .filter(|(mu, _)| match kind {
                GroundedKind::Flat => has_bounded_gaps(mu, m),
                GroundedKind::Regular => avoids_ground_color(mu, m),
                GroundedKind::All => true,
            })
            .map(|(mu, _)| (mu.clone(), 1))
            .collect();
        if image != want {
            let extra = image.keys().find(|k| !want.contains_key(*k) || image[*k] > 1);
            let missing = want.keys().find(|k| !image.contains_key(*k));
            bad.push(format!("{kind:?} image differs (extra {extra:?}, missing {missing:?})"));
        }
    }
    Ok(bad)
}

/// Conjugation sends the mod-`m` families to the gap-bounded shapes:
/// `Pbar_m` to over-partitions with `mu_i - mu_{i+1} <= m - 1 + [mu_i overlined]`,
/// `P_m` to partitions with gaps below `m`, and `Fbar_m` to the bounded-gap
/// over-partitions whose parts off multiples of `m` are overlined. Checked on every
/// over-partition of weight at most `weight_cap`; returns the violations.
pub fn conjugate_mod_m_violations(m: u64, weight_cap: u64) -> Result<Vec<String>> {
    if m == 0 {
        return Err(Error::InvalidParams("the modulus must be at least 1".into()));
    }
    let mut bad = Vec::new();
    OverEnum::new(FamilyTag::Pbar, IndexSet::all(), weight_cap).for_each(|lambda, _| {
        let mu = lambda.conjugate();
        let gaps = has_bounded_gaps(&mu, m);
        let plain = mu.parts().iter().all(|v| !v.is_overlined());
        let checks = [
            (FamilyTag::PbarM(m).contains(lambda), gaps),
            (FamilyTag::PM(m).contains(lambda), plain && gaps),
            (
                FamilyTag::FbarM(m).contains(lambda),
                gaps && mu.parts().iter().all(|v| v.size() % m == 0 || v.is_overlined()),
            ),
        ];
        for (i, (a, b)) in checks.into_iter().enumerate() {
            if a != b {
                bad.push(format!(
                    "{lambda} (conjugate {mu}): family {} membership {a}, image test {b}",
                    ["Pbar_m", "P_m", "Fbar_m"][i]
                ));
            }
        }
    })?;
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(text: &[(u64, &str)]) -> GroundedPartition {
        GroundedPartition::new(
            text.iter()
                .map(|&(v, c)| ColoredInt::new(v, c.parse().unwrap()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn epsilon_matrix_rows() {
        let ctx = EpsilonContext::new(3).unwrap();
        // c0, 1~, 1, 2~, 2, 3~
        assert_eq!(
            ctx.matrix(),
            vec![
                vec![0, 1, 1, 1, 1, 1],
                vec![0, 1, 1, 1, 1, 1],
                vec![0, 0, 0, 1, 1, 1],
                vec![0, 0, 0, 1, 1, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 0, 1],
            ]
        );
        for m in 1..5 {
            let ctx = EpsilonContext::new(m).unwrap();
            for c in ctx.colors() {
                for d in ctx.colors() {
                    let e = ctx.epsilon(c, d) + ctx.epsilon(d, c);
                    if c == d {
                        assert_eq!(ctx.epsilon(c, c), u64::from(c.is_overlined()));
                    } else {
                        assert_eq!(e, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn small_chains() {
        let ctx = EpsilonContext::new(2).unwrap();
        let ground = GroundedPartition::ground();
        assert!(is_flat(&ground, &ctx) && is_regular(&ground, &ctx));
        let a = gp(&[(1, "c(1~)"), (0, "c(1~)"), (0, "c0")]);
        assert!(is_flat(&a, &ctx) && is_regular(&a, &ctx));
        assert!(!is_flat(&gp(&[(1, "c(1~)"), (0, "c0")]), &ctx));
        let b = gp(&[(1, "c0"), (0, "c0")]);
        assert!(!is_flat(&b, &ctx) && !is_regular(&b, &ctx) && is_grounded(&b, &ctx));
        let c = gp(&[(0, "c(1)"), (0, "c(1)"), (0, "c(1~)"), (0, "c0")]);
        assert!(is_regular(&c, &ctx) && is_flat(&c, &ctx));
        let d = gp(&[(1, "c0"), (0, "c(2~)"), (0, "c(1)"), (0, "c(1)"), (0, "c0")]);
        assert!(is_flat(&d, &ctx) && is_grounded(&d, &ctx));
    }

    #[test]
    fn enumerators_match_predicates() {
        for m in 1..=2 {
            let ctx = EpsilonContext::new(m).unwrap();
            let all = grounded_partitions(GroundedKind::All, &ctx, 4, 2);
            for (kind, pred) in [
                (
                    GroundedKind::Flat,
                    is_flat as fn(&GroundedPartition, &EpsilonContext) -> bool,
                ),
                (GroundedKind::Regular, is_regular),
            ] {
                let got = grounded_partitions(kind, &ctx, 4, 2);
                let want: Vec<_> = all.iter().filter(|p| pred(p, &ctx)).cloned().collect();
                assert_eq!(got, want, "m = {m} {kind:?}");
            }
            assert!(all.iter().all(|p| is_grounded(p, &ctx)));
        }
    }

    #[test]
    fn glaisher_counts_agree() {
        for m in 1..=3 {
            let ctx = EpsilonContext::new(m).unwrap();
            let (flat, regular) = glaisher_tables(&ctx, 6, 3);
            assert_eq!(flat, regular, "m = {m}");
        }
    }

    #[test]
    fn alpha_sends_ground_to_empty() {
        let shape: ModMShape = "m=2,s=1".parse().unwrap();
        assert!(alpha_s(&GroundedPartition::ground(), &shape)
            .unwrap()
            .parts()
            .is_empty());
    }

    #[test]
    fn alpha_transport_and_corollary() {
        for text in ["m=2,s=1", "m=3,s=1,2", "m=3,s=2"] {
            let shape: ModMShape = text.parse().unwrap();
            assert_eq!(
                alpha_transport_violations(&shape, 5, 2).unwrap(),
                Vec::<String>::new(),
                "{text}"
            );
            let (a, b) = glaisher_corollary_tables(&shape, 5, 2);
            assert_eq!(a, b, "{text}");
        }
    }

    #[test]
    fn conjugate_mod_m_images() {
        for m in 1..=3 {
            assert_eq!(conjugate_mod_m_violations(m, 8).unwrap(), Vec::<String>::new());
        }
    }
}
