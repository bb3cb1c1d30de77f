use crate::error::{Error, Result};
use crate::partitions::{FamilyTag, IndexSet, OverPartition, PartValue};
use crate::series::{ColorAssignment, ColorIndex, Subst};

/// Degree pruning: pair `(lambda_p, lambda_{p+1})` contributes the colors
/// of conjugate columns `size(lambda_{p+1}) + 1 ..= size(lambda_p)`, all
/// indexed by `p` (reduced mod `reduce` when set), the last one overlined
/// when `lambda_p` is. The degree that survives `assign` is capped by `cap`.
#[derive(Clone, Debug)]
pub struct DegreePrune {
    pub reduce: Option<u64>,
    pub assign: ColorAssignment,
    pub cap: u32,
}

impl DegreePrune {
    fn color(&self, pos: usize, overlined: bool) -> ColorIndex {
        let c = ColorIndex::new(pos as u64, overlined).expect("positions start at 1");
        match self.reduce {
            Some(m) => c.reduce_mod(m),
            None => c,
        }
    }

    fn weight_of(&self, c: ColorIndex, count: u64) -> Option<u64> {
        if count == 0 {
            return Some(0);
        }
        match self.assign.rule(c) {
            Subst::Zero => None,
            Subst::One => Some(0),
            Subst::Keep | Subst::To(_) => Some(count),
        }
    }

    /// Surviving degree of the pair at position `pos`, or `None` when the
    /// monomial is sent to zero.
    fn pair_degree(&self, pos: usize, a: PartValue, b: PartValue) -> Option<u64> {
        let over = u64::from(a.is_overlined());
        let plain = (a.diff(b) as u64) - over;
        Some(self.weight_of(self.color(pos, false), plain)? + self.weight_of(self.color(pos, true), over)?)
    }

    fn tracks_position(&self, pos: usize) -> bool {
        self.assign.tracks(self.color(pos, false)) && self.assign.tracks(self.color(pos, true))
    }
}

/// Over-partitions of a family with S-weight at most `max_s_weight`.
#[derive(Clone, Debug)]
pub struct OverEnum {
    pub family: FamilyTag,
    pub s: IndexSet,
    pub max_s_weight: u64,
    pub prune: Option<DegreePrune>,
}

impl OverEnum {
    pub fn new(family: FamilyTag, s: IndexSet, max_s_weight: u64) -> Self {
        OverEnum {
            family,
            s,
            max_s_weight,
            prune: None,
        }
    }

    pub fn with_prune(mut self, prune: DegreePrune) -> Self {
        self.prune = Some(prune);
        self
    }

    /// Bounds on the largest part and the length, or an error when the
    /// constrained set is infinite.
    ///
    /// Every position at or past `s_{N+1}` must hold 0. With `s_1 = 1` the
    /// largest part is itself weighted; otherwise the positions before `s_1`
    /// only add color degree, so each of their colors must be tracked and
    /// the color cap bounds `lambda_1 - lambda_{s_1}`.
    fn bounds(&self) -> Result<(u64, usize)> {
        let n = self.max_s_weight;
        let end = self.s.nth(n as usize + 1).ok_or_else(|| {
            Error::InfiniteSet(format!(
                "{} has fewer than {} elements, so positions past it are unconstrained",
                self.s,
                n + 1
            ))
        })?;
        let s1 = self.s.try_nth(1)?;
        let mut max_part = n;
        if s1 > 1 {
            let prune = self
                .prune
                .as_ref()
                .ok_or_else(|| Error::InfiniteSet(format!("s_1 = {s1} > 1 needs a finite color cap")))?;
            if let Some(p) = (1..s1 as usize).find(|&p| !prune.tracks_position(p)) {
                return Err(Error::InfiniteSet(format!(
                    "s_1 = {s1} > 1 but the colors at position {p} are specialized away"
                )));
            }
            max_part = n + prune.cap as u64;
        } else if let Some(prune) = &self.prune {
            // with every color of position 1 tracked, lambda_1 <= cap
            if prune.reduce.is_none() && prune.assign.is_identity() {
                max_part = max_part.min(prune.cap as u64);
            }
        }
        Ok((max_part, end as usize - 1))
    }

    /// Calls `visit(lambda, s_weight)` once for every member.
    pub fn for_each(&self, mut visit: impl FnMut(&OverPartition, u64)) -> Result<()> {
        let (max_part, max_len) = self.bounds()?;
        let s_mask: Vec<bool> = (0..=max_len + 1).map(|p| p >= 1 && self.s.contains(p as u64)).collect();
        let mut st = State {
            cfg: self,
            max_len,
            s_mask,
            parts: Vec::new(),
            visit: &mut visit,
        };
        st.fill(PartValue::plain(max_part), true, 0, 0, 0);
        Ok(())
    }

    /// All members, collected.
    pub fn collect(&self) -> Result<Vec<(OverPartition, u64)>> {
        let mut out = Vec::new();
        self.for_each(|l, w| out.push((l.clone(), w)))?;
        Ok(out)
    }
}

struct State<'a, F: FnMut(&OverPartition, u64)> {
    cfg: &'a OverEnum,
    max_len: usize,
    s_mask: Vec<bool>,
    parts: Vec<PartValue>,
    visit: &'a mut F,
}

impl<F: FnMut(&OverPartition, u64)> State<'_, F> {
    /// Whether moving from `a` at position `pos` to `b` keeps the partial
    /// sequence inside the family.
    fn step_ok(&self, pos: usize, a: PartValue, b: PartValue, run: usize) -> bool {
        let fam = self.cfg.family;
        if !b.is_zero() {
            if b.is_overlined() && !fam.allows_overlines() {
                return false;
            }
            if !b.is_overlined() && !fam.allows_plain() {
                return false;
            }
        }
        if let Some(m) = fam.modulus() {
            // run counts plain copies of b's size including b
            if !b.is_zero() && !b.is_overlined() && run as u64 >= m {
                return false;
            }
        }
        if pos == 0 {
            return true;
        }
        match fam {
            FamilyTag::Fbar => a.size() == b.size() || (a.is_overlined() && a.size() == b.size() + 1),
            FamilyTag::FbarM(m) if !(pos as u64).is_multiple_of(m) => a.diff(b) == i64::from(a.is_overlined()),
            _ => true,
        }
    }

    fn fill(&mut self, prev: PartValue, first: bool, weight: u64, degree: u64, run: usize) {
        let pos = self.parts.len() + 1;
        // candidates: zero (ends the sequence), then everything up to prev
        let mut v = PartValue::ZERO;
        loop {
            let allowed = if first {
                v <= prev
            } else {
                v < prev || (v == prev && !prev.is_overlined())
            };
            if !allowed {
                break;
            }
            let b = v;
            v = match next_value(v) {
                Some(n) => n,
                None => break,
            };
            if !b.is_zero() && pos > self.max_len {
                break;
            }
            let new_run = if !first && b == prev { run + 1 } else { 1 };
            let a = if first { PartValue::ZERO } else { prev };
            if !self.step_ok(pos - 1, a, b, new_run) {
                continue;
            }
            let w = weight + if self.s_mask[pos] { b.size() } else { 0 };
            if w > self.cfg.max_s_weight {
                continue;
            }
            let mut d = degree;
            if let (Some(prune), false) = (&self.cfg.prune, first) {
                match prune.pair_degree(pos - 1, a, b) {
                    Some(x) => d += x,
                    None => continue,
                }
                if d > prune.cap as u64 {
                    continue;
                }
            }
            if b.is_zero() {
                let lambda = OverPartition::from_parts_unchecked(self.parts.clone());
                debug_assert!(self.cfg.family.contains(&lambda));
                (self.visit)(&lambda, w);
                continue;
            }
            self.parts.push(b);
            self.fill(b, false, w, d, new_run);
            self.parts.pop();
        }
    }
}

/// Successor in the part order: `0 < 1~ < 1 < 2~ < ...`.
fn next_value(v: PartValue) -> Option<PartValue> {
    Some(if v.is_overlined() {
        PartValue::plain(v.size())
    } else {
        PartValue::bar(v.size() + 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(family: FamilyTag, s: IndexSet, n: u64) -> Vec<usize> {
        let mut per = vec![0; n as usize + 1];
        OverEnum::new(family, s, n)
            .for_each(|_, w| per[w as usize] += 1)
            .unwrap();
        per
    }

    #[test]
    fn partitions_of_small_weights() {
        assert_eq!(count(FamilyTag::P, IndexSet::all(), 7), vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(count(FamilyTag::Dbar, IndexSet::all(), 6), vec![1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(count(FamilyTag::Pbar, IndexSet::all(), 5), vec![1, 2, 4, 8, 14, 24]);
    }

    #[test]
    fn distinct_parts_by_odd_index_weight() {
        let all = OverEnum::new(FamilyTag::Dbar, IndexSet::odds(), 3).collect().unwrap();
        let three: Vec<String> = all
            .iter()
            .filter(|(_, w)| *w == 3)
            .map(|(l, _)| l.to_string())
            .collect();
        assert_eq!(three, vec!["(3~)", "(3~,1~)", "(3~,2~)"]);
    }

    #[test]
    fn finite_index_set_is_infinite() {
        let s = IndexSet::list(vec![1, 2]).unwrap();
        assert!(matches!(
            OverEnum::new(FamilyTag::P, s, 3).collect(),
            Err(Error::InfiniteSet(_))
        ));
        let s = IndexSet::list(vec![2, 4, 6, 8]).unwrap();
        assert!(matches!(
            OverEnum::new(FamilyTag::P, s, 3).collect(),
            Err(Error::InfiniteSet(_))
        ));
    }
}
