use crate::blocks::{is_block_member, BlockFamily, BlockType};
use crate::colored::color_sequence;
use crate::error::{Error, Result};
use crate::oracle::CountTable;
use crate::partitions::{IndexSet, PartSeq, PartValue};
use crate::series::{Caps, ColorAssignment, Monomial, Var};

/// Block over-partitions of type `u` in one of the block families, with
/// S-weight at most `max_s_weight`.
#[derive(Clone, Debug)]
pub struct BlockEnum {
    pub u: BlockType,
    pub family: BlockFamily,
    pub s: IndexSet,
    pub max_s_weight: u64,
    /// Bound on the largest part when the first block is not weighted.
    pub max_part: Option<u64>,
}

impl BlockEnum {
    pub fn new(u: BlockType, family: BlockFamily, s: IndexSet, max_s_weight: u64) -> Self {
        BlockEnum {
            u,
            family,
            s,
            max_s_weight,
            max_part: None,
        }
    }

    /// Some block up to the one holding `s_{N+1}` has minimum 0, so
    /// nothing past that block is non-zero.
    fn bounds(&self) -> Result<(u64, usize, usize)> {
        let n = self.max_s_weight;
        let p = self
            .s
            .nth(n as usize + 1)
            .ok_or_else(|| Error::InfiniteSet(format!("{} has fewer than {} elements", self.s, n + 1)))?;
        let last_block = self.u.block_of(p as usize);
        let first_weighted = self.u.block_range(1).all(|j| self.s.contains(j as u64));
        let max_part = match (first_weighted, self.max_part) {
            (true, Some(m)) => n.min(m),
            (true, None) => n,
            (false, Some(m)) => m,
            (false, None) => {
                return Err(Error::InfiniteSet(format!(
                    "the first block of {} is not inside {} and no part bound is set",
                    self.u, self.s
                )))
            }
        };
        Ok((max_part, last_block, self.u.end(last_block) as usize))
    }

    pub fn for_each(&self, mut visit: impl FnMut(&PartSeq, u64)) -> Result<()> {
        let (max_part, last_block, max_len) = self.bounds()?;
        let mut st = State {
            cfg: self,
            last_block,
            in_s: (0..=max_len).map(|j| j >= 1 && self.s.contains(j as u64)).collect(),
            block_end: (0..=max_len)
                .map(|j| j >= 1 && self.u.end(self.u.block_of(j.max(1))) as usize == j)
                .collect(),
            used_bar: vec![false; max_part as usize + 1],
            parts: Vec::new(),
            visit: &mut visit,
        };
        st.fill(1, 1, PartValue::plain(max_part), None, 0);
        Ok(())
    }

    pub fn collect(&self) -> Result<Vec<(PartSeq, u64)>> {
        let mut out = Vec::new();
        self.for_each(|l, w| out.push((l.clone(), w)))?;
        Ok(out)
    }
}

struct State<'a, F: FnMut(&PartSeq, u64)> {
    cfg: &'a BlockEnum,
    last_block: usize,
    in_s: Vec<bool>,
    block_end: Vec<bool>,
    used_bar: Vec<bool>,
    parts: Vec<PartValue>,
    visit: &'a mut F,
}

impl<F: FnMut(&PartSeq, u64)> State<'_, F> {
    fn fill(&mut self, pos: usize, block: usize, bound: PartValue, block_min: Option<PartValue>, weight: u64) {
        let mut v = PartValue::ZERO;
        while v <= bound {
            let b = v;
            v = if v.is_overlined() {
                PartValue::plain(v.size())
            } else {
                PartValue::bar(v.size() + 1)
            };
            if b.is_overlined() {
                if self.cfg.family == BlockFamily::P || self.used_bar[b.size() as usize] {
                    continue;
                }
            } else if !b.is_zero() && self.used_bar[b.size() as usize] {
                continue;
            }
            let w = weight + if self.in_s[pos] { b.size() } else { 0 };
            if w > self.cfg.max_s_weight {
                continue;
            }
            self.parts.push(b);
            if b.is_overlined() {
                self.used_bar[b.size() as usize] = true;
            }
            let min = block_min.map_or(b, |m| m.min(b));
            if !self.block_end[pos] {
                self.fill(pos + 1, block, bound, Some(min), w);
            } else if min.is_zero() {
                let lambda = PartSeq::new(self.parts.clone()).expect("validity is maintained");
                debug_assert!(is_block_member(&lambda, &self.cfg.u, self.cfg.family));
                (self.visit)(&lambda, w);
            } else if block < self.last_block {
                let next = match self.cfg.family {
                    BlockFamily::Dbar => PartValue::plain(min.size() - 1),
                    _ => min,
                };
                self.fill(pos + 1, block + 1, next, None, w);
            }
            if b.is_overlined() {
                self.used_bar[b.size() as usize] = false;
            }
            self.parts.pop();
        }
    }
}

/// Left-hand side table for the block families: monomial `C(lambda)` with
/// colors reduced mod `reduce` when set, then specialized by `assign`.
pub fn block_table(e: &BlockEnum, reduce: Option<u64>, assign: &ColorAssignment, caps: Caps) -> Result<CountTable> {
    let mut e = e.clone();
    e.max_s_weight = caps.q as u64;
    if let (Some(d), true) = (caps.color, assign.is_identity()) {
        // the degree of C(lambda) is the largest part
        e.max_part = Some(e.max_part.map_or(d as u64, |m| m.min(d as u64)));
    }
    let mut table = CountTable::new(caps);
    e.for_each(|lambda, w| {
        let c = color_sequence(lambda);
        let c = match reduce {
            Some(m) => Monomial::from_powers(c.powers().iter().map(|&(v, k)| match v {
                Var::Color(x) => (Var::Color(x.reduce_mod(m)), k),
                other => (other, k),
            })),
            None => c,
        };
        if let Some(m) = assign.apply_monomial(&c) {
            table.add(w, m);
        }
    })?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::all_part_seqs;

    #[test]
    fn matches_naive_filter() {
        let types = ["U=(1)*", "U=(2)*", "U=1,(2)*", "Unk(2,1)", "Unk(1,2)", "U=2,(1,3)*"];
        for text in types {
            let u: BlockType = text.parse().unwrap();
            for family in [BlockFamily::Pbar, BlockFamily::P, BlockFamily::Dbar] {
                for s in [IndexSet::all(), u.singleton_ends()] {
                    if s.nth(1).is_none() {
                        continue;
                    }
                    let mut e = BlockEnum::new(u.clone(), family, s.clone(), 3);
                    e.max_part = Some(3);
                    let Ok(got) = e.collect() else { continue };
                    let mut got: Vec<_> = got.into_iter().map(|(l, _)| l).collect();
                    got.sort();
                    let max_len = e.bounds().unwrap().2;
                    if max_len > 7 {
                        continue;
                    }
                    let want: Vec<PartSeq> = all_part_seqs(max_len, 3)
                        .into_iter()
                        .filter(|l| is_block_member(l, &u, family) && l.s_weight(&s) <= 3)
                        .collect();
                    assert_eq!(got, want, "{text} {family} {s}");
                }
            }
        }
    }

    #[test]
    fn single_blocks_are_over_partitions() {
        let u: BlockType = "U=(1)*".parse().unwrap();
        let counts = |f| {
            let mut per = [0; 6];
            BlockEnum::new(u.clone(), f, IndexSet::all(), 5)
                .for_each(|_, w| per[w as usize] += 1)
                .unwrap();
            per
        };
        assert_eq!(counts(BlockFamily::Pbar), [1, 2, 4, 8, 14, 24]);
        assert_eq!(counts(BlockFamily::P), [1, 1, 2, 3, 5, 7]);
    }
}
