use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;

use crate::blocks::{
    gamma_big_u, gamma_big_u_inverse, gamma_u, gamma_u_inverse, is_block_member, is_sigma_admissible,
    is_sigma_admissible_block, is_sigma_sizable, BlockFamily, BlockType, PermSeq,
};
use crate::colored::{color_sequence, phi_s, phi_s_inverse};
use crate::error::{Error, Result};
use crate::oracle::{BlockEnum, OverEnum};
use crate::partitions::{FamilyTag, IndexSet, OverPartition, PartValue};

/// One failed check: the weight of the object, the object, and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub weight: u64,
    pub object: String,
    pub reason: String,
}

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, Default)]
pub struct Sweep {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Sweep {
    fn flag(&mut self, weight: u64, object: impl ToString, reason: impl Into<String>) {
        self.violations.push(Violation {
            weight,
            object: object.to_string(),
            reason: reason.into(),
        });
    }
}

fn over_partitions(max_weight: u64) -> Result<Vec<(OverPartition, u64)>> {
    OverEnum::new(FamilyTag::Pbar, IndexSet::all(), max_weight).collect()
}

/// Conjugation is a weight-preserving involution on over-partitions.
pub fn conjugate_involution(max_weight: u64) -> Result<Sweep> {
    let mut sw = Sweep::default();
    for (lambda, w) in over_partitions(max_weight)? {
        sw.checked += 1;
        let mu = lambda.conjugate();
        if mu.weight() != w {
            sw.flag(w, &lambda, format!("conjugate {mu} has weight {}", mu.weight()));
        }
        if mu.conjugate() != lambda {
            sw.flag(w, &lambda, format!("conjugate of {mu} is {}", mu.conjugate()));
        }
    }
    Ok(sw)
}

/// `Phi_S` is injective, inverted by [`phi_s_inverse`], and carries the
/// S-weight to the colored weight and `C(lambda)` to its monomial.
pub fn phi_s_bijection(s: &IndexSet, max_s_weight: u64) -> Result<Sweep> {
    if s.nth(1) != Some(1) {
        return Err(Error::InfiniteSet(format!(
            "{s} does not start at 1, so the S-weight does not bound the parts"
        )));
    }
    let mut sw = Sweep::default();
    let mut seen = HashSet::new();
    for (lambda, w) in OverEnum::new(FamilyTag::Pbar, s.clone(), max_s_weight).collect()? {
        sw.checked += 1;
        let mu = phi_s(&lambda, s);
        if mu.weight() != w {
            sw.flag(w, &lambda, format!("{mu} has weight {}", mu.weight()));
        }
        if mu.monomial() != color_sequence(&lambda) {
            sw.flag(w, &lambda, format!("{mu} has monomial {}", mu.monomial()));
        }
        match phi_s_inverse(&mu) {
            Ok(back) if back == lambda => {}
            Ok(back) => sw.flag(w, &lambda, format!("inverse gives {back}")),
            Err(e) => sw.flag(w, &lambda, format!("inverse fails: {e}")),
        }
        if !seen.insert(mu.to_string()) {
            sw.flag(w, &lambda, format!("{mu} is hit twice"));
        }
    }
    Ok(sw)
}

fn values_up_to(max_size: u64) -> Vec<PartValue> {
    let mut v = vec![PartValue::ZERO];
    for k in 1..=max_size {
        v.push(PartValue::bar(k));
        v.push(PartValue::plain(k));
    }
    v
}

/// `Gamma_u` round trip, sortedness and admissibility on every
/// over-composition of length at most `max_u` with sizes at most
/// `max_size`, and equal counts of over-compositions and admissible pairs.
pub fn gamma_u_bijection(max_u: usize, max_size: u64) -> Result<Sweep> {
    let mut sw = Sweep::default();
    let values = values_up_to(max_size);
    for u in 1..=max_u {
        let mut images = HashSet::new();
        let mut count = 0usize;
        for lambda in (0..u).map(|_| values.iter().copied()).multi_cartesian_product() {
            let Ok((sigma, mu)) = gamma_u(&lambda) else { continue };
            count += 1;
            sw.checked += 1;
            let w = lambda.iter().map(|p| p.size()).sum();
            let text = format!("{lambda:?}");
            if mu.windows(2).any(|p| p[0] < p[1]) {
                sw.flag(w, &text, format!("{mu:?} is not sorted"));
            }
            if !is_sigma_admissible_block(&sigma, &mu) {
                sw.flag(w, &text, format!("{mu:?} is not admissible for {sigma:?}"));
            }
            match gamma_u_inverse(&sigma, &mu) {
                Ok(back) if back == lambda => {}
                Ok(back) => sw.flag(w, &text, format!("inverse gives {back:?}")),
                Err(e) => sw.flag(w, &text, format!("inverse fails: {e}")),
            }
            if !images.insert((sigma, mu)) {
                sw.flag(w, &text, "image hit twice");
            }
        }
        let mut pairs = 0usize;
        let sorted = (0..u)
            .map(|_| values.iter().copied())
            .multi_cartesian_product()
            .filter(|mu| mu.windows(2).all(|p| p[0] >= p[1]) && gamma_u(mu).is_ok());
        let perms: Vec<Vec<usize>> = (1..=u).permutations(u).collect();
        for mu in sorted {
            pairs += perms.iter().filter(|s| is_sigma_admissible_block(s, &mu)).count();
        }
        if pairs != count {
            sw.flag(
                0,
                format!("u = {u}"),
                format!("{count} over-compositions but {pairs} admissible pairs"),
            );
        }
    }
    Ok(sw)
}

/// Permutation sequences over the blocks covering positions `1..=last`
/// whose descents `j` all satisfy `allowed(j)`.
fn perm_seqs(u: &BlockType, last: usize, allowed: impl Fn(usize) -> bool) -> Result<Vec<PermSeq>> {
    if last == 0 {
        return Ok(vec![PermSeq::identity()]);
    }
    let blocks = u.block_of(last);
    let mut choices = Vec::with_capacity(blocks);
    for n in 1..=blocks {
        let start = u.end(n - 1) as usize;
        let size = u.u(n) as usize;
        let ok: Vec<Vec<usize>> = (1..=size)
            .permutations(size)
            .filter(|s| (1..size).all(|r| s[r - 1] < s[r] || allowed(start + r)))
            .collect();
        choices.push(ok);
    }
    choices
        .into_iter()
        .multi_cartesian_product()
        .map(|b| PermSeq::new(b, u))
        .collect()
}

fn admissible_seqs(u: &BlockType, lambda: &OverPartition) -> Result<Vec<PermSeq>> {
    perm_seqs(u, lambda.len(), |j| lambda.get(j).diff(lambda.get(j + 1)) > 0)
}

fn sizable_seqs(u: &BlockType, lambda: &OverPartition) -> Result<Vec<PermSeq>> {
    perm_seqs(u, lambda.max_size() as usize, |j| {
        lambda.parts().iter().any(|p| p.size() == j as u64)
    })
}

/// `Gamma_U` on every block over-partition of type `u` with weight at most
/// `max_weight`: the second component is the double conjugate, the pair is
/// admissible, the inverse recovers the input, and the number of admissible
/// pairs per weight matches.
pub fn gamma_big_u_bijection(u: &BlockType, max_weight: u64) -> Result<Sweep> {
    let mut sw = Sweep::default();
    let mut per_weight: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    let mut images = HashSet::new();
    for (lambda, w) in BlockEnum::new(u.clone(), BlockFamily::Pbar, IndexSet::all(), max_weight).collect()? {
        sw.checked += 1;
        per_weight.entry(w).or_default().0 += 1;
        let (sigma, mu) = gamma_big_u(&lambda, u)?;
        if mu != lambda.conjugate().conjugate() {
            sw.flag(w, &lambda, format!("{mu} is not the double conjugate"));
        }
        if !is_sigma_admissible(&sigma, u, &mu) {
            sw.flag(w, &lambda, format!("{mu} is not admissible for {sigma:?}"));
        }
        match gamma_big_u_inverse(&sigma, &mu, u) {
            Ok(back) if back == lambda => {}
            Ok(back) => sw.flag(w, &lambda, format!("inverse gives {back}")),
            Err(e) => sw.flag(w, &lambda, format!("inverse fails: {e}")),
        }
        if !images.insert((sigma, mu)) {
            sw.flag(w, &lambda, "image hit twice");
        }
    }
    for (mu, w) in over_partitions(max_weight)? {
        for sigma in admissible_seqs(u, &mu)? {
            per_weight.entry(w).or_default().1 += 1;
            if let Ok(lambda) = gamma_big_u_inverse(&sigma, &mu, u) {
                if !is_block_member(&lambda, u, BlockFamily::Pbar) {
                    sw.flag(
                        w,
                        &mu,
                        format!("preimage {lambda} under {sigma:?} is not a block over-partition"),
                    );
                }
            }
        }
    }
    for (w, (blocks, pairs)) in per_weight {
        if blocks != pairs {
            sw.flag(
                w,
                format!("weight {w}"),
                format!("{blocks} block over-partitions but {pairs} admissible pairs"),
            );
        }
    }
    Ok(sw)
}

/// `(Sigma, lambda)` is admissible exactly when `(Sigma, conj lambda)` is
/// sizable, and both kinds of pair have the same count per weight.
pub fn admissible_sizable_transport(u: &BlockType, max_weight: u64) -> Result<Sweep> {
    let mut sw = Sweep::default();
    let mut per_weight: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for (lambda, w) in over_partitions(max_weight)? {
        let conj = lambda.conjugate();
        for sigma in admissible_seqs(u, &lambda)? {
            sw.checked += 1;
            per_weight.entry(w).or_default().0 += 1;
            if !is_sigma_sizable(&sigma, u, &conj) {
                sw.flag(
                    w,
                    &lambda,
                    format!("admissible for {sigma:?} but {conj} is not sizable"),
                );
            }
        }
        for sigma in sizable_seqs(u, &lambda)? {
            sw.checked += 1;
            per_weight.entry(w).or_default().1 += 1;
            if !is_sigma_admissible(&sigma, u, &conj) {
                sw.flag(
                    w,
                    &lambda,
                    format!("sizable for {sigma:?} but {conj} is not admissible"),
                );
            }
        }
    }
    for (w, (adm, siz)) in per_weight {
        if adm != siz {
            sw.flag(
                w,
                format!("weight {w}"),
                format!("{adm} admissible pairs but {siz} sizable pairs"),
            );
        }
    }
    Ok(sw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_are_clean() {
        let u: BlockType = "U=1,(2)*".parse().unwrap();
        for sw in [
            conjugate_involution(8).unwrap(),
            phi_s_bijection(&IndexSet::tri1(), 6).unwrap(),
            gamma_u_bijection(3, 2).unwrap(),
            gamma_big_u_bijection(&u, 6).unwrap(),
            admissible_sizable_transport(&u, 6).unwrap(),
        ] {
            assert!(sw.checked > 0);
            assert_eq!(sw.violations, vec![]);
        }
    }

    #[test]
    fn perm_seqs_respect_allowed_descents() {
        let u: BlockType = "U=(2)*".parse().unwrap();
        assert_eq!(perm_seqs(&u, 4, |_| true).unwrap().len(), 4);
        assert_eq!(perm_seqs(&u, 4, |j| j == 1).unwrap().len(), 2);
        assert_eq!(perm_seqs(&u, 0, |_| true).unwrap(), vec![PermSeq::identity()]);
    }
}
