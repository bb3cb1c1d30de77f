//! Block over-partitions of type `U` and their encoding by permutations.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{IndexSet, OverPartition, PartSeq, PartValue};

/// A sequence of block lengths `u_1, u_2, ...`: a finite prefix followed by
/// a tail repeated forever.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct BlockType {
    prefix: Vec<u64>,
    tail: Vec<u64>,
    unk: Option<(u64, u64)>,
}

impl BlockType {
    pub fn new(prefix: Vec<u64>, tail: Vec<u64>) -> Result<Self> {
        if tail.is_empty() {
            return Err(Error::InvalidParams(
                "block type needs a non-empty repeating tail".into(),
            ));
        }
        if prefix.iter().chain(&tail).any(|&u| u == 0) {
            return Err(Error::InvalidParams("block lengths must be positive".into()));
        }
        Ok(BlockType {
            prefix,
            tail,
            unk: None,
        })
    }

    /// `U_{n,k}`: `u_{1+i(k+1)} = 1` and `u_{j+i(k+1)} = n` for `2 <= j <= k+1`.
    pub fn unk(n: u64, k: u64) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidParams(format!("Unk needs n, k >= 1, got ({n},{k})")));
        }
        let mut tail = vec![1];
        tail.extend(std::iter::repeat_n(n, k as usize));
        Ok(BlockType {
            prefix: Vec::new(),
            tail,
            unk: Some((n, k)),
        })
    }

    /// `(n, k)` when built by [`BlockType::unk`].
    pub fn unk_params(&self) -> Option<(u64, u64)> {
        self.unk
    }

    /// `u_n` for `n >= 1`.
    pub fn u(&self, n: usize) -> u64 {
        assert!(n >= 1, "blocks are 1-based");
        if n <= self.prefix.len() {
            self.prefix[n - 1]
        } else {
            self.tail[(n - 1 - self.prefix.len()) % self.tail.len()]
        }
    }

    /// `U_n = u_1 + ... + u_n`, with `U_0 = 0`.
    pub fn end(&self, n: usize) -> u64 {
        (1..=n).map(|i| self.u(i)).sum()
    }

    /// Positions `U_{n-1}+1 ..= U_n` of block `n`.
    pub fn block_range(&self, n: usize) -> std::ops::RangeInclusive<usize> {
        let start = self.end(n - 1) as usize + 1;
        start..=start + self.u(n) as usize - 1
    }

    /// The block containing position `j >= 1`.
    pub fn block_of(&self, j: usize) -> usize {
        let mut n = 1;
        let mut end = self.u(1) as usize;
        while end < j {
            n += 1;
            end += self.u(n) as usize;
        }
        n
    }

    /// `{U_n : u_n = 1}`, the ends of the singleton blocks.
    pub fn singleton_ends(&self) -> IndexSet {
        if !self.tail.contains(&1) {
            let ends: Vec<u64> = (1..=self.prefix.len())
                .filter(|&n| self.u(n) == 1)
                .map(|n| self.end(n))
                .collect();
            return IndexSet::list(ends).expect("block ends increase");
        }
        let me = self.clone();
        IndexSet::generated(format!("ends({me})"), move |k| {
            let (mut n, mut found, mut end) = (0usize, 0usize, 0u64);
            loop {
                n += 1;
                end += me.u(n);
                if me.u(n) == 1 {
                    found += 1;
                    if found == k {
                        return end;
                    }
                }
            }
        })
    }

    /// Checks that every element of `s` up to `limit` ends a singleton block.
    pub fn check_singleton_set(&self, s: &IndexSet, limit: u64) -> Result<()> {
        for k in 1.. {
            let Some(v) = s.nth(k) else { break };
            if v > limit {
                break;
            }
            let n = self.block_of(v as usize);
            if self.u(n) != 1 {
                return Err(Error::InvalidParams(format!(
                    "{v} in {s} is not the end of a singleton block of {self}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((n, k)) = self.unk {
            return write!(f, "Unk({n},{k})");
        }
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        if self.prefix.is_empty() {
            write!(f, "U=({})*", join(&self.tail))
        } else {
            write!(f, "U={},({})*", join(&self.prefix), join(&self.tail))
        }
    }
}

impl FromStr for BlockType {
    type Err = Error;

    /// `U=1,(2)*`, `1,2,(2,1)*`, `Unk(2,1)` or `U(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad block type `{s}`"));
        let nums = |t: &str| -> Result<Vec<u64>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u64>().map_err(|_| bad()))
                .collect()
        };
        for head in ["Unk(", "U("] {
            if let Some(args) = s.strip_prefix(head).and_then(|r| r.strip_suffix(')')) {
                let v = nums(args)?;
                let [n, k] = v[..] else { return Err(bad()) };
                return BlockType::unk(n, k);
            }
        }
        let body = s.strip_prefix("U=").unwrap_or(s);
        let open = body.find('(').ok_or_else(bad)?;
        let tail = body[open..]
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(")*"))
            .ok_or_else(bad)?;
        BlockType::new(nums(body[..open].trim_end_matches([',', ' ']))?, nums(tail)?)
    }
}

/// The three block families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BlockFamily {
    Pbar,
    P,
    Dbar,
}

impl fmt::Display for BlockFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockFamily::Pbar => "Pbar(U)",
            BlockFamily::P => "P(U)",
            BlockFamily::Dbar => "Dbar(U)",
        })
    }
}

fn block_parts(lambda: &PartSeq, u: &BlockType, n: usize) -> Vec<PartValue> {
    u.block_range(n).map(|j| lambda.get(j)).collect()
}

/// Membership in `Pbar(U)`, `P(U)` or `Dbar(U)`.
pub fn is_block_member(lambda: &PartSeq, u: &BlockType, family: BlockFamily) -> bool {
    if family == BlockFamily::P && lambda.parts().iter().any(|p| p.is_overlined()) {
        return false;
    }
    let mut n = 1;
    loop {
        let here = block_parts(lambda, u, n);
        let next = block_parts(lambda, u, n + 1);
        let lo = *here.iter().min().expect("blocks are non-empty");
        let hi = *next.iter().max().expect("blocks are non-empty");
        if lo < hi {
            return false;
        }
        if family == BlockFamily::Dbar && !lo.is_zero() && lo.diff(hi) <= 0 {
            return false;
        }
        if u.end(n) as usize >= lambda.len() {
            return true;
        }
        n += 1;
    }
}

fn check_over_composition(lambda: &[PartValue]) -> Result<()> {
    let mut bars = HashSet::new();
    for (i, p) in lambda.iter().enumerate() {
        if p.is_overlined() {
            if !bars.insert(p.size()) {
                return Err(Error::InvalidPartSeq(format!("{p} repeated in over-composition")));
            }
            if lambda[i + 1..]
                .iter()
                .any(|q| !q.is_overlined() && q.size() == p.size())
            {
                return Err(Error::InvalidPartSeq(format!("{p} precedes a plain {}", p.size())));
            }
        }
    }
    Ok(())
}

/// `Gamma_u`: an over-composition to `(sigma, mu)` with `mu` its parts in
/// non-increasing order and `mu_r = lambda_{sigma(r)}`.
///
/// `sigma^{-1}(i) = #{j : size(lambda_j) > size(lambda_i)} + #{j <= i : size(lambda_j) = size(lambda_i)}`.
/// Permutations are stored as `sigma[r - 1] = sigma(r)`.
pub fn gamma_u(lambda: &[PartValue]) -> Result<(Vec<usize>, Vec<PartValue>)> {
    check_over_composition(lambda)?;
    let u = lambda.len();
    let mut sigma = vec![0usize; u];
    for i in 0..u {
        let a = lambda[i];
        let bigger = lambda.iter().filter(|b| b.diff(a) > 0).count();
        let ties = lambda[..=i].iter().filter(|b| b.diff(a) == 0).count();
        sigma[bigger + ties - 1] = i + 1;
    }
    let mu = sigma.iter().map(|&i| lambda[i - 1]).collect();
    Ok((sigma, mu))
}

fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &v in sigma {
        if v == 0 || v > sigma.len() || std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::InvalidParams(format!("{sigma:?} is not a permutation")));
        }
    }
    Ok(())
}

/// `mu_r - mu_{r+1} > 0` at every descent `sigma(r) > sigma(r+1)`.
pub fn is_sigma_admissible_block(sigma: &[usize], mu: &[PartValue]) -> bool {
    sigma.len() == mu.len() && (1..sigma.len()).all(|r| sigma[r - 1] < sigma[r] || mu[r - 1].diff(mu[r]) > 0)
}

/// Inverse of [`gamma_u`]: `lambda_i = mu_{sigma^{-1}(i)}`.
pub fn gamma_u_inverse(sigma: &[usize], mu: &[PartValue]) -> Result<Vec<PartValue>> {
    check_permutation(sigma)?;
    check_over_composition(mu)?;
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotOverPartition(format!("{mu:?} is not non-increasing")));
    }
    if !is_sigma_admissible_block(sigma, mu) {
        return Err(Error::InvalidParams(format!("{mu:?} is not admissible for {sigma:?}")));
    }
    let mut lambda = vec![PartValue::ZERO; mu.len()];
    for (r, &i) in sigma.iter().enumerate() {
        lambda[i - 1] = mu[r];
    }
    Ok(lambda)
}

/// A sequence of per-block permutations, identity from some block on.
/// Only the blocks before that point are stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct PermSeq {
    blocks: Vec<Vec<usize>>,
}

impl PermSeq {
    pub fn identity() -> Self {
        PermSeq::default()
    }

    pub fn new(mut blocks: Vec<Vec<usize>>, u: &BlockType) -> Result<Self> {
        for (n, sigma) in blocks.iter().enumerate() {
            check_permutation(sigma)?;
            if sigma.len() as u64 != u.u(n + 1) {
                return Err(Error::InvalidParams(format!(
                    "block {} has length {} but sigma has {}",
                    n + 1,
                    u.u(n + 1),
                    sigma.len()
                )));
            }
        }
        while blocks
            .last()
            .is_some_and(|s| s.iter().enumerate().all(|(r, &v)| v == r + 1))
        {
            blocks.pop();
        }
        Ok(PermSeq { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Positions `j` with `Sigma(j) > Sigma(j+1)`; never a block boundary.
    pub fn descents(&self, u: &BlockType) -> Vec<usize> {
        let last = u.end(self.blocks.len()) as usize;
        (1..last)
            .filter(|&j| sigma_of_index(self, u, j) > sigma_of_index(self, u, j + 1))
            .collect()
    }
}

/// `Sigma(j) = U_{i-1} + sigma_i(j - U_{i-1})` for `j` in block `i`.
pub fn sigma_of_index(sigma: &PermSeq, u: &BlockType, j: usize) -> usize {
    let n = u.block_of(j);
    match sigma.blocks.get(n - 1) {
        Some(s) => {
            let start = u.end(n - 1) as usize;
            start + s[j - start - 1]
        }
        None => j,
    }
}

/// `Gamma_U`: per-block [`gamma_u`]; the second component is the parts
/// sorted, which is also the double conjugate.
pub fn gamma_big_u(lambda: &PartSeq, u: &BlockType) -> Result<(PermSeq, OverPartition)> {
    if !is_block_member(lambda, u, BlockFamily::Pbar) {
        return Err(Error::InvalidPartSeq(format!(
            "{lambda} is not a block over-partition of type {u}"
        )));
    }
    let mut blocks = Vec::new();
    let mut mu = Vec::new();
    let mut n = 1;
    while (u.end(n - 1) as usize) < lambda.len() {
        let (sigma, sorted) = gamma_u(&block_parts(lambda, u, n))?;
        blocks.push(sigma);
        mu.extend(sorted);
        n += 1;
    }
    Ok((PermSeq::new(blocks, u)?, OverPartition::new(mu)?))
}

/// Inverse of [`gamma_big_u`] on admissible pairs.
pub fn gamma_big_u_inverse(sigma: &PermSeq, mu: &OverPartition, u: &BlockType) -> Result<PartSeq> {
    if !is_sigma_admissible(sigma, u, mu) {
        return Err(Error::InvalidParams(format!("{mu} is not admissible for {sigma:?}")));
    }
    let mut out = Vec::new();
    let mut n = 1;
    while (u.end(n - 1) as usize) < mu.len().max(u.end(sigma.blocks.len()) as usize) {
        let part = block_parts(mu, u, n);
        match sigma.blocks.get(n - 1) {
            Some(s) => out.extend(gamma_u_inverse(s, &part)?),
            None => out.extend(part),
        }
        n += 1;
    }
    PartSeq::new(out)
}

/// `lambda_j - lambda_{j+1} > 0` at every descent of `Sigma`.
pub fn is_sigma_admissible(sigma: &PermSeq, u: &BlockType, lambda: &OverPartition) -> bool {
    sigma
        .descents(u)
        .into_iter()
        .all(|j| lambda.get(j).diff(lambda.get(j + 1)) > 0)
}

/// `lambda` has a part of size `j` for every descent `j` of `Sigma`.
pub fn is_sigma_sizable(sigma: &PermSeq, u: &BlockType, lambda: &OverPartition) -> bool {
    sigma
        .descents(u)
        .into_iter()
        .all(|j| lambda.parts().iter().any(|p| p.size() == j as u64))
}
