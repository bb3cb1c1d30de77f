//! Index sets `S = {s_1 < s_2 < ...}` of positive integers.
//!
//! Sets are described by a generator and materialised lazily: the prefix
//! cache grows on demand and is shared between clones behind a lock, so
//! concurrent `count_leq` calls observe the same answers as sequential ones.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::partitions::PartValue;

/// Periodic index set data: `1 <= s_1 < ... < s_t <= m`, extended by
/// `s_{u+t} = s_u + m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMShape {
    m: u64,
    s: Vec<u64>,
}

impl ModMShape {
    pub fn new(m: u64, s: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("m must be positive".into()));
        }
        if s.is_empty() || s.len() as u64 > m {
            return Err(Error::InvalidParams(format!(
                "need 1 <= t <= m, got t = {} with m = {m}",
                s.len()
            )));
        }
        if s[0] < 1 || *s.last().unwrap() > m || s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams(format!(
                "need 1 <= s_1 < ... < s_t <= m, got {s:?} with m = {m}"
            )));
        }
        Ok(ModMShape { m, s })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.s.len() as u64
    }

    pub fn s(&self) -> &[u64] {
        &self.s
    }

    /// `s_k` for `k >= 1`.
    pub fn nth(&self, k: usize) -> u64 {
        let t = self.s.len();
        let (q, r) = ((k - 1) / t, (k - 1) % t);
        self.s[r] + q as u64 * self.m
    }

    /// The q-shift attached to residue color `r` in `1..=m`: `0` below
    /// `s_1`, `v` on `s_v <= r < s_{v+1}`, and `t` from `s_t` on.
    pub fn residue_shift(&self, r: u64) -> u64 {
        self.s.iter().filter(|&&s| s <= r).count() as u64
    }

    pub fn index_set(&self) -> IndexSet {
        IndexSet::from_kind(Kind::ModM(self.clone()))
    }
}

impl fmt::Display for ModMShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.s.iter().map(u64::to_string).collect();
        write!(f, "modm:m={},t={},s={}", self.m, self.s.len(), s.join(","))
    }
}

type Generator = Arc<dyn Fn(usize) -> u64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    All,
    Odds,
    Tri1,
    Tri,
    Squares,
    Fib,
    Pow2,
    ModM(ModMShape),
    List(Vec<u64>),
    Generated { label: String, nth: Generator },
}

struct Inner {
    kind: Kind,
    cache: RwLock<Vec<u64>>,
}

/// A strictly increasing set of positive indices.
#[derive(Clone)]
pub struct IndexSet(Arc<Inner>);

impl IndexSet {
    fn from_kind(kind: Kind) -> Self {
        IndexSet(Arc::new(Inner {
            kind,
            cache: RwLock::new(Vec::new()),
        }))
    }

    /// All positive integers; the S-weight is then the ordinary weight.
    pub fn all() -> Self {
        Self::from_kind(Kind::All)
    }

    pub fn odds() -> Self {
        Self::from_kind(Kind::Odds)
    }

    /// `n(n-1)/2 + 1`: 1, 2, 4, 7, 11, ...
    pub fn tri1() -> Self {
        Self::from_kind(Kind::Tri1)
    }

    /// `n(n+1)/2`: 1, 3, 6, 10, ...
    pub fn tri() -> Self {
        Self::from_kind(Kind::Tri)
    }

    pub fn squares() -> Self {
        Self::from_kind(Kind::Squares)
    }

    /// `F_{n+1}`: 1, 2, 3, 5, 8, ...
    pub fn fib() -> Self {
        Self::from_kind(Kind::Fib)
    }

    /// `2^{n-1}`: 1, 2, 4, 8, ...
    pub fn pow2() -> Self {
        Self::from_kind(Kind::Pow2)
    }

    pub fn mod_m(shape: ModMShape) -> Self {
        Self::from_kind(Kind::ModM(shape))
    }

    /// A finite set. Queries past its last element report exhaustion.
    pub fn list(values: Vec<u64>) -> Result<Self> {
        if values.first() == Some(&0) || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams(
                "list index set must be strictly increasing and positive".into(),
            ));
        }
        Ok(Self::from_kind(Kind::List(values)))
    }

    /// An infinite set given by `nth(k) = s_k` (1-based). The caller
    /// guarantees the sequence is strictly increasing and positive.
    pub fn generated(label: impl Into<String>, nth: impl Fn(usize) -> u64 + Send + Sync + 'static) -> Self {
        Self::from_kind(Kind::Generated {
            label: label.into(),
            nth: Arc::new(nth),
        })
    }

    pub fn mod_m_shape(&self) -> Option<&ModMShape> {
        match &self.0.kind {
            Kind::ModM(shape) => Some(shape),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, Kind::List(_))
    }

    fn compute(&self, k: usize, prefix: &[u64]) -> Option<u64> {
        let n = k as u64;
        Some(match &self.0.kind {
            Kind::All => n,
            Kind::Odds => 2 * n - 1,
            Kind::Tri1 => n * (n - 1) / 2 + 1,
            Kind::Tri => n * (n + 1) / 2,
            Kind::Squares => n * n,
            Kind::Pow2 => 1u64.checked_shl((n - 1) as u32)?,
            Kind::Fib => match k {
                1 => 1,
                2 => 2,
                _ => prefix[k - 2].checked_add(prefix[k - 3])?,
            },
            Kind::ModM(shape) => shape.nth(k),
            Kind::List(v) => *v.get(k - 1)?,
            Kind::Generated { nth, .. } => nth(k),
        })
    }

    /// Grow the cache until it holds `len` elements or the set runs out.
    fn extend_to(&self, len: usize) {
        if self.0.cache.read().unwrap().len() >= len {
            return;
        }
        let mut cache = self.0.cache.write().unwrap();
        while cache.len() < len {
            match self.compute(cache.len() + 1, &cache) {
                Some(v) => cache.push(v),
                None => break,
            }
        }
    }

    /// `s_k` (1-based), or `None` past the end of a finite set.
    pub fn nth(&self, k: usize) -> Option<u64> {
        assert!(k >= 1, "index sets are 1-based");
        self.extend_to(k);
        self.0.cache.read().unwrap().get(k - 1).copied()
    }

    /// `s_k`, or an exhaustion error.
    pub fn try_nth(&self, k: usize) -> Result<u64> {
        self.nth(k)
            .ok_or_else(|| Error::Exhausted(format!("{self} has fewer than {k} elements")))
    }

    /// `#{s in S : s <= i}`.
    pub fn count_leq(&self, i: u64) -> u64 {
        let mut len = 8;
        loop {
            self.extend_to(len);
            let cache = self.0.cache.read().unwrap();
            if cache.len() < len || cache.last().is_some_and(|&last| last > i) {
                return cache.partition_point(|&s| s <= i) as u64;
            }
            len = cache.len() * 2;
        }
    }

    pub fn contains(&self, i: u64) -> bool {
        i >= 1 && self.count_leq(i) > self.count_leq(i - 1)
    }

    /// The S-greatest-integer function: `#{s in S : v >= s~}`, i.e. the
    /// number of elements not exceeding the size of `v`.
    pub fn floor(&self, v: PartValue) -> u64 {
        self.count_leq(v.size())
    }

    /// Shorthand for [`IndexSet::floor`] on a plain size.
    pub fn floor_size(&self, size: u64) -> u64 {
        self.count_leq(size)
    }

    /// First element, `s_1`.
    pub fn first(&self) -> Result<u64> {
        self.try_nth(1)
    }
}

pub fn s_floor(v: PartValue, s: &IndexSet) -> u64 {
    s.floor(v)
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::All => f.write_str("all"),
            Kind::Odds => f.write_str("odds"),
            Kind::Tri1 => f.write_str("tri1"),
            Kind::Tri => f.write_str("tri"),
            Kind::Squares => f.write_str("squares"),
            Kind::Fib => f.write_str("fib"),
            Kind::Pow2 => f.write_str("pow2"),
            Kind::ModM(shape) => write!(f, "{shape}"),
            Kind::List(v) => {
                let s: Vec<String> = v.iter().map(u64::to_string).collect();
                write!(f, "list:{}", s.join(","))
            }
            Kind::Generated { label, .. } => f.write_str(label),
        }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet({self})")
    }
}

/// Two index sets are equal when they print the same description.
impl PartialEq for IndexSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.to_string() == other.to_string()
    }
}

impl Eq for IndexSet {}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer `{x}`")))
        })
        .collect()
}

impl FromStr for ModMShape {
    type Err = Error;

    /// `modm:m=<m>,t=<t>,s=<s1,...,st>` (the `modm:` prefix is optional).
    fn from_str(spec: &str) -> Result<Self> {
        let body = spec.trim().strip_prefix("modm:").unwrap_or(spec.trim());
        let mut m = None;
        let mut t = None;
        let mut s = None;
        let mut rest = body;
        while !rest.is_empty() {
            let (key, after) = rest
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad modm spec `{spec}`")))?;
            let key = key.trim().trim_start_matches(',');
            // the value runs up to the next `,key=` pair
            let next = ["m=", "t=", "s="]
                .iter()
                .filter_map(|k| after.find(&format!(",{k}")))
                .min()
                .unwrap_or(after.len());
            let value = &after[..next];
            rest = &after[next..];
            match key {
                "m" => m = Some(parse_list(value)?.first().copied().unwrap_or(0)),
                "t" => t = Some(parse_list(value)?.first().copied().unwrap_or(0)),
                "s" => s = Some(parse_list(value)?),
                other => return Err(Error::Parse(format!("unknown modm key `{other}`"))),
            }
        }
        let (m, s) = match (m, s) {
            (Some(m), Some(s)) => (m, s),
            _ => return Err(Error::Parse(format!("modm spec `{spec}` needs m and s"))),
        };
        if let Some(t) = t {
            if t != s.len() as u64 {
                return Err(Error::InvalidParams(format!(
                    "t = {t} but {} values of s given",
                    s.len()
                )));
            }
        }
        ModMShape::new(m, s)
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        Ok(match spec {
            "all" => IndexSet::all(),
            "odds" => IndexSet::odds(),
            "tri1" => IndexSet::tri1(),
            "tri" => IndexSet::tri(),
            "squares" => IndexSet::squares(),
            "fib" => IndexSet::fib(),
            "pow2" => IndexSet::pow2(),
            _ if spec.starts_with("modm:") => IndexSet::mod_m(spec.parse()?),
            _ if spec.starts_with("list:") => IndexSet::list(parse_list(&spec[5..])?)?,
            _ => return Err(Error::Parse(format!("unknown index set `{spec}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prefix(s: &IndexSet, n: usize) -> Vec<u64> {
        (1..=n).map(|k| s.nth(k).unwrap()).collect()
    }

    #[test]
    fn builtin_prefixes() {
        assert_eq!(prefix(&IndexSet::odds(), 5), [1, 3, 5, 7, 9]);
        assert_eq!(prefix(&IndexSet::tri1(), 6), [1, 2, 4, 7, 11, 16]);
        assert_eq!(prefix(&IndexSet::tri(), 4), [1, 3, 6, 10]);
        assert_eq!(prefix(&IndexSet::squares(), 4), [1, 4, 9, 16]);
        assert_eq!(prefix(&IndexSet::fib(), 7), [1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(prefix(&IndexSet::pow2(), 5), [1, 2, 4, 8, 16]);
    }

    #[test]
    fn mod_m_extension() {
        let shape = ModMShape::new(3, vec![1, 2]).unwrap();
        assert_eq!(prefix(&shape.index_set(), 6), [1, 2, 4, 5, 7, 8]);
        assert_eq!(shape.residue_shift(1), 1);
        assert_eq!(shape.residue_shift(3), 2);
        let shape = ModMShape::new(3, vec![2]).unwrap();
        assert_eq!(prefix(&shape.index_set(), 3), [2, 5, 8]);
        assert_eq!(shape.residue_shift(1), 0);
        assert!(ModMShape::new(3, vec![2, 2]).is_err());
        assert!(ModMShape::new(2, vec![3]).is_err());
        assert!(ModMShape::new(2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn floor_function() {
        let odds = IndexSet::odds();
        assert_eq!(odds.floor(PartValue::plain(5)), 3);
        assert_eq!(odds.floor(PartValue::bar(5)), 3);
        assert_eq!(odds.floor(PartValue::ZERO), 0);
        assert_eq!(IndexSet::tri1().floor_size(10), 4);
        assert!(odds.contains(7));
        assert!(!odds.contains(8));
    }

    #[test]
    fn finite_lists() {
        let s: IndexSet = "list:2,5,9".parse().unwrap();
        assert_eq!(s.count_leq(100), 3);
        assert_eq!(s.count_leq(4), 1);
        assert_eq!(s.nth(4), None);
        assert!(matches!(s.try_nth(4), Err(Error::Exhausted(_))));
        assert!("list:3,2".parse::<IndexSet>().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for spec in ["odds", "tri1", "fib", "modm:m=3,t=2,s=1,2", "list:1,4"] {
            let s: IndexSet = spec.parse().unwrap();
            assert_eq!(s.to_string(), spec);
        }
        let shape: ModMShape = "modm:m=3,s=2".parse().unwrap();
        assert_eq!(shape.t(), 1);
        assert!("modm:m=3,t=2,s=2".parse::<ModMShape>().is_err());
        assert!("evens".parse::<IndexSet>().is_err());
    }

    #[test]
    fn shared_cache_is_consistent_across_threads() {
        let s = IndexSet::fib();
        let expected: Vec<u64> = (0..200).map(|i| s.clone().count_leq(i)).collect();
        let fresh = IndexSet::fib();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| {
                    let f = fresh.clone();
                    scope.spawn(move || (0..200).map(|i| f.count_leq(i)).collect::<Vec<_>>())
                })
                .collect();
            for h in handles {
                assert_eq!(h.join().unwrap(), expected);
            }
        });
    }
}
