//! `key=value` parameter lists shared by the builders, the verifier and the
//! command line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::blocks::BlockType;
use crate::error::{Error, Result};
use crate::partitions::{IndexSet, ModMShape};

/// Parameters as text, keyed and sorted. Values may themselves contain `=`
/// and `,` (`S=modm:m=3,t=1,s=2`); pairs are separated by `;`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash, PartialOrd, Ord)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn set(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    /// Adds every pair of `other`, overriding existing keys.
    pub fn merge(&mut self, other: &Params) {
        for (k, v) in &other.0 {
            self.0.insert(k.clone(), v.clone());
        }
    }

    /// `defaults` overridden by `self`; keys absent from `defaults` are
    /// rejected unless listed in `extra`.
    pub fn resolve(&self, defaults: &Params, extra: &[&str]) -> Result<Params> {
        for k in self.0.keys() {
            if !defaults.0.contains_key(k) && !extra.contains(&k.as_str()) {
                let known: Vec<&str> = defaults
                    .0
                    .keys()
                    .map(String::as_str)
                    .chain(extra.iter().copied())
                    .collect();
                return Err(Error::InvalidParams(format!(
                    "unknown parameter `{k}` (expected one of: {})",
                    if known.is_empty() {
                        "none".to_string()
                    } else {
                        known.join(", ")
                    }
                )));
            }
        }
        let mut out = defaults.clone();
        out.merge(self);
        Ok(out)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn required(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::InvalidParams(format!("missing parameter `{key}`")))
    }

    pub fn u64(&self, key: &str) -> Result<u64> {
        let v = self.required(key)?;
        v.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{key}` must be a non-negative integer, got `{v}`")))
    }

    pub fn index_set(&self, key: &str) -> Result<IndexSet> {
        self.required(key)?.parse()
    }

    pub fn block_type(&self, key: &str) -> Result<BlockType> {
        self.required(key)?.parse()
    }

    /// The periodic shape from `m`, `s` and an optional `t`.
    pub fn shape(&self) -> Result<ModMShape> {
        let mut spec = format!("m={},s={}", self.required("m")?, self.required("s")?);
        if let Some(t) = self.get("t") {
            spec.push_str(&format!(",t={t}"));
        }
        spec.parse()
    }

    /// The value of `variant`, checked against the allowed names; the first
    /// name is the default.
    pub fn variant<'a>(&self, allowed: &[&'a str]) -> Result<&'a str> {
        match self.get("variant") {
            None => Ok(allowed[0]),
            Some(v) => allowed
                .iter()
                .copied()
                .find(|a| *a == v)
                .ok_or_else(|| Error::InvalidParams(format!("variant `{v}` is not one of {}", allowed.join(", ")))),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for Params {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Params::new();
        for item in s.split(';').map(str::trim).filter(|i| !i.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{item}`")))?;
            out.0.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_resolve_and_print() {
        let p: Params = "S=modm:m=3,t=1,s=2; variant=literal".parse().unwrap();
        assert_eq!(p.get("S"), Some("modm:m=3,t=1,s=2"));
        let d: Params = "S=odds".parse().unwrap();
        let r = p.resolve(&d, &["variant"]).unwrap();
        assert_eq!(r.to_string(), "S=modm:m=3,t=1,s=2;variant=literal");
        assert!(p.resolve(&d, &[]).is_err());
        assert_eq!(r.variant(&["corrected", "literal"]).unwrap(), "literal");
        assert!(r.variant(&["a"]).is_err());
    }

    #[test]
    fn shapes() {
        let p: Params = "m=3;s=1,2".parse().unwrap();
        assert_eq!(p.shape().unwrap().t(), 2);
        let p: Params = "m=3;s=1,2;t=1".parse().unwrap();
        assert!(p.shape().is_err());
    }
}
