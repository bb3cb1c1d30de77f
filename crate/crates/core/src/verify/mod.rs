//! The identity registry and the comparison engine.

mod bijections;

pub use bijections::{
    admissible_sizable_transport, conjugate_involution, gamma_big_u_bijection, gamma_u_bijection, phi_s_bijection,
    Sweep, Violation,
};

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::BlockFamily;
use crate::error::{Error, Result};
use crate::grounded::{
    alpha_transport_violations, conjugate_mod_m_violations, glaisher_corollary_tables, glaisher_tables, EpsilonContext,
};
use crate::oracle::{block_table, over_table, BlockEnum, OverEnum, Statistic, ThetaZ};
use crate::params::Params;
use crate::partitions::{FamilyTag, IndexSet, ModMShape};
use crate::series::builders::{self, block_family, block_setup, effective_assignment, ThetaRow};
use crate::series::{Caps, ColorAssignment, Monomial, Series};

/// Checks that enumerate and compare objects rather than series.
pub const BIJECTION_IDS: &[&str] = &[
    "conjugate-involution",
    "phi_S",
    "gamma_u",
    "gamma_U",
    "lemma4.6",
    "alpha_S",
    "conjugate-mod-m",
];

/// Every registered id, in report order.
pub fn registry() -> Vec<&'static str> {
    builders::SERIES_IDS
        .iter()
        .copied()
        .chain(["thm3.2", "cor3.3"])
        .chain(BIJECTION_IDS.iter().copied())
        .collect()
}

pub fn is_registered(id: &str) -> bool {
    registry().contains(&id)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Mismatch {
    pub q_degree: u64,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CapsReport {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "D")]
    pub d: Option<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: String,
    pub caps: CapsReport,
    pub status: Status,
    pub mismatch: Option<Mismatch>,
    pub elapsed_ms: Option<u64>,
    pub note: Option<String>,
}

impl VerifyReport {
    /// One line: `id  status  [params]  note`.
    pub fn summary_line(&self) -> String {
        let mut line = format!("{:<22} {:<7}", self.id, format!("{:?}", self.status).to_lowercase());
        if !self.params.is_empty() {
            line.push_str(&format!(" [{}]", self.params));
        }
        if let Some(m) = &self.mismatch {
            line.push_str(&format!(
                " first mismatch at q^{} {}: lhs {} rhs {}",
                m.q_degree, m.monomial, m.lhs, m.rhs
            ));
        }
        if let Some(n) = &self.note {
            line.push_str(&format!(" ({n})"));
        }
        if let Some(ms) = self.elapsed_ms {
            line.push_str(&format!(" {ms} ms"));
        }
        line.trim_end().to_string()
    }
}

/// Run options shared by every identity.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub caps: Caps,
    pub assign: ColorAssignment,
    pub timings: bool,
}

impl VerifyOptions {
    pub fn new(caps: Caps) -> Self {
        VerifyOptions {
            caps,
            assign: ColorAssignment::identity(),
            timings: false,
        }
    }
}

fn bijection_schema(id: &str) -> Option<(Params, &'static [&'static str])> {
    let p = Params::new();
    Some(match id {
        "conjugate-involution" => (p, &[]),
        "phi_S" => (p.set("S", "tri1"), &[]),
        "gamma_u" => (p.set("u", 4).set("size", 3), &[]),
        "gamma_U" | "lemma4.6" => (p.set("U", "U=1,(2)*"), &[]),
        "alpha_S" => (p.set("m", 2).set("s", 1), &["t"]),
        "conjugate-mod-m" => (p.set("m", 2), &[]),
        _ => return None,
    })
}

/// `params` completed with the defaults of `id`.
pub fn resolve(id: &str, params: &Params) -> Result<Params> {
    match bijection_schema(id) {
        Some((d, extra)) => params.resolve(&d, extra),
        None => builders::resolve_params(id, params),
    }
}

/// The first `(q-degree, monomial)` where the two series differ.
pub fn first_mismatch(lhs: &Series, rhs: &Series) -> Option<Mismatch> {
    let n = lhs.caps().q.max(rhs.caps().q);
    for d in 0..=n {
        let (a, b) = (lhs.coeff(d), rhs.coeff(d));
        let keys: BTreeSet<&Monomial> = a.terms().map(|(m, _)| m).chain(b.terms().map(|(m, _)| m)).collect();
        for m in keys {
            let (x, y) = (a.coeff(m), b.coeff(m));
            if x != y {
                return Some(Mismatch {
                    q_degree: d as u64,
                    monomial: if m.is_one() { "1".into() } else { m.to_string() },
                    lhs: x.to_string(),
                    rhs: y.to_string(),
                });
            }
        }
    }
    None
}

fn family_of(id: &str) -> FamilyTag {
    match id.rsplit('/').next().unwrap_or(id) {
        "eq3" | "eq10" | "ovp" => FamilyTag::Pbar,
        "eq4" | "eq11" | "p" => FamilyTag::P,
        "eq5" | "eq12" | "ovf" => FamilyTag::Fbar,
        _ => FamilyTag::Dbar,
    }
}

fn mod_m_family(id: &str, m: u64) -> FamilyTag {
    match id.rsplit('/').next().unwrap_or(id) {
        "eq14" | "ovp-m" => FamilyTag::PbarM(m),
        "eq15" | "p-m" => FamilyTag::PM(m),
        _ => FamilyTag::FbarM(m),
    }
}

/// The enumerated side of a series identity.
pub fn build_lhs(id: &str, params: &Params, caps: Caps, assign: &ColorAssignment) -> Result<Series> {
    let p = builders::resolve_params(id, params)?;
    let a = effective_assignment(id, &p, assign)?;
    let group = id.split('/').next().unwrap_or(id);
    let table = match group {
        "thm1.1" => over_table(
            &OverEnum::new(FamilyTag::Dbar, IndexSet::odds(), 0),
            Statistic::Color,
            &a,
            caps,
        )?,
        "thm1.2" => over_table(
            &OverEnum::new(FamilyTag::P, IndexSet::odds(), 0),
            Statistic::Color,
            &a,
            caps,
        )?,
        "thm1.5" => {
            let e = OverEnum::new(family_of(id), p.index_set("S")?, 0);
            over_table(&e, Statistic::Color, &a, caps)?
        }
        "cor1.6" => {
            let (family, s) = match id {
                "cor1.6/1" => (FamilyTag::P, IndexSet::tri1()),
                "cor1.6/2" => (FamilyTag::P, IndexSet::tri()),
                "cor1.6/3" => (FamilyTag::P, IndexSet::squares()),
                "cor1.6/4" => (FamilyTag::Pbar, IndexSet::fib()),
                _ => (FamilyTag::Pbar, IndexSet::pow2()),
            };
            over_table(&OverEnum::new(family, s, 0), Statistic::Color, &a, caps)?
        }
        "thm1.7" => {
            let shape = p.shape()?;
            let e = OverEnum::new(family_of(id), IndexSet::mod_m(shape.clone()), 0);
            over_table(&e, Statistic::Rho(shape.m()), &a, caps)?
        }
        "thm1.8" | "cor1.9" => {
            let shape = p.shape()?;
            let family = if id == "cor1.9" {
                FamilyTag::Fbar
            } else {
                mod_m_family(id, shape.m())
            };
            let e = OverEnum::new(family, IndexSet::mod_m(shape.clone()), 0);
            over_table(&e, Statistic::Rho(shape.m()), &a, caps)?
        }
        "cor1.11" => {
            let (m, l) = (p.u64("m")?, p.u64("l")?);
            let row = ThetaRow::from_name(&id["cor1.11/".len()..]).ok_or_else(|| Error::UnknownIdentity(id.into()))?;
            let (family, z) = match row {
                ThetaRow::OverM | ThetaRow::PlainM | ThetaRow::FlatM => (mod_m_family(id, m), ThetaZ::Four),
                _ => (family_of(id), ThetaZ::Three),
            };
            let shape = ModMShape::new(m, vec![m])?;
            let e = OverEnum::new(family, IndexSet::mod_m(shape), 0);
            over_table(&e, Statistic::Theta { m, l, z }, &ColorAssignment::identity(), caps)?
        }
        "thm1.12" | "thm1.14" => {
            let (u, w) = block_setup(id, &p)?;
            let s = match w {
                builders::BlockWeight::Plain => IndexSet::all(),
                builders::BlockWeight::Index(s) => s,
            };
            let family = block_family(id).expect("block id");
            block_table(&BlockEnum::new(u, family, s, 0), None, &a, caps)?
        }
        "cor-unk" => {
            let (u, period) = match id {
                "cor-unk/ovp" | "cor-unk/p" => {
                    let (n, k) = (p.u64("n")?, p.u64("k")?);
                    (crate::blocks::BlockType::unk(n, k)?, n * k + 1)
                }
                _ => {
                    let k = p.u64("k")?;
                    (crate::blocks::BlockType::unk(2, k)?, 2 * k + 1)
                }
            };
            let family = block_family(id).expect("block id");
            debug_assert_ne!(family, BlockFamily::Dbar);
            let s = u.singleton_ends();
            block_table(&BlockEnum::new(u, family, s, 0), Some(period), &a, caps)?
        }
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    Ok(table.into_series())
}

/// What a given id compares: its left side and its right side.
fn sides(id: &str, p: &Params, opts: &VerifyOptions) -> Result<(Series, Series)> {
    let caps = opts.caps;
    match id {
        "cor1.9" => {
            let lhs = build_lhs(id, p, caps, &opts.assign)?;
            let rhs = build_lhs("thm1.8/eq16", p, caps, &opts.assign)?;
            Ok((lhs, rhs))
        }
        "thm3.2" => {
            let d = finite_colors(caps)?;
            let (flat, regular) = glaisher_tables(&EpsilonContext::new(p.u64("m")?)?, caps.q as u64, d);
            Ok((flat.into_series(), regular.into_series()))
        }
        "cor3.3" => {
            let d = finite_colors(caps)?;
            let (gaps, avoid) = glaisher_corollary_tables(&p.shape()?, caps.q as u64, d);
            Ok((gaps.into_series(), avoid.into_series()))
        }
        _ => Ok((
            build_lhs(id, p, caps, &opts.assign)?,
            builders::build_rhs(id, p, caps, &opts.assign)?,
        )),
    }
}

fn finite_colors(caps: Caps) -> Result<u32> {
    caps.color
        .ok_or_else(|| Error::NonTerminating("zero-weight parts need a finite color cap D".into()))
}

fn sweep(id: &str, p: &Params, caps: Caps) -> Result<Sweep> {
    let n = caps.q as u64;
    match id {
        "conjugate-involution" => conjugate_involution(n),
        "phi_S" => phi_s_bijection(&p.index_set("S")?, n),
        "gamma_u" => gamma_u_bijection(p.u64("u")? as usize, p.u64("size")?),
        "gamma_U" => gamma_big_u_bijection(&p.block_type("U")?, n),
        "lemma4.6" => admissible_sizable_transport(&p.block_type("U")?, n),
        "alpha_S" => {
            let lines = alpha_transport_violations(&p.shape()?, n, finite_colors(caps)?)?;
            Ok(Sweep {
                checked: 1,
                violations: lines
                    .into_iter()
                    .map(|reason| Violation {
                        weight: 0,
                        object: "alpha_S".into(),
                        reason,
                    })
                    .collect(),
            })
        }
        "conjugate-mod-m" => {
            let lines = conjugate_mod_m_violations(p.u64("m")?, n)?;
            Ok(Sweep {
                checked: 1,
                violations: lines
                    .into_iter()
                    .map(|reason| Violation {
                        weight: 0,
                        object: "conjugation".into(),
                        reason,
                    })
                    .collect(),
            })
        }
        _ => Err(Error::UnknownIdentity(id.to_string())),
    }
}

fn fail_note(id: &str, p: &Params) -> Option<String> {
    let variant = p.get("variant");
    match (id, variant) {
        ("thm1.5/eq6", None | Some("display")) => Some(
            "the factor 1/(1 - c_j q^w) disagrees with enumeration; variant=plus uses 1/(1 + c_j q^w)".into(),
        ),
        ("thm1.5/eq6", Some("plus")) => {
            Some("the factor 1/(1 + c_j q^w) disagrees with enumeration; compare variant=display".into())
        }
        ("thm1.7/eq13", Some("literal")) => Some(
            "literal summand (c_j~ q^w)^N / (c_j~ q^w; q^t)_N; grouping by residue gives c_j~^N q^(wN + tN(N-1)/2) / (c_j q^w; q^t)_N".into(),
        ),
        ("cor1.11/ovd", Some("literal")) => Some("the literal row lacks the factor q^n of the grouped sum".into()),
        _ => None,
    }
}

/// Verifies one registered id. Parameter and id errors are returned;
/// identities that cannot be expanded at the given caps are reported as
/// skipped.
pub fn verify(id: &str, params: &Params, opts: &VerifyOptions) -> Result<VerifyReport> {
    if !is_registered(id) {
        return Err(Error::UnknownIdentity(id.to_string()));
    }
    let start = Instant::now();
    let p = resolve(id, params)?;
    let mut report = VerifyReport {
        id: id.to_string(),
        params: p.to_string(),
        caps: CapsReport {
            n: opts.caps.q,
            d: opts.caps.color,
        },
        status: Status::Pass,
        mismatch: None,
        elapsed_ms: None,
        note: None,
    };
    let outcome = if BIJECTION_IDS.contains(&id) {
        sweep(id, &p, opts.caps).map(|sw| {
            report.note = Some(format!("{} checked", sw.checked));
            sw.violations.first().map(|v| Mismatch {
                q_degree: v.weight,
                monomial: String::new(),
                lhs: v.object.clone(),
                rhs: v.reason.clone(),
            })
        })
    } else {
        sides(id, &p, opts).map(|(lhs, rhs)| first_mismatch(&lhs, &rhs))
    };
    match outcome {
        Ok(None) => {}
        Ok(Some(m)) => {
            report.status = Status::Fail;
            report.mismatch = Some(m);
            if let Some(n) = fail_note(id, &p) {
                report.note = Some(n);
            }
        }
        Err(e @ (Error::NonTerminating(_) | Error::InfiniteSet(_) | Error::TooLarge(_))) => {
            report.status = Status::Skipped;
            report.note = Some(e.to_string());
        }
        Err(e) => return Err(e),
    }
    if opts.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Verifies every registered id with its default parameters, in parallel,
/// reports in registry order.
pub fn verify_all(opts: &VerifyOptions) -> Vec<Result<VerifyReport>> {
    registry()
        .into_par_iter()
        .map(|id| verify(id, &Params::new(), opts))
        .collect()
}

/// Pretty JSON for a list of reports.
pub fn reports_json(reports: &[VerifyReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lists_every_named_identity() {
        let ids = registry();
        for id in [
            "thm1.5/eq3",
            "thm1.5/eq6",
            "cor1.6/1",
            "cor1.6/5",
            "thm1.7/eq10",
            "thm1.7/eq13",
            "thm1.8/eq14",
            "thm1.8/eq16",
            "cor1.9",
            "cor1.11/ovd",
            "thm1.12/eq17",
            "thm1.12/eq19",
            "thm1.14/eq20",
            "thm1.14/eq22",
            "cor-unk/n2",
            "thm3.2",
            "cor3.3",
            "conjugate-involution",
            "phi_S",
            "gamma_u",
            "gamma_U",
            "lemma4.6",
        ] {
            assert!(ids.contains(&id), "{id}");
        }
        let unique: BTreeSet<_> = ids.iter().collect();
        assert_eq!(unique.len(), ids.len());
    }

    #[test]
    fn weight_zero_passes_trivially() {
        let opts = VerifyOptions::new(Caps::bounded(0, 3));
        for id in registry() {
            let r = verify(id, &Params::new(), &opts).unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.mismatch);
        }
    }

    #[test]
    fn unknown_ids_are_errors() {
        assert!(matches!(
            verify("nosuch", &Params::new(), &VerifyOptions::new(Caps::bounded(2, 2))),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn crossed_sides_are_caught() {
        let caps = Caps::bounded(8, 3);
        let id = ColorAssignment::identity();
        let over = build_lhs("thm1.5/eq3", &Params::new(), caps, &id).unwrap();
        let terms: usize = over.coeffs().iter().map(|p| p.len()).sum();
        assert!(terms > 500, "{terms}");
        for (a, b) in [
            ("thm1.5/eq3", "thm1.5/eq4"),
            ("thm1.5/eq5", "thm1.5/eq6"),
            ("thm1.12/eq17", "thm1.12/eq18"),
        ] {
            let lhs = build_lhs(a, &Params::new(), caps, &id).unwrap();
            let rhs = builders::build_rhs(b, &Params::new(), caps, &id).unwrap();
            assert!(first_mismatch(&lhs, &rhs).is_some(), "{a} vs {b}");
        }
    }

    #[test]
    fn mismatch_points_at_first_difference() {
        let caps = Caps::unbounded(3);
        let a = crate::series::builders::partition_power(caps, 1);
        let b = crate::series::builders::partition_power(caps, 2);
        let m = first_mismatch(&a, &b).unwrap();
        assert_eq!((m.q_degree, m.lhs.as_str(), m.rhs.as_str()), (1, "1", "2"));
    }
}
