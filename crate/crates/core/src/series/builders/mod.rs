//! Right-hand sides of every identity, keyed by identity id.

pub mod blocks;
pub mod modm;
pub mod schmidt;

pub use self::blocks::{block_distinct_sum, block_product, periodic_colors, unk_product, unk_two_product, BlockWeight};
pub use self::modm::{modm_distinct_sum, modm_product, theta_rhs, ModMDistinctForm, ThetaRow};
pub use self::schmidt::{
    index_set_products, macmahon, over_power_product, partition_power, s_distinct_sum, s_product, DistinctForm,
    ProductKind,
};

use crate::blocks::{BlockFamily, BlockType};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::series::{Caps, ColorAssignment, ColorIndex, Series, Subst};

/// Every id with a series side, in registry order.
pub const SERIES_IDS: &[&str] = &[
    "thm1.1",
    "thm1.2",
    "thm1.5/eq3",
    "thm1.5/eq4",
    "thm1.5/eq5",
    "thm1.5/eq6",
    "cor1.6/1",
    "cor1.6/2",
    "cor1.6/3",
    "cor1.6/4",
    "cor1.6/5",
    "thm1.7/eq10",
    "thm1.7/eq11",
    "thm1.7/eq12",
    "thm1.7/eq13",
    "thm1.8/eq14",
    "thm1.8/eq15",
    "thm1.8/eq16",
    "cor1.9",
    "cor1.11/ovp",
    "cor1.11/p",
    "cor1.11/ovf",
    "cor1.11/ovd",
    "cor1.11/ovp-m",
    "cor1.11/p-m",
    "cor1.11/ovf-m",
    "thm1.12/eq17",
    "thm1.12/eq18",
    "thm1.12/eq19",
    "thm1.14/eq20",
    "thm1.14/eq21",
    "thm1.14/eq22",
    "cor-unk/ovp",
    "cor-unk/p",
    "cor-unk/n2",
    "cor-unk/n2-p",
];

fn group(id: &str) -> &str {
    id.split('/').next().unwrap_or(id)
}

/// Default parameters and the optional keys accepted by `id`.
pub fn param_schema(id: &str) -> Result<(Params, &'static [&'static str])> {
    let p = Params::new();
    Ok(match (group(id), id) {
        ("thm1.1" | "thm1.2" | "cor1.6", _) => (p, &[]),
        ("thm1.5", "thm1.5/eq6") => (p.set("S", "odds"), &["variant"]),
        ("thm1.5", _) => (p.set("S", "odds"), &[]),
        ("thm1.7", "thm1.7/eq13") => (p.set("m", 2).set("s", 1), &["t", "variant"]),
        ("thm1.7" | "thm1.8" | "cor1.9", _) => (p.set("m", 2).set("s", 1), &["t"]),
        ("cor1.11", "cor1.11/ovd") => (p.set("m", 3).set("l", 2), &["variant"]),
        ("cor1.11", _) => (p.set("m", 3).set("l", 2), &[]),
        ("thm1.12", _) => (p.set("U", "Unk(2,1)"), &[]),
        ("thm1.14", _) => (p.set("U", "Unk(2,1)"), &["S"]),
        ("cor-unk", "cor-unk/ovp" | "cor-unk/p") => (p.set("n", 2).set("k", 1), &[]),
        ("cor-unk", "cor-unk/n2" | "cor-unk/n2-p") => (p.set("k", 1), &[]),
        ("thm3.2", _) => (p.set("m", 2), &[]),
        ("cor3.3", _) => (p.set("m", 2).set("s", 1), &["t"]),
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    })
}

/// `params` over the defaults of `id`, unknown keys rejected.
pub fn resolve_params(id: &str, params: &Params) -> Result<Params> {
    let (defaults, extra) = param_schema(id)?;
    params.resolve(&defaults, extra)
}

/// The assignment both sides of `id` are compared under: colors fixed to 1
/// where the identity counts plain partitions, and `c_m = 1` for the
/// restricted mod-m families.
pub fn effective_assignment(id: &str, params: &Params, assign: &ColorAssignment) -> Result<ColorAssignment> {
    match group(id) {
        "thm1.1" | "thm1.2" | "cor1.6" => Ok(ColorAssignment::all_one()),
        "thm1.8" | "cor1.9" => {
            let m = resolve_params(id, params)?.u64("m")?;
            assign.clone().set(ColorIndex::plain(m), Subst::One)
        }
        _ => Ok(assign.clone()),
    }
}

/// The block type and weight for the block identities.
pub fn block_setup(id: &str, params: &Params) -> Result<(BlockType, BlockWeight)> {
    let u = params.block_type("U")?;
    let weight = if group(id) == "thm1.14" {
        let s = match params.get("S") {
            Some(_) => {
                let s = params.index_set("S")?;
                u.check_singleton_set(&s, 64)?;
                s
            }
            None => u.singleton_ends(),
        };
        BlockWeight::Index(s)
    } else {
        BlockWeight::Plain
    };
    Ok((u, weight))
}

/// The block family of a block identity id.
pub fn block_family(id: &str) -> Option<BlockFamily> {
    Some(match id {
        "thm1.12/eq17" | "thm1.14/eq20" | "cor-unk/ovp" | "cor-unk/n2" => BlockFamily::Pbar,
        "thm1.12/eq18" | "thm1.14/eq21" | "cor-unk/p" | "cor-unk/n2-p" => BlockFamily::P,
        "thm1.12/eq19" | "thm1.14/eq22" => BlockFamily::Dbar,
        _ => return None,
    })
}

/// Expands the right-hand side of `id` at `caps`, with colors specialized
/// by `assign` (after [`effective_assignment`]).
pub fn build_rhs(id: &str, params: &Params, caps: Caps, assign: &ColorAssignment) -> Result<Series> {
    let p = resolve_params(id, params)?;
    let a = effective_assignment(id, &p, assign)?;
    match id {
        "thm1.1" => Ok(partition_power(caps, 1)),
        "thm1.2" => Ok(partition_power(caps, 2)),
        "thm1.5/eq3" => s_product(ProductKind::Over, &p.index_set("S")?, caps, &a),
        "thm1.5/eq4" => s_product(ProductKind::Plain, &p.index_set("S")?, caps, &a),
        "thm1.5/eq5" => s_product(ProductKind::Flat, &p.index_set("S")?, caps, &a),
        "thm1.5/eq6" => {
            let form = match p.variant(&["display", "plus"])? {
                "display" => DistinctForm::Display,
                _ => DistinctForm::Plus,
            };
            s_distinct_sum(&p.index_set("S")?, caps, &a, form)
        }
        "cor1.6/1" | "cor1.6/2" | "cor1.6/3" | "cor1.6/4" | "cor1.6/5" => {
            index_set_products(id.as_bytes()[id.len() - 1] - b'0', caps)
        }
        "thm1.7/eq10" => modm_product(ProductKind::Over, &p.shape()?, false, caps, &a),
        "thm1.7/eq11" => modm_product(ProductKind::Plain, &p.shape()?, false, caps, &a),
        "thm1.7/eq12" => modm_product(ProductKind::Flat, &p.shape()?, false, caps, &a),
        "thm1.7/eq13" => {
            let form = match p.variant(&["corrected", "literal"])? {
                "corrected" => ModMDistinctForm::Corrected,
                _ => ModMDistinctForm::Literal,
            };
            modm_distinct_sum(&p.shape()?, form, caps, &a)
        }
        "thm1.8/eq14" => modm_product(ProductKind::Over, &p.shape()?, true, caps, &a),
        "thm1.8/eq15" => modm_product(ProductKind::Plain, &p.shape()?, true, caps, &a),
        "thm1.8/eq16" | "cor1.9" => modm_product(ProductKind::Flat, &p.shape()?, true, caps, &a),
        _ if group(id) == "cor1.11" => {
            let row = ThetaRow::from_name(&id["cor1.11/".len()..]).ok_or_else(|| Error::UnknownIdentity(id.into()))?;
            let literal = row == ThetaRow::Distinct && p.variant(&["shifted", "literal"])? == "literal";
            theta_rhs(row, p.u64("m")?, p.u64("l")?, literal, caps)
        }
        _ if matches!(group(id), "thm1.12" | "thm1.14") => {
            let (u, w) = block_setup(id, &p)?;
            let family = block_family(id).expect("block id");
            block_product(&u, family, &w, caps, &a)
        }
        "cor-unk/ovp" | "cor-unk/p" => {
            let (n, k) = (p.u64("n")?, p.u64("k")?);
            BlockType::unk(n, k)?;
            unk_product(n, k, block_family(id).expect("block id"), caps, &a)
        }
        "cor-unk/n2" | "cor-unk/n2-p" => unk_two_product(p.u64("k")?, block_family(id).expect("block id"), caps, &a),
        "thm3.2" | "cor3.3" => Err(Error::InvalidParams(format!(
            "{id} compares two enumerations and has no series side"
        ))),
        _ => Err(Error::UnknownIdentity(id.to_string())),
    }
}

/// The modulus colors are reduced by on both sides of a `U_{n,k}` identity.
pub fn unk_period(id: &str, params: &Params) -> Result<Option<u64>> {
    let p = resolve_params(id, params)?;
    Ok(match id {
        "cor-unk/ovp" | "cor-unk/p" => Some(p.u64("n")? * p.u64("k")? + 1),
        "cor-unk/n2" | "cor-unk/n2-p" => Some(2 * p.u64("k")? + 1),
        _ => None,
    })
}
