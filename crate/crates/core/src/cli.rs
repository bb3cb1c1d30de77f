//! Command-line front end: `verify`, `enumerate` and `coeffs`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::blocks::{BlockFamily, BlockType};
use crate::error::{Error, Result};
use crate::oracle::{enum_plane_partitions, BlockEnum, OverEnum};
use crate::params::Params;
use crate::partitions::{FamilyTag, IndexSet};
use crate::series::{builders, Caps, ColorAssignment};
use crate::verify::{self, Status, VerifyOptions, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Caps used when neither flags nor `SCHMIDT_DEFAULT_CAPS` give them.
pub const DEFAULT_CAPS: Caps = Caps { q: 8, color: Some(3) };

#[derive(Parser, Debug)]
#[command(
    name = "schmidt",
    version,
    about = "Over-partition identities checked by enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare both sides of an identity, or run a bijection check.
    Verify(VerifyArgs),
    /// List the members of a family, one per line.
    Enumerate(EnumerateArgs),
    /// Print the coefficients of a right-hand side.
    Coeffs(CoeffsArgs),
}

#[derive(Args, Debug)]
struct CapArgs {
    /// q-degree cap.
    #[arg(long = "N")]
    n: Option<u32>,
    /// Color-degree cap, or `inf`.
    #[arg(long = "D")]
    d: Option<String>,
    /// Parameters as `k=v`, repeatable or `;`-separated.
    #[arg(long)]
    params: Vec<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity id, or `all`.
    #[arg(long)]
    id: String,
    #[command(flatten)]
    caps: CapArgs,
    /// Write the reports as JSON to this path.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
    /// Record wall time in the reports.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// Pbar, P, Dbar, Fbar, Pbar_m:<m>, P_m:<m>, Fbar_m:<m> or plane.
    #[arg(long)]
    family: String,
    /// Index set for the S-weight.
    #[arg(long = "S")]
    s: Option<String>,
    /// Block type; enumerates block over-partitions of the family.
    #[arg(long = "U")]
    u: Option<String>,
    /// Plain weight.
    #[arg(long, conflicts_with = "s_weight")]
    weight: Option<u64>,
    /// S-weight.
    #[arg(long = "s-weight")]
    s_weight: Option<u64>,
    /// Print at most this many members.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    /// Identity id whose right-hand side is expanded.
    #[arg(long)]
    rhs: String,
    #[command(flatten)]
    caps: CapArgs,
    /// Color specialization, e.g. `all=1` or `c(1)=x,c(2~)=0`.
    #[arg(long = "set-colors")]
    set_colors: Option<String>,
}

fn parse_caps_env(text: &str) -> Result<Caps> {
    let (n, d) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("SCHMIDT_DEFAULT_CAPS must be `N,D`, got `{text}`")))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad N in SCHMIDT_DEFAULT_CAPS `{text}`")))?;
    Ok(Caps::new(n, parse_color_cap(d)?))
}

fn parse_color_cap(text: &str) -> Result<Option<u32>> {
    match text.trim() {
        "inf" | "unbounded" => Ok(None),
        t => t
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("color cap must be an integer or `inf`, got `{t}`"))),
    }
}

impl CapArgs {
    fn caps(&self) -> Result<Caps> {
        let base = match std::env::var("SCHMIDT_DEFAULT_CAPS") {
            Ok(v) if !v.trim().is_empty() => parse_caps_env(&v)?,
            _ => DEFAULT_CAPS,
        };
        let color = match &self.d {
            Some(d) => parse_color_cap(d)?,
            None => base.color,
        };
        Ok(Caps::new(self.n.unwrap_or(base.q), color))
    }

    fn params(&self) -> Result<Params> {
        let mut p = Params::new();
        for item in &self.params {
            p.merge(&item.parse()?);
        }
        Ok(p)
    }
}

/// Runs the command line on `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Coeffs(a) => cmd_coeffs(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io(_) => EXIT_FAIL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let caps = a.caps.caps()?;
    let params = a.caps.params()?;
    let opts = VerifyOptions {
        caps,
        assign: ColorAssignment::identity(),
        timings: a.timings,
    };
    let reports: Vec<VerifyReport> = if a.id == "all" {
        if !params.is_empty() {
            return Err(Error::InvalidParams("--params cannot be combined with --id all".into()));
        }
        verify::verify_all(&opts).into_iter().collect::<Result<_>>()?
    } else {
        vec![verify::verify(&a.id, &params, &opts)?]
    };
    for r in &reports {
        writeln!(out, "{}", r.summary_line())?;
    }
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let fail = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports.len() - pass - fail;
    if reports.len() > 1 {
        writeln!(out, "{pass} passed, {fail} failed, {skipped} skipped at {caps}")?;
    }
    if let Some(path) = &a.json {
        std::fs::write(path, verify::reports_json(&reports) + "\n")?;
    }
    Ok(if pass == reports.len() { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let (weight, s) = match (a.weight, a.s_weight) {
        (Some(w), _) => (w, IndexSet::all()),
        (None, Some(w)) => {
            let s =
                a.s.as_deref()
                    .ok_or_else(|| Error::InvalidParams("--s-weight needs --S".into()))?;
            (w, s.parse()?)
        }
        (None, None) => return Err(Error::InvalidParams("give --weight or --s-weight".into())),
    };
    if a.weight.is_some() && a.s.is_some() {
        return Err(Error::InvalidParams("--S applies to --s-weight only".into()));
    }
    let mut lines = Vec::new();
    if a.family == "plane" {
        if a.s_weight.is_some() || a.u.is_some() {
            return Err(Error::InvalidParams("plane partitions take --weight only".into()));
        }
        lines.extend(enum_plane_partitions(weight)?.iter().map(|p| p.to_string()));
    } else if let Some(u) = &a.u {
        let u: BlockType = u.parse()?;
        let family = match a.family.as_str() {
            "Pbar" => BlockFamily::Pbar,
            "P" => BlockFamily::P,
            "Dbar" => BlockFamily::Dbar,
            f => {
                return Err(Error::InvalidParams(format!(
                    "block family must be Pbar, P or Dbar, got `{f}`"
                )))
            }
        };
        for (lambda, w) in BlockEnum::new(u, family, s, weight).collect()? {
            if w == weight {
                lines.push(lambda.to_string());
            }
        }
    } else {
        let family: FamilyTag = a.family.parse()?;
        for (lambda, w) in OverEnum::new(family, s, weight).collect()? {
            if w == weight {
                lines.push(lambda.to_string());
            }
        }
    }
    lines.sort();
    let total = lines.len();
    for l in lines.iter().take(a.limit.unwrap_or(usize::MAX)) {
        writeln!(out, "{l}")?;
    }
    writeln!(out, "count: {total}")?;
    Ok(EXIT_PASS)
}

fn cmd_coeffs(a: &CoeffsArgs, out: &mut dyn Write) -> Result<i32> {
    let caps = a.caps.caps()?;
    let params = a.caps.params()?;
    let assign: ColorAssignment = match &a.set_colors {
        Some(s) => s.parse()?,
        None => ColorAssignment::identity(),
    };
    let series = builders::build_rhs(&a.rhs, &params, caps, &assign)?;
    for line in series.canonical_lines() {
        writeln!(out, "{line}")?;
    }
    Ok(EXIT_PASS)
}
