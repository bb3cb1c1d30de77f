//! Acceptance gate: one line per criterion, `PASS` or `FAIL`, with the wall
//! time against its pinned limit.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use schmidt::oracle::{enum_plane_partitions, OverEnum};
use schmidt::params::Params;
use schmidt::partitions::{FamilyTag, IndexSet};
use schmidt::series::builders::macmahon;
use schmidt::series::{eulerian_bar, eulerian_poly, pochhammer, Caps, Poly, Series, Var};
use schmidt::verify::{self, Status, VerifyOptions, VerifyReport};

/// Plane partition counts for n = 0..=8.
const PLANE: [u64; 9] = [1, 1, 3, 6, 13, 24, 48, 86, 160];

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run_verify(id: &str, params: &str, caps: Caps) -> VerifyReport {
    let p: Params = params.parse().expect("params");
    verify::verify(id, &p, &VerifyOptions::new(caps)).unwrap_or_else(|e| panic!("{id} [{params}]: {e}"))
}

/// Runs every `(id, params)` and reports the ones that did not pass.
fn all_pass(cases: &[(&str, String)], caps: Caps) -> Outcome {
    let mut bad = Vec::new();
    for (id, params) in cases {
        let r = run_verify(id, params, caps);
        if r.status != Status::Pass {
            bad.push(r.summary_line());
        }
    }
    if bad.is_empty() {
        pass(format!("{} checks at {caps}", cases.len()))
    } else {
        check(false, bad.join("; "))
    }
}

/// Partition numbers by Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[i] += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                p[i] += sign * p[i - g2];
            }
            k += 1;
        }
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Plane partition numbers by `n PL(n) = sum_k sigma_2(k) PL(n - k)`.
fn plane_numbers(n: usize) -> Vec<u64> {
    let sigma2 = |k: u64| (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| d * d).sum::<u64>();
    let mut pl = vec![1u64];
    for m in 1..=n as u64 {
        let s: u64 = (1..=m).map(|k| sigma2(k) * pl[(m - k) as usize]).sum();
        pl.push(s / m);
    }
    pl
}

fn criterion_1() -> Outcome {
    let sw = verify::conjugate_involution(20).unwrap();
    check(
        sw.checked > 10_000 && sw.violations.is_empty(),
        format!(
            "{} over-partitions of weight <= 20, {} violations",
            sw.checked,
            sw.violations.len()
        ),
    )
}

fn criterion_2() -> Outcome {
    let p = partition_numbers(12);
    assert_eq!(p[5], 7);
    let mut counts = vec![0u64; 13];
    for (_, w) in OverEnum::new(FamilyTag::Dbar, IndexSet::odds(), 12).collect().unwrap() {
        counts[w as usize] += 1;
    }
    check(counts == p, format!("distinct-part counts {counts:?}"))
}

fn criterion_3() -> Outcome {
    let caps = Caps::bounded(8, 3);
    let mut notes = Vec::new();
    let mut ok = true;
    for s in ["odds", "tri1"] {
        for eq in ["eq3", "eq4", "eq5"] {
            let r = run_verify(&format!("thm1.5/{eq}"), &format!("S={s}"), caps);
            ok &= r.status == Status::Pass;
            if r.status != Status::Pass {
                notes.push(r.summary_line());
            }
        }
        // the display form must pass, or fail with a localized mismatch
        let display = run_verify("thm1.5/eq6", &format!("S={s}"), caps);
        match display.status {
            Status::Pass => notes.push(format!("eq6 display passes for S={s}")),
            Status::Fail => {
                ok &= display.mismatch.is_some();
                notes.push(display.summary_line());
            }
            Status::Skipped => ok = false,
        }
        // the 1 + c_j q^w sign is reported, not patched over
        let plus = run_verify("thm1.5/eq6", &format!("S={s};variant=plus"), caps);
        if let Some(m) = &plus.mismatch {
            notes.push(format!(
                "eq6 plus form S={s}: mismatch at q^{} {} (lhs {} rhs {})",
                m.q_degree, m.monomial, m.lhs, m.rhs
            ));
        } else {
            notes.push(format!("eq6 plus form S={s} passes"));
        }
    }
    check(ok, notes.join("; "))
}

fn criterion_4() -> Outcome {
    let n = 8u64;
    let oracle = plane_numbers(n as usize);
    let direct: Vec<u64> = (0..=n)
        .map(|k| enum_plane_partitions(k).unwrap().len() as u64)
        .collect();
    let product: Vec<BigInt> = macmahon(Caps::unbounded(n as u32)).counts();
    let mut weighted = vec![0u64; n as usize + 1];
    for (_, w) in OverEnum::new(FamilyTag::P, IndexSet::tri1(), n).collect().unwrap() {
        weighted[w as usize] += 1;
    }
    let product_ok = product.iter().zip(PLANE).all(|(a, b)| a == &BigInt::from(b));
    let r = run_verify("cor1.6/1", "", Caps::unbounded(n as u32));
    check(
        oracle == PLANE && direct == PLANE && weighted == PLANE && product_ok && r.status == Status::Pass,
        format!(
            "S-weighted {weighted:?}; direct enumeration and MacMahon product agree: {}",
            direct == PLANE && product_ok
        ),
    )
}

fn criterion_5() -> Outcome {
    let cases: Vec<(&str, String)> = ["cor1.6/2", "cor1.6/3", "cor1.6/4", "cor1.6/5"]
        .into_iter()
        .map(|id| (id, String::new()))
        .collect();
    all_pass(&cases, Caps::unbounded(8))
}

fn criterion_6() -> Outcome {
    let mut cases = Vec::new();
    for shape in ["m=2;t=1;s=1", "m=3;t=2;s=1,2", "m=3;t=1;s=2"] {
        for id in [
            "thm1.7/eq10",
            "thm1.7/eq11",
            "thm1.7/eq12",
            "thm1.7/eq13",
            "thm1.8/eq14",
            "thm1.8/eq15",
            "thm1.8/eq16",
        ] {
            cases.push((id, shape.to_string()));
        }
    }
    cases.push(("cor1.9", "m=2;s=1".into()));
    cases.push(("cor1.9", "m=3;s=1,2".into()));
    all_pass(&cases, Caps::bounded(8, 3))
}

fn criterion_7() -> Outcome {
    let y = |i| Poly::var(Var::Sym('y', i));
    let e2 = eulerian_poly(2, &[y(1)]).unwrap();
    let e3 = eulerian_poly(3, &[y(1), y(2)]).unwrap();
    let mut e3_expected = Poly::one();
    e3_expected.add_assign(&y(1).scale(&2.into()));
    e3_expected.add_assign(&y(2).scale(&2.into()));
    e3_expected.add_assign(&y(1).mul(&y(2)));
    let mut e2_expected = Poly::one();
    e2_expected.add_assign(&y(1));
    let mut ok = e2 == e2_expected && e3 == e3_expected;

    for n in 1..=6usize {
        let caps = Caps::unbounded((n * (n - 1) / 2) as u32 + 2);
        let zeros = vec![Series::zero(caps); n];
        let mut ys: Vec<Series> = (1..n).map(|i| Series::term(Poly::one(), i as u32, caps)).collect();
        ys.push(Series::one(caps));
        let lhs = eulerian_bar(n, &zeros, &ys).unwrap();
        let mut rhs = pochhammer(&Poly::one(), 1, 1, Some(n as u64), caps).unwrap();
        for _ in 0..n {
            rhs.div_one_minus(&Poly::one(), 1).unwrap();
        }
        ok &= lhs == rhs;
    }
    for n in 1..=7usize {
        let caps = Caps::unbounded(0);
        let x = Series::term(Poly::var(Var::Sym('x', 1)), 0, caps);
        let zeros = vec![Series::zero(caps); n];
        let xs = vec![x; n];
        let e = eulerian_bar(n, &zeros, &xs).unwrap();
        ok &= e.coeff(0).coefficient_sum() == BigInt::from((1..=n as u64).product::<u64>());
    }
    check(
        ok,
        format!("E_2 = {e2}, E_3 = {e3}; q-specialization n <= 6; coefficient sums n! for n <= 7"),
    )
}

fn criterion_8() -> Outcome {
    let mut cases = Vec::new();
    for u in ["Unk(2,1)", "Unk(2,2)", "Unk(3,1)"] {
        for id in [
            "thm1.12/eq17",
            "thm1.12/eq18",
            "thm1.12/eq19",
            "thm1.14/eq20",
            "thm1.14/eq21",
            "thm1.14/eq22",
        ] {
            cases.push((id, format!("U={u}")));
        }
    }
    for k in [1, 2] {
        cases.push(("cor-unk/n2", format!("k={k}")));
        cases.push(("cor-unk/n2-p", format!("k={k}")));
    }
    cases.push(("cor-unk/ovp", "n=3;k=1".into()));
    all_pass(&cases, Caps::bounded(8, 2))
}

fn criterion_9() -> Outcome {
    let mut sweeps = vec![("gamma_u", verify::gamma_u_bijection(4, 3).unwrap())];
    for u in ["U=1,(2)*", "Unk(2,1)", "Unk(3,1)"] {
        let u = u.parse().unwrap();
        sweeps.push(("gamma_U", verify::gamma_big_u_bijection(&u, 10).unwrap()));
        sweeps.push(("lemma4.6", verify::admissible_sizable_transport(&u, 10).unwrap()));
    }
    let checked: usize = sweeps.iter().map(|(_, s)| s.checked).sum();
    let bad: Vec<String> = sweeps
        .iter()
        .flat_map(|(name, s)| {
            s.violations
                .iter()
                .map(move |v| format!("{name}: {} {}", v.object, v.reason))
        })
        .collect();
    check(
        bad.is_empty(),
        format!("{checked} objects checked, {} violations {}", bad.len(), bad.join("; ")),
    )
}

fn criterion_10() -> Outcome {
    let mut cases = vec![("thm3.2", "m=2".to_string()), ("thm3.2", "m=3".to_string())];
    let a = all_pass(&cases, Caps::bounded(7, 7));
    cases.clear();
    for shape in ["m=2;t=1;s=1", "m=3;t=2;s=1,2", "m=3;t=1;s=2"] {
        cases.push(("cor3.3", shape.to_string()));
        cases.push(("alpha_S", shape.to_string()));
    }
    let b = all_pass(&cases, Caps::bounded(8, 3));
    check(a.ok && b.ok, format!("Glaisher {}; corollary {}", a.detail, b.detail))
}

fn criterion_11() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_schmidt"))
            .args(["verify", "--id", "all", "--json"])
            .arg(&path)
            .env_remove("SCHMIDT_DEFAULT_CAPS")
            .output()
            .unwrap();
        outputs.push((status.status.code(), status.stdout, std::fs::read(&path).unwrap()));
    }
    let same = outputs[0] == outputs[1];
    check(
        same && !outputs[0].2.is_empty(),
        format!(
            "two runs of `verify --id all`: JSON {} bytes, identical {same}",
            outputs[0].2.len()
        ),
    )
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        (
            "1 conjugation involution, weight <= 20",
            Duration::from_secs(10),
            criterion_1,
        ),
        (
            "2 Schmidt odd-index weight = p(n), n <= 12",
            Duration::from_secs(5),
            criterion_2,
        ),
        (
            "3 S-product identities, S in {odds, tri1}",
            Duration::from_secs(60),
            criterion_3,
        ),
        (
            "4 plane partitions three ways, n <= 8",
            Duration::from_secs(30),
            criterion_4,
        ),
        (
            "5 tri, squares, fib, pow2 products",
            Duration::from_secs(60),
            criterion_5,
        ),
        (
            "6 mod-m identities for three shapes",
            Duration::from_secs(180),
            criterion_6,
        ),
        ("7 Eulerian polynomials", Duration::from_secs(5), criterion_7),
        (
            "8 block identities, U(2,1), U(2,2), U(3,1)",
            Duration::from_secs(300),
            criterion_8,
        ),
        ("9 sorting bijections", Duration::from_secs(60), criterion_9),
        (
            "10 flat = regular, and the corollary",
            Duration::from_secs(120),
            criterion_10,
        ),
        ("11 deterministic reports", Duration::from_secs(120), criterion_11),
    ];
    let mut failed = Vec::new();
    let stdout = std::io::stdout();
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let ok = outcome.ok && took <= limit;
        let line = format!(
            "[{}] criterion {name}: {} ({:.2}s, limit {}s)\n",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
        stdout.lock().write_all(line.as_bytes()).unwrap();
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
