use crate::error::{Error, Result};
use crate::partitions::ModMShape;
use crate::series::builders::schmidt::ProductKind;
use crate::series::{Caps, ColorAssignment, ColorIndex, Poly, Series, Var};

/// `prod_{j=1}^{m}` of the factor `kind` built from `(a q^{w_j}; q^t)_inf`,
/// with `w_j = #{s_i <= j}`. When `restricted`, residue `m` keeps only its
/// overlined numerator (`c_m = 1`).
pub fn modm_product(
    kind: ProductKind,
    shape: &ModMShape,
    restricted: bool,
    caps: Caps,
    assign: &ColorAssignment,
) -> Result<Series> {
    let t = shape.t() as u32;
    let mut out = Series::one(caps);
    for j in 1..=shape.m() {
        let w = shape.residue_shift(j) as u32;
        let last = restricted && j == shape.m();
        if kind != ProductKind::Plain {
            out.mul_pochhammer(&assign.color(ColorIndex::bar(j)).neg(), w, t, None)?;
        }
        if kind != ProductKind::Flat && !last {
            out.div_pochhammer(&assign.color(ColorIndex::plain(j)), w, t, None)?;
        }
    }
    Ok(out)
}

/// How the mod-m distinct-part sum is written.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModMDistinctForm {
    /// `c_j~^{N} q^{w N + t N(N-1)/2} / (c_j q^w; q^t)_N`, obtained by
    /// grouping the terms of the basic distinct-part sum by residue.
    Corrected,
    /// `(c_j~ q^w)^N / (c_j~ q^w; q^t)_N`, taken literally.
    Literal,
}

/// `sum_{n >= 0} sum_{l=1}^{m} prod_j term_j(N_j)` with `N_j = n + [j < l]`.
pub fn modm_distinct_sum(
    shape: &ModMShape,
    form: ModMDistinctForm,
    caps: Caps,
    assign: &ColorAssignment,
) -> Result<Series> {
    let (m, t) = (shape.m(), shape.t());
    let mut sum = Series::zero(caps);
    for n in 0u64.. {
        let mut alive = false;
        for l in 1..=m {
            let mut term = Series::one(caps);
            for j in 1..=m {
                let count = n + u64::from(j < l);
                let w = shape.residue_shift(j);
                let bar = assign.color(ColorIndex::bar(j));
                let shift = match form {
                    ModMDistinctForm::Corrected => w * count + t * count * count.saturating_sub(1) / 2,
                    ModMDistinctForm::Literal => w * count,
                };
                if shift > caps.q as u64 {
                    term = Series::zero(caps);
                    break;
                }
                term = term.mul(&Series::term(poly_pow(&bar, count), shift as u32, caps))?;
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            alive = true;
            for j in 1..=m {
                let count = n + u64::from(j < l);
                let w = shape.residue_shift(j) as u32;
                let denom = match form {
                    ModMDistinctForm::Corrected => assign.color(ColorIndex::plain(j)),
                    ModMDistinctForm::Literal => assign.color(ColorIndex::bar(j)),
                };
                term.div_pochhammer(&denom, w, t as u32, Some(count))?;
            }
            sum = sum.add(&term)?;
        }
        if !alive {
            break;
        }
        if n > 100_000 {
            return Err(Error::NonTerminating("mod-m distinct-part sum does not vanish".into()));
        }
    }
    Ok(sum)
}

fn poly_pow(p: &Poly, e: u64) -> Poly {
    let mut out = Poly::one();
    for _ in 0..e {
        out = out.mul(p);
    }
    out
}

/// The seven rows in `x`, `y`, `z` for `S` the positive multiples of `m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ThetaRow {
    Over,
    Plain,
    Flat,
    Distinct,
    OverM,
    PlainM,
    FlatM,
}

impl ThetaRow {
    pub const ALL: [ThetaRow; 7] = [
        ThetaRow::Over,
        ThetaRow::Plain,
        ThetaRow::Flat,
        ThetaRow::Distinct,
        ThetaRow::OverM,
        ThetaRow::PlainM,
        ThetaRow::FlatM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThetaRow::Over => "ovp",
            ThetaRow::Plain => "p",
            ThetaRow::Flat => "ovf",
            ThetaRow::Distinct => "ovd",
            ThetaRow::OverM => "ovp-m",
            ThetaRow::PlainM => "p-m",
            ThetaRow::FlatM => "ovf-m",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ThetaRow::ALL.into_iter().find(|r| r.name() == name)
    }
}

fn sym(c: char) -> Poly {
    Poly::var(Var::sym(c))
}

/// `(a q^shift; q)_n^{power}`, multiplied (or divided) into `s`.
fn apply(s: &mut Series, a: &Poly, shift: u32, n: Option<u64>, power: u64, divide: bool) -> Result<()> {
    for _ in 0..power {
        if divide {
            s.div_pochhammer(a, shift, 1, n)?;
        } else {
            s.mul_pochhammer(a, shift, 1, n)?;
        }
    }
    Ok(())
}

/// Right-hand side of one theta row. For the distinct row, `literal`
/// drops the factor `q^n` that the grouped sum carries.
pub fn theta_rhs(row: ThetaRow, m: u64, l: u64, literal: bool, caps: Caps) -> Result<Series> {
    if m == 0 || l == 0 || l > m {
        return Err(Error::InvalidParams(format!("need 1 <= l <= m, got m = {m}, l = {l}")));
    }
    let (x, y, z) = (sym('x'), sym('y'), sym('z'));
    let (nx, ny) = (l - 1, m - l);
    let mut s = Series::one(caps);
    let inf = None;
    match row {
        ThetaRow::Over | ThetaRow::OverM => {
            apply(&mut s, &x.neg(), 0, inf, nx, false)?;
            apply(&mut s, &x, 0, inf, nx, true)?;
            apply(&mut s, &y.neg(), 0, inf, ny, false)?;
            apply(&mut s, &y, 0, inf, ny, true)?;
            apply(&mut s, &z.neg(), 1, inf, 1, false)?;
            if row == ThetaRow::Over {
                apply(&mut s, &z, 1, inf, 1, true)?;
            }
        }
        ThetaRow::Plain | ThetaRow::PlainM => {
            apply(&mut s, &x, 0, inf, nx, true)?;
            apply(&mut s, &y, 0, inf, ny, true)?;
            if row == ThetaRow::Plain {
                apply(&mut s, &z, 1, inf, 1, true)?;
            }
        }
        ThetaRow::Flat | ThetaRow::FlatM => {
            apply(&mut s, &x.neg(), 0, inf, nx, false)?;
            apply(&mut s, &y.neg(), 0, inf, ny, false)?;
            apply(&mut s, &z.neg(), 1, inf, 1, false)?;
        }
        ThetaRow::Distinct => return theta_distinct(m, l, literal, caps),
    }
    Ok(s)
}

struct ThetaTerm {
    xe: u64,
    ye: u64,
    qe: u64,
    /// `(x;q)_{n+1}`, `(x;q)_n`, `(y;q)_{n+1}`, `(y;q)_n` powers
    dens: [u64; 4],
}

fn theta_distinct(m: u64, l: u64, literal: bool, caps: Caps) -> Result<Series> {
    let (x, y, z) = (sym('x'), sym('y'), sym('z'));
    let mut sum = Series::zero(caps);
    for n in 0u64.. {
        let base = m * n * n.saturating_sub(1) / 2 + if literal { 0 } else { n };
        let mut terms = Vec::new();
        for i in 1..l {
            terms.push(ThetaTerm {
                xe: n * (l - 1) + i - 1,
                ye: n * (m - l),
                qe: base + n * (i - 1),
                dens: [i - 1, l - i, 0, m - l],
            });
        }
        for i in l..m {
            terms.push(ThetaTerm {
                xe: (n + 1) * (l - 1),
                ye: n * (m - l) + (i - l),
                qe: base + n * (i - 1),
                dens: [l - 1, 0, i - l, m - i],
            });
        }
        terms.push(ThetaTerm {
            xe: (n + 1) * (l - 1),
            ye: (n + 1) * (m - l),
            qe: base + n * (m - 1),
            dens: [l - 1, 0, m - l, 0],
        });
        let mut alive = false;
        for t in terms {
            if t.qe > caps.q as u64 {
                continue;
            }
            let num = poly_pow(&x, t.xe).mul(&poly_pow(&y, t.ye)).mul(&poly_pow(&z, n));
            let mut s = Series::term(num, t.qe as u32, caps);
            if s.is_zero() {
                continue;
            }
            alive = true;
            apply(&mut s, &x, 0, Some(n + 1), t.dens[0], true)?;
            apply(&mut s, &x, 0, Some(n), t.dens[1], true)?;
            apply(&mut s, &y, 0, Some(n + 1), t.dens[2], true)?;
            apply(&mut s, &y, 0, Some(n), t.dens[3], true)?;
            apply(&mut s, &z, 1, Some(n), 1, true)?;
            sum = sum.add(&s)?;
        }
        if !alive {
            break;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::IndexSet;
    use crate::series::builders::schmidt::{s_distinct_sum, s_product, DistinctForm};

    fn reduce_mod(assign: &ColorAssignment, m: u64) -> ColorAssignment {
        // c_{j + km} -> c_j for the indices reachable at small caps
        let mut a = assign.clone();
        for j in m + 1..=12 * m {
            let r = (j - 1) % m + 1;
            a = a
                .set(
                    ColorIndex::plain(j),
                    crate::series::Subst::To(Var::Color(ColorIndex::plain(r))),
                )
                .unwrap()
                .set(
                    ColorIndex::bar(j),
                    crate::series::Subst::To(Var::Color(ColorIndex::bar(r))),
                )
                .unwrap();
        }
        a
    }

    #[test]
    fn grouped_products_match_basic_products() {
        let caps = Caps::bounded(5, 3);
        for shape in [
            ModMShape::new(2, vec![1]).unwrap(),
            ModMShape::new(3, vec![1, 2]).unwrap(),
        ] {
            let s = IndexSet::mod_m(shape.clone());
            let a = reduce_mod(&ColorAssignment::identity(), shape.m());
            for kind in [ProductKind::Over, ProductKind::Plain, ProductKind::Flat] {
                let want = s_product(kind, &s, caps, &a).unwrap();
                let got = modm_product(kind, &shape, false, caps, &ColorAssignment::identity()).unwrap();
                assert_eq!(got, want, "{shape} {kind:?}");
            }
            let want = s_distinct_sum(&s, caps, &a, DistinctForm::Display).unwrap();
            let got =
                modm_distinct_sum(&shape, ModMDistinctForm::Corrected, caps, &ColorAssignment::identity()).unwrap();
            assert_eq!(got, want, "{shape} distinct");
        }
    }

    #[test]
    fn literal_theta_distinct_row_has_weight_zero_term() {
        let caps = Caps::bounded(3, 3);
        let literal = theta_rhs(ThetaRow::Distinct, 1, 1, true, caps).unwrap();
        assert!(!literal.coeff(0).coeff(&"z".parse().unwrap()).eq(&0.into()));
        let fixed = theta_rhs(ThetaRow::Distinct, 1, 1, false, caps).unwrap();
        assert_eq!(fixed.coeff(0), &Poly::one());
    }
}
