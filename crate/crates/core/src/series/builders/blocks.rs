use crate::blocks::{BlockFamily, BlockType};
use crate::error::{Error, Result};
use crate::partitions::IndexSet;
use crate::series::{eulerian_bar, Caps, ColorAssignment, ColorIndex, Series, Subst, Var};

/// The q-exponent attached to position `j`.
#[derive(Clone, Debug)]
pub enum BlockWeight {
    /// `q^j`
    Plain,
    /// `q^{floor_S(j)}`
    Index(IndexSet),
}

impl BlockWeight {
    fn at(&self, j: usize) -> u64 {
        match self {
            BlockWeight::Plain => j as u64,
            BlockWeight::Index(s) => s.floor_size(j as u64),
        }
    }

    fn check(&self, caps: Caps) -> Result<()> {
        if let BlockWeight::Index(s) = self {
            if s.nth(caps.q as usize + 1).is_none() {
                return Err(Error::NonTerminating(format!(
                    "{s} has fewer than {} elements, so infinitely many blocks sit below q^{}",
                    caps.q + 1,
                    caps.q + 1
                )));
            }
        }
        Ok(())
    }
}

/// What the last position of a block contributes to its Eulerian factor.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Last {
    /// `(x, y) = (c~ q^w, 1)`
    Open,
    /// `(x, y) = (0, 1)`
    Closed,
    /// `(x, y) = (c~ q^w, c q^w)`
    Full,
}

struct Ctx<'a> {
    u: &'a BlockType,
    weight: &'a BlockWeight,
    caps: Caps,
    assign: &'a ColorAssignment,
}

impl Ctx<'_> {
    fn at(&self, c: ColorIndex, j: usize) -> Series {
        let w = self.weight.at(j);
        if w > self.caps.q as u64 {
            return Series::zero(self.caps);
        }
        Series::term(self.assign.color(c), w as u32, self.caps)
    }

    /// `E~_{u_n}` over block `n`, with overlined arguments dropped when
    /// `bars` is false.
    fn eulerian(&self, n: usize, bars: bool, last: Last) -> Result<Series> {
        let range: Vec<usize> = self.u.block_range(n).collect();
        let k = range.len();
        let zero = Series::zero(self.caps);
        let one = Series::one(self.caps);
        let mut x = Vec::with_capacity(k);
        let mut y = Vec::with_capacity(k);
        for (i, &j) in range.iter().enumerate() {
            let bar = if bars {
                self.at(ColorIndex::bar(j as u64), j)
            } else {
                zero.clone()
            };
            let plain = self.at(ColorIndex::plain(j as u64), j);
            if i + 1 < k {
                x.push(bar);
                y.push(plain);
            } else {
                match last {
                    Last::Open => {
                        x.push(bar);
                        y.push(one.clone());
                    }
                    Last::Closed => {
                        x.push(zero.clone());
                        y.push(one.clone());
                    }
                    Last::Full => {
                        x.push(bar);
                        y.push(plain);
                    }
                }
            }
        }
        eulerian_bar(k, &x, &y)
    }

    /// Divides by `prod (1 - c_j q^{w_j})` over block `n`, its last
    /// position excluded when `skip_last`.
    fn divide_block(&self, s: &mut Series, n: usize, skip_last: bool) -> Result<()> {
        let range = self.u.block_range(n);
        let end = *range.end();
        for j in range {
            if skip_last && j == end {
                continue;
            }
            let w = self.weight.at(j);
            if w <= self.caps.q as u64 {
                s.div_one_minus(&self.assign.color(ColorIndex::plain(j as u64)), w as u32)?;
            }
        }
        Ok(())
    }
}

/// `prod_{n >= 1} E~_{u_n}(...) / prod_{j in block n} (1 - c_j q^{w_j})`,
/// the plain-family form using `E_{u_n}` on the plain colors.
pub fn block_product(
    u: &BlockType,
    family: BlockFamily,
    weight: &BlockWeight,
    caps: Caps,
    assign: &ColorAssignment,
) -> Result<Series> {
    if family == BlockFamily::Dbar {
        return block_distinct_sum(u, weight, caps, assign);
    }
    weight.check(caps)?;
    let ctx = Ctx {
        u,
        weight,
        caps,
        assign,
    };
    let mut out = Series::one(caps);
    for n in 1.. {
        if weight.at(*u.block_range(n).start()) > caps.q as u64 {
            break;
        }
        let bars = family == BlockFamily::Pbar;
        let mut f = ctx.eulerian(n, bars, if bars { Last::Open } else { Last::Closed })?;
        ctx.divide_block(&mut f, n, false)?;
        out = out.mul(&f)?;
    }
    Ok(out)
}

/// `sum_{n >= 1} [E~_{u_n}(..., 0, 1) / prod_{j < U_n}] * prod_{m < n} [E~_{u_m}(..., c~ q^w, c q^w) / prod_{block m}]`.
pub fn block_distinct_sum(u: &BlockType, weight: &BlockWeight, caps: Caps, assign: &ColorAssignment) -> Result<Series> {
    weight.check(caps)?;
    let ctx = Ctx {
        u,
        weight,
        caps,
        assign,
    };
    let mut sum = Series::zero(caps);
    let mut prefix = Series::one(caps);
    for n in 1.. {
        let mut open = ctx.eulerian(n, true, Last::Closed)?;
        ctx.divide_block(&mut open, n, true)?;
        sum = sum.add(&open.mul(&prefix)?)?;
        let mut closed = ctx.eulerian(n, true, Last::Full)?;
        ctx.divide_block(&mut closed, n, false)?;
        prefix = prefix.mul(&closed)?;
        if prefix.is_zero() {
            break;
        }
        if n > 100_000 {
            return Err(Error::NonTerminating(format!(
                "block sum for {u} does not vanish at {caps}"
            )));
        }
    }
    Ok(sum)
}

fn color_q(assign: &ColorAssignment, c: ColorIndex, j: u32, caps: Caps) -> Series {
    Series::term(assign.color(c), j, caps)
}

/// The closed form for `U_{n,k}` with colors reduced mod `nk + 1`:
/// `(-c_1~ q; q) / (c_1 q; q) * prod_i prod_{j >= 1} E~_n(... q^j ...) / prod_r (c_r q; q)`.
pub fn unk_product(n: u64, k: u64, family: BlockFamily, caps: Caps, assign: &ColorAssignment) -> Result<Series> {
    if family == BlockFamily::Dbar {
        return Err(Error::InvalidParams("no closed product for Dbar(U_{n,k})".into()));
    }
    let bars = family == BlockFamily::Pbar;
    let mut out = Series::one(caps);
    if bars {
        out.mul_pochhammer(&assign.color(ColorIndex::bar(1)).neg(), 1, 1, None)?;
    }
    out.div_pochhammer(&assign.color(ColorIndex::plain(1)), 1, 1, None)?;
    let zero = Series::zero(caps);
    let one = Series::one(caps);
    for i in 1..=k {
        let first = 2 + (i - 1) * n;
        for j in 1..=caps.q {
            let mut x = Vec::new();
            let mut y = Vec::new();
            for r in first..first + n - 1 {
                x.push(if bars {
                    color_q(assign, ColorIndex::bar(r), j, caps)
                } else {
                    zero.clone()
                });
                y.push(color_q(assign, ColorIndex::plain(r), j, caps));
            }
            x.push(if bars {
                color_q(assign, ColorIndex::bar(i * n + 1), j, caps)
            } else {
                zero.clone()
            });
            y.push(one.clone());
            out = out.mul(&eulerian_bar(n as usize, &x, &y)?)?;
        }
        for r in first..=1 + i * n {
            out.div_pochhammer(&assign.color(ColorIndex::plain(r)), 1, 1, None)?;
        }
    }
    Ok(out)
}

/// The `n = 2` shape: `(-c_{2i+1}~ q, -(c_{2i} + 2 c_{2i}~) q; q) / (c_{2i} q, c_{2i+1} q; q)`,
/// and `(-c_{2i} q; q) / (c_{2i} q, c_{2i+1} q; q)` for partitions.
pub fn unk_two_product(k: u64, family: BlockFamily, caps: Caps, assign: &ColorAssignment) -> Result<Series> {
    let c = |i: u64| assign.color(ColorIndex::plain(i));
    let cb = |i: u64| assign.color(ColorIndex::bar(i));
    let mut out = Series::one(caps);
    match family {
        BlockFamily::Pbar => out.mul_pochhammer(&cb(1).neg(), 1, 1, None)?,
        BlockFamily::P => {}
        BlockFamily::Dbar => return Err(Error::InvalidParams("no closed product for Dbar(U_{2,k})".into())),
    }
    out.div_pochhammer(&c(1), 1, 1, None)?;
    for i in 1..=k {
        if family == BlockFamily::Pbar {
            out.mul_pochhammer(&cb(2 * i + 1).neg(), 1, 1, None)?;
            let mut mid = c(2 * i);
            mid.add_assign(&cb(2 * i).scale(&num_bigint::BigInt::from(2)));
            out.mul_pochhammer(&mid.neg(), 1, 1, None)?;
        } else {
            out.mul_pochhammer(&c(2 * i).neg(), 1, 1, None)?;
        }
        out.div_pochhammer(&c(2 * i), 1, 1, None)?;
        out.div_pochhammer(&c(2 * i + 1), 1, 1, None)?;
    }
    Ok(out)
}

/// `c_j -> c_{(j-1) mod p + 1}` on both classes, for the indices below `limit`.
pub fn periodic_colors(assign: &ColorAssignment, p: u64, limit: u64) -> Result<ColorAssignment> {
    let mut a = assign.clone();
    for j in p + 1..=limit {
        let r = (j - 1) % p + 1;
        for (from, to) in [
            (ColorIndex::plain(j), ColorIndex::plain(r)),
            (ColorIndex::bar(j), ColorIndex::bar(r)),
        ] {
            let target = match assign.rule(to) {
                Subst::Keep => Subst::To(Var::Color(to)),
                other => other,
            };
            a = a.set(from, target)?;
        }
    }
    Ok(a)
}
