//! Systems with at least two zero coefficients, classified by where the
//! zeros sit.
//!
//! Each family is solved once on a canonical zero pattern. A system is
//! brought to that pattern by permuting the unknowns and possibly swapping
//! the rows; the answer is then permuted back.

use std::fmt;

use super::{System2x3, SystemCase, SystemSolution};
use crate::arith::{add, divides, exact_div, gcd_signed, mul, neg, sub};
use crate::error::{Error, Result};
use crate::lattice::{AffineLattice, Obstruction, Point, SolutionSet, SolutionSet3};
use crate::solve2::{particular_solution2, solve2, Equation2};
use crate::solve3::{solve3, CaseTag3, Equation3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChartCase {
    /// Two zeros in one column.
    C1Group1,
    /// Two zeros in one row.
    C1Group2,
    /// Two zeros sharing neither a row nor a column.
    C1Group3,
    /// Three zeros: a pair in one row and a pair in one column.
    C2i,
    /// Three zeros: a pair in one row, all in different columns.
    C2ii,
    /// A zero row next to a row with no zeros.
    C2iii,
    /// Four zeros, the nonzero entries in one column.
    C3Group1,
    /// Four zeros, the nonzero entries in different columns.
    C3Group2,
    /// A zero row next to a row with one zero.
    C3Group3,
    /// A zero row next to a row with two zeros.
    C4,
    /// Both rows zero.
    C5,
}

impl fmt::Display for ChartCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChartCase::C1Group1 => "C.1-Group1",
            ChartCase::C1Group2 => "C.1-Group2",
            ChartCase::C1Group3 => "C.1-Group3",
            ChartCase::C2i => "C.2-i",
            ChartCase::C2ii => "C.2-ii",
            ChartCase::C2iii => "C.2-iii",
            ChartCase::C3Group1 => "C.3-Group1",
            ChartCase::C3Group2 => "C.3-Group2",
            ChartCase::C3Group3 => "C.3-Group3",
            ChartCase::C4 => "C.4",
            ChartCase::C5 => "C.5",
        })
    }
}

type Mask = [[bool; 3]; 2];

const O: bool = false;
const Z: bool = true;

/// Canonical zero patterns (`Z` marks a zero) for the families without a zero row.
const FAMILIES: [(ChartCase, Mask); 7] = [
    (ChartCase::C1Group1, [[Z, O, O], [Z, O, O]]),
    (ChartCase::C1Group2, [[Z, Z, O], [O, O, O]]),
    (ChartCase::C1Group3, [[Z, O, O], [O, Z, O]]),
    (ChartCase::C2i, [[Z, Z, O], [Z, O, O]]),
    (ChartCase::C2ii, [[Z, Z, O], [O, O, Z]]),
    (ChartCase::C3Group1, [[Z, Z, O], [Z, Z, O]]),
    (ChartCase::C3Group2, [[Z, Z, O], [O, Z, Z]]),
];

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Canonical unknown `j` is original unknown `perm[j]`; `swap` exchanges the rows.
#[derive(Debug, Clone, Copy)]
struct Arrangement {
    perm: [usize; 3],
    swap: bool,
}

impl Arrangement {
    fn apply(&self, sys: &System2x3) -> System2x3 {
        let rows = sys.rows();
        let pick = |r: usize| {
            let src = rows[if self.swap { 1 - r } else { r }];
            let k = src.coefficients();
            Equation3::from_parts([k[self.perm[0]], k[self.perm[1]], k[self.perm[2]]], src.d)
        };
        System2x3::new(pick(0), pick(1))
    }

    fn unpermute(&self, q: &Point<3>) -> Point<3> {
        let mut p = [0; 3];
        for j in 0..3 {
            p[self.perm[j]] = q[j];
        }
        p
    }

    fn unpermute_set(&self, set: SolutionSet3) -> Result<SolutionSet3> {
        Ok(match set {
            SolutionSet::Empty(o) => SolutionSet::Empty(o),
            SolutionSet::Lattice(l) => SolutionSet::Lattice(AffineLattice::new(
                self.unpermute(l.base()),
                l.generators().iter().map(|g| self.unpermute(g)).collect(),
            )?),
        })
    }
}

fn mask_of(sys: &System2x3) -> Mask {
    let rows = sys.rows();
    let mut m = [[false; 3]; 2];
    for r in 0..2 {
        let k = rows[r].coefficients();
        for j in 0..3 {
            m[r][j] = k[j] == 0;
        }
    }
    m
}

fn classify(sys: &System2x3) -> Option<(ChartCase, Arrangement)> {
    for (case, canonical) in FAMILIES {
        for swap in [false, true] {
            for perm in PERMS {
                let arr = Arrangement { perm, swap };
                let m = mask_of(&arr.apply(sys));
                if m == canonical {
                    return Some((case, arr));
                }
            }
        }
    }
    None
}

fn empty(divisor: i64, target: i64) -> SolutionSet3 {
    SolutionSet::Empty(Obstruction {
        divisor: divisor.abs(),
        target,
    })
}

fn lattice(base: Point<3>, gens: Vec<Point<3>>) -> Result<SolutionSet3> {
    Ok(SolutionSet::Lattice(AffineLattice::new(base, gens)?))
}

/// Systems where at least one row has all-zero coefficients.
pub(super) fn degenerate_rows(sys: &System2x3) -> Result<SystemSolution> {
    let rows = sys.rows();
    let chart = |case, inner| SystemCase::Chart { case, inner };
    if rows[0].is_degenerate() && rows[1].is_degenerate() {
        let set = match rows.iter().find(|r| r.d != 0) {
            Some(r) => empty(0, r.d),
            None => SolutionSet::Lattice(AffineLattice::everything()),
        };
        return Ok(SystemSolution::new(set, chart(ChartCase::C5, None)));
    }
    let (zero, other) = if rows[0].is_degenerate() {
        (rows[0], rows[1])
    } else {
        (rows[1], rows[0])
    };
    let case = match other.coefficients().iter().filter(|&&k| k != 0).count() {
        3 => ChartCase::C2iii,
        2 => ChartCase::C3Group3,
        _ => ChartCase::C4,
    };
    if zero.d != 0 {
        return Ok(SystemSolution::new(empty(0, zero.d), chart(case, None)));
    }
    let single = solve3(other)?;
    Ok(SystemSolution::new(
        single.set,
        chart(case, Some(single.case)),
    ))
}

/// At least two zero coefficients and no zero row.
pub(super) fn solve_chart(sys: &System2x3) -> Result<SystemSolution> {
    let (case, arr) = classify(sys).ok_or(Error::Contract("zero pattern outside the chart"))?;
    let canon = arr.apply(sys);
    let [r1, r2] = canon.rows();
    let (set, inner) = match case {
        ChartCase::C1Group1 => zero_column(r1, r2)?,
        ChartCase::C1Group2 => (single_then_pair(r1, r2)?, None),
        ChartCase::C1Group3 => (crossed_zeros(r1, r2)?, None),
        ChartCase::C2i => (single_then_one(r1, r2)?, None),
        ChartCase::C2ii => (single_then_pair(r1, r2)?, None),
        ChartCase::C3Group1 => (same_axis(r1, r2)?, None),
        ChartCase::C3Group2 => (two_axes(r1, r2)?, None),
        _ => unreachable!("zero-row families are handled separately"),
    };
    Ok(SystemSolution::new(
        arr.unpermute_set(set)?,
        SystemCase::Chart { case, inner },
    ))
}

/// `[0 b1 c1; 0 b2 c2]`: x is free and (y, z) solve a 2x2 system.
fn zero_column(r1: Equation3, r2: Equation3) -> Result<(SolutionSet3, Option<CaseTag3>)> {
    let det = sub(mul(r1.b, r2.c)?, mul(r2.b, r1.c)?)?;
    if det == 0 {
        // reduced rows: r1 = eps * r2 on the coefficients
        let eps = exact_div(r1.b, r2.b)?;
        if eps.abs() != 1 {
            return Err(Error::Contract("rows are not reduced"));
        }
        let want = mul(eps, r2.d)?;
        if r1.d != want {
            return Ok((empty(0, sub(r1.d, want)?), None));
        }
        let single = solve3(r1)?;
        return Ok((single.set, Some(single.case)));
    }
    let y_num = sub(mul(r1.d, r2.c)?, mul(r2.d, r1.c)?)?;
    let z_num = sub(mul(r2.d, r1.b)?, mul(r2.b, r1.d)?)?;
    for num in [y_num, z_num] {
        if !divides(det, num) {
            return Ok((empty(det, num), None));
        }
    }
    let base = [0, exact_div(y_num, det)?, exact_div(z_num, det)?];
    Ok((lattice(base, vec![[1, 0, 0]])?, None))
}

/// `z = d1/c1` from row one, then `(x, y)` from row two when it has any of them.
/// Covers `[0 0 c1; a2 b2 c2]` and `[0 0 c1; a2 b2 0]`.
fn single_then_pair(r1: Equation3, r2: Equation3) -> Result<SolutionSet3> {
    if !divides(r1.c, r1.d) {
        return Ok(empty(r1.c, r1.d));
    }
    let z0 = exact_div(r1.d, r1.c)?;
    let rest = sub(r2.d, mul(r2.c, z0)?)?;
    Ok(match solve2(Equation2::new(r2.a, r2.b, rest))? {
        SolutionSet::Empty(o) => SolutionSet::Empty(o),
        SolutionSet::Lattice(l) => {
            let [x1, y1] = *l.base();
            let [gx, gy] = l.generators()[0];
            lattice([x1, y1, z0], vec![[gx, gy, 0]])?
        }
    })
}

/// `[0 b1 c1; a2 0 c2]`.
///
/// Row one gives `y = y1 - (c1/g1)*m`, `z = z1 + (b1/g1)*m`. Substituting
/// into row two leaves `a2*x + (c2*b1/g1)*m = d2 - c2*z1`, whose solutions
/// `x = x1 - (k/g2)*t`, `m = m1 + (a2/g2)*t` with `k = c2*b1/g1` are carried
/// back into y and z.
fn crossed_zeros(r1: Equation3, r2: Equation3) -> Result<SolutionSet3> {
    let (b1, c1, d1) = (r1.b, r1.c, r1.d);
    let (a2, c2, d2) = (r2.a, r2.c, r2.d);
    let g1 = gcd_signed(b1, c1)?;
    let Some((y1, z1)) = particular_solution2(Equation2::new(b1, c1, d1))? else {
        return Ok(empty(g1, d1));
    };
    let (b1r, c1r) = (exact_div(b1, g1)?, exact_div(c1, g1)?);
    let k = mul(c2, b1r)?;
    let rest = sub(d2, mul(c2, z1)?)?;
    let g2 = gcd_signed(a2, k)?;
    let Some((x1, m1)) = particular_solution2(Equation2::new(a2, k, rest))? else {
        return Ok(empty(g2, rest));
    };
    let a2r = exact_div(a2, g2)?;
    let base = [x1, sub(y1, mul(c1r, m1)?)?, add(z1, mul(b1r, m1)?)?];
    let direction = [
        neg(exact_div(k, g2)?)?,
        neg(mul(c1r, a2r)?)?,
        mul(b1r, a2r)?,
    ];
    lattice(base, vec![direction])
}

/// `[0 0 c1; 0 b2 c2]`: z from row one, y from row two, x free.
fn single_then_one(r1: Equation3, r2: Equation3) -> Result<SolutionSet3> {
    if !divides(r1.c, r1.d) {
        return Ok(empty(r1.c, r1.d));
    }
    let z0 = exact_div(r1.d, r1.c)?;
    let rest = sub(r2.d, mul(r2.c, z0)?)?;
    if !divides(r2.b, rest) {
        return Ok(empty(r2.b, rest));
    }
    lattice([0, exact_div(rest, r2.b)?, z0], vec![[1, 0, 0]])
}

/// `[0 0 c1; 0 0 c2]`: both rows pin z; x and y are free.
fn same_axis(r1: Equation3, r2: Equation3) -> Result<SolutionSet3> {
    for r in [r1, r2] {
        if !divides(r.c, r.d) {
            return Ok(empty(r.c, r.d));
        }
    }
    let (z1, z2) = (exact_div(r1.d, r1.c)?, exact_div(r2.d, r2.c)?);
    if z1 != z2 {
        return Ok(empty(0, sub(z1, z2)?));
    }
    lattice([0, 0, z1], vec![[1, 0, 0], [0, 1, 0]])
}

/// `[0 0 c1; a2 0 0]`: z and x pinned, y free.
fn two_axes(r1: Equation3, r2: Equation3) -> Result<SolutionSet3> {
    if !divides(r1.c, r1.d) {
        return Ok(empty(r1.c, r1.d));
    }
    if !divides(r2.a, r2.d) {
        return Ok(empty(r2.a, r2.d));
    }
    lattice(
        [exact_div(r2.d, r2.a)?, 0, exact_div(r1.d, r1.c)?],
        vec![[0, 1, 0]],
    )
}
