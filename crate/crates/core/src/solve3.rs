//! `a*x + b*y + c*z = d` over the integers.

use std::fmt;

#[cfg(test)]
use crate::arith::sub;
use crate::arith::{bezout, divides, exact_div, gcd3_signed, gcd_signed, mul, neg};
use crate::error::{Error, Result};
use crate::lattice::{AffineLattice, Obstruction, Point, SolutionSet3};
use crate::solve2::{solve2, Equation2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Equation3 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Equation3 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    pub fn coefficients(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn from_parts(coefficients: [i64; 3], d: i64) -> Self {
        let [a, b, c] = coefficients;
        Self { a, b, c, d }
    }

    pub fn is_satisfied_by(&self, p: &Point<3>) -> bool {
        let lhs: i128 = self
            .coefficients()
            .iter()
            .zip(p)
            .map(|(&k, &v)| k as i128 * v as i128)
            .sum();
        lhs == self.d as i128
    }

    pub fn is_degenerate(&self) -> bool {
        self.coefficients() == [0, 0, 0]
    }
}

/// Prints as `6x - 15y + 10z = 4`; zero terms are dropped, and an all-zero
/// left side prints as `0x`.
impl fmt::Display for Equation3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.coefficients().into_iter().zip(['x', 'y', 'z']) {
            if k == 0 {
                continue;
            }
            let mag = k.unsigned_abs();
            let sign = match (first, k < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if mag == 1 {
                write!(f, "{sign}{v}")?;
            } else {
                write!(f, "{sign}{mag}{v}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0x")?;
        }
        write!(f, " = {}", self.d)
    }
}

/// Which coprime coefficient pair drove the two-parameter construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    AB,
    BC,
    AC,
}

impl Pair {
    fn indices(self) -> (usize, usize, usize) {
        match self {
            Pair::AB => (0, 1, 2),
            Pair::BC => (1, 2, 0),
            Pair::AC => (0, 2, 1),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pair::AB => "a,b",
            Pair::BC => "b,c",
            Pair::AC => "a,c",
        })
    }
}

/// Which construction produced a single-equation solution set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag3 {
    /// A coefficient is a unit; solve for that variable.
    Formula1,
    /// A coprime pair; Bezout pair of the pair plus the third variable free.
    Formula2(Pair),
    /// Every pair shares a factor; two-stage reduction through `gcd(a, b)`.
    Formula3,
    /// Exactly one coefficient is zero.
    BGroup1,
    /// Exactly two coefficients are zero.
    BGroup2,
    /// All three coefficients are zero.
    BGroup3,
    /// No zero coefficient and `gcd(a, b, c)` does not divide `d`.
    UnsolvableDivisibility,
}

impl fmt::Display for CaseTag3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag3::Formula1 => f.write_str("Formula1"),
            CaseTag3::Formula2(p) => write!(f, "Formula2({p})"),
            CaseTag3::Formula3 => f.write_str("Formula3"),
            CaseTag3::BGroup1 => f.write_str("B-Group1"),
            CaseTag3::BGroup2 => f.write_str("B-Group2"),
            CaseTag3::BGroup3 => f.write_str("B-Group3"),
            CaseTag3::UnsolvableDivisibility => f.write_str("Unsolvable-Divisibility"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution3 {
    pub set: SolutionSet3,
    pub case: CaseTag3,
}

fn unit(i: usize) -> Point<3> {
    let mut e = [0; 3];
    e[i] = 1;
    e
}

/// Complete solution set with the case that produced it.
pub fn solve3(eq: Equation3) -> Result<Solution3> {
    let k = eq.coefficients();
    let d = eq.d;
    let zeros: Vec<usize> = (0..3).filter(|&i| k[i] == 0).collect();
    let nonzero: Vec<usize> = (0..3).filter(|&i| k[i] != 0).collect();

    let (set, case) = match zeros.len() {
        3 => {
            let set = if d == 0 {
                SolutionSet3::Lattice(AffineLattice::everything())
            } else {
                SolutionSet3::Empty(Obstruction {
                    divisor: 0,
                    target: d,
                })
            };
            (set, CaseTag3::BGroup3)
        }
        2 => {
            let i = nonzero[0];
            let set = if divides(k[i], d) {
                let mut base = [0; 3];
                base[i] = exact_div(d, k[i])?;
                SolutionSet3::Lattice(AffineLattice::new(
                    base,
                    zeros.iter().map(|&j| unit(j)).collect(),
                )?)
            } else {
                SolutionSet3::Empty(Obstruction {
                    divisor: k[i].abs(),
                    target: d,
                })
            };
            (set, CaseTag3::BGroup2)
        }
        1 => {
            let (z, j, l) = (zeros[0], nonzero[0], nonzero[1]);
            let set = match solve2(Equation2::new(k[j], k[l], d))? {
                crate::lattice::SolutionSet::Empty(o) => SolutionSet3::Empty(o),
                crate::lattice::SolutionSet::Lattice(plane) => {
                    let mut base = [0; 3];
                    base[j] = plane.base()[0];
                    base[l] = plane.base()[1];
                    let g2 = plane.generators()[0];
                    let mut g = [0; 3];
                    g[j] = g2[0];
                    g[l] = g2[1];
                    SolutionSet3::Lattice(AffineLattice::new(base, vec![unit(z), g])?)
                }
            };
            (set, CaseTag3::BGroup1)
        }
        _ => {
            let g = gcd3_signed(k[0], k[1], k[2])?;
            if !divides(g, d) {
                return Ok(Solution3 {
                    set: SolutionSet3::Empty(Obstruction {
                        divisor: g,
                        target: d,
                    }),
                    case: CaseTag3::UnsolvableDivisibility,
                });
            }
            let r = Equation3::new(
                exact_div(k[0], g)?,
                exact_div(k[1], g)?,
                exact_div(k[2], g)?,
                exact_div(d, g)?,
            );
            let rk = r.coefficients();
            if rk.iter().any(|v| v.abs() == 1) {
                (solve3_unit(r)?, CaseTag3::Formula1)
            } else if let Some(pair) = first_coprime_pair(&rk)? {
                (coprime_pair_lattice(r, pair)?, CaseTag3::Formula2(pair))
            } else {
                (solve3_general(r)?, CaseTag3::Formula3)
            }
        }
    };
    Ok(Solution3 { set, case })
}

fn first_coprime_pair(k: &[i64; 3]) -> Result<Option<Pair>> {
    for pair in [Pair::AB, Pair::BC, Pair::AC] {
        let (i, j, _) = pair.indices();
        if gcd_signed(k[i], k[j])? == 1 {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

/// Formula for a unit coefficient: solve for that variable, the other two
/// are the parameters. The first unit among `a, b, c` is used.
pub fn solve3_unit(eq: Equation3) -> Result<SolutionSet3> {
    let k = eq.coefficients();
    let i = (0..3)
        .find(|&i| k[i].abs() == 1)
        .ok_or(Error::Contract("no coefficient is +1 or -1"))?;
    let u = k[i];
    let mut base = [0; 3];
    base[i] = mul(u, eq.d)?;
    let mut gens = Vec::with_capacity(2);
    for j in (0..3).filter(|&j| j != i) {
        let mut g = unit(j);
        g[i] = neg(mul(u, k[j])?)?;
        gens.push(g);
    }
    Ok(SolutionSet3::Lattice(AffineLattice::new(base, gens)?))
}

/// Formula for a coprime pair, taken in the order `(a,b)`, `(b,c)`, `(a,c)`.
///
/// For the pair `(a, b)` with `a*x1 + b*y1 = 1`:
/// `x = (d - c*m)*x1 - b*n`, `y = (d - c*m)*y1 + a*n`, `z = m`.
pub fn solve3_coprime_pair(eq: Equation3) -> Result<SolutionSet3> {
    let k = eq.coefficients();
    if gcd3_signed(k[0], k[1], k[2])? != 1 {
        return Err(Error::Contract("coefficients are not reduced"));
    }
    if k.iter().any(|v| v.abs() <= 1) {
        return Err(Error::Contract(
            "every coefficient must exceed 1 in absolute value",
        ));
    }
    let pair = first_coprime_pair(&k)?.ok_or(Error::Contract("no coprime coefficient pair"))?;
    coprime_pair_lattice(eq, pair)
}

fn coprime_pair_lattice(eq: Equation3, pair: Pair) -> Result<SolutionSet3> {
    let k = eq.coefficients();
    let (i, j, free) = pair.indices();
    let (_, s, t) = bezout(k[i], k[j])?;
    let mut base = [0; 3];
    base[i] = mul(eq.d, s)?;
    base[j] = mul(eq.d, t)?;

    let mut along_free = [0; 3];
    along_free[i] = neg(mul(k[free], s)?)?;
    along_free[j] = neg(mul(k[free], t)?)?;
    along_free[free] = 1;

    let mut in_pair = [0; 3];
    in_pair[i] = neg(k[j])?;
    in_pair[j] = k[i];

    Ok(SolutionSet3::Lattice(AffineLattice::new(
        base,
        vec![along_free, in_pair],
    )?))
}

/// Formula for the case where every coefficient pair shares a factor.
///
/// With `g = gcd(a, b)`, `(a/g)*x1 + (b/g)*y1 = 1` and `g*t1 + c*z1 = d`:
/// `x = (t1 - c*m)*x1 - (b/g)*n`, `y = (t1 - c*m)*y1 + (a/g)*n`, `z = z1 + g*m`.
/// The second auxiliary equation is solvable because `gcd(g, c) = gcd(a, b, c) = 1`.
pub fn solve3_general(eq: Equation3) -> Result<SolutionSet3> {
    let [a, b, c] = eq.coefficients();
    if gcd3_signed(a, b, c)? != 1 {
        return Err(Error::Contract("coefficients are not reduced"));
    }
    if [a, b, c].iter().any(|v| v.abs() <= 1) {
        return Err(Error::Contract(
            "every coefficient must exceed 1 in absolute value",
        ));
    }
    if first_coprime_pair(&[a, b, c])?.is_some() {
        return Err(Error::Contract("a coefficient pair is coprime"));
    }
    let g = gcd_signed(a, b)?;
    let (a_red, b_red) = (exact_div(a, g)?, exact_div(b, g)?);
    let (_, x1, y1) = bezout(a_red, b_red)?;
    let (one, u, v) = bezout(g, c)?;
    debug_assert_eq!(one, 1);
    let (t1, z1) = (mul(eq.d, u)?, mul(eq.d, v)?);

    let base = [mul(t1, x1)?, mul(t1, y1)?, z1];
    let along_t = [neg(mul(c, x1)?)?, neg(mul(c, y1)?)?, g];
    let in_plane = [neg(b_red)?, a_red, 0];
    Ok(SolutionSet3::Lattice(AffineLattice::new(
        base,
        vec![along_t, in_plane],
    )?))
}

/// Residual `d - (a*x + b*y + c*z)`; zero exactly on solutions.
#[cfg(test)]
fn residual(eq: &Equation3, p: &Point<3>) -> Result<i64> {
    let mut acc = eq.d;
    for (k, v) in eq.coefficients().iter().zip(p) {
        acc = sub(acc, mul(*k, *v)?)?;
    }
    Ok(acc)
}
