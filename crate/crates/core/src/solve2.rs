//! `a*x + b*y = c` over the integers.

use std::fmt;

use crate::arith::{add, divides, exact_div, gcd_signed, mul, neg, sub};
use crate::error::{Error, Result};
use crate::lattice::{AffineLattice, Obstruction, SolutionSet2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Equation2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Equation2 {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn is_satisfied_by(&self, x: i64, y: i64) -> bool {
        self.a as i128 * x as i128 + self.b as i128 * y as i128 == self.c as i128
    }
}

impl fmt::Display for Equation2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

/// One integer solution by Euclidean descent, or `None` when `gcd(a, b)`
/// does not divide `c`. Requires `a != 0` and `b != 0`.
///
/// The equation is first divided through by `gcd(a, b)`. While neither
/// coefficient is a unit, the variable with the smaller coefficient is
/// solved for; writing `b = a*q + r` and `c = a*Q + R` with `0 <= r, R < |a|`
/// gives `x = Q - q*y + w` where `a*w + r*y = R`, a strictly smaller
/// equation. A unit coefficient ends the descent, and the substitutions are
/// undone on the way back out.
pub fn particular_solution2(eq: Equation2) -> Result<Option<(i64, i64)>> {
    let Equation2 { a, b, c } = eq;
    if a == 0 || b == 0 {
        return Err(Error::Contract("descent needs two nonzero coefficients"));
    }
    let g = gcd_signed(a, b)?;
    if !divides(g, c) {
        return Ok(None);
    }
    descend(exact_div(a, g)?, exact_div(b, g)?, exact_div(c, g)?).map(Some)
}

/// Coprime, nonzero `a` and `b`.
fn descend(a: i64, b: i64, c: i64) -> Result<(i64, i64)> {
    if a.abs() == 1 {
        // x = c / a with y = 0
        return Ok((mul(a, c)?, 0));
    }
    if b.abs() == 1 {
        return Ok((0, mul(b, c)?));
    }
    if a.abs() < b.abs() {
        let (q, r) = (b.div_euclid(a), b.rem_euclid(a));
        let (big_q, big_r) = (c.div_euclid(a), c.rem_euclid(a));
        // a*w + r*y = R; r != 0 because gcd(a, b) = 1 and |a| > 1
        let (w, y) = descend(a, r, big_r)?;
        let x = add(sub(big_q, mul(q, y)?)?, w)?;
        Ok((x, y))
    } else {
        let (y, x) = descend(b, a, c)?;
        Ok((x, y))
    }
}

/// Complete solution set, including the zero-coefficient cases.
///
/// A solvable equation with `(a, b) != (0, 0)` yields one generator
/// `(b/g, -a/g)`, sign-normalised so its first nonzero entry is positive.
/// `0x + 0y = 0` yields the whole plane.
pub fn solve2(eq: Equation2) -> Result<SolutionSet2> {
    let Equation2 { a, b, c } = eq;
    let lattice = match (a, b) {
        (0, 0) => {
            if c != 0 {
                return Ok(SolutionSet2::Empty(Obstruction {
                    divisor: 0,
                    target: c,
                }));
            }
            AffineLattice::everything()
        }
        (0, b) => {
            if !divides(b, c) {
                return Ok(SolutionSet2::Empty(Obstruction {
                    divisor: b.abs(),
                    target: c,
                }));
            }
            AffineLattice::new([0, exact_div(c, b)?], vec![[1, 0]])?
        }
        (a, 0) => {
            if !divides(a, c) {
                return Ok(SolutionSet2::Empty(Obstruction {
                    divisor: a.abs(),
                    target: c,
                }));
            }
            AffineLattice::new([exact_div(c, a)?, 0], vec![[0, 1]])?
        }
        (a, b) => {
            let Some((x1, y1)) = particular_solution2(eq)? else {
                return Ok(SolutionSet2::Empty(Obstruction {
                    divisor: gcd_signed(a, b)?,
                    target: c,
                }));
            };
            let g = gcd_signed(a, b)?;
            let (mut dx, mut dy) = (exact_div(b, g)?, neg(exact_div(a, g)?)?);
            if dx < 0 {
                (dx, dy) = (neg(dx)?, neg(dy)?);
            }
            AffineLattice::new([x1, y1], vec![[dx, dy]])?
        }
    };
    Ok(SolutionSet2::Lattice(lattice))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn descent_reproduces_hand_computation() {
        // 51x + 70y = 159 unwinds to (-1, 3)
        assert_eq!(
            particular_solution2(Equation2::new(102, 140, 318)).unwrap(),
            Some((-1, 3))
        );
        assert_eq!(particular_solution2(Equation2::new(4, 6, 7)).unwrap(), None);
        let (x, y) = particular_solution2(Equation2::new(21, 10, 135))
            .unwrap()
            .unwrap();
        assert_eq!(21 * x + 10 * y, 135);
        assert!(particular_solution2(Equation2::new(0, 3, 3)).is_err());
    }

    #[test]
    fn descent_with_negative_coefficients() {
        for (a, b, c) in [
            (-21, -10, -135),
            (-7, 12, 5),
            (13, -55, 101),
            (-3, -3, 9),
            (9, -4, 0),
        ] {
            let (x, y) = particular_solution2(Equation2::new(a, b, c))
                .unwrap()
                .unwrap();
            assert_eq!(a * x + b * y, c, "({a}, {b}, {c})");
        }
    }

    #[test]
    fn solve2_fixtures() {
        let s = solve2(Equation2::new(102, 140, 318)).unwrap();
        let l = s.lattice().unwrap();
        assert_eq!(l.base(), &[-1, 3]);
        assert_eq!(l.generators(), &[[70, -51]]);
        let known = SolutionSet2::Lattice(AffineLattice::new([-1, 3], vec![[-70, 51]]).unwrap());
        assert!(s.same_set(&known).unwrap());

        let all = solve2(Equation2::new(0, 0, 0)).unwrap();
        assert_eq!(all.lattice().unwrap().generators(), &[[1, 0], [0, 1]]);

        assert_eq!(
            solve2(Equation2::new(0, 4, 6)).unwrap(),
            SolutionSet2::Empty(Obstruction {
                divisor: 4,
                target: 6
            })
        );
        assert_eq!(
            solve2(Equation2::new(0, 0, 6)).unwrap(),
            SolutionSet2::Empty(Obstruction {
                divisor: 0,
                target: 6
            })
        );
        let horizontal = solve2(Equation2::new(0, -4, 8)).unwrap();
        assert_eq!(horizontal.lattice().unwrap().base(), &[0, -2]);
        let vertical = solve2(Equation2::new(3, 0, -9)).unwrap();
        assert_eq!(vertical.lattice().unwrap().base(), &[-3, 0]);
        assert_eq!(vertical.lattice().unwrap().generators(), &[[0, 1]]);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(solve2(Equation2::new(i64::MIN, 0, 0)).map(|_| ()), Ok(()));
        assert_eq!(
            solve2(Equation2::new(i64::MIN, i64::MIN, 0)),
            Err(Error::Overflow)
        );
    }

    fn brute(eq: Equation2, r: i64) -> Vec<(i64, i64)> {
        let mut v = vec![];
        for x in -r..=r {
            for y in -r..=r {
                if eq.is_satisfied_by(x, y) {
                    v.push((x, y));
                }
            }
        }
        v
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn matches_brute_force_on_box(a in -30i64..=30, b in -30i64..=30, c in -30i64..=30) {
            let eq = Equation2::new(a, b, c);
            let set = solve2(eq).unwrap();
            let mut via_set = vec![];
            for x in -50i64..=50 {
                for y in -50i64..=50 {
                    if set.contains(&[x, y]).unwrap() {
                        via_set.push((x, y));
                    }
                }
            }
            prop_assert_eq!(via_set, brute(eq, 50));
            let g = crate::arith::gcd(a, b) as i64;
            prop_assert_eq!(set.is_empty(), !divides(g, c));
        }

        #[test]
        fn generated_points_satisfy(a in -1000i64..=1000, b in -1000i64..=1000, c in -1000i64..=1000,
                                   ts in proptest::collection::vec(-10_000i64..10_000, 100)) {
            let eq = Equation2::new(a, b, c);
            if let SolutionSet2::Lattice(l) = solve2(eq).unwrap() {
                for t in ts {
                    let params: Vec<i64> = std::iter::repeat_n(t, l.rank()).collect();
                    let p = l.point(&params).unwrap();
                    prop_assert!(eq.is_satisfied_by(p[0], p[1]));
                }
                if (a, b) != (0, 0) {
                    prop_assert_eq!(l.rank(), 1);
                    let g = l.generators()[0];
                    prop_assert!(g[0] > 0 || (g[0] == 0 && g[1] > 0));
                }
            }
        }
    }
}
