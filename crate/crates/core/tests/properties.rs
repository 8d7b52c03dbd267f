//! Solver output against exhaustive scans and substitution, through the public API.

use dioph::oracle::brute_force;
use dioph::{
    count, enumerate, solve2, solve3, solve_system, Equation2, Equation3, Region, SolutionSet,
    System2x3,
};
use proptest::prelude::*;

fn small_cube() -> Region<3> {
    Region::cube(-6, 6).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn single_equation_matches_scan(a in -12i64..=12, b in -12i64..=12, c in -12i64..=12, d in -40i64..=40) {
        let eq = Equation3::new(a, b, c, d);
        let sol = solve3(eq).unwrap();
        let region = small_cube();
        prop_assert_eq!(enumerate(&sol.set, &region).unwrap(), brute_force(&[eq], &region).unwrap());
    }

    #[test]
    fn system_matches_scan(
        r1 in prop::array::uniform4(-6i64..=6),
        r2 in prop::array::uniform4(-6i64..=6),
    ) {
        let rows = [Equation3::new(r1[0], r1[1], r1[2], r1[3]), Equation3::new(r2[0], r2[1], r2[2], r2[3])];
        let sol = solve_system(System2x3::new(rows[0], rows[1])).unwrap();
        let region = small_cube();
        prop_assert_eq!(enumerate(&sol.set, &region).unwrap(), brute_force(&rows, &region).unwrap());
        if let Some(l) = sol.set.lattice() {
            prop_assert!(rows.iter().all(|r| r.is_satisfied_by(l.base())));
        }
    }

    #[test]
    fn generated_points_satisfy_equation(a in -50i64..=50, b in -50i64..=50, c in -50i64..=50, d in -500i64..=500, m in -20i64..=20, n in -20i64..=20) {
        let eq = Equation3::new(a, b, c, d);
        if let SolutionSet::Lattice(l) = solve3(eq).unwrap().set {
            let params = [m, n, m - n];
            let p = l.point(&params[..l.rank()]).unwrap();
            prop_assert!(eq.is_satisfied_by(&p));
        }
    }

    #[test]
    fn two_variable_solutions_are_complete(a in -40i64..=40, b in -40i64..=40, c in -100i64..=100) {
        let set = solve2(Equation2::new(a, b, c)).unwrap();
        let region = Region::<2>::cube(-30, 30).unwrap();
        let mut truth = Vec::new();
        for x in -30..=30 {
            for y in -30..=30 {
                if a * x + b * y == c {
                    truth.push([x, y]);
                }
            }
        }
        prop_assert_eq!(enumerate(&set, &region).unwrap(), truth);
    }

    #[test]
    fn count_equals_enumeration_length(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -20i64..=20, r2 in 0i64..60) {
        let set = solve3(Equation3::new(a, b, c, d)).unwrap().set;
        let region = Region::cube(-8, 8).unwrap().with_ball([0, 0, 0], r2).unwrap();
        prop_assert_eq!(count(&set, &region).unwrap() as usize, enumerate(&set, &region).unwrap().len());
    }
}
