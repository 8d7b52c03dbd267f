//! Exact integer solutions of linear Diophantine equations in two and three
//! unknowns and of 2x3 systems, as affine lattices, plus lattice-point
//! enumeration and counting inside boxes, balls and filtered regions.
//!
//! ```
//! use dioph::{solve3, Equation3, Region, count};
//!
//! let sol = solve3(Equation3::new(2, 1, 5, 16)).unwrap();
//! let region = Region::new([(0, 8), (0, 16), (0, 3)]).unwrap();
//! assert_eq!(count(&sol.set, &region).unwrap(), 20);
//! ```

pub mod arith;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod region;
pub mod solve2;
pub mod solve3;
pub mod system;

pub use arith::{divides, ext_gcd, gcd, gcd3, Bezout};
pub use enumerate::{count, enumerate, visit};
pub use error::{Error, Result};
pub use lattice::{AffineLattice, Obstruction, Point, SolutionSet, SolutionSet2, SolutionSet3};
pub use oracle::brute_force;
pub use region::{Ball, Predicate, Region};
pub use solve2::{particular_solution2, solve2, Equation2};
pub use solve3::{
    solve3, solve3_coprime_pair, solve3_general, solve3_unit, CaseTag3, Equation3, Pair, Solution3,
};
pub use system::{
    planar_reduction, proportionality, solve_system, system_invariants, ChartCase,
    ProportionalityReport, System2x3, SystemCase, SystemInvariants, SystemSolution,
};
