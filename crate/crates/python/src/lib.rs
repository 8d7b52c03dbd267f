//! Python bindings for `dioph`.
//!
//! Equations are accepted either as strings (`"2x + 3y + 7z = 23"`) or as
//! `(a, b, c, d)` tuples. Points are `(x, y, z)` tuples.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use dioph::cli::{parse_equation as parse, SolutionDocument};
use dioph::{Equation3, Predicate, Region, SolutionSet3, System2x3, SystemInvariants};

type P3 = (i64, i64, i64);
type Line2 = ((i64, i64), Vec<(i64, i64)>);

fn err(e: dioph::Error) -> PyErr {
    match e {
        dioph::Error::Overflow | dioph::Error::CapExceeded { .. } => {
            PyOverflowError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn tuple(p: &[i64; 3]) -> P3 {
    (p[0], p[1], p[2])
}

#[derive(FromPyObject)]
enum EquationArg {
    Text(String),
    Coefficients(i64, i64, i64, i64),
}

impl EquationArg {
    fn equation(self) -> PyResult<Equation3> {
        match self {
            EquationArg::Text(t) => parse(&t)
                .map(Equation3::from)
                .map_err(|e| PyValueError::new_err(e.to_string())),
            EquationArg::Coefficients(a, b, c, d) => Ok(Equation3::new(a, b, c, d)),
        }
    }
}

/// Solution set of one equation or of a 2x3 system.
#[pyclass(name = "Solution", module = "pydioph", frozen)]
struct Solution {
    set: SolutionSet3,
    case: String,
    equations: Vec<Equation3>,
    invariants: Option<SystemInvariants>,
}

impl Solution {
    fn region(
        bounds: [(i64, i64); 3],
        ball: Option<(P3, i64)>,
        positive: bool,
        triangle: bool,
    ) -> PyResult<Region<3>> {
        let mut region = Region::new(bounds).map_err(err)?;
        if let Some(((x, y, z), r2)) = ball {
            region = region.with_ball([x, y, z], r2).map_err(err)?;
        }
        if positive {
            region = region.with_predicate(Predicate::Positive);
        }
        if triangle {
            region = region.with_predicate(Predicate::Triangle);
        }
        Ok(region)
    }
}

#[pymethods]
impl Solution {
    #[getter]
    fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Number of free parameters, or `None` for an empty set.
    #[getter]
    fn rank(&self) -> Option<usize> {
        self.set.rank()
    }

    #[getter]
    fn case(&self) -> String {
        self.case.clone()
    }

    #[getter]
    fn base(&self) -> Option<P3> {
        self.set.lattice().map(|l| tuple(l.base()))
    }

    #[getter]
    fn generators(&self) -> Vec<P3> {
        self.set
            .lattice()
            .map(|l| l.generators().iter().map(tuple).collect())
            .unwrap_or_default()
    }

    /// `(divisor, target)` explaining an empty set.
    #[getter]
    fn obstruction(&self) -> Option<(i64, i64)> {
        self.set.obstruction().map(|o| (o.divisor, o.target))
    }

    /// `(D1, D2, D3, D, D23, delta)` when the general system elimination ran.
    #[getter]
    fn invariants(&self) -> Option<(i64, i64, i64, i64, i64, i64)> {
        self.invariants
            .map(|i| (i.d1, i.d2, i.d3, i.d, i.d23, i.delta))
    }

    fn contains(&self, point: P3) -> PyResult<bool> {
        self.set.contains(&[point.0, point.1, point.2]).map_err(err)
    }

    /// The point at the given parameter values.
    fn point(&self, params: Vec<i64>) -> PyResult<P3> {
        let l = self
            .set
            .lattice()
            .ok_or_else(|| PyValueError::new_err("the solution set is empty"))?;
        l.point(&params).map(|p| tuple(&p)).map_err(err)
    }

    fn same_set(&self, other: &Solution) -> PyResult<bool> {
        self.set.same_set(&other.set).map_err(err)
    }

    #[pyo3(signature = (bounds, ball=None, positive=false, triangle=false))]
    fn enumerate(
        &self,
        bounds: [(i64, i64); 3],
        ball: Option<(P3, i64)>,
        positive: bool,
        triangle: bool,
    ) -> PyResult<Vec<P3>> {
        let region = Self::region(bounds, ball, positive, triangle)?;
        let pts = dioph::enumerate(&self.set, &region).map_err(err)?;
        Ok(pts.iter().map(tuple).collect())
    }

    #[pyo3(signature = (bounds, ball=None, positive=false, triangle=false))]
    fn count(
        &self,
        bounds: [(i64, i64); 3],
        ball: Option<(P3, i64)>,
        positive: bool,
        triangle: bool,
    ) -> PyResult<u64> {
        let region = Self::region(bounds, ball, positive, triangle)?;
        dioph::count(&self.set, &region).map_err(err)
    }

    /// Exhaustive scan of the box, for cross-checking `enumerate`.
    #[pyo3(signature = (bounds, ball=None, positive=false, triangle=false))]
    fn brute_force(
        &self,
        bounds: [(i64, i64); 3],
        ball: Option<(P3, i64)>,
        positive: bool,
        triangle: bool,
    ) -> PyResult<Vec<P3>> {
        let region = Self::region(bounds, ball, positive, triangle)?;
        let pts = dioph::brute_force(&self.equations, &region).map_err(err)?;
        Ok(pts.iter().map(tuple).collect())
    }

    fn to_json(&self) -> String {
        SolutionDocument::new(&self.set, &self.case).to_json()
    }

    fn __repr__(&self) -> String {
        match &self.set {
            SolutionSet3::Empty(o) => format!("Solution(empty: {o}, case={})", self.case),
            SolutionSet3::Lattice(l) => format!(
                "Solution(base={:?}, generators={:?}, case={})",
                l.base(),
                l.generators(),
                self.case
            ),
        }
    }
}

#[pyfunction]
fn gcd(a: i64, b: i64) -> u64 {
    dioph::gcd(a, b)
}

#[pyfunction]
fn gcd3(a: i64, b: i64, c: i64) -> u64 {
    dioph::gcd3(a, b, c)
}

/// `(g, x, y)` with `a*x + b*y = g`.
#[pyfunction]
fn ext_gcd(a: i64, b: i64) -> (u64, i64, i64) {
    let e = dioph::ext_gcd(a, b);
    (e.g, e.x, e.y)
}

/// `(a, b, c, d)` coefficients of an equation string.
#[pyfunction]
fn parse_equation(text: &str) -> PyResult<(i64, i64, i64, i64)> {
    let p = parse(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((p.x, p.y, p.z, p.rhs))
}

/// Solutions of `a*x + b*y = c` as `(base, generators)`, or `None` if there are none.
#[pyfunction]
fn solve2(a: i64, b: i64, c: i64) -> PyResult<Option<Line2>> {
    let set = dioph::solve2(dioph::Equation2::new(a, b, c)).map_err(err)?;
    Ok(set.lattice().map(|l| {
        let [x, y] = *l.base();
        (
            (x, y),
            l.generators().iter().map(|g| (g[0], g[1])).collect(),
        )
    }))
}

#[pyfunction]
fn solve3(equation: EquationArg) -> PyResult<Solution> {
    let eq = equation.equation()?;
    let sol = dioph::solve3(eq).map_err(err)?;
    Ok(Solution {
        set: sol.set,
        case: sol.case.to_string(),
        equations: vec![eq],
        invariants: None,
    })
}

#[pyfunction]
fn solve_system(first: EquationArg, second: EquationArg) -> PyResult<Solution> {
    let (r1, r2) = (first.equation()?, second.equation()?);
    let sol = dioph::solve_system(System2x3::new(r1, r2)).map_err(err)?;
    Ok(Solution {
        set: sol.set,
        case: sol.case.to_string(),
        equations: vec![r1, r2],
        invariants: sol.invariants,
    })
}

#[pymodule]
fn pydioph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Solution>()?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(gcd3, m)?)?;
    m.add_function(wrap_pyfunction!(ext_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(parse_equation, m)?)?;
    m.add_function(wrap_pyfunction!(solve2, m)?)?;
    m.add_function(wrap_pyfunction!(solve3, m)?)?;
    m.add_function(wrap_pyfunction!(solve_system, m)?)?;
    Ok(())
}
