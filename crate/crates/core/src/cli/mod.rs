//! Command-line front end.
//!
//! Exit status: 0 on success (an empty solution set is a success), 1 on usage
//! or parse errors, 2 on overflow or an oversized oracle box, 3 when
//! `--oracle` finds a disagreement.

mod json;
mod parse;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::enumerate::enumerate;
use crate::error::Error;
use crate::lattice::{Point, SolutionSet3};
use crate::oracle::brute_force;
use crate::region::{Predicate, Region};
use crate::solve3::{solve3, Equation3};
use crate::system::{solve_system, System2x3, SystemInvariants};

pub use json::{OracleReport, Reason, SolutionDocument, Status};
pub use parse::{parse_equation, ParseError, ParsedEquation};

/// Box used by `solve --oracle` when no `--box` is given.
pub const DEFAULT_ORACLE_BOX: (i64, i64) = (-10, 10);

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_ARITHMETIC: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dioph",
    version,
    about = "Integer solutions of linear Diophantine equations and 2x3 systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the parametric solution set.
    Solve(Options),
    /// List the solutions inside a region.
    Enumerate(Options),
    /// Count the solutions inside a region.
    Count(Options),
}

#[derive(Args, Debug)]
struct Options {
    /// One equation, or two with --system.
    #[arg(required = true, value_name = "EQUATION")]
    equations: Vec<String>,
    /// Treat the two equations as a simultaneous system.
    #[arg(long)]
    system: bool,
    /// Bounds as x:LO:HI,y:LO:HI,z:LO:HI.
    #[arg(long = "box", value_name = "BOUNDS", allow_hyphen_values = true)]
    bounds: Option<String>,
    /// Keep points within distance R of (CX,CY,CZ).
    #[arg(long, value_name = "CX,CY,CZ:R", allow_hyphen_values = true)]
    ball: Option<String>,
    /// Keep points with every coordinate positive.
    #[arg(long)]
    positive: bool,
    /// Keep points whose coordinates are the sides of a nondegenerate triangle.
    #[arg(long)]
    triangle: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Cross-check against an exhaustive scan of the region.
    #[arg(long)]
    oracle: bool,
}

enum Failure {
    Usage(String),
    Arithmetic(String),
    Oracle(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Region(_) => Failure::Usage(e.to_string()),
            _ => Failure::Arithmetic(e.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the command line `args` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = args.into_iter().map(|a| shield_equation(a.into()));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Solve(o) => solve_command(o),
        Command::Enumerate(o) => region_command(o, true),
        Command::Count(o) => region_command(o, false),
    };
    match result {
        Ok(text) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Arithmetic(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_ARITHMETIC
        }
        Err(Failure::Oracle(m)) => {
            let _ = writeln!(err, "oracle disagreement: {m}");
            EXIT_ORACLE
        }
    }
}

/// An equation such as `-x + y = 1` would otherwise be read as a flag; a
/// leading space keeps it positional and the equation parser ignores it.
fn shield_equation(arg: OsString) -> OsString {
    match arg.to_str() {
        Some(s) if s.starts_with('-') && !s.starts_with("--") && s.contains('=') => {
            format!(" {s}").into()
        }
        _ => arg,
    }
}

struct Solved {
    equations: Vec<Equation3>,
    set: SolutionSet3,
    case: String,
    invariants: Option<SystemInvariants>,
}

fn solve_input(o: &Options) -> Result<Solved, Failure> {
    let expected = if o.system { 2 } else { 1 };
    if o.equations.len() != expected {
        return Err(Failure::Usage(format!(
            "expected {expected} equation{}, got {}",
            if expected == 1 { "" } else { "s" },
            o.equations.len()
        )));
    }
    let equations = o
        .equations
        .iter()
        .map(|t| parse_equation(t).map(Equation3::from))
        .collect::<Result<Vec<_>, _>>()?;
    if o.system {
        let sol = solve_system(System2x3::new(equations[0], equations[1]))?;
        Ok(Solved {
            equations,
            set: sol.set,
            case: sol.case.to_string(),
            invariants: sol.invariants,
        })
    } else {
        let sol = solve3(equations[0])?;
        Ok(Solved {
            equations,
            set: sol.set,
            case: sol.case.to_string(),
            invariants: None,
        })
    }
}

fn build_region(o: &Options, required: bool) -> Result<Option<Region<3>>, Failure> {
    let bounds = match &o.bounds {
        Some(spec) => parse_box(spec)?,
        None if required => return Err(Failure::Usage("--box is required".into())),
        None if o.oracle => [DEFAULT_ORACLE_BOX; 3],
        None => return Ok(None),
    };
    let mut region = Region::new(bounds)?;
    if let Some(spec) = &o.ball {
        let (center, r2) = parse_ball(spec)?;
        region = region.with_ball(center, r2)?;
    }
    if o.positive {
        region = region.with_predicate(Predicate::Positive);
    }
    if o.triangle {
        region = region.with_predicate(Predicate::Triangle);
    }
    Ok(Some(region))
}

fn check_oracle(
    equations: &[Equation3],
    region: &Region<3>,
    solver: &[Point<3>],
) -> Result<OracleReport, Failure> {
    let truth = brute_force(equations, region)?;
    let report = OracleReport {
        agree: truth == solver,
        solver: solver.len() as u64,
        brute_force: truth.len() as u64,
    };
    if report.agree {
        Ok(report)
    } else {
        Err(Failure::Oracle(format!(
            "solver found {} points, exhaustive scan found {}",
            report.solver, report.brute_force
        )))
    }
}

fn solve_command(o: &Options) -> Result<String, Failure> {
    let solved = solve_input(o)?;
    let region = build_region(o, false)?;
    let oracle = match (&region, o.oracle) {
        (Some(r), true) => {
            let pts = enumerate(&solved.set, r)?;
            Some(check_oracle(&solved.equations, r, &pts)?)
        }
        _ => None,
    };
    if o.json {
        let mut doc = SolutionDocument::new(&solved.set, &solved.case);
        doc.oracle = oracle;
        return Ok(doc.to_json() + "\n");
    }
    let mut text = String::new();
    match &solved.set {
        SolutionSet3::Empty(w) => writeln!(text, "no integer solutions: {w}").unwrap(),
        SolutionSet3::Lattice(_) => writeln!(text, "{}", parametric(&solved.set)).unwrap(),
    }
    writeln!(text, "case: {}", solved.case).unwrap();
    if let Some(inv) = solved.invariants {
        writeln!(
            text,
            "invariants: D1={} D2={} D3={} D={} D23={} delta={}",
            inv.d1, inv.d2, inv.d3, inv.d, inv.d23, inv.delta
        )
        .unwrap();
    }
    if let Some(r) = oracle {
        writeln!(text, "oracle: agree ({} points)", r.brute_force).unwrap();
    }
    Ok(text)
}

fn region_command(o: &Options, list: bool) -> Result<String, Failure> {
    let solved = solve_input(o)?;
    let region = build_region(o, true)?.expect("region is required");
    let points = enumerate(&solved.set, &region)?;
    let oracle = if o.oracle {
        Some(check_oracle(&solved.equations, &region, &points)?)
    } else {
        None
    };
    let count = points.len() as u64;
    if o.json {
        let mut doc = SolutionDocument::new(&solved.set, &solved.case);
        doc.count = Some(count);
        doc.oracle = oracle;
        if list {
            doc.points = Some(points);
        }
        return Ok(doc.to_json() + "\n");
    }
    let mut text = String::new();
    if list {
        for [x, y, z] in &points {
            writeln!(text, "({x}, {y}, {z})").unwrap();
        }
    } else {
        writeln!(text, "{count}").unwrap();
    }
    if oracle.is_some() {
        writeln!(text, "oracle: agree ({count} points)").unwrap();
    }
    Ok(text)
}

const PARAMETERS: [&str; 3] = ["m", "n", "k"];

/// `(x, y, z) = (-23 + 7m - 3n, 23 - 7m + 2n, m)` for a lattice.
pub fn parametric(set: &SolutionSet3) -> String {
    let Some(l) = set.lattice() else {
        return "no integer solutions".to_string();
    };
    let coords: Vec<String> = (0..3)
        .map(|i| {
            let terms = l
                .generators()
                .iter()
                .zip(PARAMETERS)
                .map(|(g, name)| (g[i], name))
                .filter(|(k, _)| *k != 0);
            let mut s = String::new();
            if l.base()[i] != 0 {
                s.push_str(&l.base()[i].to_string());
            }
            for (k, name) in terms {
                let mag = k.unsigned_abs();
                let sign = if k < 0 { "-" } else { "+" };
                if s.is_empty() {
                    if k < 0 {
                        s.push('-');
                    }
                } else {
                    write!(s, " {sign} ").unwrap();
                }
                if mag != 1 {
                    write!(s, "{mag}").unwrap();
                }
                s.push_str(name);
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        })
        .collect();
    let mut out = format!("(x, y, z) = ({}, {}, {})", coords[0], coords[1], coords[2]);
    let used = &PARAMETERS[..l.rank()];
    if !used.is_empty() {
        write!(out, ", {} in Z", used.join(", ")).unwrap();
    }
    out
}

fn parse_int(text: &str, what: &str) -> Result<i64, Failure> {
    text.trim()
        .replace('\u{2212}', "-")
        .parse()
        .map_err(|_| Failure::Usage(format!("invalid {what} `{}`", text.trim())))
}

/// `x:LO:HI,y:LO:HI,z:LO:HI`, axes in any order, each exactly once.
pub fn parse_box(spec: &str) -> Result<[(i64, i64); 3], String> {
    let mut bounds: [Option<(i64, i64)>; 3] = [None; 3];
    for part in spec.split(',') {
        let fields: Vec<&str> = part.split(':').collect();
        let [axis, lo, hi] = fields[..] else {
            return Err(format!("box component `{part}` is not AXIS:LO:HI"));
        };
        let i = match axis.trim() {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            other => return Err(format!("unknown axis `{other}` in --box")),
        };
        if bounds[i].is_some() {
            return Err(format!("axis `{}` given twice in --box", axis.trim()));
        }
        let lo = parse_int(lo, "bound").map_err(failure_text)?;
        let hi = parse_int(hi, "bound").map_err(failure_text)?;
        bounds[i] = Some((lo, hi));
    }
    match bounds {
        [Some(x), Some(y), Some(z)] => Ok([x, y, z]),
        _ => Err("--box needs bounds for x, y and z".into()),
    }
}

/// `CX,CY,CZ:R`, returning the center and `R^2`.
pub fn parse_ball(spec: &str) -> Result<(Point<3>, i64), String> {
    let (center, radius) = spec
        .split_once(':')
        .ok_or_else(|| format!("ball `{spec}` is not CX,CY,CZ:R"))?;
    let c: Vec<i64> = center
        .split(',')
        .map(|t| parse_int(t, "ball center").map_err(failure_text))
        .collect::<Result<_, _>>()?;
    let [cx, cy, cz] = c[..] else {
        return Err(format!("ball center `{center}` needs three coordinates"));
    };
    let r = parse_int(radius, "radius").map_err(failure_text)?;
    if r < 0 {
        return Err(format!("radius {r} is negative"));
    }
    let r2 = r
        .checked_mul(r)
        .ok_or_else(|| format!("radius {r} is too large"))?;
    Ok(([cx, cy, cz], r2))
}

fn failure_text(f: Failure) -> String {
    match f {
        Failure::Usage(m) | Failure::Arithmetic(m) | Failure::Oracle(m) => m,
    }
}

impl From<String> for Failure {
    fn from(m: String) -> Self {
        Failure::Usage(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dioph").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn box_and_ball_parsing() {
        assert_eq!(
            parse_box("x:0:8,y:0:16,z:0:3").unwrap(),
            [(0, 8), (0, 16), (0, 3)]
        );
        assert_eq!(
            parse_box("z:1:2, y:-3:3 ,x:\u{2212}1:0").unwrap(),
            [(-1, 0), (-3, 3), (1, 2)]
        );
        assert!(parse_box("x:0:8,y:0:16").is_err());
        assert!(parse_box("x:0:8,x:0:8,z:0:1").is_err());
        assert!(parse_box("w:0:8,y:0:16,z:0:1").is_err());
        assert!(parse_box("x:0,y:0:16,z:0:1").is_err());
        assert_eq!(parse_ball("0,0,0:2").unwrap(), ([0, 0, 0], 4));
        assert!(parse_ball("0,0:2").is_err());
        assert!(parse_ball("0,0,0:-1").is_err());
    }

    #[test]
    fn parametric_text() {
        let s = solve3(Equation3::new(1, 1, 1, 0)).unwrap().set;
        let text = parametric(&s);
        assert!(text.starts_with("(x, y, z) = ("), "{text}");
        assert!(text.ends_with(", m, n in Z"), "{text}");
        let all = solve3(Equation3::new(0, 0, 0, 0)).unwrap().set;
        assert_eq!(parametric(&all), "(x, y, z) = (m, n, k), m, n, k in Z");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(cli(&[]).0, EXIT_USAGE);
        assert_eq!(cli(&["solve", "2x + 3w = 1"]).0, EXIT_USAGE);
        assert_eq!(cli(&["solve", "--system", "x = 1"]).0, EXIT_USAGE);
        assert_eq!(cli(&["solve", "x = 1", "y = 2"]).0, EXIT_USAGE);
        assert_eq!(cli(&["count", "x = 1"]).0, EXIT_USAGE);
        assert_eq!(
            cli(&["count", "x = 1", "--box", "x:2:1,y:0:0,z:0:0"]).0,
            EXIT_USAGE
        );
        let (code, out, _) = cli(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("enumerate"));
    }

    #[test]
    fn hyphenated_values() {
        let (code, out, err) = cli(&["solve", "-x + y = 1"]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.contains("case: B-Group1"), "{out}");
        let (code, out, _) = cli(&[
            "count",
            "x - y = 0",
            "--box",
            "x:-1:1,y:-1:1,z:0:0",
            "--ball",
            "-1,-1,0:0",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1\n");
    }

    #[test]
    fn overflow_and_cap_exit_two() {
        let big = "9223372036854775807x + 9223372036854775806y + 9223372036854775805z = 0";
        let (code, _, err) = cli(&[
            "solve",
            "--system",
            big,
            "9223372036854775806x + 9223372036854775807y + z = 0",
        ]);
        assert_eq!(code, EXIT_ARITHMETIC, "{err}");
        assert!(err.contains("overflow"), "{err}");
        let (code, _, err) = cli(&[
            "count",
            "x + y + z = 0",
            "--box",
            "x:-1000:1000,y:-1000:1000,z:-1000:1000",
            "--oracle",
        ]);
        assert_eq!(code, EXIT_ARITHMETIC);
        assert!(err.contains("cap"), "{err}");
    }

    #[test]
    fn empty_set_text() {
        let (code, out, _) = cli(&["solve", "2x + 4y + 6z = 3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "no integer solutions: 2 does not divide 3\ncase: Unsolvable-Divisibility\n"
        );
    }
}
