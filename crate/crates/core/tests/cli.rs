use std::process::{Command, Output};

use dioph::cli::SolutionDocument;
use dioph::{solve3, Equation3};

fn dioph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dioph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_prints_parametric_family() {
    let o = dioph(&["solve", "2x + 3y + 7z = 23"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("(x, y, z) = ("), "{text}");
    assert!(text.contains("case: Formula2(a,b)"), "{text}");
}

#[test]
fn count_example() {
    let o = dioph(&["count", "2x + y + 5z = 16", "--box", "x:0:8,y:0:16,z:0:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "20\n");
}

#[test]
fn enumerate_lists_points_in_order() {
    let o = dioph(&[
        "enumerate",
        "x - 3y - 4z = 0",
        "--box",
        "x:-2:2,y:-2:2,z:-2:2",
        "--ball",
        "0,0,0:2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(-1, 1, -1)\n(0, 0, 0)\n(1, -1, 1)\n");
}

#[test]
fn system_of_zero_rows_is_all_space() {
    let o = dioph(&["solve", "--system", "0x+0y+0z=0", "0x+0y+0z=0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = SolutionDocument::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(doc.to_set().unwrap().rank(), Some(3));
    assert_eq!(doc.case, "C.5");
}

#[test]
fn empty_sets_succeed_with_a_witness() {
    let o = dioph(&["solve", "--system", "x + y + z = 1", "x + y + z = 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("no integer solutions: "),
        "{}",
        stdout(&o)
    );

    let o = dioph(&["solve", "2x + 4y + 6z = 3", "--json"]);
    let doc = SolutionDocument::from_json(stdout(&o).trim()).unwrap();
    let reason = doc.reason.unwrap();
    assert_eq!((reason.divisor, reason.target), (2, 3));
}

#[test]
fn json_round_trips_through_the_binary() {
    for eq in [
        "6x - 15y + 10z = 4",
        "13x + 11z = 123",
        "x = 4",
        "0x = 0",
        "-7y + 14z = 21",
    ] {
        let o = dioph(&["solve", eq, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{eq}: {}", stderr(&o));
        let set = SolutionDocument::from_json(stdout(&o).trim())
            .unwrap()
            .to_set()
            .unwrap();
        let parsed: Equation3 = dioph::cli::parse_equation(eq).unwrap().into();
        assert!(set.same_set(&solve3(parsed).unwrap().set).unwrap(), "{eq}");
    }
}

#[test]
fn oracle_flag_reports_agreement() {
    let o = dioph(&[
        "enumerate",
        "--system",
        "x + y + z = 85",
        "7x - 10y + 3z = 0",
        "--box",
        "x:1:85,y:1:85,z:1:85",
        "--triangle",
        "--oracle",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(24, 27, 34)\n(37, 31, 17)\noracle: agree (2 points)\n"
    );
    let o = dioph(&["solve", "x - 3y - 4z = 0", "--oracle"]);
    assert!(stdout(&o).contains("oracle: agree"), "{}", stdout(&o));
}

#[test]
fn exit_statuses() {
    let usage = dioph(&["solve", "2x + = 1"]);
    assert_eq!(usage.status.code(), Some(1));
    assert!(stderr(&usage).contains("column 6"), "{}", stderr(&usage));
    assert!(usage.stdout.is_empty());

    assert_eq!(dioph(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(dioph(&["enumerate", "x = 1"]).status.code(), Some(1));

    let cap = dioph(&[
        "count",
        "x = 0",
        "--box",
        "x:-500:500,y:-500:500,z:-500:500",
        "--oracle",
    ]);
    assert_eq!(cap.status.code(), Some(2));

    let overflow = dioph(&[
        "solve",
        "--system",
        "9223372036854775807x + 9223372036854775806y + 9223372036854775805z = 0",
        "9223372036854775806x + 9223372036854775807y + z = 0",
    ]);
    assert_eq!(overflow.status.code(), Some(2));
}

#[test]
fn unicode_minus_is_accepted() {
    let o = dioph(&[
        "solve",
        "--system",
        "13x + 11z = 123",
        "\u{2212}5y + 7z = 4",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = SolutionDocument::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(doc.case, "C.1-Group3");
}
