//! End-to-end runs of the `ratsphere` binary.
//!
//! Golden files live in `tests/golden/`; regenerate them with
//! `UPDATE_GOLDEN=1 cargo test -p ratsphere-cli`.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratsphere"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> (i32, String) {
    let out = run(args);
    (
        out.status.code().expect("exited normally"),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn golden(name: &str, args: &[&str]) {
    let actual = stdout_ok(args);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output of {args:?} differs from {name}");
}

/// `SAT` witness lines as a label -> value map.
fn witness(text: &str) -> BTreeMap<String, usize> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("SAT"));
    lines
        .map(|l| {
            let (label, value) = l.split_once('\t').expect("label<TAB>value");
            (label.to_string(), value.parse().unwrap())
        })
        .collect()
}

#[test]
fn color_examples() {
    assert_eq!(
        stdout_ok(&["color", "3", "4", "0", "--sphere"]),
        "3 4 0\tnorm=5\t#1\n"
    );
    assert_eq!(
        stdout_ok(&["color", "1", "1", "0", "--hales"]),
        "1 1 0\t#2\n"
    );
    assert_eq!(stdout_ok(&["color", "1", "1", "0"]), "1 1 0\tOOE\t#4\n");
    assert_eq!(
        stdout_ok(&["color", "-2", "-8", "-6", "--modp", "5"]),
        "1 4 3\tmod5=(1,4,3)\n"
    );
    assert_eq!(
        stdout_ok(&["color", "0", "0", "-7", "--sphere", "--reduced", "z"]),
        "0 0 1\tnorm=1\t#3\treduced-z=1\n"
    );
}

#[test]
fn color_on_a_non_pythagorean_ray_is_a_domain_error() {
    let (code, stderr) = exit_code(&["color", "1", "1", "0", "--sphere"]);
    assert_eq!(code, 1);
    assert!(
        stderr.contains("ray does not meet the rational unit sphere"),
        "{stderr}"
    );
    assert_eq!(exit_code(&["color", "0", "0", "0"]).0, 1);
    assert_eq!(exit_code(&["color", "1", "2", "3", "--modp", "4"]).0, 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(exit_code(&["color", "1", "2"]).0, 2);
    assert_eq!(exit_code(&["color", "1", "2", "x"]).0, 2);
    assert_eq!(exit_code(&["frobnicate"]).0, 2);
    assert_eq!(exit_code(&["enumerate", "--max-norm", "0"]).0, 2);
    assert_eq!(exit_code(&["density", "--k", "1"]).0, 2);
    assert_eq!(exit_code(&["density", "--k", "5", "--generator", "G"]).0, 2);
    assert_eq!(exit_code(&["closure", "--seed", "1,0,0"]).0, 2);
    assert_eq!(
        exit_code(&["closure", "--seed", "1,0", "--seed", "0,1,0"]).0,
        2
    );
    assert_eq!(exit_code(&["check", "--rays", &data("missing.rays")]).0, 2);
    assert_eq!(exit_code(&["check"]).0, 2);
}

#[test]
fn parse_errors_report_the_line() {
    let (code, stderr) = exit_code(&["check", "--rays", &data("bad_line.rays")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 3"), "{stderr}");
    let (code, stderr) = exit_code(&["closure", "--seeds", &data("bad_line.rays")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 3"), "{stderr}");
}

#[test]
fn enumerate_small_norms() {
    let one = stdout_ok(&["enumerate", "--max-norm", "1"]);
    assert_eq!(
        one,
        "0\t0\t1\t1\t#3\n0\t1\t0\t1\t#2\n1\t0\t0\t1\t#1\n# rays=3\n"
    );
    let five = stdout_ok(&["enumerate", "--max-norm", "5"]);
    let norm_five = five
        .lines()
        .filter(|l| l.split('\t').nth(3) == Some("5"))
        .count();
    assert_eq!(norm_five, 12);
    assert!(five.ends_with("# rays=27\n"));
    golden("enumerate_25.tsv", &["enumerate", "--max-norm", "25"]);
}

#[test]
fn enumerate_colors_agree_with_color_command() {
    let text = stdout_ok(&["enumerate", "--max-norm", "9"]);
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let f: Vec<&str> = line.split('\t').collect();
        let single = stdout_ok(&["color", f[0], f[1], f[2], "--sphere"]);
        assert_eq!(
            single,
            format!("{} {} {}\tnorm={}\t{}\n", f[0], f[1], f[2], f[3], f[4])
        );
    }
}

#[test]
fn density_orbit_points() {
    let f = stdout_ok(&["density", "--k", "3", "--generator", "F"]);
    let points: Vec<&str> = f.lines().take(3).collect();
    assert_eq!(
        points,
        [
            "0\t1\t0\t0\t#1",
            "1\t4/5\t-3/5\t0\t#2",
            "2\t7/25\t-24/25\t0\t#1"
        ]
    );
    let f2 = stdout_ok(&["density", "--k", "200", "--generator", "F2"]);
    let lines: Vec<&str> = f2.lines().collect();
    assert_eq!(lines.len(), 201);
    assert!(lines[..200].iter().all(|l| l.ends_with("\t#1")));
    assert!(lines[200].starts_with("200\t"));
    golden(
        "density_f_12.tsv",
        &["density", "--k", "12", "--generator", "F"],
    );
}

#[test]
fn density_gap_ladder_reaches_below_a_hundredth() {
    let text = stdout_ok(&["density", "--k", "10000", "--gaps-only"]);
    let ladder: Vec<(usize, f64)> = text
        .lines()
        .map(|l| {
            let (k, gap) = l.split_once('\t').unwrap();
            (k.parse().unwrap(), gap.parse().unwrap())
        })
        .collect();
    let ks: Vec<usize> = ladder.iter().map(|p| p.0).collect();
    assert_eq!(ks, [10, 100, 1000, 10000]);
    assert!(ladder.windows(2).all(|w| w[1].1 <= w[0].1));
    assert!(ladder[3].1 < 0.01);
}

#[test]
fn closure_summary_and_dump() {
    let text = stdout_ok(&[
        "closure",
        "--seeds",
        &data("seeds.rays"),
        "--max-rounds",
        "2",
    ]);
    let summary = text.lines().next().unwrap();
    assert!(summary.starts_with("rounds=2\trays="), "{summary}");
    assert!(summary.ends_with("stop=round-limit"), "{summary}");
    let dumped = stdout_ok(&[
        "closure",
        "--seed",
        "1,1,0",
        "--seed",
        "0,1,1",
        "--seed",
        "1,2,3",
        "--max-rounds",
        "2",
        "--dump",
    ]);
    let mut lines = dumped.lines();
    assert_eq!(lines.next(), Some(summary));
    let rays: Vec<&str> = lines.filter(|l| !l.starts_with('#')).collect();
    let count: usize = summary.split('\t').nth(1).unwrap()["rays=".len()..]
        .parse()
        .unwrap();
    assert_eq!(rays.len(), count);
    assert!(rays.contains(&"1 1 0") && rays.contains(&"1 -1 1"));
    let capped = stdout_ok(&[
        "closure",
        "--seeds",
        &data("seeds.rays"),
        "--max-size",
        "500",
    ]);
    assert!(
        capped.contains("rays=500\t") && capped.contains("stop=size-limit"),
        "{capped}"
    );
}

#[test]
fn k4_with_all_triads_has_no_valuation() {
    assert_eq!(
        stdout_ok(&["check", "--graph", &data("k4.graph")]),
        "UNSAT\n"
    );
    assert_eq!(
        stdout_ok(&[
            "check",
            "--graph",
            &data("k4.graph"),
            "--mode",
            "chromatic",
            "--colors",
            "3"
        ]),
        "UNSAT\n"
    );
    let four = witness(&stdout_ok(&[
        "check",
        "--graph",
        &data("k4.graph"),
        "--mode",
        "chromatic",
        "--colors",
        "4",
    ]));
    assert_eq!(
        four.values()
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .len(),
        4
    );
    assert!(stdout_ok(&["chromatic", "--graph", &data("k4.graph")]).starts_with("chromatic=4\n"));
}

#[test]
fn two_tripods_admit_a_valuation() {
    let found = witness(&stdout_ok(&["check", "--rays", &data("two_tripods.rays")]));
    assert_eq!(found.len(), 5);
    for tripod in [["1,0,0", "0,1,0", "0,0,1"], ["3,4,0", "4,-3,0", "0,0,1"]] {
        assert_eq!(tripod.iter().map(|l| found[*l]).sum::<usize>(), 1);
    }
    let z = witness(&stdout_ok(&[
        "check",
        "--rays",
        &data("two_tripods.rays"),
        "--parity-axis",
        "z",
    ]));
    assert_eq!(z["0,0,1"], 1);
    assert_eq!(z.values().sum::<usize>(), 1);
}

#[test]
fn parity_axis_needs_sphere_rays() {
    assert_eq!(
        exit_code(&["check", "--graph", &data("k4.graph"), "--parity-axis", "x"]).0,
        1
    );
}

#[test]
fn sphere_graph_at_norm_25_needs_three_colors() {
    let args = [
        "check",
        "--sphere-max-norm",
        "25",
        "--mode",
        "chromatic",
        "--colors",
    ];
    assert_eq!(stdout_ok(&[&args[..], &["2"]].concat()), "UNSAT\n");
    let colors = witness(&stdout_ok(&[&args[..], &["3"]].concat()));
    assert_eq!(colors.len(), 543);
    assert!(colors.values().all(|c| (1..=3).contains(c)));
    assert!(stdout_ok(&["chromatic", "--sphere-max-norm", "25"]).starts_with("chromatic=3\n"));
    let val = witness(&stdout_ok(&["check", "--sphere-max-norm", "25"]));
    assert_eq!(val.len(), 543);
}

#[test]
fn real_color_examples() {
    assert_eq!(
        stdout_ok(&["real-color", "--theta", "1.5707963", "--phi", "0"]),
        "green\n"
    );
    assert_eq!(
        stdout_ok(&["real-color", "--theta", "0", "--phi", "0"]),
        "red\n"
    );
    let a = stdout_ok(&["real-color", "--theta", "0.7", "--phi", "-2.5"]);
    let b = stdout_ok(&[
        "real-color",
        "--theta",
        &(std::f64::consts::PI - 0.7).to_string(),
        "--phi",
        &(-2.5 + std::f64::consts::PI).to_string(),
    ]);
    assert_eq!(a, b);
    assert_eq!(
        exit_code(&["real-color", "--theta", "NaN", "--phi", "0"]).0,
        2
    );
    assert_eq!(
        exit_code(&["real-color", "--theta", "1", "--phi", "inf"]).0,
        2
    );
}

#[test]
fn repeated_runs_are_byte_identical() {
    let commands: [&[&str]; 5] = [
        &["enumerate", "--max-norm", "30"],
        &["density", "--k", "50", "--generator", "F2"],
        &[
            "closure",
            "--seed",
            "1,2,2",
            "--seed",
            "2,-1,0",
            "--seed",
            "0,3,4",
            "--max-rounds",
            "3",
            "--dump",
        ],
        &["check", "--sphere-max-norm", "13"],
        &["chromatic", "--rays", &data("two_tripods.rays")],
    ];
    for args in commands {
        let first = run(args);
        let second = run(args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
