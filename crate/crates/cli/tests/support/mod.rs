#![allow(dead_code)]

use std::path::{Path, PathBuf};

use redlime::{Field, Fp, Matrix, MatrixFile, Rational};
use redlime_cli::{run, Outcome};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Runs the CLI with `args`, resolving bare `*.txt` names against the
/// fixture directory.
pub fn cli(args: &[&str]) -> Outcome {
    let dir = fixtures();
    let mut argv = vec!["redlime".to_string()];
    argv.extend(args.iter().map(|a| {
        if a.ends_with(".txt") && !a.contains('/') {
            dir.join(a).to_string_lossy().into_owned()
        } else {
            a.to_string()
        }
    }));
    run(argv)
}

/// One golden case: the golden file `golden/<name>.out` holds the expected
/// stdout. Cases with a nonzero `code` and no stdout have no golden file.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

pub const CASES: &[Case] = &[
    case("signature_w18", &["signature", "W18.txt"], 0),
    case("signature_w18_q", &["signature", "W18_q.txt"], 0),
    case("signature_q3", &["signature", "q3.txt"], 0),
    case("red_basis_a", &["red-basis", "A.txt"], 0),
    case("red_basis_q3", &["red-basis", "q3.txt"], 0),
    case("red_basis_zero", &["red-basis", "zero.txt"], 0),
    case("red_basis_w18", &["red-basis", "W18.txt"], 0),
    case("lime_basis_a", &["lime-basis", "A.txt"], 0),
    case("lime_basis_gf5", &["lime-basis", "gf5.txt"], 0),
    case("rref_a", &["rref", "A.txt"], 0),
    case("rref_q3", &["rref", "q3.txt"], 0),
    case("rref_zero", &["rref", "zero.txt"], 0),
    case("rcef_a", &["rcef", "A.txt"], 0),
    case("rcef_q3", &["rcef", "q3.txt"], 0),
    case("rank_b", &["rank", "B.txt"], 0),
    case("rank_q3", &["rank", "q3.txt"], 0),
    case("nullspace_a", &["nullspace", "A.txt"], 0),
    case("nullspace_gf5", &["nullspace", "gf5.txt"], 0),
    case("complement_a", &["complement", "A.txt"], 0),
    case("complement_q1", &["complement", "rank1_q.txt"], 0),
    case("member_yes", &["member", "A.txt", "--vector", "1 0 1"], 0),
    case("member_no", &["member", "A.txt", "--vector", "1 0 0"], 3),
    case(
        "member_q3",
        &["member", "q3.txt", "--vector", "-1/2 1 1 -3"],
        0,
    ),
    case(
        "member_bad_length",
        &["member", "A.txt", "--vector", "1 0"],
        1,
    ),
    case(
        "member_bad_token",
        &["member", "A.txt", "--vector", "1 x 0"],
        2,
    ),
    case("feasible_lbr", &["feasible", "lbr"], 0),
    case("feasible_rl", &["feasible", "rl"], 3),
    case("feasible_w18", &["feasible", "nlbblnrblnrrlrlbrb"], 0),
    case("feasible_bad_letter", &["feasible", "lxr"], 2),
    case("synthesize_lbr", &["synthesize", "lbr"], 0),
    case("synthesize_w18", &["synthesize", "nlbblnrblnrrlrlbrb"], 0),
    case("synthesize_nn_q", &["synthesize", "nn", "--field", "q"], 0),
    case(
        "synthesize_gf3",
        &["synthesize", "llrr", "--field", "gf", "3"],
        0,
    ),
    case("synthesize_infeasible", &["synthesize", "rl"], 3),
    case(
        "synthesize_bad_field",
        &["synthesize", "b", "--field", "gf", "4"],
        2,
    ),
    case(
        "factor_full_q1",
        &["factor", "rank1_q.txt", "--kind", "full"],
        0,
    ),
    case("factor_full_b", &["factor", "B.txt", "--kind", "full"], 0),
    case("factor_rref_b", &["factor", "B.txt", "--kind", "rref"], 0),
    case(
        "factor_rref_b_complete",
        &["factor", "B.txt", "--kind", "rref", "--complete"],
        0,
    ),
    case("factor_rcef_q3", &["factor", "q3.txt", "--kind", "rcef"], 0),
    case(
        "factor_rcef_q3_complete",
        &["factor", "q3.txt", "--kind", "rcef", "--complete"],
        0,
    ),
    case("factor_zero", &["factor", "zero.txt", "--kind", "rref"], 3),
    case(
        "factor_full_complete",
        &["factor", "A.txt", "--kind", "full", "--complete"],
        1,
    ),
    case("factor_bad_kind", &["factor", "A.txt", "--kind", "lu"], 1),
    case("atlas_3_2", &["atlas", "3", "2"], 0),
    case("atlas_2_3", &["atlas", "2", "3"], 0),
    case("atlas_nonprime", &["atlas", "3", "4"], 1),
    case(
        "atlas_over_budget",
        &["atlas", "6", "2", "--budget", "100"],
        1,
    ),
    case("verify_q3", &["verify", "q3.txt", "--seed", "7"], 0),
    case("verify_w18", &["verify", "W18.txt"], 0),
    case("verify_gf5", &["verify", "gf5.txt", "--seed", "3"], 0),
    case("parse_no_header", &["rref", "no_header.txt"], 2),
    case("parse_ragged", &["rref", "ragged.txt"], 2),
    case("parse_bad_scalar", &["rank", "bad_scalar.txt"], 2),
    case("parse_fraction_gf", &["rank", "fraction_gf.txt"], 2),
    case("parse_bad_modulus", &["rank", "bad_modulus.txt"], 2),
    case("parse_empty", &["rank", "empty.txt"], 2),
    case("parse_missing_file", &["rank", "does_not_exist.txt"], 2),
    case("usage_unknown_command", &["frobnicate"], 1),
    case("usage_missing_argument", &["rank"], 1),
    case("usage_no_command", &[], 1),
];

fn golden_path(name: &str) -> PathBuf {
    fixtures().join("golden").join(format!("{name}.out"))
}

/// Runs one case; `Err` carries a description of the mismatch. Setting
/// `UPDATE_GOLDEN=1` rewrites the golden files instead of comparing.
pub fn check_case(c: &Case) -> Result<(), String> {
    let out = cli(c.args);
    if out.code != c.code {
        return Err(format!(
            "{}: exit {} (expected {}), stderr: {}",
            c.name, out.code, c.code, out.stderr
        ));
    }
    if c.code != 0 && out.stdout.is_empty() {
        if out.stderr.is_empty() {
            return Err(format!("{}: failure without a message", c.name));
        }
        return Ok(());
    }
    let path = golden_path(c.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &out.stdout).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: cannot read golden file: {e}", c.name))?;
    if out.stdout != expected {
        return Err(format!(
            "{}: output differs\n--- expected\n{expected}--- actual\n{}",
            c.name, out.stdout
        ));
    }
    Ok(())
}

/// Splits `factor` output into its two matrices.
pub fn factor_blocks(text: &str) -> Vec<MatrixFile> {
    text.split("\n\n")
        .map(|block| MatrixFile::parse(block).expect("factor block parses"))
        .collect()
}

pub fn as_matrix<F: Field>(file: &MatrixFile) -> Matrix<F> {
    file.to_matrix().expect("entries parse")
}

/// The fixture as a matrix, for either field kind.
pub fn fixture(name: &str) -> MatrixFile {
    MatrixFile::parse(&std::fs::read_to_string(fixtures().join(name)).unwrap()).unwrap()
}

pub type Q = Rational;
pub type P = Fp;

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    use std::io::Write;
    let mut f = tempfile::Builder::new().suffix(".mat").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn cli_on(cmd: &str, file: &tempfile::NamedTempFile) -> Outcome {
    run(["redlime", cmd, file.path().to_str().unwrap()])
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Fixtures whose outputs take part in the round-trip checks.
pub const ROUND_TRIP_FIXTURES: &[&str] = &[
    "A.txt",
    "B.txt",
    "W18.txt",
    "W18_q.txt",
    "rank1_q.txt",
    "q3.txt",
    "gf5.txt",
    "zero.txt",
];

fn round_trip_typed<F: Field>(name: &str, input: &MatrixFile) -> Result<(), String> {
    let a: Matrix<F> = as_matrix(input);
    for cmd in ["red-basis", "lime-basis", "nullspace", "complement"] {
        let out = cli(&[cmd, name]);
        ensure(out.code == 0, || format!("{cmd} {name}: exit {}", out.code))?;
        let parsed = MatrixFile::parse(&out.stdout).map_err(|e| format!("{cmd} {name}: {e}"))?;
        let rows: Matrix<F> = as_matrix(&parsed);
        let expected = match cmd {
            "red-basis" | "lime-basis" => a.row_space(),
            _ => a.nullspace(),
        };
        ensure(rows.row_space() == expected, || {
            format!("{cmd} {name}: output spans a different subspace")
        })?;
    }
    // Feeding a basis back in reproduces it exactly.
    for cmd in ["red-basis", "nullspace", "complement"] {
        let out = cli(&[cmd, name]);
        let again = cli_on("red-basis", &write_temp(&out.stdout));
        ensure(again.stdout == out.stdout, || {
            format!("{cmd} {name}: red-basis of the output differs from the output")
        })?;
    }
    let lime = cli(&["lime-basis", name]);
    let again = cli_on("lime-basis", &write_temp(&lime.stdout));
    ensure(again.stdout == lime.stdout, || {
        format!("lime-basis {name}: not a fixed point")
    })?;

    for cmd in ["rref", "rcef"] {
        let out = cli(&[cmd, name]);
        let parsed = MatrixFile::parse(&out.stdout).map_err(|e| format!("{cmd} {name}: {e}"))?;
        let r: Matrix<F> = as_matrix(&parsed);
        let same_space = if cmd == "rref" {
            r.row_space() == a.row_space()
        } else {
            r.column_space() == a.column_space()
        };
        ensure(
            same_space && (r.nrows(), r.ncols()) == (a.nrows(), a.ncols()),
            || format!("{cmd} {name}: wrong shape or space"),
        )?;
        let again = cli_on(cmd, &write_temp(&out.stdout));
        ensure(again.stdout == out.stdout, || {
            format!("{cmd} {name}: not idempotent")
        })?;
    }

    let sig = cli(&["signature", name]).stdout;
    let synth = cli(&["synthesize", sig.trim(), "--field", &input.spec.to_string()]);
    let resig = cli_on("signature", &write_temp(&synth.stdout));
    ensure(resig.stdout == sig, || {
        format!(
            "synthesize {}: witness has signature {}",
            sig.trim(),
            resig.stdout
        )
    })?;

    if !a.is_zero() {
        for kind in [
            &["full"][..],
            &["rref"],
            &["rref", "--complete"],
            &["rcef"],
            &["rcef", "--complete"],
        ] {
            let mut args = vec!["factor", name, "--kind"];
            args.extend_from_slice(kind);
            let out = cli(&args);
            ensure(out.code == 0, || {
                format!("factor {kind:?} {name}: exit {}", out.code)
            })?;
            let blocks = factor_blocks(&out.stdout);
            let (x, y): (Matrix<F>, Matrix<F>) = (as_matrix(&blocks[0]), as_matrix(&blocks[1]));
            ensure(x.mul(&y).as_ref() == Ok(&a), || {
                format!("factor {kind:?} {name}: product differs from the input")
            })?;
            if kind.len() == 2 {
                let square = if kind[0] == "rref" { &x } else { &y };
                ensure(square.is_invertible(), || {
                    format!("factor {kind:?} {name}: completed factor is singular")
                })?;
            }
        }
    }

    // Every row of the input is a member, and its coordinates rebuild it.
    let w = a.row_space();
    for row in a.rows() {
        let out = cli(&["member", name, "--vector", &row.to_string()]);
        ensure(out.code == 0, || {
            format!("member {name}: row {row} rejected")
        })?;
        let coords = out.stdout.lines().nth(1).unwrap_or("");
        let line = format!(
            "field {}\n{}",
            input.spec,
            coords.trim_start_matches("coordinates:")
        );
        if w.dimension() > 0 {
            let c: Matrix<F> = as_matrix(&MatrixFile::parse(&line).map_err(|e| e.to_string())?);
            let rebuilt = w.element_from_red_entries(c.row(1).entries()).unwrap();
            ensure(rebuilt == row, || {
                format!("member {name}: coordinates do not rebuild {row}")
            })?;
        }
    }
    Ok(())
}

/// Output re-parse round trips over the fixture set.
pub fn check_round_trips() -> Result<usize, String> {
    let mut checked = 0;
    for name in ROUND_TRIP_FIXTURES {
        let input = fixture(name);
        match input.spec {
            redlime::FieldSpec::Rationals => round_trip_typed::<Q>(name, &input)?,
            redlime::FieldSpec::Prime(_) => round_trip_typed::<P>(name, &input)?,
        }
        checked += 1;
    }
    Ok(checked)
}
