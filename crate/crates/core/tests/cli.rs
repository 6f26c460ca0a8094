//! End-to-end tests of the `germain` binary: exit codes, output shape,
//! JSON round-trips, and golden comparison against direct library calls.

use std::process::{Command, Output};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use germain::search::{brute_force, EquationSpec, SearchBounds};
use germain::theorems;

fn germain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germain"))
        .args(args)
        .env_remove("GERMAIN_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn solve_prints_closed_form_set() {
    let out = germain(&["solve", "-a", "0", "-b", "0", "-p", "3", "-k", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("(x=1, y=0, z=2)"), "{text}");
    assert!(text.contains("(x=4, y=1, z=23)"), "{text}");
    assert!(text.contains("complete: true"), "{text}");
}

#[test]
fn solve_rejects_double_negative_sign() {
    let out = germain(&["solve", "-a", "1", "-b", "1", "-p", "3", "-k", "1"]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("alpha*beta must be 0"), "{err}");
}

#[test]
fn solve_rejects_non_sophie_germain_p() {
    let out = germain(&["solve", "-a", "0", "-b", "0", "-p", "7", "-k", "1"]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    // the failing primality is named: 7 is prime but 2*7+1 = 15 is not
    assert!(err.contains("15 is not prime"), "{err}");
}

#[test]
fn solve_unsupported_spec_exits_2() {
    let out = germain(&["solve", "-a", "0", "-b", "0", "-p", "23", "-k", "0"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("no theorem applies"), "{err}");
}

#[test]
fn solve_json_round_trips_byte_identically() {
    for args in [
        ["0", "0", "2", "4"],
        ["1", "0", "2", "3"],
        ["0", "1", "3", "3"],
        ["1", "0", "11", "2"],
    ] {
        let out = germain(&[
            "solve", "-a", args[0], "-b", args[1], "-p", args[2], "-k", args[3], "--format",
            "json",
        ]);
        assert_eq!(code(&out), 0);
        let line = stdout(&out);
        let line = line.trim_end();
        let parsed = theorems::SolutionSet::from_json(line).unwrap();
        assert_eq!(parsed.to_json(), line, "byte-identical reserialization");
        // golden comparison with the direct library call
        let spec = EquationSpec::new(
            args[0].parse().unwrap(),
            args[1].parse().unwrap(),
            args[2].parse::<BigInt>().unwrap(),
            args[3].parse().unwrap(),
        )
        .unwrap();
        assert_eq!(line, theorems::closed_form(&spec).unwrap().to_json());
    }
}

#[test]
fn search_matches_library_brute_force() {
    let out = germain(&[
        "search", "-a", "0", "-b", "1", "-p", "2", "-k", "3", "--xmax", "12", "--ymax", "6",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("2 solution(s)"), "{text}");
    assert!(text.contains("(x=0, y=0, z=0)"), "{text}");
    assert!(text.contains("(x=1, y=0, z=1)"), "{text}");

    let spec = EquationSpec::new(0, 1, BigInt::from(2), 3).unwrap();
    let lib = brute_force(&spec, SearchBounds::new(12, 6));
    let out = germain(&[
        "search", "-a", "0", "-b", "1", "-p", "2", "-k", "3", "--xmax", "12", "--ymax", "6",
        "--format", "json",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), lib.len());
    for (line, sol) in lines.iter().zip(&lib) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["x"], sol.x.to_string());
        assert_eq!(v["y"], sol.y.to_string());
        assert_eq!(v["z"], sol.z.to_string());
        assert_eq!(v["provenance"], "search");
    }
}

#[test]
fn search_negative_spec_example() {
    let out = germain(&[
        "search", "-a", "1", "-b", "0", "-p", "11", "-k", "2", "--xmax", "6", "--ymax", "4",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("(x=0, y=0, z=0)"), "{text}");
    assert!(text.contains("(x=1, y=1, z=9)"), "{text}");
    assert!(text.contains("2 solution(s)"), "{text}");
}

#[test]
fn search_zero_bounds_check_origin_only() {
    let out = germain(&[
        "search", "-a", "0", "-b", "1", "-p", "2", "-k", "0", "--xmax", "0", "--ymax", "0",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("1 solution(s)"));
}

#[test]
fn crosscheck_equal_exits_0_and_mismatch_semantics() {
    let out = germain(&["crosscheck", "-a", "0", "-b", "0", "-p", "3", "-k", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: equal"));

    let out = germain(&["crosscheck", "-a", "0", "-b", "0", "-p", "23", "-k", "0"]);
    assert_eq!(code(&out), 2, "unsupported specs cannot be cross-checked");
}

#[test]
fn sg_residue_class_listing() {
    let out = germain(&["sg", "--limit", "1000", "--mod", "8", "--class", "5"]);
    assert_eq!(code(&out), 0);
    let got: Vec<u64> = stdout(&out)
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(got, vec![5, 29, 53, 173, 293, 509, 653]);
}

#[test]
fn sg_pairs_and_stats() {
    let out = germain(&["sg", "--limit", "30"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2 5\n3 7\n5 11\n11 23\n23 47\n29 59\n");

    let out = germain(&["sg", "--limit", "1000", "--mod", "8", "--stats"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "1 mod 8: 10\n3 mod 8: 11\n5 mod 8: 7\n7 mod 8: 8\n"
    );

    let out = germain(&["sg", "--limit", "100", "--mod", "6", "--stats"]);
    assert_eq!(code(&out), 1, "non-power-of-two modulus is invalid input");

    let out = germain(&["sg", "--limit", "100", "--class", "3"]);
    assert_eq!(code(&out), 1, "--class requires --mod");
}

#[test]
fn mordell_table_output() {
    let out = germain(&["mordell", "-n", "-4", "--xbound", "10000"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(2, 2)\n(5, 11)\n");

    let out = germain(&["mordell", "-n", "0", "--xbound", "10"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn catalan_unique_solution() {
    let out = germain(&[
        "catalan", "--amax", "20", "--bmax", "20", "--xmax", "10", "--ymax", "10",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(3, 2, 2, 3)\n");

    let out = germain(&["catalan", "--amax", "1"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn format_env_variable_sets_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_germain"))
        .args(["mordell", "-n", "-4", "--xbound", "100"])
        .env("GERMAIN_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["x"], "2");
    assert_eq!(first["y"], "2");
}

#[test]
fn bad_flags_exit_1() {
    let out = germain(&["solve", "-a", "0", "-b", "0", "-p", "3"]);
    assert_eq!(code(&out), 1, "missing -k");
    let out = germain(&["frobnicate"]);
    assert_eq!(code(&out), 1);
    let out = germain(&["--help"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn solve_table_expands_families() {
    let out = germain(&[
        "solve", "-a", "1", "-b", "0", "-p", "2", "-k", "0", "--expand-limit", "3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // five families, three members each, plus the trivial sporadic
    assert!(text.contains("(x=0, y=0, z=0)"), "{text}");
    assert_eq!(text.matches("family k=").count(), 5, "{text}");
    assert_eq!(text.matches("n-member").count(), 15, "{text}");
    // cross-check one printed member against the library
    let spec = EquationSpec::new(1, 0, BigInt::from(2), 0).unwrap();
    let set = theorems::closed_form(&spec).unwrap();
    let member = &theorems::expand_family(&set.families[0], 1, 1).unwrap()[0];
    assert!(
        text.contains(&format!(
            "n-member k={} (x={}, y={}, z={})",
            member.k,
            member.x,
            member.y,
            member.z.to_u64().unwrap()
        )),
        "{text}"
    );
}
