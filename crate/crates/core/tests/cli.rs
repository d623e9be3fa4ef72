mod common;

use common::{golden_traces, run_bin};

fn result_line(text: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix("result: "))
        .expect("result line")
        .to_string()
}

#[test]
fn golden_traces_match() {
    for g in golden_traces() {
        let out = run_bin(&["trace", &g.map, &g.input], &[]);
        assert_eq!(out.code, 0, "{}: {}", g.file, out.stderr);
        assert_eq!(out.stdout, g.expected, "{}", g.file);
    }
}

#[test]
fn traces_round_trip_through_the_result_line() {
    for (forward, back, input) in [
        ("a", "a-inv", "4,4,2,1,1,^1,1,1"),
        ("a", "a-inv", "^1"),
        ("b", "b-inv", "4,4,3,2,2,1,1"),
        ("b", "b-inv", "2,2,2,2"),
        ("c", "c", "3,3,2,^2,2,2,1,1"),
        ("c", "c", "6,^3,3,3,1"),
        ("d", "d", "5,1,1,1"),
        ("d", "d", "^3,3,3"),
    ] {
        let there = run_bin(&["trace", forward, input], &[]);
        assert_eq!(there.code, 0, "{}", there.stderr);
        let image = result_line(&there.stdout);
        let again = run_bin(&["trace", back, &image], &[]);
        assert_eq!(again.code, 0, "{}", again.stderr);
        assert_eq!(result_line(&again.stdout), input, "{forward} then {back}");
    }
}

#[test]
fn trace_rejects_bad_input() {
    let out = run_bin(&["trace", "a", "3,^2,1"], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("precondition violated"));
    let out = run_bin(&["trace", "b", "3,x"], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot parse input"));
}

#[test]
fn verify_tsv() {
    let out = run_bin(&["verify", "--identity", "a", "--max-n", "4", "--format", "tsv"], &[]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("identity\tn\tlhs\trhs\tpassed\telapsed_ms"));
    assert!(out.stdout.lines().any(|l| l.starts_with("a\t4\t7\t7\tpass\t")));
}

#[test]
fn verify_json_fields() {
    let out = run_bin(
        &["verify", "--identity", "b,fine", "--max-n", "6", "--structural-max-n", "3", "--format", "json"],
        &[],
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    let rows: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        let obj = row.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["elapsed_ms", "identity", "lhs", "n", "passed", "rhs"]);
        assert_eq!(obj["passed"], true);
    }
}

#[test]
fn verify_pretty_summary() {
    let out = run_bin(&["verify", "--max-n", "8", "--structural-max-n", "5"], &[]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.trim_end().ends_with("0 failed"), "{}", out.stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--max-n", "-1"][..],
        &["verify", "--identity", "z"],
        &["table"],
        &["count", "--n", "5", "--n-max", "2"],
        &["frobnicate"],
    ] {
        let out = run_bin(args, &[]);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn table_values() {
    let out = run_bin(&["table", "--n", "4", "--r", "1", "--format", "tsv"], &[]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.lines().any(|l| l == "4\t1\t1\t7"), "{}", out.stdout);
    let zero = run_bin(&["table", "--n", "0", "--format", "tsv"], &[]);
    assert_eq!(zero.code, 0);
    assert!(zero.stdout.lines().skip(1).all(|l| l.ends_with("\t0")));
}

#[test]
fn count_values() {
    let out = run_bin(&["count", "--n", "13"], &[]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "p(13) = 101");
    let out = run_bin(&["count", "--n", "7", "--min-part", "3", "--format", "tsv"], &[]);
    assert!(out.stdout.lines().any(|l| l == "7\t3\t2"), "{}", out.stdout);
}

#[test]
fn small_sieve_gives_the_same_answers() {
    let args = ["verify", "--max-n", "30", "--structural-max-n", "8", "--format", "tsv"];
    let strip = |s: &str| -> Vec<String> {
        s.lines()
            .map(|l| l.rsplit_once('\t').unwrap().0.to_string())
            .collect()
    };
    let small = run_bin(&args, &[("ROOTED_PARTITIONS_SIEVE_LIMIT", "3")]);
    let default = run_bin(&args, &[]);
    assert_eq!(small.code, 0, "{}", small.stderr);
    assert_eq!(strip(&small.stdout), strip(&default.stdout));
}
