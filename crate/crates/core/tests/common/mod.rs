//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the crate's enumeration, counting or sieve code.

#![allow(dead_code)]

/// All partitions of `n` with parts in `min_part..=max_part`, by plain
/// recursion, largest part first.
pub fn brute_partitions(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max_part: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (min_part..=max_part.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, min_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part, &mut Vec::new(), &mut out);
    out
}

/// Number of parts equal to `k` over all partitions of `n` with parts `≥ r`.
pub fn brute_statistic(n: u32, k: u32, r: u32) -> u64 {
    brute_partitions(n, r)
        .iter()
        .map(|p| p.iter().filter(|&&x| x == k).count() as u64)
        .sum()
}

pub fn naive_gcd(a: u64, b: u64) -> u64 {
    (1..=a.max(b)).rev().find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d)).unwrap_or(0)
}

pub fn naive_totient(n: u64) -> u64 {
    (1..=n).filter(|&k| naive_gcd(k, n) == 1).count() as u64
}

/// Möbius function by trial division.
pub fn naive_moebius(n: u64) -> i64 {
    let mut rest = n;
    let mut sign = 1;
    let mut d = 2;
    while rest > 1 {
        if rest.is_multiple_of(d) {
            rest /= d;
            if rest.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    sign
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command-line binary with `args` and an optional environment
/// override.
pub fn run_bin(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_rooted-partitions"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub struct Golden {
    pub file: &'static str,
    pub map: String,
    pub input: String,
    pub expected: String,
}

const GOLDEN_FILES: [&str; 6] = [
    "trace_a.txt",
    "trace_a_inv.txt",
    "trace_b.txt",
    "trace_b_inv.txt",
    "trace_c.txt",
    "trace_c_back.txt",
];

/// The golden traces; map and input are read back from the first two lines.
pub fn golden_traces() -> Vec<Golden> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    GOLDEN_FILES
        .iter()
        .map(|&file| {
            let expected = std::fs::read_to_string(dir.join(file)).unwrap();
            let mut lines = expected.lines();
            let map = lines.next().unwrap().strip_prefix("map ").unwrap().to_string();
            let input = lines.next().unwrap().strip_prefix("input: ").unwrap().to_string();
            Golden { file, map, input, expected }
        })
        .collect()
}
