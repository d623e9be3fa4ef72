//! Exhaustive checks of the identities and of the maps proving them.
//!
//! Numeric checks compare a left-hand side obtained by walking every
//! partition against a right-hand side assembled from [`numtheory`] and the
//! counting recurrences in [`partitions`], so the two sides never share a
//! code path. Structural checks enumerate the full domain and codomain of
//! each map and test it element by element.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bijections::{
    embed_c, involution_c, involution_c_steps, involution_d, inv_a, inv_b, map_a, map_b,
    InvolutionCase, QElement, SignedRooted, TotientImage,
};
use crate::numtheory::{self, coprime_set, half_coprime_set};
use crate::partitions::{
    enumerate_partitions, enumerate_rooted, statistic, statistic_row, Partition, PartitionCursor,
};

/// Stop collecting failure messages after this many.
const MAX_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    A,
    B,
    C,
    D,
    Fine,
}

impl Identity {
    pub const ALL: [Identity; 5] = [Identity::A, Identity::B, Identity::C, Identity::D, Identity::Fine];

    /// The structural check backing this identity, if any.
    pub fn structure(self) -> Option<Structure> {
        match self {
            Identity::A => Some(Structure::BijectionA),
            Identity::B => Some(Structure::BijectionB),
            Identity::C => Some(Structure::InvolutionC),
            Identity::D => Some(Structure::InvolutionD),
            Identity::Fine => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    BijectionA,
    BijectionB,
    InvolutionC,
    InvolutionD,
}

/// Label of a report row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Identity(Identity),
    Structure(Structure),
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Identity(Identity::A) => "a",
            Check::Identity(Identity::B) => "b",
            Check::Identity(Identity::C) => "c",
            Check::Identity(Identity::D) => "d",
            Check::Identity(Identity::Fine) => "fine",
            Check::Structure(Structure::BijectionA) => "bijection-a",
            Check::Structure(Structure::BijectionB) => "bijection-b",
            Check::Structure(Structure::InvolutionC) => "involution-c",
            Check::Structure(Structure::InvolutionD) => "involution-d",
        })
    }
}

/// One pass/fail row.
///
/// For identities `lhs` and `rhs` are the two sides. For bijections they
/// are the sizes of the domain and the codomain; for involutions the signed
/// sum and the number of fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Check,
    pub n: u32,
    pub lhs: i128,
    pub rhs: i128,
    pub passed: bool,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }

    /// Equality ignoring timing.
    pub fn same_outcome(&self, other: &IdentityReport) -> bool {
        (self.identity, self.n, self.lhs, self.rhs, self.passed)
            == (other.identity, other.n, other.lhs, other.rhs, other.passed)
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IdentityReport", 6)?;
        s.serialize_field("identity", &self.identity.to_string())?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("lhs", &self.lhs)?;
        s.serialize_field("rhs", &self.rhs)?;
        s.serialize_field("passed", &self.passed)?;
        s.serialize_field("elapsed_ms", &self.elapsed_ms())?;
        s.end()
    }
}

/// Result of an exhaustive structural check, with the first few failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub report: IdentityReport,
    pub failures: Vec<String>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.report.passed
    }
}

#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn push(&mut self, message: impl FnOnce() -> String) {
        if self.0.len() < MAX_FAILURES {
            self.0.push(message());
        } else if self.0.len() == MAX_FAILURES {
            self.0.push("...".to_string());
        }
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn counts(value: u128) -> i128 {
    i128::try_from(value).expect("count exceeds i128")
}

fn row(n: u32, k_max: u32, r: u32) -> Vec<u128> {
    statistic_row(n, r, k_max).expect("statistic overflow at enumerable sizes")
}

/// Walks every partition of `n` once.
fn for_each_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    let mut cursor = PartitionCursor::new(n, 1);
    while let Some(parts) = cursor.advance() {
        visit(parts);
    }
}

fn enumerated_count(n: u32) -> i128 {
    let mut count = 0i128;
    for_each_partition(n, |_| count += 1);
    count
}

/// Checks one of the identities at `n`. `Identity::Fine` checks Fine's
/// theorem for every `k` in `1..=max(n, 1)`; see [`check_fine`] for a
/// single `k`.
pub fn check_identity(identity: Identity, n: u32) -> IdentityReport {
    let start = Instant::now();
    let phi = |k: u32| i128::from(numtheory::totient(u64::from(k)));
    let mu = |k: u32| i128::from(numtheory::moebius(u64::from(k)));
    let (lhs, rhs, extra_ok) = match identity {
        Identity::A => {
            let mut ones = 0i128;
            for_each_partition(n, |parts| {
                ones += parts.iter().rev().take_while(|&&p| p == 1).count() as i128
            });
            let s = row(n + 1, n + 1, 2);
            let rhs = (2..=n + 1).map(|k| phi(k) * counts(s[k as usize - 1])).sum();
            (ones, rhs, true)
        }
        Identity::B => {
            let s = row(n + 3, n + 3, 3);
            let mut twice = 0i128;
            let mut even = true;
            for k in 3..=n + 3 {
                let term = counts(s[k as usize - 1]);
                if term != 0 && phi(k) % 2 != 0 {
                    even = false;
                }
                twice += phi(k) * term;
            }
            (enumerated_count(n), twice / 2, even && twice % 2 == 0)
        }
        Identity::C => {
            let s = row(n + 1, n + 1, 1);
            let rhs = (1..=n + 1).map(|k| mu(k) * counts(s[k as usize - 1])).sum();
            (enumerated_count(n), rhs, true)
        }
        Identity::D => {
            let s = row(n + 2, n + 2, 2);
            let rhs: i128 = (2..=n + 2).map(|k| mu(k) * counts(s[k as usize - 1])).sum();
            (enumerated_count(n), -rhs, true)
        }
        Identity::Fine => return fine_all_k(n, start),
    };
    IdentityReport {
        identity: Check::Identity(identity),
        n,
        lhs,
        rhs,
        passed: extra_ok && lhs == rhs,
        elapsed: start.elapsed(),
    }
}

/// `Σ_{λ ⊢ n} f_k(λ)` against `Σ_{λ ⊢ n} g_k(λ)`, both by enumeration. The
/// left side is also compared with `statistic(n, k, 1)`.
pub fn check_fine(n: u32, k: u32) -> IdentityReport {
    let start = Instant::now();
    let (mut f, mut g) = (0i128, 0i128);
    for lambda in enumerate_partitions(n, 1) {
        f += i128::from(crate::partitions::f_k(&lambda, k));
        g += i128::from(crate::partitions::g_k(&lambda, k));
    }
    let by_count = counts(statistic(n, k, 1).expect("statistic overflow"));
    IdentityReport {
        identity: Check::Identity(Identity::Fine),
        n,
        lhs: f,
        rhs: g,
        passed: f == g && f == by_count,
        elapsed: start.elapsed(),
    }
}

fn fine_all_k(n: u32, start: Instant) -> IdentityReport {
    let k_max = n.max(1) as usize;
    let mut f = vec![0i128; k_max + 1];
    let mut g = vec![0i128; k_max + 1];
    for lambda in enumerate_partitions(n, 1) {
        for (value, mult) in lambda.multiplicities() {
            f[value as usize] += i128::from(mult);
            for slot in &mut g[1..=mult as usize] {
                *slot += 1;
            }
        }
    }
    let by_count = row(n, k_max as u32, 1);
    let passed = (1..=k_max).all(|k| f[k] == g[k] && f[k] == counts(by_count[k - 1]));
    IdentityReport {
        identity: Check::Identity(Identity::Fine),
        n,
        lhs: f.iter().sum(),
        rhs: g.iter().sum(),
        passed,
        elapsed: start.elapsed(),
    }
}

fn structural(
    structure: Structure,
    n: u32,
    lhs: i128,
    rhs: i128,
    ok: bool,
    failures: Failures,
    start: Instant,
) -> StructuralReport {
    StructuralReport {
        report: IdentityReport {
            identity: Check::Structure(structure),
            n,
            lhs,
            rhs,
            passed: ok && failures.is_empty(),
            elapsed: start.elapsed(),
        },
        failures: failures.0,
    }
}

/// Codomain of [`map_a`] at parameter `n`: `(ρ, r)` with `ρ` a partition of
/// `n + 1` into parts `≥ 2` rooted at `k` and `r ∈ Φ(k)`.
pub fn codomain_a(n: u32) -> Vec<TotientImage> {
    let mut out = Vec::new();
    for k in 2..=n + 1 {
        let residues = coprime_set(u64::from(k));
        for rho in enumerate_rooted(n + 1, k, 2) {
            out.extend(residues.iter().map(|&r| TotientImage::new(rho.clone(), r as u32)));
        }
    }
    out
}

/// Codomain of [`map_b`] at parameter `n`: `(ρ, r)` with `ρ` a partition of
/// `n + 3` into parts `≥ 3` rooted at `k` and `r ∈ Ψ(k)`.
pub fn codomain_b(n: u32) -> Vec<TotientImage> {
    let mut out = Vec::new();
    for k in 3..=n + 3 {
        let residues = half_coprime_set(u64::from(k));
        for rho in enumerate_rooted(n + 3, k, 3) {
            out.extend(residues.iter().map(|&r| TotientImage::new(rho.clone(), r as u32)));
        }
    }
    out
}

/// Partitions of `n + 1` rooted at a square-free part.
pub fn signed_set_c(n: u32) -> Vec<SignedRooted> {
    (1..=n + 1)
        .filter(|&k| numtheory::is_squarefree(u64::from(k)))
        .flat_map(|k| enumerate_rooted(n + 1, k, 1))
        .map(|rho| SignedRooted::new(rho).expect("square-free root"))
        .collect()
}

/// Partitions of `n`, plus partitions of `n + 2` into parts `≥ 2` rooted at
/// a square-free part.
pub fn signed_set_d(n: u32) -> Vec<QElement> {
    let plain = enumerate_partitions(n, 1).map(QElement::Plain);
    let rooted = (2..=n + 2)
        .filter(|&k| numtheory::is_squarefree(u64::from(k)))
        .flat_map(|k| enumerate_rooted(n + 2, k, 2))
        .map(|rho| QElement::rooted(rho).expect("square-free root, parts >= 2"));
    plain.chain(rooted).collect()
}

/// Exhaustively checks that [`map_a`] or [`map_b`] is a bijection onto its
/// codomain with the stated inverse.
pub fn check_bijection(structure: Structure, n: u32) -> StructuralReport {
    match structure {
        Structure::BijectionA => check_bijection_a(n),
        Structure::BijectionB => check_bijection_b(n),
        other => panic!("{:?} is not a bijection check", other),
    }
}

fn check_bijection_a(n: u32) -> StructuralReport {
    let start = Instant::now();
    let mut failures = Failures::default();
    let domain: Vec<_> = enumerate_rooted(n, 1, 1).collect();
    let codomain: HashSet<TotientImage> = codomain_a(n).into_iter().collect();
    let mut images = HashSet::new();
    for rho in &domain {
        let image = match map_a(rho) {
            Ok(image) => image,
            Err(e) => {
                failures.push(|| format!("map_a({rho}) failed: {e}"));
                continue;
            }
        };
        if image.rooted.weight() != u64::from(n) + 1 || image.validate_a().is_err() {
            failures.push(|| format!("map_a({rho}) = {image} is not a valid image"));
        }
        if !codomain.contains(&image) {
            failures.push(|| format!("map_a({rho}) = {image} lies outside the codomain"));
        }
        match inv_a(&image) {
            Ok(back) if &back == rho => {}
            other => failures.push(|| format!("inv_a(map_a({rho})) = {other:?}")),
        }
        if !images.insert(image.clone()) {
            failures.push(|| format!("map_a is not injective: {image} hit twice"));
        }
    }
    for image in &codomain {
        match inv_a(image).and_then(|rho| map_a(&rho)) {
            Ok(again) if &again == image => {}
            other => failures.push(|| format!("map_a(inv_a({image})) = {other:?}")),
        }
    }
    let onto = images == codomain;
    if !onto {
        failures.push(|| format!("image has {} elements, codomain {}", images.len(), codomain.len()));
    }
    let (lhs, rhs) = (domain.len() as i128, codomain.len() as i128);
    structural(Structure::BijectionA, n, lhs, rhs, onto, failures, start)
}

fn check_bijection_b(n: u32) -> StructuralReport {
    let start = Instant::now();
    let mut failures = Failures::default();
    let domain: Vec<Partition> = enumerate_partitions(n, 1).collect();
    let codomain: HashSet<TotientImage> = codomain_b(n).into_iter().collect();
    let mut images = HashSet::new();
    for lambda in &domain {
        let image = map_b(lambda);
        if image.rooted.weight() != u64::from(n) + 3 || image.validate_b().is_err() {
            failures.push(|| format!("map_b({lambda}) = {image} is not a valid image"));
        }
        if !codomain.contains(&image) {
            failures.push(|| format!("map_b({lambda}) = {image} lies outside the codomain"));
        }
        match inv_b(&image) {
            Ok(back) if &back == lambda => {}
            other => failures.push(|| format!("inv_b(map_b({lambda})) = {other:?}")),
        }
        if !images.insert(image.clone()) {
            failures.push(|| format!("map_b is not injective: {image} hit twice"));
        }
    }
    for image in &codomain {
        match inv_b(image).map(|lambda| map_b(&lambda)) {
            Ok(again) if &again == image => {}
            other => failures.push(|| format!("map_b(inv_b({image})) = {other:?}")),
        }
    }
    let onto = images == codomain;
    if !onto {
        failures.push(|| format!("image has {} elements, codomain {}", images.len(), codomain.len()));
    }
    let (lhs, rhs) = (domain.len() as i128, codomain.len() as i128);
    structural(Structure::BijectionB, n, lhs, rhs, onto, failures, start)
}

/// Exhaustively checks that [`involution_c`] or [`involution_d`] is a
/// sign-reversing involution with the stated fixed points, and that the
/// signed sum equals the number of fixed points. The report's `lhs` is the
/// signed sum and `rhs` the number of fixed points.
pub fn check_involution(structure: Structure, n: u32) -> StructuralReport {
    match structure {
        Structure::InvolutionC => check_involution_c(n),
        Structure::InvolutionD => check_involution_d(n),
        other => panic!("{:?} is not an involution check", other),
    }
}

fn check_involution_c(n: u32) -> StructuralReport {
    let start = Instant::now();
    let mut failures = Failures::default();
    let set = signed_set_c(n);
    let members: HashSet<&SignedRooted> = set.iter().collect();
    let mut fixed = HashSet::new();
    let mut signed_sum = 0i128;
    for x in &set {
        signed_sum += i128::from(x.sign());
        let steps = involution_c_steps(x);
        let y = involution_c(x);
        if y.rooted().weight() != u64::from(n) + 1 || !members.contains(&y) {
            failures.push(|| format!("involution_c({x}) = {y} leaves the set"));
        }
        let back = involution_c(&y);
        if &back != x {
            failures.push(|| format!("involution_c twice sends {x} to {back}"));
        }
        if &y == x {
            if x.sign() != 1 {
                failures.push(|| format!("fixed point {x} has negative sign"));
            }
            fixed.insert(x.clone());
            continue;
        }
        if y.sign() != -x.sign() {
            failures.push(|| format!("involution_c({x}) = {y} keeps the sign"));
        }
        let parity_ok = matches!(
            (steps.case, involution_c_steps(&y).case),
            (InvolutionCase::Shrink { .. }, InvolutionCase::Grow { .. })
                | (InvolutionCase::Grow { .. }, InvolutionCase::Shrink { .. })
        );
        if !parity_ok {
            failures.push(|| format!("{x} and its image {y} are not in opposite cases"));
        }
    }
    let embedded: HashSet<SignedRooted> = enumerate_partitions(n, 1).map(|l| embed_c(&l)).collect();
    if fixed != embedded {
        failures.push(|| format!("{} fixed points, {} embedded partitions", fixed.len(), embedded.len()));
    }
    let balanced = signed_sum == fixed.len() as i128;
    let fixed_count = fixed.len() as i128;
    structural(Structure::InvolutionC, n, signed_sum, fixed_count, balanced, failures, start)
}

fn check_involution_d(n: u32) -> StructuralReport {
    let start = Instant::now();
    let mut failures = Failures::default();
    let set = signed_set_d(n);
    let members: HashSet<&QElement> = set.iter().collect();
    let mut signed_sum = 0i128;
    let mut fixed = 0usize;
    for x in &set {
        signed_sum += i128::from(x.sign());
        let y = match involution_d(x) {
            Ok(y) => y,
            Err(e) => {
                failures.push(|| format!("involution_d({x}) failed: {e}"));
                continue;
            }
        };
        if !members.contains(&y) || y.parameter() != u64::from(n) {
            failures.push(|| format!("involution_d({x}) = {y} leaves the set"));
        }
        match involution_d(&y) {
            Ok(back) if &back == x => {}
            other => failures.push(|| format!("involution_d twice sends {x} to {other:?}")),
        }
        if &y == x {
            fixed += 1;
            failures.push(|| format!("{x} is a fixed point"));
        }
        if y.sign() != -x.sign() {
            failures.push(|| format!("involution_d({x}) = {y} keeps the sign"));
        }
        if x.is_plain() && y.is_plain() {
            failures.push(|| format!("involution_d({x}) = {y} maps plain to plain"));
        }
    }
    let balanced = signed_sum == fixed as i128 && fixed == 0;
    structural(Structure::InvolutionD, n, signed_sum, fixed as i128, balanced, failures, start)
}

/// Runs a structural check by kind.
pub fn check_structure(structure: Structure, n: u32) -> StructuralReport {
    match structure {
        Structure::BijectionA | Structure::BijectionB => check_bijection(structure, n),
        Structure::InvolutionC | Structure::InvolutionD => check_involution(structure, n),
    }
}

/// Parameters of [`run_suite_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: u32,
    pub structural_max_n: u32,
    /// Identities to include; their structural checks follow the same filter.
    pub identities: Vec<Identity>,
}

impl SuiteConfig {
    pub fn new(max_n: u32, structural_max_n: u32) -> Self {
        SuiteConfig { max_n, structural_max_n, identities: Identity::ALL.to_vec() }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(60, 25)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    /// Identity rows ordered by `n`, then by identity.
    pub identities: Vec<IdentityReport>,
    /// Structural rows ordered by `n`, then by check.
    pub structural: Vec<StructuralReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|r| r.passed) && self.structural.iter().all(|r| r.passed())
    }

    /// Identity rows followed by structural rows.
    pub fn rows(&self) -> impl Iterator<Item = &IdentityReport> {
        self.identities.iter().chain(self.structural.iter().map(|s| &s.report))
    }
}

/// Checks every identity for `n ≤ max_n` and every structural property for
/// `n ≤ structural_max_n`.
pub fn run_suite(max_n: u32, structural_max_n: u32) -> SuiteReport {
    run_suite_with(&SuiteConfig::new(max_n, structural_max_n))
}

pub fn run_suite_with(config: &SuiteConfig) -> SuiteReport {
    let mut selected = config.identities.clone();
    selected.sort();
    selected.dedup();
    let structures: Vec<Structure> = selected.iter().filter_map(|i| i.structure()).collect();

    let jobs: Vec<(u32, Identity)> = (0..=config.max_n)
        .flat_map(|n| selected.iter().map(move |&i| (n, i)))
        .collect();
    let identities = jobs.into_par_iter().map(|(n, i)| check_identity(i, n)).collect();

    let jobs: Vec<(u32, Structure)> = (0..=config.structural_max_n)
        .flat_map(|n| structures.iter().map(move |&s| (n, s)))
        .collect();
    let structural = jobs.into_par_iter().map(|(n, s)| check_structure(s, n)).collect();

    SuiteReport { identities, structural }
}

pub const TSV_HEADER: &str = "identity\tn\tlhs\trhs\tpassed\telapsed_ms";

/// Tab-separated rows under [`TSV_HEADER`]; `passed` is `pass` or `fail`.
pub fn to_tsv<'a>(rows: impl IntoIterator<Item = &'a IdentityReport>) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{:.3}\n",
            r.identity,
            r.n,
            r.lhs,
            r.rhs,
            if r.passed { "pass" } else { "fail" },
            r.elapsed_ms()
        ));
    }
    out
}

/// JSON array of objects with the fields `identity`, `n`, `lhs`, `rhs`,
/// `passed` and `elapsed_ms`.
pub fn to_json<'a>(rows: impl IntoIterator<Item = &'a IdentityReport>) -> String {
    let rows: Vec<&IdentityReport> = rows.into_iter().collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize")
}
