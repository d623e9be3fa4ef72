use std::fmt;

use crate::numtheory::{self, MinPrime};
use crate::partitions::{
    direct_sum, direct_sum_rooted, split_small_parts, split_trailing_root, Partition,
    RootedPartition,
};

use super::BijectionError;

/// A rooted partition whose root value is square free, signed by the
/// Möbius function of the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRooted(RootedPartition);

impl SignedRooted {
    pub fn new(rooted: RootedPartition) -> Result<Self, BijectionError> {
        if !numtheory::is_squarefree(u64::from(rooted.root_value())) {
            return Err(BijectionError::NotSquarefree(rooted.root_value()));
        }
        Ok(SignedRooted(rooted))
    }

    pub fn rooted(&self) -> &RootedPartition {
        &self.0
    }

    pub fn into_rooted(self) -> RootedPartition {
        self.0
    }

    /// `μ(root)`, always ±1.
    pub fn sign(&self) -> i8 {
        numtheory::moebius(u64::from(self.0.root_value()))
    }
}

impl TryFrom<RootedPartition> for SignedRooted {
    type Error = BijectionError;

    fn try_from(rooted: RootedPartition) -> Result<Self, Self::Error> {
        SignedRooted::new(rooted)
    }
}

impl fmt::Display for SignedRooted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Element of the signed set on which [`involution_d`] acts: either a plain
/// partition of `n` (sign +1) or a square-free-rooted partition of `n + 2`
/// with all parts `≥ 2` (sign `μ(root)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QElement {
    Plain(Partition),
    Rooted(SignedRooted),
}

impl QElement {
    /// Builds the rooted variant, checking the root and the part bound.
    pub fn rooted(rooted: RootedPartition) -> Result<Self, BijectionError> {
        let found = rooted.min_part();
        if found < 2 {
            return Err(BijectionError::MinPartTooSmall { found, required: 2 });
        }
        Ok(QElement::Rooted(SignedRooted::new(rooted)?))
    }

    pub fn sign(&self) -> i8 {
        match self {
            QElement::Plain(_) => 1,
            QElement::Rooted(r) => r.sign(),
        }
    }

    /// The `n` of the set this element belongs to.
    pub fn parameter(&self) -> u64 {
        match self {
            QElement::Plain(p) => p.weight(),
            QElement::Rooted(r) => r.rooted().weight() - 2,
        }
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, QElement::Plain(_))
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QElement::Plain(p) => p.fmt(f),
            QElement::Rooted(r) => r.fmt(f),
        }
    }
}

/// Sign of a rooted partition: `μ(root)`. Rejects roots that are not
/// square free.
pub fn sign(rooted: &RootedPartition) -> Result<i8, BijectionError> {
    SignedRooted::new(rooted.clone()).map(|s| s.sign())
}

/// Which branch of the involution applies to a root `k` with trailing run
/// `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionCase {
    /// `k = 1` and `m = 1`: the root is the last 1.
    Fixed,
    /// `π(k) ≤ π(m)`: the root value is divided by `π(k)` and the run
    /// lengthened by the same factor.
    Shrink { value: u32, copies: u32 },
    /// `π(k) > π(m)`: the root value is multiplied by `π(m)` and the run
    /// shortened by the same factor.
    Grow { value: u32, copies: u32 },
}

impl InvolutionCase {
    /// Value and length of the replacement run, `None` for a fixed point.
    pub fn replacement(self) -> Option<(u32, u32)> {
        match self {
            InvolutionCase::Fixed => None,
            InvolutionCase::Shrink { value, copies } | InvolutionCase::Grow { value, copies } => {
                Some((value, copies))
            }
        }
    }
}

/// Intermediate values of one application of the k/m exchange.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionSteps {
    pub rest: Partition,
    pub tail: RootedPartition,
    /// Root value `k`.
    pub root: u32,
    /// Length `m` of the trailing run.
    pub run: u32,
    pub min_prime_root: MinPrime,
    pub min_prime_run: MinPrime,
    pub case: InvolutionCase,
    /// `rest ⊕` the replacement run (the input itself for a fixed point).
    pub output: RootedPartition,
}

fn min_prime(n: u32) -> MinPrime {
    numtheory::min_prime(u64::from(n)).expect("root values and run lengths are positive")
}

/// The exchange shared by both involutions: a trailing run of `m` copies of
/// `k` becomes `m·π(k)` copies of `k/π(k)` when `π(k) ≤ π(m)`, and
/// `m/π(m)` copies of `k·π(m)` otherwise.
fn exchange(rooted: &RootedPartition) -> InvolutionSteps {
    let (rest, tail) = split_trailing_root(rooted);
    let root = rooted.root_value();
    let run = rooted.trailing_run();
    let (pk, pm) = (min_prime(root), min_prime(run));
    let case = match (pk, pm) {
        (MinPrime::Infinity, MinPrime::Infinity) => InvolutionCase::Fixed,
        (MinPrime::Prime(p), _) if pk <= pm => {
            let p = p as u32;
            InvolutionCase::Shrink { value: root / p, copies: run * p }
        }
        (_, MinPrime::Prime(p)) => {
            let p = p as u32;
            InvolutionCase::Grow { value: root * p, copies: run / p }
        }
        (MinPrime::Prime(_), MinPrime::Infinity) => unreachable!("every prime is below infinity"),
    };
    let output = match case.replacement() {
        None => rooted.clone(),
        Some((value, copies)) => direct_sum_rooted(&rest, &RootedPartition::run(value, copies)),
    };
    InvolutionSteps {
        rest,
        tail,
        root,
        run,
        min_prime_root: pk,
        min_prime_run: pm,
        case,
        output,
    }
}

/// Sign-reversing involution on square-free-rooted partitions.
///
/// Fixed exactly on partitions whose root is the last 1; everywhere else the
/// root value changes by one prime factor, so the sign flips.
pub fn involution_c(element: &SignedRooted) -> SignedRooted {
    SignedRooted(involution_c_steps(element).output)
}

pub fn involution_c_steps(element: &SignedRooted) -> InvolutionSteps {
    exchange(&element.0)
}

/// Appends a 1 and roots it, making it the last 1.
pub fn embed_c(partition: &Partition) -> SignedRooted {
    let ordinal = partition.multiplicity(1) + 1;
    let base = direct_sum(partition, &Partition::repeated(1, 1));
    SignedRooted(RootedPartition::new(base, 1, ordinal).expect("appended 1 is present"))
}

/// Left inverse of [`embed_c`]: drops the rooted 1 when it is the last 1.
pub fn unembed_c(element: &SignedRooted) -> Option<Partition> {
    let rooted = &element.0;
    if rooted.root_value() != 1 || rooted.trailing_run() != 1 {
        return None;
    }
    let (rest, _) = split_trailing_root(rooted);
    Some(rest)
}

/// Intermediate values of [`involution_d`] on a plain partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainSteps {
    /// Parts `≥ 2`.
    pub rest: Partition,
    /// The ones.
    pub ones: Partition,
    /// `|ones| + 2`.
    pub m: u32,
    /// `π(m)`.
    pub prime: u32,
    /// `m / π(m)` copies of `π(m)`, first rooted.
    pub replacement: RootedPartition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QSteps {
    Plain(PlainSteps),
    /// Rooted input; `plain_ones` is set when the exchange produced a root
    /// of 1 and the result was turned back into a plain partition with
    /// `k·m − 2` ones.
    Rooted { exchange: InvolutionSteps, plain_ones: Option<u32> },
}

/// Fixed-point-free sign-reversing involution on [`QElement`]s.
///
/// Plain `λ ⊢ n`: the ones are replaced by `m/π(m)` copies of `π(m)` with
/// `m = #ones + 2`, giving a partition of `n + 2` rooted at a prime.
/// Rooted: the exchange of [`involution_c`]; when it would produce a root
/// of 1 (prime root with `π(k) ≤ π(m)`), the run of weight `k·m` becomes
/// `k·m − 2` plain ones instead, undoing the plain branch.
pub fn involution_d(element: &QElement) -> Result<QElement, BijectionError> {
    involution_d_steps(element).map(|(_, out)| out)
}

pub fn involution_d_steps(element: &QElement) -> Result<(QSteps, QElement), BijectionError> {
    match element {
        QElement::Plain(lambda) => {
            let (rest, ones) = split_small_parts(lambda, 2);
            let m = u32::try_from(ones.len() + 2).expect("too many ones");
            let prime = min_prime(m).prime().expect("m >= 2") as u32;
            let replacement = RootedPartition::run(prime, m / prime);
            let out = direct_sum_rooted(&rest, &replacement);
            let steps = PlainSteps { rest, ones, m, prime, replacement };
            Ok((QSteps::Plain(steps), QElement::Rooted(SignedRooted(out))))
        }
        QElement::Rooted(signed) => {
            let rooted = signed.rooted();
            let found = rooted.min_part();
            if found < 2 {
                return Err(BijectionError::MinPartTooSmall { found, required: 2 });
            }
            if !numtheory::is_squarefree(u64::from(rooted.root_value())) {
                return Err(BijectionError::NotSquarefree(rooted.root_value()));
            }
            let exchange = exchange(rooted);
            match exchange.case {
                InvolutionCase::Shrink { value: 1, copies } => {
                    let ones = copies - 2;
                    let out = direct_sum(&exchange.rest, &Partition::repeated(1, ones));
                    let steps = QSteps::Rooted { exchange, plain_ones: Some(ones) };
                    Ok((steps, QElement::Plain(out)))
                }
                _ => {
                    let out = QElement::Rooted(SignedRooted(exchange.output.clone()));
                    Ok((QSteps::Rooted { exchange, plain_ones: None }, out))
                }
            }
        }
    }
}
