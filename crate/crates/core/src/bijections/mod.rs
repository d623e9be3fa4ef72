//! The constructive maps behind the four identities.
//!
//! * [`map_a`] / [`inv_a`]: partitions of `n` rooted at a 1, against pairs
//!   `(ρ, r)` with `ρ` a partition of `n + 1` into parts `≥ 2` rooted at some
//!   `k` and `r` coprime to `k`, `1 ≤ r ≤ k`.
//! * [`map_b`] / [`inv_b`]: partitions of `n`, against pairs `(ρ, r)` with
//!   `ρ` a partition of `n + 3` into parts `≥ 3` rooted at `k` and `r`
//!   coprime to `k` with `r < k/2`.
//! * [`involution_c`]: a sign-reversing involution on partitions of `n + 1`
//!   rooted at a square-free part, signed by the Möbius function of the root.
//!   Its fixed points are the partitions of `n` with a rooted 1 appended
//!   ([`embed_c`]).
//! * [`involution_d`]: a fixed-point-free sign-reversing involution on
//!   [`QElement`]s, the disjoint union of the partitions of `n` (sign +1) and
//!   the square-free-rooted partitions of `n + 2` into parts `≥ 2`.
//!
//! Every map replaces one run of equal parts by another run and reattaches
//! it with [`direct_sum_rooted`](crate::partitions::direct_sum_rooted), so
//! the rooted copy lands right after any equal parts already present in the
//! remainder. The `*_steps` variants expose the intermediate quantities for
//! tracing.

mod involution;
mod totient;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partitions::{NotationError, PartitionError, RootedPartition};

pub use involution::{
    embed_c, involution_c, involution_c_steps, involution_d, involution_d_steps, sign, unembed_c,
    InvolutionCase, InvolutionSteps, PlainSteps, QElement, QSteps, SignedRooted,
};
pub use totient::{
    inv_a, inv_a_steps, inv_b, inv_b_steps, map_a, map_a_steps, map_b, map_b_steps, InvASteps,
    InvBSteps, MapASteps, MapBSteps,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("expected a partition rooted at 1, found root {0}")]
    RootNotOne(u32),
    #[error("root {0} is not square free")]
    NotSquarefree(u32),
    #[error("smallest part is {found}, must be at least {required}")]
    MinPartTooSmall { found: u32, required: u32 },
    #[error("residue {residue} is not admissible for root {root}: {reason}")]
    BadResidue { residue: u32, root: u32, reason: &'static str },
    #[error("malformed image: {0}")]
    MalformedImage(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A rooted partition paired with a residue coprime to its root value; the
/// codomain of [`map_a`] and [`map_b`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotientImage {
    pub rooted: RootedPartition,
    pub residue: u32,
}

impl TotientImage {
    pub fn new(rooted: RootedPartition, residue: u32) -> Self {
        TotientImage { rooted, residue }
    }

    /// Checks membership in the codomain of [`map_a`]: parts `≥ 2`,
    /// `1 ≤ r ≤ k` and `gcd(r, k) = 1`.
    pub fn validate_a(&self) -> Result<(), BijectionError> {
        self.check_min_part(2)?;
        let k = self.rooted.root_value();
        if self.residue == 0 || self.residue > k {
            return Err(self.bad_residue("must lie in 1..=k"));
        }
        self.check_coprime()
    }

    /// Checks membership in the codomain of [`map_b`]: parts `≥ 3`,
    /// `1 ≤ r < k/2` and `gcd(r, k) = 1`.
    pub fn validate_b(&self) -> Result<(), BijectionError> {
        self.check_min_part(3)?;
        let k = self.rooted.root_value();
        if self.residue == 0 || 2 * u64::from(self.residue) >= u64::from(k) {
            return Err(self.bad_residue("must satisfy 1 <= r < k/2"));
        }
        self.check_coprime()
    }

    fn check_min_part(&self, required: u32) -> Result<(), BijectionError> {
        let found = self.rooted.min_part();
        if found < required {
            return Err(BijectionError::MinPartTooSmall { found, required });
        }
        Ok(())
    }

    fn check_coprime(&self) -> Result<(), BijectionError> {
        let k = self.rooted.root_value();
        if crate::numtheory::gcd(u64::from(self.residue), u64::from(k)) != 1 {
            return Err(self.bad_residue("must be coprime to k"));
        }
        Ok(())
    }

    fn bad_residue(&self, reason: &'static str) -> BijectionError {
        BijectionError::BadResidue {
            residue: self.residue,
            root: self.rooted.root_value(),
            reason,
        }
    }
}

/// `4,4,2,^2,2,2 r=1`
impl fmt::Display for TotientImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={}", self.rooted, self.residue)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImageParseError {
    #[error("expected '<rooted partition> r=<residue>'")]
    MissingResidue,
    #[error("invalid residue {0:?}")]
    InvalidResidue(String),
    #[error(transparent)]
    Notation(#[from] NotationError),
}

impl FromStr for TotientImage {
    type Err = ImageParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (rooted, residue) = s.rsplit_once("r=").ok_or(ImageParseError::MissingResidue)?;
        let residue = residue.trim();
        let residue = residue
            .parse()
            .map_err(|_| ImageParseError::InvalidResidue(residue.to_string()))?;
        Ok(TotientImage { rooted: rooted.parse()?, residue })
    }
}
