use crate::numtheory::gcd;
use crate::partitions::{
    direct_sum, direct_sum_rooted, split_small_parts, split_trailing_root, Partition,
    RootedPartition,
};

use super::{BijectionError, TotientImage};

fn to_u32(value: u64) -> u32 {
    u32::try_from(value).expect("partition weight exceeds the u32 range")
}

/// Intermediate values of [`map_a`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapASteps {
    /// Parts `≥ 2` of the input.
    pub rest: Partition,
    /// The ones of the input, root included.
    pub ones: RootedPartition,
    /// Number of ones.
    pub ones_count: u32,
    /// Ordinal of the rooted 1 among the ones.
    pub position: u32,
    /// `gcd(ones_count + 1, position)`.
    pub gcd: u32,
    /// `gcd` copies of `(ones_count + 1) / gcd`, first rooted.
    pub replacement: RootedPartition,
    pub image: TotientImage,
}

/// Sends a partition of `n` rooted at a 1 to a pair `(ρ, r)` where `ρ`
/// partitions `n + 1` into parts `≥ 2`.
///
/// With `o` ones and the root at position `p` among them, the ones are
/// replaced by `g = gcd(o + 1, p)` copies of `(o + 1)/g`, the first rooted,
/// and `r = p/g`.
pub fn map_a(rooted: &RootedPartition) -> Result<TotientImage, BijectionError> {
    map_a_steps(rooted).map(|steps| steps.image)
}

pub fn map_a_steps(rooted: &RootedPartition) -> Result<MapASteps, BijectionError> {
    if rooted.root_value() != 1 {
        return Err(BijectionError::RootNotOne(rooted.root_value()));
    }
    let (rest, ones) = split_small_parts(rooted.base(), 2);
    let ones_count = ones.len() as u32;
    let position = rooted.root_ordinal();
    let g = gcd(u64::from(ones_count) + 1, u64::from(position));
    let value = to_u32((u64::from(ones_count) + 1) / g);
    let g = to_u32(g);
    let replacement = RootedPartition::run(value, g);
    let image = TotientImage::new(direct_sum_rooted(&rest, &replacement), position / g);
    Ok(MapASteps {
        ones: RootedPartition::new(ones, 1, position)?,
        rest,
        ones_count,
        position,
        gcd: g,
        replacement,
        image,
    })
}

/// Intermediate values of [`inv_a`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvASteps {
    pub rest: Partition,
    /// The root and the equal parts after it.
    pub tail: RootedPartition,
    /// Weight of `tail`.
    pub tail_weight: u32,
    /// `r · tail_weight / k`, the ordinal of the restored rooted 1.
    pub position: u32,
    /// `tail_weight − 1` ones with the rooted one at `position`.
    pub ones: RootedPartition,
    pub preimage: RootedPartition,
}

/// Inverse of [`map_a`]: the tail of the root (weight `s`) becomes `s − 1`
/// ones, rooted at position `r·s/k`.
pub fn inv_a(image: &TotientImage) -> Result<RootedPartition, BijectionError> {
    inv_a_steps(image).map(|steps| steps.preimage)
}

pub fn inv_a_steps(image: &TotientImage) -> Result<InvASteps, BijectionError> {
    image.validate_a()?;
    let (rest, tail) = split_trailing_root(&image.rooted);
    let k = u64::from(tail.root_value());
    let tail_weight = tail.weight();
    let scaled = u64::from(image.residue) * tail_weight;
    if scaled % k != 0 {
        return Err(BijectionError::MalformedImage(format!(
            "r*s/k = {}*{}/{} is not an integer",
            image.residue, tail_weight, k
        )));
    }
    let position = scaled / k;
    if position == 0 || position > tail_weight - 1 {
        return Err(BijectionError::MalformedImage(format!(
            "root position {position} outside 1..={}",
            tail_weight - 1
        )));
    }
    let ones_count = to_u32(tail_weight - 1);
    let position = to_u32(position);
    let ones = RootedPartition::new(Partition::repeated(1, ones_count), 1, position)?;
    let preimage = direct_sum_rooted(&rest, &ones);
    Ok(InvASteps {
        rest,
        tail,
        tail_weight: to_u32(tail_weight),
        position,
        ones,
        preimage,
    })
}

/// Intermediate values of [`map_b`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapBSteps {
    /// Parts `≥ 3` of the input.
    pub rest: Partition,
    /// The ones and twos of the input.
    pub small: Partition,
    /// `|small| + 3`.
    pub s: u32,
    /// Number of twos plus one.
    pub t: u32,
    /// `gcd(s, t)`.
    pub gcd: u32,
    /// `s / gcd`, the new root value.
    pub root: u32,
    /// `gcd` copies of `root`, first rooted.
    pub replacement: RootedPartition,
    pub image: TotientImage,
}

/// Sends a partition of `n` to a pair `(ρ, r)` where `ρ` partitions `n + 3`
/// into parts `≥ 3` and `r < k/2` is coprime to the root value `k`.
///
/// The ones and twos `σ` are replaced by `g` copies of `s/g`, the first
/// rooted, where `s = |σ| + 3`, `t` is one more than the number of twos and
/// `g = gcd(s, t)`; the residue is `t/g`.
pub fn map_b(partition: &Partition) -> TotientImage {
    map_b_steps(partition).image
}

pub fn map_b_steps(partition: &Partition) -> MapBSteps {
    let (rest, small) = split_small_parts(partition, 3);
    let s = small.weight() + 3;
    let t = u64::from(small.multiplicity(2)) + 1;
    let g = gcd(s, t);
    let root = to_u32(s / g);
    let replacement = RootedPartition::run(root, to_u32(g));
    let image = TotientImage::new(direct_sum_rooted(&rest, &replacement), to_u32(t / g));
    MapBSteps {
        rest,
        small,
        s: to_u32(s),
        t: to_u32(t),
        gcd: to_u32(g),
        root,
        replacement,
        image,
    }
}

/// Intermediate values of [`inv_b`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvBSteps {
    pub rest: Partition,
    pub tail: RootedPartition,
    pub tail_weight: u32,
    /// `r · tail_weight / k − 1`.
    pub twos: u32,
    /// `tail_weight − 3 − 2 · twos`.
    pub ones: u32,
    pub small: Partition,
    pub preimage: Partition,
}

/// Inverse of [`map_b`]: the tail of the root (weight `w`) becomes
/// `r·w/k − 1` twos and enough ones to reach weight `w − 3`.
pub fn inv_b(image: &TotientImage) -> Result<Partition, BijectionError> {
    inv_b_steps(image).map(|steps| steps.preimage)
}

pub fn inv_b_steps(image: &TotientImage) -> Result<InvBSteps, BijectionError> {
    image.validate_b()?;
    let (rest, tail) = split_trailing_root(&image.rooted);
    let k = i64::from(tail.root_value());
    let tail_weight = tail.weight() as i64;
    let scaled = i64::from(image.residue) * tail_weight;
    if scaled % k != 0 {
        return Err(BijectionError::MalformedImage(format!(
            "r*w/k = {}*{}/{} is not an integer",
            image.residue, tail_weight, k
        )));
    }
    let twos = scaled / k - 1;
    let ones = tail_weight - 3 - 2 * twos;
    if twos < 0 || ones < 0 {
        return Err(BijectionError::MalformedImage(format!(
            "negative part counts: {twos} twos, {ones} ones"
        )));
    }
    let (twos, ones) = (twos as u32, ones as u32);
    let small = direct_sum(&Partition::repeated(2, twos), &Partition::repeated(1, ones));
    let preimage = direct_sum(&rest, &small);
    Ok(InvBSteps {
        rest,
        tail,
        tail_weight: tail_weight as u32,
        twos,
        ones,
        small,
        preimage,
    })
}
