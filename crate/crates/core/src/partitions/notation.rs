//! Text form of partitions: comma-separated parts in weakly decreasing
//! order, with `^` in front of the rooted occurrence. Whitespace is ignored
//! and the empty string is the empty partition.
//!
//! ```text
//! 4,4,2,1,1,^1,1,1
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Partition, PartitionError, RootedPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("invalid part {0:?}")]
    InvalidPart(String),
    #[error("empty part between commas")]
    EmptyPart,
    #[error("more than one part is marked with '^'")]
    MultipleRoots,
    #[error("expected a rooted partition (mark the root with '^')")]
    MissingRoot,
    #[error("expected an unrooted partition, found a '^'")]
    UnexpectedRoot,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A parsed partition that may or may not carry a root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Marked {
    Plain(Partition),
    Rooted(RootedPartition),
}

impl FromStr for Marked {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Ok(Marked::Plain(Partition::empty()));
        }
        let mut parts = Vec::new();
        let mut root_index = None;
        for (i, token) in text.split(',').enumerate() {
            let digits = match token.strip_prefix('^') {
                Some(rest) => {
                    if root_index.replace(i).is_some() {
                        return Err(NotationError::MultipleRoots);
                    }
                    rest
                }
                None => token,
            };
            if digits.is_empty() {
                return Err(NotationError::EmptyPart);
            }
            let part: u32 = digits
                .parse()
                .map_err(|_| NotationError::InvalidPart(token.to_string()))?;
            parts.push(part);
        }
        let base = Partition::new(parts)?;
        match root_index {
            None => Ok(Marked::Plain(base)),
            Some(i) => {
                let value = base.parts()[i];
                let first = base.parts().partition_point(|&p| p > value);
                let ordinal = (i - first + 1) as u32;
                Ok(Marked::Rooted(RootedPartition::new(base, value, ordinal)?))
            }
        }
    }
}

impl FromStr for Partition {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse()? {
            Marked::Plain(p) => Ok(p),
            Marked::Rooted(_) => Err(NotationError::UnexpectedRoot),
        }
    }
}

impl FromStr for RootedPartition {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse()? {
            Marked::Rooted(r) => Ok(r),
            Marked::Plain(_) => Err(NotationError::MissingRoot),
        }
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32], root: Option<usize>) -> fmt::Result {
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        if root == Some(i) {
            f.write_str("^")?;
        }
        write!(f, "{part}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.parts(), None)
    }
}

impl fmt::Display for RootedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.base().parts(), Some(self.root_index()))
    }
}

impl fmt::Display for Marked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marked::Plain(p) => p.fmt(f),
            Marked::Rooted(r) => r.fmt(f),
        }
    }
}
