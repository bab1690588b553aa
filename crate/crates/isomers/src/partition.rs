//! Integer partitions: the shapes of tabloids.
//!
//! A partition of `d` records how many substituents of each kind a derivative
//! carries; trailing zero parts are never stored.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::MAX_DEGREE;

/// A partition of a positive integer `d ≤ 12`: weakly decreasing positive
/// parts summing to `d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition; parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}; trailing zeros are implicit"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        let d: usize = parts.iter().sum();
        if d > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange {
                degree: d,
                max: MAX_DEGREE,
            });
        }
        Ok(Partition { parts })
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer (the degree).
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of stored (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part at `index`, with zero for indices past the stored parts.
    pub fn part(&self, index: usize) -> usize {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// Number of tabloids of this shape: `d! / (λ₁! λ₂! ⋯)`.
    pub fn tabloid_count(&self) -> u64 {
        let mut count = 1u64;
        let mut chosen = 0usize;
        for &part in &self.parts {
            count *= binomial(self.degree() - chosen, part);
            chosen += part;
        }
        count
    }
}

/// All partitions of `d`, in decreasing lexicographic order, starting with
/// `(d)` and ending with `(1,1,…,1)`.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d >= 1 {
        rec(d, d, &mut Vec::new(), &mut out);
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `4,2` or `(4,2)`.
    fn from_str(s: &str) -> Result<Partition> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}
