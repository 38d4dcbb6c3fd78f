use super::Weight;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Non-increasing list of non-negative integers. Trailing zeros are stripped
/// on construction, so two partitions differing only in trailing zeros
/// compare equal; callers that need an explicit part count use [`padded`].
///
/// [`padded`]: Partition::padded
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidPartition {
                    reason: format!("parts must be non-increasing, got {parts:?}"),
                });
            }
        }
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(Error::InvalidPartition {
                reason: format!("parts must be non-negative, got {parts:?}"),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.parts.len() > n {
            return Err(Error::TooManyParts {
                partition: self.to_string(),
                max: n,
            });
        }
        let mut out = self.parts.clone();
        out.resize(n, 0);
        Ok(out)
    }

    /// Cellwise containment: `self[i] >= other[i]` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.parts.get(i).copied().unwrap_or(0) >= p)
    }

    /// The stretched partition `m * self`.
    pub fn scaled(&self, m: i64) -> Partition {
        assert!(m >= 0, "partition stretch factor must be non-negative");
        Partition {
            parts: self
                .parts
                .iter()
                .map(|&p| p.checked_mul(m).expect("partition part overflow"))
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Highest weight of `SL(n)` attached to a partition with at most `n` parts:
/// coordinate `i` is `a_i - a_{i+1}` of the zero-padded part vector. Partitions
/// that differ by a constant column map to the same weight.
pub fn partition_to_weight(n: usize, p: &Partition) -> Result<Weight> {
    if n < 2 {
        return Err(Error::InvalidGlRank { n });
    }
    let a = p.padded(n)?;
    let coords = (0..n - 1).map(|i| a[i] - a[i + 1]).collect();
    Ok(Weight::new(coords))
}

/// Inverse of [`partition_to_weight`], normalized so the last part is zero:
/// `a_i = m_i + ... + m_{n-1}`.
pub fn weight_to_partition(n: usize, w: &Weight) -> Result<Partition> {
    if n < 2 {
        return Err(Error::InvalidGlRank { n });
    }
    if w.rank() != n - 1 {
        return Err(Error::RankMismatch {
            got: w.rank(),
            rank: n - 1,
        });
    }
    if w.coords().iter().any(|&c| c < 0) {
        return Err(Error::NonDominant {
            weight: w.to_string(),
        });
    }
    let mut parts = Vec::with_capacity(n);
    let mut tail = 0i64;
    for &m in w.coords().iter().rev() {
        tail = tail.checked_add(m).expect("partition part overflow");
        parts.push(tail);
    }
    parts.reverse();
    Partition::new(parts)
}
