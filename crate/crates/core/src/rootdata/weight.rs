use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Integer coordinate vector in the fundamental-weight basis of a fixed root
/// system: coordinate `i` is the pairing of the weight against the `i`-th
/// simple coroot. Weights of different root systems must never be mixed; the
/// arithmetic operators enforce equal length.
///
/// The derived `Ord` is plain lexicographic order on coordinates and is used
/// only as a canonical tie-breaker (map keys, sorted reports). The dominance
/// partial order lives on [`RootSystem`](super::RootSystem).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Scalar multiple `k * self`, with overflow checked.
    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .map(|&c| c.checked_mul(k).expect("weight coordinate overflow"))
                .collect(),
        }
    }

    /// Componentwise exact division; `None` if any coordinate is not divisible.
    pub fn divided(&self, k: i64) -> Option<Weight> {
        assert!(k != 0, "division of a weight by zero");
        let mut coords = Vec::with_capacity(self.coords.len());
        for &c in &self.coords {
            if c % k != 0 {
                return None;
            }
            coords.push(c / k);
        }
        Some(Weight { coords })
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> Option<i64>) -> Weight {
        assert_eq!(
            self.coords.len(),
            other.coords.len(),
            "weight arithmetic across different ranks"
        );
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b).expect("weight coordinate overflow"))
                .collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, i64::checked_add)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, i64::checked_sub)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

// Debug = Display keeps test output compact.
impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
