//! Type-A weight arithmetic and the abstract crystal interface.

use std::fmt;
use std::ops::{Add, Neg, RangeInclusive, Sub};

use serde::{Deserialize, Serialize};

use crate::error::CrystalError;

/// The rank `n` of `sl(n+1)`. Operator indices run over `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self, CrystalError> {
        if n == 0 {
            return Err(CrystalError::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// The operator indices `1..=n`.
    pub fn indices(self) -> RangeInclusive<usize> {
        1..=self.as_usize()
    }

    pub fn check_index(self, i: usize) -> Result<(), CrystalError> {
        if i == 0 || i > self.as_usize() {
            return Err(CrystalError::IndexOutOfRange { index: i, rank: self.0 });
        }
        Ok(())
    }

    /// Number of positive roots, `n(n+1)/2`.
    pub fn positive_roots(self) -> usize {
        let n = self.as_usize();
        n * (n + 1) / 2
    }

    pub(crate) fn assert_index(self, i: usize) {
        if let Err(e) = self.check_index(i) {
            panic!("{e}");
        }
    }
}

impl TryFrom<u32> for Rank {
    type Error = CrystalError;

    fn try_from(n: u32) -> Result<Self, Self::Error> {
        Rank::new(n)
    }
}

impl From<Rank> for u32 {
    fn from(r: Rank) -> u32 {
        r.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Cartan matrix entry `<α_j, α_i^∨>` for type A.
pub fn cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// A weight in simple-root coordinates: `coords[k]` is the coefficient of `α_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: Rank) -> Self {
        Weight { coords: vec![0; rank.as_usize()] }
    }

    pub fn from_coords(rank: Rank, coords: Vec<i64>) -> Result<Self, CrystalError> {
        if coords.len() != rank.as_usize() {
            return Err(CrystalError::WeightLength { expected: rank.as_usize(), actual: coords.len() });
        }
        Ok(Weight { coords })
    }

    /// The simple root `α_i`.
    pub fn simple_root(rank: Rank, i: usize) -> Self {
        rank.assert_index(i);
        let mut w = Weight::zero(rank);
        w.coords[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coords.len() as u32)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coefficient of `α_i` (1-based).
    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    /// Fundamental-weight coordinates: the vector of pairings with every coroot.
    pub fn to_fundamental(&self) -> Vec<i64> {
        (1..=self.coords.len()).map(|i| self.pair(i)).collect()
    }

    fn pair(&self, i: usize) -> i64 {
        self.coords.iter().enumerate().map(|(k, c)| c * cartan(i, k + 1)).sum()
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "weights of different rank");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// `<w, α_i^∨>` with the type-A Cartan matrix.
pub fn pairing(w: &Weight, i: usize) -> Result<i64, CrystalError> {
    w.rank().check_index(i)?;
    Ok(w.pair(i))
}

/// `φ_i = ε_i + <wt, α_i^∨>`.
pub fn phi_from_eps(eps: i64, w: &Weight, i: usize) -> Result<i64, CrystalError> {
    Ok(eps + pairing(w, i)?)
}

/// A crystal element. `None` from `e`/`f` is the null result.
///
/// Indices outside `1..=rank` are a caller bug and panic; use
/// [`Rank::check_index`] to validate untrusted indices first.
pub trait Crystal: Sized + Clone + PartialEq {
    fn rank(&self) -> Rank;

    fn e(&self, i: usize) -> Option<Self>;

    fn f(&self, i: usize) -> Option<Self>;

    fn eps(&self, i: usize) -> u32;

    /// `<wt(self), α_i^∨>`.
    fn pairing(&self, i: usize) -> i64;

    fn phi(&self, i: usize) -> i64 {
        i64::from(self.eps(i)) + self.pairing(i)
    }
}

/// A set carrying a second ("star") crystal structure with the same weights.
pub trait Bicrystal: Crystal {
    fn e_star(&self, i: usize) -> Option<Self>;

    fn f_star(&self, i: usize) -> Option<Self>;

    fn eps_star(&self, i: usize) -> u32;

    fn phi_star(&self, i: usize) -> i64 {
        i64::from(self.eps_star(i)) + self.pairing(i)
    }
}

/// `jump_i(b) = ε_i(b) + ε_i^*(b) + <wt(b), α_i^∨>`.
///
/// A negative value means the realization is broken and is reported as an
/// integrity failure.
pub fn jump<B: Bicrystal>(b: &B, i: usize) -> Result<u32, CrystalError> {
    let value = i64::from(b.eps(i)) + i64::from(b.eps_star(i)) + b.pairing(i);
    u32::try_from(value).map_err(|_| CrystalError::Integrity(format!("jump_{i} = {value} is negative")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::from_coords(Rank::new(coords.len() as u32).unwrap(), coords.to_vec()).unwrap()
    }

    #[test]
    fn rank_zero_rejected() {
        assert_eq!(Rank::new(0), Err(CrystalError::InvalidRank(0)));
    }

    #[test]
    fn pairing_values() {
        assert_eq!(pairing(&w(&[-1, 0]), 1), Ok(-2));
        assert_eq!(pairing(&w(&[-1, 0]), 2), Ok(1));
        assert_eq!(pairing(&w(&[0, 0, -1, 0]), 1), Ok(0));
    }

    #[test]
    fn pairing_index_out_of_range() {
        assert!(matches!(pairing(&w(&[0, 0]), 0), Err(CrystalError::IndexOutOfRange { .. })));
        assert!(matches!(pairing(&w(&[0, 0]), 3), Err(CrystalError::IndexOutOfRange { .. })));
    }

    #[test]
    fn phi_from_eps_values() {
        assert_eq!(phi_from_eps(0, &w(&[0, 0]), 1), Ok(0));
        assert_eq!(phi_from_eps(3, &w(&[-3, 0]), 1), Ok(-3));
    }

    #[test]
    fn weight_length_checked() {
        let r = Rank::new(3).unwrap();
        assert!(Weight::from_coords(r, vec![0, 0]).is_err());
    }

    #[test]
    fn fundamental_coordinates_of_simple_root() {
        let r = Rank::new(3).unwrap();
        assert_eq!(Weight::simple_root(r, 2).to_fundamental(), vec![-1, 2, -1]);
    }
}
