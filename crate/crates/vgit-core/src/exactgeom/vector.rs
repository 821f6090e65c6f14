use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::scalar::{rat_int, Int, Rat};
use crate::{Error, Result};

/// A point of `Q^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector {
    coords: Vec<Rat>,
}

impl QVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        QVector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        QVector {
            coords: vec![rat_int(0); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            });
        }
        Ok(())
    }

    /// Standard dot product (the character/cocharacter pairing).
    pub fn dot(&self, other: &QVector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, factor: &Rat) -> QVector {
        QVector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// The primitive integer vector pointing in the same direction.
    ///
    /// Clears denominators and divides by the gcd, keeping orientation.
    pub fn primitive_direction(&self) -> Result<Vec<Int>> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut lcm = Int::from(1);
        for c in &self.coords {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<Int> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = Int::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        for v in &mut ints {
            *v = &*v / &gcd;
        }
        Ok(ints)
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVector {
            coords: self
                .coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVector {
            coords: self
                .coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector {
            coords: self.coords.iter().map(|a| -a.clone()).collect(),
        }
    }
}

/// Signum of a rational as `-1 | 0 | 1`.
pub(crate) fn rat_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    #[test]
    fn primitive_direction_clears_denominators() {
        let v = QVector::new(vec![rat(1, 2), rat(-3, 4)]);
        let p = v.primitive_direction().unwrap();
        assert_eq!(p, vec![Int::from(2), Int::from(-3)]);
        assert!(QVector::zeros(3).primitive_direction().is_err());
    }
}
