//! Exact rational convex geometry: the substrate for every GIT computation.
//!
//! All quantities are `BigRational`; Euclidean magnitudes, which are
//! generally irrational, are carried as [`SignedDistance`] values
//! `(sign, squared magnitude)` and compared by exact square arithmetic.

mod closest;
mod gram;
mod hyperplane;
pub mod lp;
mod polytope;
mod regions;
mod scalar;
mod vector;

pub use closest::{closest_point, closest_point_to, closest_point_with_support, signed_distance};
pub use gram::GramForm;
pub use hyperplane::QHyperplane;
pub use polytope::{affine_dim, affine_hull_equations, Facet, Membership, QPolytope};
pub use regions::{
    enumerate_faces, enumerate_regions, Adjacency, Face, FaceComplex, Region, RegionComplex, Sign,
};
pub use scalar::{rat, rat_int, Int, Rat};
pub use vector::QVector;

use std::cmp::Ordering;

/// An exactly represented signed Euclidean magnitude.
///
/// `sign` is the sign of the distance and `sq` its square, so irrational
/// magnitudes stay exact. Invariant: `sign == 0` iff `sq == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDistance {
    pub sign: i8,
    pub sq: Rat,
}

impl SignedDistance {
    pub fn zero() -> Self {
        SignedDistance {
            sign: 0,
            sq: rat_int(0),
        }
    }

    pub fn new(sign: i8, sq: Rat) -> Self {
        use num_traits::Zero;
        debug_assert!((sign == 0) == sq.is_zero());
        debug_assert!(sq >= rat_int(0));
        SignedDistance { sign, sq }
    }

    /// Scales the represented value by a positive rational factor.
    pub fn scale(&self, factor: &Rat) -> Self {
        debug_assert!(*factor > rat_int(0));
        SignedDistance {
            sign: self.sign,
            sq: &self.sq * factor * factor,
        }
    }

    /// The represented value as `sign * sqrt(sq)`, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let s = self.sq.to_f64().unwrap_or(f64::NAN).sqrt();
        f64::from(self.sign) * s
    }
}

impl PartialOrd for SignedDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => {
                if self.sign >= 0 {
                    self.sq.cmp(&other.sq)
                } else {
                    other.sq.cmp(&self.sq)
                }
            }
            ord => ord,
        }
    }
}

/// Compares `a + b` with `c` where each argument denotes `sign * sqrt(sq)`.
///
/// Used for exact lower-convexity checks of the Hilbert–Mumford function,
/// where the values themselves are irrational. Everything reduces to sign
/// analysis plus squaring.
pub fn cmp_sqrt_sum(a: &SignedDistance, b: &SignedDistance, c: &SignedDistance) -> Ordering {
    // a + b ? c  <=>  a + b - c ? 0. Move c to the left with flipped sign.
    let neg_c = SignedDistance {
        sign: -c.sign,
        sq: c.sq.clone(),
    };
    cmp_sqrt_triple_zero(a, b, &neg_c)
}

/// Sign of `a + b + c`, each `sign * sqrt(sq)`, as an `Ordering` vs zero.
fn cmp_sqrt_triple_zero(a: &SignedDistance, b: &SignedDistance, c: &SignedDistance) -> Ordering {
    // Sort so that at most one summand needs to move to the other side.
    let mut pos: Vec<&SignedDistance> = Vec::new();
    let mut neg: Vec<&SignedDistance> = Vec::new();
    for t in [a, b, c] {
        match t.sign {
            1 => pos.push(t),
            -1 => neg.push(t),
            _ => {}
        }
    }
    match (pos.len(), neg.len()) {
        (0, 0) => Ordering::Equal,
        (_, 0) => Ordering::Greater,
        (0, _) => Ordering::Less,
        (1, 1) => pos[0].sq.cmp(&neg[0].sq),
        (2, 1) => cmp_sqrt_pair_single(&pos[0].sq, &pos[1].sq, &neg[0].sq),
        (1, 2) => cmp_sqrt_pair_single(&neg[0].sq, &neg[1].sq, &pos[0].sq).reverse(),
        _ => unreachable!("three summands"),
    }
}

/// Compares `sqrt(a) + sqrt(b)` with `sqrt(c)` for nonnegative rationals.
fn cmp_sqrt_pair_single(a: &Rat, b: &Rat, c: &Rat) -> Ordering {
    // (sqrt(a)+sqrt(b))^2 = a + b + 2 sqrt(ab)  vs  c
    let lhs_rat = a + b;
    let rest = c - &lhs_rat; // compare 2 sqrt(ab) with rest
    let four_ab = rat_int(4) * a * b;
    if rest < rat_int(0) {
        return Ordering::Greater;
    }
    four_ab.cmp(&(&rest * &rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(sign: i8, n: i64, d: i64) -> SignedDistance {
        SignedDistance::new(sign, rat(n, d))
    }

    #[test]
    fn signed_distance_order() {
        assert!(sd(-1, 4, 1) < sd(-1, 1, 1)); // -2 < -1
        assert!(sd(-1, 1, 1) < sd(0, 0, 1));
        assert!(sd(0, 0, 1) < sd(1, 1, 4));
        assert!(sd(1, 1, 4) < sd(1, 1, 1));
    }

    #[test]
    fn sqrt_sum_comparisons() {
        // sqrt(1) + sqrt(1) = 2 > sqrt(1)
        assert_eq!(cmp_sqrt_sum(&sd(1, 1, 1), &sd(1, 1, 1), &sd(1, 1, 1)), Ordering::Greater);
        // sqrt(2) + sqrt(2) = sqrt(8)
        assert_eq!(cmp_sqrt_sum(&sd(1, 2, 1), &sd(1, 2, 1), &sd(1, 8, 1)), Ordering::Equal);
        // 1 + sqrt(2) < sqrt(6)  (2.414 vs 2.449)
        assert_eq!(cmp_sqrt_sum(&sd(1, 1, 1), &sd(1, 2, 1), &sd(1, 6, 1)), Ordering::Less);
        // -1 + 2 > 1/2
        assert_eq!(cmp_sqrt_sum(&sd(-1, 1, 1), &sd(1, 4, 1), &sd(1, 1, 4)), Ordering::Greater);
        // -2 + 1 < 0
        assert_eq!(cmp_sqrt_sum(&sd(-1, 4, 1), &sd(1, 1, 1), &sd(0, 0, 1)), Ordering::Less);
    }
}
