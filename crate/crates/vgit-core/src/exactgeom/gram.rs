use num_traits::Zero;

use super::scalar::{rat_int, Rat};
use super::vector::QVector;
use crate::{Error, Result};

/// A symmetric positive-definite rational bilinear form.
///
/// Positive definiteness is verified on construction through the leading
/// principal minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    dim: usize,
    // row-major dim x dim
    entries: Vec<Rat>,
}

impl GramForm {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![rat_int(0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = rat_int(1);
        }
        GramForm { dim, entries }
    }

    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = rows.len();
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
        }
        let entries: Vec<Rat> = rows.into_iter().flatten().collect();
        let form = GramForm { dim, entries };
        for i in 0..dim {
            for j in 0..i {
                if form.at(i, j) != form.at(j, i) {
                    return Err(Error::NotPositiveDefinite);
                }
            }
        }
        for k in 1..=dim {
            if form.leading_minor(k) <= rat_int(0) {
                return Err(Error::NotPositiveDefinite);
            }
        }
        Ok(form)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_identity(&self) -> bool {
        *self == GramForm::identity(self.dim)
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    /// `G v`.
    pub fn apply(&self, v: &QVector) -> QVector {
        debug_assert_eq!(v.dim(), self.dim);
        QVector::new(
            (0..self.dim)
                .map(|i| {
                    (0..self.dim)
                        .map(|j| self.at(i, j) * v.get(j))
                        .sum::<Rat>()
                })
                .collect(),
        )
    }

    /// `u^T G v`.
    pub fn inner(&self, u: &QVector, v: &QVector) -> Rat {
        u.dot(&self.apply(v))
    }

    /// `v^T G v`.
    pub fn norm_sq(&self, v: &QVector) -> Rat {
        self.inner(v, v)
    }

    /// Exact inverse via Gauss–Jordan elimination.
    pub fn inverse(&self) -> GramForm {
        let n = self.dim;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = (0..n).map(|j| self.at(i, j).clone()).collect();
                row.extend((0..n).map(|j| rat_int(i64::from(i == j))));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("positive-definite matrix is invertible");
            a.swap(col, pivot);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x = &*x / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..2 * n {
                        let sub = &a[col][c] * &f;
                        a[r][c] = &a[r][c] - &sub;
                    }
                }
            }
        }
        let entries = a.into_iter().flat_map(|row| row[n..].to_vec()).collect();
        GramForm { dim: n, entries }
    }

    fn leading_minor(&self, k: usize) -> Rat {
        let mut a: Vec<Vec<Rat>> = (0..k)
            .map(|i| (0..k).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut det = rat_int(1);
        for col in 0..k {
            let pivot = match (col..k).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return rat_int(0),
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            det *= a[col][col].clone();
            let p = a[col][col].clone();
            for r in col + 1..k {
                if !a[r][col].is_zero() {
                    let f = &a[r][col] / &p;
                    for c in col..k {
                        let sub = &a[col][c] * &f;
                        a[r][c] = &a[r][c] - &sub;
                    }
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    #[test]
    fn rejects_indefinite() {
        let bad = GramForm::new(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(1)],
        ]);
        assert_eq!(bad.unwrap_err(), Error::NotPositiveDefinite);
        let asym = GramForm::new(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(0), rat_int(1)],
        ]);
        assert!(asym.is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let g = GramForm::new(vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ])
        .unwrap();
        let inv = g.inverse();
        assert_eq!(*inv.at(0, 0), rat(3, 5));
        let v = QVector::from_ints(&[4, -7]);
        assert_eq!(inv.apply(&g.apply(&v)), v);
    }
}
