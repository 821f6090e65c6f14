//! Exact dense simplex over the rationals.
//!
//! Two-phase primal simplex with Bland's rule; exact arithmetic makes the
//! anti-cycling guarantee unconditional. Problem sizes here are tiny (a
//! handful of free variables, tens of constraints), so no factorization or
//! sparsity is attempted.

use num_traits::{Signed, Zero};

use super::scalar::{rat_int, Rat};
use super::vector::QVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: QVector,
    pub rel: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: QVector, rel: Relation, rhs: Rat) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: QVector, value: Rat },
    Infeasible,
    Unbounded,
}

/// Maximizes `objective . x` over free variables `x` subject to `constraints`.
pub fn maximize(objective: &QVector, constraints: &[Constraint]) -> LpOutcome {
    // Free variables are split as x = u - v with u, v >= 0.
    let n = objective.dim();
    let split = 2 * n;
    let mut obj = vec![rat_int(0); split];
    for j in 0..n {
        obj[2 * j] = objective.get(j).clone();
        obj[2 * j + 1] = -objective.get(j).clone();
    }
    let rows: Vec<(Vec<Rat>, Relation, Rat)> = constraints
        .iter()
        .map(|c| {
            debug_assert_eq!(c.coeffs.dim(), n);
            let mut row = vec![rat_int(0); split];
            for j in 0..n {
                row[2 * j] = c.coeffs.get(j).clone();
                row[2 * j + 1] = -c.coeffs.get(j).clone();
            }
            (row, c.rel, c.rhs.clone())
        })
        .collect();
    match solve_nonneg(&obj, &rows) {
        NonnegOutcome::Optimal { x, value } => {
            let point = QVector::new((0..n).map(|j| &x[2 * j] - &x[2 * j + 1]).collect());
            LpOutcome::Optimal { point, value }
        }
        NonnegOutcome::Infeasible => LpOutcome::Infeasible,
        NonnegOutcome::Unbounded => LpOutcome::Unbounded,
    }
}

/// Finds nonnegative coefficients expressing `target` as a convex combination
/// of `points`, if any exist.
pub fn convex_combination(target: &QVector, points: &[QVector]) -> Option<Vec<Rat>> {
    let m = points.len();
    let d = target.dim();
    let obj = vec![rat_int(0); m];
    let mut rows: Vec<(Vec<Rat>, Relation, Rat)> = Vec::with_capacity(d + 1);
    for i in 0..d {
        let row: Vec<Rat> = points.iter().map(|p| p.get(i).clone()).collect();
        rows.push((row, Relation::Eq, target.get(i).clone()));
    }
    rows.push((vec![rat_int(1); m], Relation::Eq, rat_int(1)));
    match solve_nonneg(&obj, &rows) {
        NonnegOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

enum NonnegOutcome {
    Optimal { x: Vec<Rat>, value: Rat },
    Infeasible,
    Unbounded,
}

/// Maximizes `obj . x` over `x >= 0` subject to the given rows.
fn solve_nonneg(obj: &[Rat], rows: &[(Vec<Rat>, Relation, Rat)]) -> NonnegOutcome {
    let n = obj.len();
    let m = rows.len();

    // Count slack and artificial columns. Rows are normalized to rhs >= 0.
    let mut num_slack = 0usize;
    let mut num_art = 0usize;
    let mut normalized: Vec<(Vec<Rat>, Relation, Rat)> = Vec::with_capacity(m);
    for (coeffs, rel, rhs) in rows {
        let (coeffs, rel, rhs) = if rhs.is_negative() {
            let flipped = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
            (
                coeffs.iter().map(|c| -c.clone()).collect(),
                flipped,
                -rhs.clone(),
            )
        } else {
            (coeffs.clone(), *rel, rhs.clone())
        };
        match rel {
            Relation::Le => num_slack += 1,
            Relation::Ge => {
                num_slack += 1;
                num_art += 1;
            }
            Relation::Eq => num_art += 1,
        }
        normalized.push((coeffs, rel, rhs));
    }

    let total = n + num_slack + num_art;
    let art_start = n + num_slack;
    // tableau: m rows of (total + 1) columns, rhs last
    let mut a = vec![vec![rat_int(0); total + 1]; m];
    let mut basis = vec![usize::MAX; m];
    let mut slack_idx = n;
    let mut art_idx = art_start;
    for (i, (coeffs, rel, rhs)) in normalized.iter().enumerate() {
        for (j, c) in coeffs.iter().enumerate() {
            a[i][j] = c.clone();
        }
        a[i][total] = rhs.clone();
        match rel {
            Relation::Le => {
                a[i][slack_idx] = rat_int(1);
                basis[i] = slack_idx;
                slack_idx += 1;
            }
            Relation::Ge => {
                a[i][slack_idx] = rat_int(-1);
                slack_idx += 1;
                a[i][art_idx] = rat_int(1);
                basis[i] = art_idx;
                art_idx += 1;
            }
            Relation::Eq => {
                a[i][art_idx] = rat_int(1);
                basis[i] = art_idx;
                art_idx += 1;
            }
        }
    }

    // Phase 1: maximize -(sum of artificials).
    if num_art > 0 {
        let mut z = vec![rat_int(0); total + 1];
        for j in art_start..total {
            z[j] = rat_int(-1);
        }
        reduce_objective(&mut z, &a, &basis);
        if !run_simplex(&mut a, &mut basis, &mut z, total, None) {
            unreachable!("phase 1 is bounded");
        }
        // Invariant: z[total] = -(objective value) = sum of artificials.
        if z[total].is_positive() {
            return NonnegOutcome::Infeasible;
        }
        // Pivot remaining artificials out of the basis, dropping redundant rows.
        let mut keep = vec![true; m];
        for i in 0..m {
            if basis[i] >= art_start {
                let piv = (0..art_start).find(|&j| !a[i][j].is_zero());
                match piv {
                    Some(j) => pivot(&mut a, &mut basis, i, j, total),
                    None => keep[i] = false,
                }
            }
        }
        if keep.iter().any(|k| !k) {
            let mut na = Vec::new();
            let mut nb = Vec::new();
            for i in 0..m {
                if keep[i] {
                    na.push(a[i].clone());
                    nb.push(basis[i]);
                }
            }
            a = na;
            basis = nb;
        }
    }

    // Phase 2: the real objective; artificial columns are barred.
    let mut z = vec![rat_int(0); total + 1];
    for j in 0..n {
        z[j] = obj[j].clone();
    }
    reduce_objective(&mut z, &a, &basis);
    if !run_simplex(&mut a, &mut basis, &mut z, total, Some(art_start)) {
        return NonnegOutcome::Unbounded;
    }

    let mut x = vec![rat_int(0); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = a[i][total].clone();
        }
    }
    NonnegOutcome::Optimal {
        x,
        value: -z[total].clone(),
    }
}

/// Eliminates basic columns from the objective row.
///
/// Invariant afterwards: `z[j]` is the reduced cost of column `j` and
/// `z[total]` equals minus the current objective value.
fn reduce_objective(z: &mut [Rat], a: &[Vec<Rat>], basis: &[usize]) {
    let total = z.len() - 1;
    for (i, &b) in basis.iter().enumerate() {
        if !z[b].is_zero() {
            let f = z[b].clone();
            for j in 0..=total {
                let sub = &a[i][j] * &f;
                z[j] = &z[j] - &sub;
            }
        }
    }
}

/// Runs Bland-rule simplex to optimality. Returns false on unboundedness.
///
/// `bar_from`: columns at or past this index may not enter the basis
/// (used to freeze artificial columns in phase 2).
fn run_simplex(
    a: &mut Vec<Vec<Rat>>,
    basis: &mut [usize],
    z: &mut [Rat],
    total: usize,
    bar_from: Option<usize>,
) -> bool {
    let bar = bar_from.unwrap_or(total);
    loop {
        // Bland: first column with positive reduced cost.
        let entering = (0..total).find(|&j| j < bar && z[j].is_positive());
        let entering = match entering {
            Some(j) => j,
            None => return true,
        };
        // Ratio test; Bland tie-break on smallest basis variable.
        let mut best: Option<(Rat, usize, usize)> = None; // (ratio, basis var, row)
        for i in 0..a.len() {
            if a[i][entering].is_positive() {
                let ratio = &a[i][total] / &a[i][entering];
                let key = (ratio.clone(), basis[i]);
                let better = match &best {
                    None => true,
                    Some((r, bv, _)) => key < (r.clone(), *bv),
                };
                if better {
                    best = Some((key.0, key.1, i));
                }
            }
        }
        let row = match best {
            Some((_, _, i)) => i,
            None => return false,
        };
        pivot(a, basis, row, entering, total);
        // Update objective row.
        if !z[entering].is_zero() {
            let f = z[entering].clone();
            for j in 0..=total {
                let sub = &a[row][j] * &f;
                z[j] = &z[j] - &sub;
            }
        }
    }
}

fn pivot(a: &mut Vec<Vec<Rat>>, basis: &mut [usize], row: usize, col: usize, total: usize) {
    let p = a[row][col].clone();
    for x in a[row].iter_mut() {
        *x = &*x / &p;
    }
    for i in 0..a.len() {
        if i != row && !a[i][col].is_zero() {
            let f = a[i][col].clone();
            for j in 0..=total {
                let sub = &a[row][j] * &f;
                a[i][j] = &a[i][j] - &sub;
            }
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    #[test]
    fn simple_box_max() {
        // max x + y st x <= 2, y <= 3, x + y >= 1
        let out = maximize(
            &v(&[1, 1]),
            &[
                Constraint::new(v(&[1, 0]), Relation::Le, rat_int(2)),
                Constraint::new(v(&[0, 1]), Relation::Le, rat_int(3)),
                Constraint::new(v(&[1, 1]), Relation::Ge, rat_int(1)),
            ],
        );
        match out {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat_int(5));
                assert_eq!(point, v(&[2, 3]));
            }
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn detects_infeasible() {
        let out = maximize(
            &v(&[1]),
            &[
                Constraint::new(v(&[1]), Relation::Ge, rat_int(2)),
                Constraint::new(v(&[1]), Relation::Le, rat_int(1)),
            ],
        );
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let out = maximize(
            &v(&[1, 0]),
            &[Constraint::new(v(&[0, 1]), Relation::Le, rat_int(1))],
        );
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn fractional_optimum_exact() {
        // max y st 3y <= 1, y free -> y = 1/3
        let out = maximize(
            &v(&[0, 1]),
            &[
                Constraint::new(v(&[0, 3]), Relation::Le, rat_int(1)),
                Constraint::new(v(&[1, 0]), Relation::Eq, rat(1, 7)),
            ],
        );
        match out {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat(1, 3));
                assert_eq!(point.get(0), &rat(1, 7));
                assert_eq!(point.get(1), &rat(1, 3));
            }
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn convex_combination_membership() {
        let pts = [v(&[0]), v(&[1]), v(&[2])];
        let coeffs = convex_combination(&QVector::new(vec![rat(1, 2)]), &pts).unwrap();
        let total: Rat = coeffs.iter().cloned().sum();
        assert_eq!(total, rat_int(1));
        assert!(convex_combination(&v(&[3]), &pts).is_none());
        assert!(convex_combination(&v(&[-1]), &pts).is_none());
    }

    #[test]
    fn equality_negative_rhs() {
        let out = maximize(
            &v(&[1]),
            &[
                Constraint::new(v(&[2]), Relation::Eq, rat_int(-3)),
            ],
        );
        match out {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat(-3, 2));
                assert_eq!(point.get(0), &rat(-3, 2));
            }
            _ => panic!("expected optimum"),
        }
    }
}
