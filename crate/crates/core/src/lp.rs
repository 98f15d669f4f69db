//! Exact dense simplex with Bland's rule.
//!
//! The mixed-cell certificates need provable LP answers, so there is no
//! floating-point presolve anywhere: every pivot is an exact field
//! operation and Bland's rule guarantees termination. Problems here are
//! tiny (tens of rows), so a dense two-phase tableau is the right tool.

use crate::scalar::{scmp, Scalar};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint<S> {
    pub coeffs: Vec<S>,
    pub rel: Relation,
    pub rhs: S,
}

/// maximize `objective . x` subject to constraints; variables are free.
#[derive(Clone, Debug)]
pub struct LinearProgram<S> {
    pub num_vars: usize,
    pub objective: Vec<S>,
    pub constraints: Vec<Constraint<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<S> {
    Optimal { value: S, point: Vec<S> },
    Infeasible,
    Unbounded,
}

struct Tableau<S> {
    // rows x cols, last column is the rhs; basis[i] = variable of row i
    rows: Vec<Vec<S>>,
    basis: Vec<usize>,
    cols: usize,
}

impl<S: Scalar> Tableau<S> {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].clone();
        for j in 0..self.cols {
            self.rows[row][j] = self.rows[row][j].clone() / inv.clone();
        }
        for i in 0..self.rows.len() {
            if i != row && !self.rows[i][col].is_zero() {
                let f = self.rows[i][col].clone();
                for j in 0..self.cols {
                    let s = self.rows[row][j].clone() * f.clone();
                    self.rows[i][j] = self.rows[i][j].clone() - s;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering = smallest-index improving column; leaving =
    /// min-ratio row, ties broken by smallest basis variable.
    /// `cost` is the reduced-cost row (maximization: enter while some cost > 0).
    /// Returns false if the current solution is optimal, or None-equivalent
    /// unbounded via Err.
    fn simplex(&mut self, cost: &mut Vec<S>, allowed: usize) -> Result<(), Unbounded> {
        loop {
            let Some(enter) = (0..allowed).find(|&j| cost[j] > S::zero()) else {
                return Ok(());
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<S> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][enter] > S::zero() {
                    let ratio =
                        self.rows[i][self.cols - 1].clone() / self.rows[i][enter].clone();
                    let better = match &best {
                        None => true,
                        Some(b) => match scmp(&ratio, b) {
                            Ordering::Less => true,
                            Ordering::Equal => {
                                self.basis[i] < self.basis[leave.unwrap()]
                            }
                            Ordering::Greater => false,
                        },
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(row) = leave else {
                return Err(Unbounded);
            };
            self.pivot(row, enter);
            // keep the cost row reduced
            let f = cost[enter].clone();
            if !f.is_zero() {
                for j in 0..self.cols - 1 {
                    let s = self.rows[row][j].clone() * f.clone();
                    cost[j] = cost[j].clone() - s;
                }
                let s = self.rows[row][self.cols - 1].clone() * f;
                cost[self.cols - 1] = cost[self.cols - 1].clone() - s;
            }
        }
    }
}

struct Unbounded;

/// Solve the LP exactly. Free variables are split into positive parts
/// internally; the reported point is in the original variable space.
pub fn solve<S: Scalar>(lp: &LinearProgram<S>) -> LpOutcome<S> {
    let n = lp.num_vars;
    let split = 2 * n;
    // columns: x+ (n), x- (n), slack/surplus (one per inequality), then
    // artificials (assigned below), finally rhs.
    let num_ineq = lp
        .constraints
        .iter()
        .filter(|c| c.rel != Relation::Eq)
        .count();
    let m = lp.constraints.len();
    let art_base = split + num_ineq;
    let cols = art_base + m + 1;

    let mut rows = Vec::with_capacity(m);
    let mut basis = vec![usize::MAX; m];
    let mut slack_idx = 0;
    for (i, c) in lp.constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), n, "constraint arity mismatch");
        let mut row = vec![S::zero(); cols];
        let mut rhs = c.rhs.clone();
        let mut coeffs: Vec<S> = c.coeffs.clone();
        let mut rel = c.rel;
        // normalize to rhs >= 0
        if rhs < S::zero() {
            rhs = S::zero() - rhs;
            for v in coeffs.iter_mut() {
                *v = S::zero() - v.clone();
            }
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        for j in 0..n {
            row[j] = coeffs[j].clone();
            row[n + j] = S::zero() - coeffs[j].clone();
        }
        match rel {
            Relation::Le => {
                row[split + slack_idx] = S::one();
                basis[i] = split + slack_idx;
                slack_idx += 1;
            }
            Relation::Ge => {
                row[split + slack_idx] = S::zero() - S::one();
                slack_idx += 1;
                row[art_base + i] = S::one();
                basis[i] = art_base + i;
            }
            Relation::Eq => {
                row[art_base + i] = S::one();
                basis[i] = art_base + i;
            }
        }
        row[cols - 1] = rhs;
        rows.push(row);
    }

    let mut tab = Tableau { rows, basis, cols };

    // Phase 1: maximize -(sum of artificials).
    let needs_phase1 = tab.basis.iter().any(|&b| b >= art_base);
    if needs_phase1 {
        let mut cost = vec![S::zero(); cols];
        for i in 0..m {
            if tab.basis[i] >= art_base {
                // cost = -sum over artificial rows, expressed in nonbasic vars
                for j in 0..cols {
                    cost[j] = cost[j].clone() + tab.rows[i][j].clone();
                }
            }
        }
        for j in art_base..cols - 1 {
            cost[j] = S::zero();
        }
        if tab.simplex(&mut cost, art_base).is_err() {
            unreachable!("phase-1 objective is bounded");
        }
        if !cost[cols - 1].is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive remaining artificials out of the basis
        for i in 0..m {
            if tab.basis[i] >= art_base {
                if let Some(col) = (0..art_base).find(|&j| !tab.rows[i][j].is_zero()) {
                    tab.pivot(i, col);
                }
                // a fully zero row is redundant; its artificial stays at 0
            }
        }
    }

    // Phase 2.
    let mut cost = vec![S::zero(); cols];
    for j in 0..n {
        cost[j] = lp.objective[j].clone();
        cost[n + j] = S::zero() - lp.objective[j].clone();
    }
    // express the cost in terms of the current basis
    for i in 0..m {
        let b = tab.basis[i];
        if b < art_base && !cost[b].is_zero() {
            let f = cost[b].clone();
            for j in 0..cols {
                let s = tab.rows[i][j].clone() * f.clone();
                cost[j] = cost[j].clone() - s;
            }
        }
    }
    match tab.simplex(&mut cost, art_base) {
        Err(Unbounded) => LpOutcome::Unbounded,
        Ok(()) => {
            let mut raw = vec![S::zero(); art_base];
            for i in 0..m {
                if tab.basis[i] < art_base {
                    raw[tab.basis[i]] = tab.rows[i][cols - 1].clone();
                }
            }
            let point: Vec<S> = (0..n)
                .map(|j| raw[j].clone() - raw[n + j].clone())
                .collect();
            let mut value = S::zero();
            for j in 0..n {
                value = value + lp.objective[j].clone() * point[j].clone();
            }
            LpOutcome::Optimal { value, point }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_int(v)
    }

    fn c(coeffs: Vec<i64>, rel: Relation, rhs: i64) -> Constraint<BigRational> {
        Constraint {
            coeffs: coeffs.into_iter().map(q).collect(),
            rel,
            rhs: q(rhs),
        }
    }

    #[test]
    fn simple_maximization() {
        // max x + y, x <= 2, y <= 3, x + y <= 4
        let lp = LinearProgram {
            num_vars: 2,
            objective: vec![q(1), q(1)],
            constraints: vec![
                c(vec![1, 0], Relation::Le, 2),
                c(vec![0, 1], Relation::Le, 3),
                c(vec![1, 1], Relation::Le, 4),
            ],
        };
        match solve(&lp) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(4)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn free_variables_and_equalities() {
        // max y, x + y = 1, x >= 3  (so y = -2 at optimum)
        let lp = LinearProgram {
            num_vars: 2,
            objective: vec![q(0), q(1)],
            constraints: vec![
                c(vec![1, 1], Relation::Eq, 1),
                c(vec![1, 0], Relation::Ge, 3),
            ],
        };
        match solve(&lp) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(-2));
                assert_eq!(point[0], q(3));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        let lp = LinearProgram {
            num_vars: 1,
            objective: vec![q(0)],
            constraints: vec![
                c(vec![1], Relation::Ge, 2),
                c(vec![1], Relation::Le, 1),
            ],
        };
        assert_eq!(solve(&lp), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let lp = LinearProgram {
            num_vars: 1,
            objective: vec![q(1)],
            constraints: vec![c(vec![1], Relation::Ge, 0)],
        };
        assert_eq!(solve(&lp), LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_normalization() {
        // max x subject to -x >= -5  (i.e. x <= 5)
        let lp = LinearProgram {
            num_vars: 1,
            objective: vec![q(1)],
            constraints: vec![c(vec![-1], Relation::Ge, -5)],
        };
        match solve(&lp) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(5)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }
}
