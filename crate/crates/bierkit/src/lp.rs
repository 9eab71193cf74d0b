//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Small by design: the LPs in this crate have tens of rows and columns
//! (threshold-complex detection, extreme-point filtering). Bland's rule
//! guarantees termination; exact arithmetic makes the optimum a certificate.

use crate::exactla::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Cmp {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coeffs: Vec<Rational>,
    pub cmp: Cmp,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub(crate) enum LpOutcome {
    /// Maximum value and one optimal assignment of the structural variables.
    Optimal { value: Rational, solution: Vec<Rational> },
    Infeasible,
    Unbounded,
}

/// Maximizes `objective . x` subject to `constraints` and `x >= 0`.
pub(crate) fn maximize(objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    Tableau::new(objective, constraints).solve()
}

struct Tableau {
    /// rows x cols coefficient matrix, one row per constraint
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    /// basis[i] = variable index basic in row i
    basis: Vec<usize>,
    n_structural: usize,
    n_total: usize,
    artificial_start: usize,
    objective: Vec<Rational>,
}

impl Tableau {
    fn new(objective: &[Rational], constraints: &[Constraint]) -> Self {
        let n = objective.len();
        let m = constraints.len();

        // normalize to b >= 0
        let mut rows: Vec<(Vec<Rational>, Cmp, Rational)> = constraints
            .iter()
            .map(|c| {
                assert_eq!(c.coeffs.len(), n, "constraint arity mismatch");
                if c.rhs.is_negative() {
                    let flipped = match c.cmp {
                        Cmp::Le => Cmp::Ge,
                        Cmp::Ge => Cmp::Le,
                        Cmp::Eq => Cmp::Eq,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.cmp, c.rhs.clone())
                }
            })
            .collect();

        let n_slack = rows.iter().filter(|r| r.1 != Cmp::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Cmp::Le).count();
        let n_total = n + n_slack + n_art;
        let artificial_start = n + n_slack;

        let mut a = vec![vec![Rational::zero(); n_total]; m];
        let mut b = vec![Rational::zero(); m];
        let mut basis = vec![usize::MAX; m];
        let mut slack_idx = n;
        let mut art_idx = artificial_start;

        for (i, (coeffs, cmp, rhs)) in rows.drain(..).enumerate() {
            a[i][..n].clone_from_slice(&coeffs);
            b[i] = rhs;
            match cmp {
                Cmp::Le => {
                    a[i][slack_idx] = Rational::one();
                    basis[i] = slack_idx;
                    slack_idx += 1;
                }
                Cmp::Ge => {
                    a[i][slack_idx] = -Rational::one();
                    slack_idx += 1;
                    a[i][art_idx] = Rational::one();
                    basis[i] = art_idx;
                    art_idx += 1;
                }
                Cmp::Eq => {
                    a[i][art_idx] = Rational::one();
                    basis[i] = art_idx;
                    art_idx += 1;
                }
            }
        }

        Tableau {
            a,
            b,
            basis,
            n_structural: n,
            n_total,
            artificial_start,
            objective: objective.to_vec(),
        }
    }

    fn solve(mut self) -> LpOutcome {
        // phase 1: maximize -(sum of artificials)
        if self.artificial_start < self.n_total {
            let mut phase1 = vec![Rational::zero(); self.n_total];
            for v in self.artificial_start..self.n_total {
                phase1[v] = -Rational::one();
            }
            match self.run(&phase1) {
                SimplexEnd::Optimal(value) => {
                    if !value.is_zero() {
                        return LpOutcome::Infeasible;
                    }
                }
                SimplexEnd::Unbounded => unreachable!("phase-1 objective is bounded"),
            }
            self.evict_artificials();
        }

        let mut phase2 = self.objective.clone();
        phase2.resize(self.n_total, Rational::zero());
        match self.run(&phase2) {
            SimplexEnd::Optimal(value) => {
                let mut solution = vec![Rational::zero(); self.n_structural];
                for (row, &v) in self.basis.iter().enumerate() {
                    if v < self.n_structural {
                        solution[v] = self.b[row].clone();
                    }
                }
                LpOutcome::Optimal { value, solution }
            }
            SimplexEnd::Unbounded => LpOutcome::Unbounded,
        }
    }

    /// Pivots any artificial variable still basic (at value zero) out of the
    /// basis, or drops its row if it is redundant.
    fn evict_artificials(&mut self) {
        let mut row = 0;
        while row < self.a.len() {
            if self.basis[row] >= self.artificial_start {
                debug_assert!(self.b[row].is_zero());
                let pivot_col = (0..self.artificial_start)
                    .find(|&c| !self.a[row][c].is_zero());
                match pivot_col {
                    Some(c) => self.pivot(row, c),
                    None => {
                        // redundant constraint
                        self.a.remove(row);
                        self.b.remove(row);
                        self.basis.remove(row);
                        continue;
                    }
                }
            }
            row += 1;
        }
        // artificial columns are dead from here on
        self.n_total = self.artificial_start;
        for r in &mut self.a {
            r.truncate(self.artificial_start);
        }
    }

    fn run(&mut self, obj: &[Rational]) -> SimplexEnd {
        // reduced costs z_j = obj_j - c_B . a_j, maintained from scratch each
        // iteration (dense and small; clarity over speed)
        loop {
            let cb: Vec<Rational> = self.basis.iter().map(|&v| obj[v].clone()).collect();
            // Bland: entering = smallest index with positive reduced cost
            let mut entering = None;
            for j in 0..self.n_total {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut red = obj[j].clone();
                for (i, c) in cb.iter().enumerate() {
                    if !c.is_zero() && !self.a[i][j].is_zero() {
                        red -= &(c * &self.a[i][j]);
                    }
                }
                if red.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                let mut value = Rational::zero();
                for (i, c) in cb.iter().enumerate() {
                    if !c.is_zero() {
                        value += &(c * &self.b[i]);
                    }
                }
                return SimplexEnd::Optimal(value);
            };

            // Bland ratio test: min b_i / a_ij over a_ij > 0; tie -> smallest
            // basic variable index
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.a[i][j];
                match &leaving {
                    None => leaving = Some((i, ratio)),
                    Some((best_i, best)) => {
                        if ratio < *best
                            || (ratio == *best && self.basis[i] < self.basis[*best_i])
                        {
                            leaving = Some((i, ratio));
                        }
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return SimplexEnd::Unbounded;
            };
            self.pivot(row, j);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        debug_assert!(!p.is_zero());
        for x in &mut self.a[row] {
            *x /= &p;
        }
        self.b[row] /= &p;
        for i in 0..self.a.len() {
            if i == row {
                continue;
            }
            let f = self.a[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.n_total {
                let t = &self.a[row][j] * &f;
                self.a[i][j] -= &t;
            }
            let t = &self.b[row] * &f;
            self.b[i] -= &t;
        }
        self.basis[row] = col;
    }
}

enum SimplexEnd {
    Optimal(Rational),
    Unbounded,
}
