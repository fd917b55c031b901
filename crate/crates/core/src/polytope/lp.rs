//! Two-phase simplex over exact rationals with Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::HPolytope;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal value; `None` unless optimal.
    pub value: Option<BigRational>,
    /// An optimal point, or for an unbounded problem a feasible one.
    pub witness: Option<Vec<BigRational>>,
}

/// How an original variable is represented by tableau columns.
#[derive(Clone, Copy)]
enum Var {
    NonNeg(usize),
    Free(usize, usize),
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    /// Reduced costs; the last entry is minus the objective value.
    cost: Vec<BigRational>,
    basis: Vec<usize>,
    width: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x /= &p;
                }
            }
        }
        let support: Vec<usize> =
            (0..=self.width).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<BigRational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &support {
                let delta = &f * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = c;
    }

    /// Maximises with Bland's rule over columns `< limit`.
    fn optimise(&mut self, limit: usize) -> Outcome {
        loop {
            let Some(enter) = (0..limit).find(|&j| self.cost[j].is_positive()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((leave, _)) => self.pivot(leave, enter),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn set_objective(&mut self, c: &[BigRational]) {
        let mut cost: Vec<BigRational> = c.to_vec();
        cost.resize(self.width + 1, BigRational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &c[b];
            if cb.is_zero() {
                continue;
            }
            for (j, x) in self.rows[i].iter().enumerate() {
                if !x.is_zero() {
                    cost[j] -= cb * x;
                }
            }
        }
        self.cost = cost;
    }

    fn column_values(&self) -> Vec<BigRational> {
        let mut vals = vec![BigRational::zero(); self.width];
        for (i, &b) in self.basis.iter().enumerate() {
            vals[b] = self.rhs(i).clone();
        }
        vals
    }
}

/// Maximises `objective . x` over the polytope `h`.
pub fn lp_max(h: &HPolytope, objective: &[BigRational]) -> Result<LpSolution> {
    let n = h.n();
    if objective.len() != n {
        return Err(Error::invalid(format!(
            "objective has length {}, system has dimension {n}",
            objective.len()
        )));
    }

    // rows of the form -c x_i <= 0 become sign constraints
    let mut nonneg = vec![false; n];
    let mut general = Vec::new();
    for con in h.inequalities() {
        let nz: Vec<usize> = (0..n).filter(|&i| !con.a[i].is_zero()).collect();
        if con.b.is_zero() && nz.len() == 1 && con.a[nz[0]].is_negative() {
            nonneg[nz[0]] = true;
        } else {
            general.push(con);
        }
    }
    let mut vars = Vec::with_capacity(n);
    let mut cols = 0;
    for &nn in &nonneg {
        if nn {
            vars.push(Var::NonNeg(cols));
            cols += 1;
        } else {
            vars.push(Var::Free(cols, cols + 1));
            cols += 2;
        }
    }
    let structural = cols;
    let slack_start = cols;
    cols += general.len();

    // assemble rows with nonnegative right-hand sides
    let mut rows: Vec<(Vec<BigRational>, BigRational, Option<usize>)> = Vec::new();
    let expand = |a: &[BigRational], row: &mut Vec<BigRational>| {
        for (i, v) in vars.iter().enumerate() {
            match *v {
                Var::NonNeg(c) => row[c] = a[i].clone(),
                Var::Free(p, q) => {
                    row[p] = a[i].clone();
                    row[q] = -a[i].clone();
                }
            }
        }
    };
    for con in h.equalities() {
        let mut row = vec![BigRational::zero(); cols];
        expand(&con.a, &mut row);
        rows.push((row, con.b.clone(), None));
    }
    for (k, con) in general.iter().enumerate() {
        let mut row = vec![BigRational::zero(); cols];
        expand(&con.a, &mut row);
        row[slack_start + k] = BigRational::one();
        rows.push((row, con.b.clone(), Some(slack_start + k)));
    }
    let mut artificial_rows = Vec::new();
    let mut basis = Vec::with_capacity(rows.len());
    for (idx, (row, b, slack)) in rows.iter_mut().enumerate() {
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            *b = -b.clone();
            *slack = None;
        }
        match slack {
            Some(s) => basis.push(*s),
            None => {
                basis.push(usize::MAX);
                artificial_rows.push(idx);
            }
        }
    }
    let art_start = cols;
    let width = cols + artificial_rows.len();
    let mut table: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|(mut row, b, _)| {
            row.resize(width, BigRational::zero());
            row.push(b);
            row
        })
        .collect();
    for (k, &r) in artificial_rows.iter().enumerate() {
        table[r][art_start + k] = BigRational::one();
        basis[r] = art_start + k;
    }
    let mut t = Tableau { rows: table, cost: Vec::new(), basis, width };

    if !artificial_rows.is_empty() {
        let mut c = vec![BigRational::zero(); width];
        for x in c[art_start..].iter_mut() {
            *x = -BigRational::one();
        }
        t.set_objective(&c);
        t.optimise(width);
        if t.cost[width].is_positive() {
            return Ok(LpSolution { status: LpStatus::Infeasible, value: None, witness: None });
        }
        // drive artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for row in t.rows.iter_mut() {
            let rhs = row.pop().expect("rhs");
            row.truncate(art_start);
            row.push(rhs);
        }
        t.width = art_start;
    }

    let mut c = vec![BigRational::zero(); t.width];
    for (i, v) in vars.iter().enumerate() {
        match *v {
            Var::NonNeg(col) => c[col] = objective[i].clone(),
            Var::Free(p, q) => {
                c[p] = objective[i].clone();
                c[q] = -objective[i].clone();
            }
        }
    }
    t.set_objective(&c);
    let outcome = t.optimise(t.width);

    let vals = t.column_values();
    let x: Vec<BigRational> = vars
        .iter()
        .map(|v| match *v {
            Var::NonNeg(col) => vals[col].clone(),
            Var::Free(p, q) => &vals[p] - &vals[q],
        })
        .collect();
    debug_assert!(structural <= t.width);
    match outcome {
        Outcome::Unbounded => {
            Ok(LpSolution { status: LpStatus::Unbounded, value: None, witness: Some(x) })
        }
        Outcome::Optimal => {
            let value: BigRational = x.iter().zip(objective).map(|(a, b)| a * b).sum();
            if value != -t.cost[t.width].clone() {
                return Err(Error::internal("simplex objective bookkeeping drifted"));
            }
            Ok(LpSolution { status: LpStatus::Optimal, value: Some(value), witness: Some(x) })
        }
    }
}
