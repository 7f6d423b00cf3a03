//! Dense-tableau primal simplex over exact fields with Bland's rule.
//!
//! Solves max c x subject to rows `a x <= b` or `a x = b` with b >= 0 and
//! x >= 0. Equality rows get artificial variables and a first phase drives
//! them to zero. Pivot choice is deterministic: the entering column has the
//! largest reduced cost (smallest index among equals) until a long run of
//! degenerate pivots, after which Bland's smallest-index rule takes over and
//! rules out cycling. The leaving row has the minimum ratio, ties to the
//! smallest basic variable.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

/// Exact ordered field with overflow-checked arithmetic.
pub trait Field:
    Clone + Ord + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + core::fmt::Debug
{
    fn from_ratio(numer: i64, denom: i64) -> Self;
}

impl Field for Ratio<i128> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(i128::from(numer), i128::from(denom))
    }
}

impl Field for BigRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

/// Sparse row `sum coeffs <relation> rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint<F> {
    pub coeffs: Vec<(usize, F)>,
    pub relation: Relation,
    pub rhs: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram<F> {
    pub vars: usize,
    /// Dense objective, maximized.
    pub objective: Vec<F>,
    pub constraints: Vec<Constraint<F>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Optimum<F> {
    pub x: Vec<F>,
    pub value: F,
    pub pivots: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexError {
    /// An intermediate value left the range of the field.
    Overflow,
    Infeasible,
    Unbounded,
    /// A right-hand side is negative or a row index is out of range.
    Malformed,
}

/// Consecutive degenerate pivots tolerated before switching to Bland's rule for good.
const DEGENERATE_RUN: usize = 64;

type Step<T> = core::result::Result<T, SimplexError>;

fn add<F: Field>(a: &F, b: &F) -> Step<F> {
    a.checked_add(b).ok_or(SimplexError::Overflow)
}

fn sub<F: Field>(a: &F, b: &F) -> Step<F> {
    a.checked_sub(b).ok_or(SimplexError::Overflow)
}

fn mul<F: Field>(a: &F, b: &F) -> Step<F> {
    a.checked_mul(b).ok_or(SimplexError::Overflow)
}

fn div<F: Field>(a: &F, b: &F) -> Step<F> {
    a.checked_div(b).ok_or(SimplexError::Overflow)
}

struct Tableau<F> {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<F>>,
    /// Reduced costs; the last entry is the objective value.
    cost: Vec<F>,
    basis: Vec<usize>,
    /// Columns allowed to enter the basis.
    allowed: Vec<bool>,
    pivots: usize,
}

impl<F: Field> Tableau<F> {
    fn width(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) -> Step<()> {
        let w = self.width();
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for j in 0..=w {
                if !self.rows[r][j].is_zero() {
                    self.rows[r][j] = div(&self.rows[r][j], &p)?;
                }
            }
        }
        let nz: Vec<usize> = (0..=w).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let prow = core::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nz {
                row[j] = sub(&row[j], &mul(&factor, &prow[j])?)?;
            }
        }
        if !self.cost[c].is_zero() {
            let factor = self.cost[c].clone();
            for &j in &nz {
                // the value slot accumulates +factor * rhs
                if j == w {
                    self.cost[j] = add(&self.cost[j], &mul(&factor, &prow[j])?)?;
                } else {
                    self.cost[j] = sub(&self.cost[j], &mul(&factor, &prow[j])?)?;
                }
            }
        }
        self.rows[r] = prow;
        self.basis[r] = c;
        self.pivots += 1;
        Ok(())
    }

    /// Runs simplex iterations until no allowed column has positive reduced cost.
    fn optimize(&mut self) -> Step<()> {
        let w = self.width();
        let mut stalled = 0;
        let mut bland = false;
        loop {
            let c = if bland {
                (0..w).find(|&j| self.allowed[j] && self.cost[j] > F::zero())
            } else {
                let mut pick: Option<usize> = None;
                for j in (0..w).filter(|&j| self.allowed[j] && self.cost[j] > F::zero()) {
                    if pick.is_none_or(|p| self.cost[j] > self.cost[p]) {
                        pick = Some(j);
                    }
                }
                pick
            };
            let Some(c) = c else {
                return Ok(());
            };
            let mut best: Option<(usize, F)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c] <= F::zero() {
                    continue;
                }
                let ratio = div(&row[w], &row[c])?;
                let better = match &best {
                    None => true,
                    Some((b, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*b])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let (r, ratio) = best.ok_or(SimplexError::Unbounded)?;
            if ratio.is_zero() {
                stalled += 1;
                bland |= stalled > DEGENERATE_RUN;
            } else {
                stalled = 0;
            }
            self.pivot(r, c)?;
        }
    }
}

/// Maximizes `lp` exactly.
pub fn maximize<F: Field>(lp: &LinearProgram<F>) -> Step<Optimum<F>> {
    let nv = lp.vars;
    let slacks = lp
        .constraints
        .iter()
        .filter(|c| c.relation == Relation::Le)
        .count();
    let arts = lp.constraints.len() - slacks;
    let w = nv + slacks + arts;
    let mut rows = Vec::with_capacity(lp.constraints.len());
    let mut basis = Vec::with_capacity(lp.constraints.len());
    let mut cost = vec![F::zero(); w + 1];
    let (mut next_slack, mut next_art) = (nv, nv + slacks);
    for con in &lp.constraints {
        if con.rhs < F::zero() {
            return Err(SimplexError::Malformed);
        }
        let mut row = vec![F::zero(); w + 1];
        for (j, a) in &con.coeffs {
            if *j >= nv {
                return Err(SimplexError::Malformed);
            }
            row[*j] = add(&row[*j], a)?;
        }
        row[w] = con.rhs.clone();
        match con.relation {
            Relation::Le => {
                row[next_slack] = F::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Eq => {
                // first phase maximizes minus the sum of artificials
                for j in 0..nv {
                    if !row[j].is_zero() {
                        cost[j] = add(&cost[j], &row[j])?;
                    }
                }
                cost[w] = sub(&cost[w], &row[w])?;
                row[next_art] = F::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }
    let mut allowed = vec![true; w];
    for a in allowed.iter_mut().skip(nv + slacks) {
        *a = false;
    }
    let mut t = Tableau {
        rows,
        cost,
        basis,
        allowed,
        pivots: 0,
    };

    if arts > 0 {
        t.optimize()?;
        if t.cost[w] < F::zero() {
            return Err(SimplexError::Infeasible);
        }
        // pivot zero-valued artificials out of the basis; drop redundant rows
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= nv + slacks {
                match (0..nv + slacks).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(c) => t.pivot(r, c)?,
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // second phase: reduced costs of the real objective for the current basis
    let mut cost = vec![F::zero(); w + 1];
    cost[..nv].clone_from_slice(&lp.objective);
    for (i, &b) in t.basis.iter().enumerate() {
        if b >= nv || lp.objective[b].is_zero() {
            continue;
        }
        let cb = lp.objective[b].clone();
        for (j, c) in cost.iter_mut().enumerate() {
            if t.rows[i][j].is_zero() {
                continue;
            }
            let d = mul(&cb, &t.rows[i][j])?;
            *c = if j == w { add(c, &d)? } else { sub(c, &d)? };
        }
    }
    t.cost = cost;
    t.optimize()?;

    let mut x = vec![F::zero(); nv];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv {
            x[b] = t.rows[i][w].clone();
        }
    }
    Ok(Optimum {
        x,
        value: t.cost[w].clone(),
        pivots: t.pivots,
    })
}
