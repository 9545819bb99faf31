//! Exact linear and integer programming over rationals for small instances.
//!
//! Only the packing form `max c·x, A x <= b, x >= 0` with `b >= 0` is
//! supported, so the origin is always feasible and no phase one is needed.

use num_traits::{One, Signed, Zero};

use crate::error::{input, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
}

/// Maximises `c·x` subject to `a x <= b`, `x >= 0`, by the tableau simplex
/// method with Bland's rule. Requires `b >= 0`.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpSolution> {
    let m = a.len();
    let nx = c.len();
    if b.len() != m || a.iter().any(|row| row.len() != nx) {
        return input("inconsistent LP dimensions");
    }
    if b.iter().any(Signed::is_negative) {
        return input("LP right-hand side must be non-negative");
    }
    let width = nx + m;
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut cost: Vec<Rational> = c.iter().map(|v| -v.clone()).collect();
    cost.extend((0..=m).map(|_| Rational::zero()));
    let mut basis: Vec<usize> = (nx..width).collect();

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in rows.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            return input("LP is unbounded");
        };
        let pivot = rows[r][enter].clone();
        for v in rows[r].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        basis[r] = enter;
    }
    let mut x = vec![Rational::zero(); nx];
    for (i, &var) in basis.iter().enumerate() {
        if var < nx {
            x[var] = rows[i][width].clone();
        }
    }
    Ok(LpSolution { value: cost[width].clone(), x })
}

/// Maximises `c·x` over non-negative integer `x` with `a x <= b`, by branch
/// and bound on the LP relaxation. Requires integral `c` for the bound test
/// to be tight; correct for any `c`.
pub fn maximize_integer(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpSolution> {
    let nx = c.len();
    let mut best: Option<LpSolution> = None;
    let lower = vec![Rational::zero(); nx];
    let upper: Vec<Option<Rational>> = vec![None; nx];
    branch(a, b, c, lower, upper, &mut best)?;
    Ok(best.expect("x = 0 is feasible"))
}

fn branch(
    a: &[Vec<Rational>],
    b: &[Rational],
    c: &[Rational],
    lower: Vec<Rational>,
    upper: Vec<Option<Rational>>,
    best: &mut Option<LpSolution>,
) -> Result<()> {
    let nx = c.len();
    // substitute x = lower + y
    let mut rhs: Vec<Rational> = b
        .iter()
        .zip(a)
        .map(|(bi, row)| bi - row.iter().zip(&lower).map(|(p, q)| p * q).sum::<Rational>())
        .collect();
    if rhs.iter().any(Signed::is_negative) {
        return Ok(());
    }
    let mut rows: Vec<Vec<Rational>> = a.to_vec();
    for (j, u) in upper.iter().enumerate() {
        if let Some(u) = u {
            let room = u - &lower[j];
            if room.is_negative() {
                return Ok(());
            }
            let mut row = vec![Rational::zero(); nx];
            row[j] = Rational::one();
            rows.push(row);
            rhs.push(room);
        }
    }
    let relaxed = maximize(&rows, &rhs, c)?;
    let offset: Rational = c.iter().zip(&lower).map(|(p, q)| p * q).sum();
    let value = &relaxed.value + &offset;
    if let Some(b) = best {
        if value.floor() <= b.value {
            return Ok(());
        }
    }
    let x: Vec<Rational> = relaxed.x.iter().zip(&lower).map(|(y, l)| y + l).collect();
    match x.iter().position(|v| !v.is_integer()) {
        None => {
            if best.as_ref().is_none_or(|b| value > b.value) {
                *best = Some(LpSolution { value, x });
            }
        }
        Some(j) => {
            let mut up = upper.clone();
            up[j] = Some(x[j].floor());
            branch(a, b, c, lower.clone(), up, best)?;
            let mut low = lower;
            low[j] = x[j].ceil();
            branch(a, b, c, low, upper, best)?;
        }
    }
    Ok(())
}
