//! Seifert matrices with a prescribed Alexander polynomial.
//!
//! The search space is a chain: `2g` generators paired into hooks
//! `V[2i][2i+1] = 1`, with free diagonal entries and symmetric couplings between
//! consecutive hooks. Symmetric entries leave `V - Vᵀ` block diagonal with
//! determinant 1, so every candidate is a valid Seifert matrix. The
//! determinant is affine in the last diagonal entry, which is solved for
//! exactly; the remaining entries are enumerated smallest first.

use num_traits::{One, Zero};

use super::{SeifertError, SeifertMatrix};
use crate::poly::{IntLaurentPoly, QPoly};
use crate::rational::{int, to_i64, Rational};

const ORDER: [i64; 5] = [0, 1, -1, 2, -2];

pub fn realize_polynomial(delta: &IntLaurentPoly) -> Result<SeifertMatrix, SeifertError> {
    let delta = delta
        .symmetric_normalize()
        .map_err(|e| SeifertError::NotRealizable(e.to_string()))?;
    let eps = delta.eval_rational(&int(1))?;
    if eps != int(1) && eps != int(-1) {
        return Err(SeifertError::NotRealizable(format!("Δ(1) = {eps}, expected ±1")));
    }
    let g = delta.breadth() / 2;
    if g == 0 {
        return Ok(SeifertMatrix::unknot());
    }
    let range = match g {
        1 | 2 => 5,
        3 => 3,
        _ => return Err(SeifertError::NotRealizable(format!("genus {g} is beyond the chain search"))),
    };
    // det(V - tVᵀ) = Δ(1) t^g Δ(t)
    let target = delta.to_dense().scale(&eps);
    let n = 2 * g;
    let free = n - 1 + 2 * (g - 1);
    let mut digits = vec![0usize; free];
    loop {
        let params: Vec<i64> = digits.iter().map(|&d| ORDER[d]).collect();
        if let Some(v) = try_params(g, &params, &target) {
            return Ok(v);
        }
        // odometer over ORDER[..range]
        let mut k = free;
        loop {
            if k == 0 {
                return Err(SeifertError::NotRealizable("no chain matrix in the search range".into()));
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < range {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Chain matrix from `2g - 1` diagonal entries, `g - 1` even couplings and
/// `g - 1` odd couplings, with the last diagonal entry `c`.
fn chain(g: usize, params: &[i64], c: i64) -> Vec<Vec<i64>> {
    let n = 2 * g;
    let mut e = vec![vec![0; n]; n];
    for i in 0..g {
        e[2 * i][2 * i + 1] = 1;
    }
    for i in 0..n - 1 {
        e[i][i] = params[i];
    }
    e[n - 1][n - 1] = c;
    let couplings = &params[n - 1..];
    for i in 0..g - 1 {
        let (u, v) = (couplings[2 * i], couplings[2 * i + 1]);
        e[2 * i][2 * i + 2] = u;
        e[2 * i + 2][2 * i] = u;
        e[2 * i + 1][2 * i + 3] = v;
        e[2 * i + 3][2 * i + 1] = v;
    }
    e
}

fn try_params(g: usize, params: &[i64], target: &QPoly) -> Option<SeifertMatrix> {
    let det = |c| SeifertMatrix::new(chain(g, params, c)).ok().map(|m| m.alexander_determinant());
    let d0 = det(0)?;
    let slope = det(1)?.sub(&d0);
    let diff = target.sub(&d0);
    let c = if slope.is_zero() {
        if !diff.is_zero() {
            return None;
        }
        Rational::zero()
    } else {
        // diff must equal c * slope for a single integer c
        let k = slope.coeffs().iter().position(|x| !x.is_zero())?;
        let c = diff.coeffs().get(k).cloned().unwrap_or_default() / &slope.coeffs()[k];
        if !c.denom().is_one() || slope.scale(&c) != diff {
            return None;
        }
        c
    };
    let m = SeifertMatrix::new(chain(g, params, to_i64(&c)?)).ok()?;
    Some(m)
}
