//! The substitution `x = t + 1/t` for symmetric Laurent polynomials.
//!
//! A root `t = e^{iθ}` on the unit circle maps to `x = 2 cos θ ∈ (-2, 2)`;
//! real roots off the circle map outside `[-2, 2]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{count_roots_in, IntLaurentPoly, PolyError};
use crate::rational::int;

/// `q` with `p(t) = q(t + 1/t)` where `p` is the symmetric normalization of the input.
/// The result is an ordinary polynomial in `x` (no negative exponents).
pub fn chebyshev_reduce(p: &IntLaurentPoly) -> Result<IntLaurentPoly, PolyError> {
    let mut rest = p.symmetric_normalize()?;
    let mut q = IntLaurentPoly::zero();
    while let Some(g) = rest.max_exp() {
        let c = rest.coeff(g);
        if g == 0 {
            q = &q + &IntLaurentPoly::monomial(c, 0);
            break;
        }
        // subtract c (t + 1/t)^g
        rest = &rest - &(&IntLaurentPoly::monomial(c.clone(), 0) * &x_power(g));
        q = &q + &IntLaurentPoly::monomial(c, g);
        debug_assert!(rest.is_symmetric());
    }
    Ok(q)
}

/// `(t + 1/t)^k`
fn x_power(k: i64) -> IntLaurentPoly {
    let x = IntLaurentPoly::from_coeffs(-1, &[1, 0, 1]);
    let mut acc = IntLaurentPoly::one();
    for _ in 0..k {
        acc = &acc * &x;
    }
    acc
}

/// `q(t + 1/t)` as a Laurent polynomial in `t`.
pub fn chebyshev_expand(q: &IntLaurentPoly) -> IntLaurentPoly {
    let mut out = IntLaurentPoly::zero();
    for (k, c) in q.terms() {
        assert!(k >= 0, "reduced polynomial has a negative exponent");
        out = &out + &(&IntLaurentPoly::monomial(BigInt::clone(c), 0) * &x_power(k));
    }
    out
}

/// Number of complex-conjugate root pairs of `p` on the unit circle, i.e. the
/// number of distinct roots of the reduced polynomial in `(-2, 2)`.
pub fn count_unit_circle_root_pairs(p: &IntLaurentPoly) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    for s in [1, -1] {
        if p.eval_rational(&int(s))?.is_zero() {
            return Err(PolyError::RootAtPlusMinusOne(s as i32));
        }
    }
    let q = chebyshev_reduce(p)?;
    if q.max_exp() == Some(0) {
        return Ok(0);
    }
    // q(±2) = p(±1) ≠ 0, so the closed count equals the open one
    count_roots_in(&q, &int(-2), &int(2))
}
