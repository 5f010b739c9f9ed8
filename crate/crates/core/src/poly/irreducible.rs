//! Irreducibility over ℚ for degree at most 4.
//!
//! Gauss's lemma reduces the question to ℤ[t]: a primitive integer polynomial
//! of degree ≤ 4 is reducible iff it has a rational root or splits into two
//! integer quadratics. The quadratic search is finite because `p(1)` and
//! `p(-1)` are nonzero once linear factors are excluded, and each factor's
//! value at 1 must divide `p(1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntLaurentPoly, PolyError};
use crate::rational::Rational;

pub fn irreducible_over_q(p: &IntLaurentPoly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let deg = p.breadth();
    if deg > 4 {
        return Err(PolyError::UnsupportedDegree(deg));
    }
    let c = p.to_dense().primitive_integer();
    Ok(match deg {
        0 => false,
        1 => true,
        2 | 3 => !has_rational_root(&c),
        _ => !has_rational_root(&c) && !has_quadratic_factor(&c),
    })
}

/// Positive divisors of `n != 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval_int(c: &[BigInt], x: &Rational) -> Rational {
    c.iter()
        .rev()
        .fold(Rational::zero(), |acc, k| acc * x + Rational::from_integer(k.clone()))
}

/// Rational root test on ascending integer coefficients with `c[0] != 0`.
fn has_rational_root(c: &[BigInt]) -> bool {
    let lead = c.last().unwrap();
    for num in divisors(&c[0]) {
        for den in divisors(lead) {
            if !num.gcd(&den).is_one() {
                continue;
            }
            for s in [BigInt::one(), -BigInt::one()] {
                let x = Rational::new(&num * &s, den.clone());
                if eval_int(c, &x).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    divisors(n).into_iter().flat_map(|d| [d.clone(), -d]).collect()
}

/// Search `(a t² + b t + c)(d t² + e t + f)` matching the quartic `k`.
fn has_quadratic_factor(k: &[BigInt]) -> bool {
    let (k0, k1, k2, k3, k4) = (&k[0], &k[1], &k[2], &k[3], &k[4]);
    let p1: BigInt = k.iter().sum();
    for a in divisors(k4) {
        let d = k4 / &a;
        for c in signed_divisors(k0) {
            let f = k0 / &c;
            // first factor at t = 1 is a + b + c and divides p(1)
            for v in signed_divisors(&p1) {
                let b = &v - &a - &c;
                // t^3: a e + b d = k3
                let num = k3 - &b * &d;
                if !(&num % &a).is_zero() {
                    continue;
                }
                let e = num / &a;
                let t2 = &a * &f + &b * &e + &c * &d;
                let t1 = &b * &f + &c * &e;
                if &t2 == k2 && &t1 == k1 {
                    return true;
                }
            }
        }
    }
    false
}
