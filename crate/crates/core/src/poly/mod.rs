//! Integer Laurent polynomials and the exact machinery built on them:
//! symmetric normalization, real-root isolation, small-degree irreducibility,
//! and the `x = t + 1/t` reduction that locates unit-circle roots.

mod chebyshev;
pub mod dense;
mod irreducible;
mod parse;
pub(crate) mod sturm;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

pub use chebyshev::{chebyshev_expand, chebyshev_reduce, count_unit_circle_root_pairs};
pub use dense::QPoly;
pub use irreducible::irreducible_over_q;
pub use parse::ParsePolyError;
pub use sturm::{count_roots_in, sturm_isolate_real_roots, IsolatingInterval, SturmChain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is not symmetric up to a unit ±t^k")]
    NotSymmetric,
    #[error("evaluation at 0 of a polynomial with negative exponents")]
    ZeroDenominator,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {0} is outside the supported range (at most 4)")]
    UnsupportedDegree(usize),
    #[error("polynomial vanishes at t = {0}")]
    RootAtPlusMinusOne(i32),
    #[error("index n = {0} must be at least 1")]
    InvalidIndex(i64),
}

/// Integer-coefficient Laurent polynomial in `t`. Stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntLaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl IntLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Coefficients `c[0] t^low + c[1] t^(low+1) + ...`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(low + k as i64, BigInt::from(*c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; 0 for the zero polynomial.
    pub fn breadth(&self) -> usize {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => (b - a) as usize,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        IntLaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(t) ↦ p(1/t)`.
    pub fn mirror(&self) -> Self {
        IntLaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Result<Rational, PolyError> {
        if x.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(PolyError::ZeroDenominator);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += Rational::from_integer(c.clone()) * pow_rational(x, *e);
        }
        Ok(acc)
    }

    /// The representative `q` of `±t^k · self` with `q = mirror(q)` and a positive
    /// leading coefficient.
    pub fn symmetric_normalize(&self) -> Result<Self, PolyError> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Ok(Self::zero());
        };
        if (hi - lo) % 2 != 0 {
            return Err(PolyError::NotSymmetric);
        }
        let mut q = self.shift(-(lo + hi) / 2);
        if q.leading_coeff().is_some_and(|c| c.is_negative()) {
            q = -q;
        }
        if q.is_symmetric() {
            Ok(q)
        } else {
            Err(PolyError::NotSymmetric)
        }
    }

    /// Ordinary polynomial `t^(-min_exp) · self` as a dense rational polynomial.
    pub fn to_dense(&self) -> QPoly {
        let Some(lo) = self.min_exp() else {
            return QPoly::zero();
        };
        let mut v = vec![Rational::zero(); self.breadth() + 1];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = Rational::from_integer(c.clone());
        }
        QPoly::new(v)
    }

    /// Ordinary polynomial `t^k · self` with `k = max(0, -min_exp)`: negative
    /// exponents are cleared, but a factor of `t` is kept (so `0` stays a root).
    pub fn to_ordinary(&self) -> QPoly {
        match self.min_exp() {
            Some(lo) if lo > 0 => self.to_dense().mul(&QPoly::from_ints(
                std::iter::repeat_n(0, lo as usize).chain(std::iter::once(1)),
            )),
            _ => self.to_dense(),
        }
    }

    /// Inverse of [`to_dense`](Self::to_dense) for integer coefficients, placing
    /// the constant term at exponent `low`. Returns `None` on a non-integer coefficient.
    pub fn from_dense(p: &QPoly, low: i64) -> Option<Self> {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            out.add_term(low + k as i64, c.to_integer());
        }
        Some(out)
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self` in ℤ[t, t⁻¹].
    pub fn div_exact(&self, d: &IntLaurentPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = self.to_dense().div_rem(&d.to_dense());
        if !r.is_zero() {
            return None;
        }
        Self::from_dense(&q, self.min_exp().unwrap() - d.min_exp().unwrap())
    }
}

/// `Δ_n(t) = t^4 + n t^3 - (2n+1) t^2 + n t + 1`, as written (not recentred).
pub fn delta_n(n: i64) -> Result<IntLaurentPoly, PolyError> {
    if n < 1 {
        return Err(PolyError::InvalidIndex(n));
    }
    Ok(IntLaurentPoly::from_coeffs(0, &[1, n, -(2 * n + 1), n, 1]))
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl Add for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = IntLaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        IntLaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: IntLaurentPoly) -> IntLaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        -&self
    }
}

/// Text form `c*t^e` joined by `+`/`-`, highest exponent first.
impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntLaurentPoly({self})")
    }
}
