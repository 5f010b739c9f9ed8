//! The Upsilon invariant of L-space knots, torus knots in particular, as an
//! exact piecewise-linear function.
//!
//! For a knot whose Alexander polynomial has the form
//! `t^{n₀} - t^{n₁} + t^{n₂} - …`, the exponent gaps describe a staircase of
//! lattice points, and
//! `Υ(t) = max over corners (x, y) of -2((t/2)x + (1 - t/2)y)`.

mod pl;

use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::poly::{IntLaurentPoly, PolyError};
use crate::rational::{int, rat, Rational};

pub use pl::{psi, PLFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UpsilonError {
    #[error("T({p},{q}) needs 2 <= p < q with gcd(p, q) = 1")]
    NotCoprime { p: i64, q: i64 },
    #[error("not of staircase form: {0}")]
    NotStaircaseForm(String),
    #[error("invalid piecewise-linear data: {0}")]
    BadPL(String),
    #[error("{0} is outside the domain")]
    OutOfDomain(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check(p: i64, q: i64) -> Result<(), UpsilonError> {
    if p < 2 || q <= p || p.gcd(&q) != 1 {
        return Err(UpsilonError::NotCoprime { p, q });
    }
    Ok(())
}

/// The numerical semigroup `⟨p, q⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Semigroup {
    p: i64,
    q: i64,
}

impl Semigroup {
    pub fn new(p: i64, q: i64) -> Result<Self, UpsilonError> {
        check(p, q)?;
        Ok(Semigroup { p, q })
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (0..=n / self.q).any(|b| (n - b * self.q) % self.p == 0)
    }

    /// `(p-1)(q-1) - 1`, the largest gap.
    pub fn frobenius(&self) -> i64 {
        (self.p - 1) * (self.q - 1) - 1
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius()).filter(|&n| !self.contains(n)).collect()
    }
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, symmetrically normalized.
pub fn torus_alexander(p: i64, q: i64) -> Result<IntLaurentPoly, UpsilonError> {
    check(p, q)?;
    let binom = |n: i64| &IntLaurentPoly::monomial(1, n) - &IntLaurentPoly::one();
    let num = &binom(p * q) * &binom(1);
    let den = &binom(p) * &binom(q);
    let quotient = num.div_exact(&den).expect("cyclotomic factors divide");
    Ok(quotient.symmetric_normalize()?)
}

/// Corner points of a staircase, `x` increasing from 0 and `y` decreasing to 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    generators: Vec<(i64, i64)>,
}

impl Staircase {
    pub fn new(generators: Vec<(i64, i64)>) -> Result<Self, UpsilonError> {
        let err = |m: &str| Err(UpsilonError::NotStaircaseForm(m.to_string()));
        match (generators.first(), generators.last()) {
            (Some((0, y0)), Some((_, 0))) if *y0 >= 0 => {}
            _ => return err("must start at (0, y) and end at (x, 0)"),
        }
        if generators.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 <= w[1].1) {
            return err("x must increase and y decrease");
        }
        Ok(Staircase { generators })
    }

    pub fn generators(&self) -> &[(i64, i64)] {
        &self.generators
    }
}

/// Reads the staircase off `Δ = t^{n₀} - t^{n₁} + t^{n₂} - …`: consecutive
/// exponent drops alternate between horizontal and vertical steps.
pub fn staircase_from_alexander(delta: &IntLaurentPoly) -> Result<Staircase, UpsilonError> {
    let delta = delta.symmetric_normalize()?;
    let terms: Vec<(i64, i64)> = delta
        .terms()
        .rev()
        .map(|(e, c)| match c.try_into() {
            Ok(c) => Ok((e, c)),
            Err(_) => Err(UpsilonError::NotStaircaseForm(format!("coefficient {c}"))),
        })
        .collect::<Result<_, _>>()?;
    if terms.is_empty() {
        return Err(UpsilonError::NotStaircaseForm("zero polynomial".into()));
    }
    for (k, (e, c)) in terms.iter().enumerate() {
        let want = if k % 2 == 0 { 1 } else { -1 };
        if *c != want {
            return Err(UpsilonError::NotStaircaseForm(format!(
                "coefficient {c} at t^{e}, expected {want}"
            )));
        }
    }
    let (mut x, mut y) = (0, terms[0].0);
    let mut generators = vec![(x, y)];
    for (k, w) in terms.windows(2).enumerate() {
        let drop = w[0].0 - w[1].0;
        if k % 2 == 0 {
            x += drop;
        } else {
            y -= drop;
            generators.push((x, y));
        }
    }
    Staircase::new(generators)
}

/// Upper envelope of the corner lines, with exact breakpoints.
pub fn upsilon_from_staircase(s: &Staircase) -> PLFunction {
    // line through (0, -2y) and (2, -2x): value -2y + t(y - x)
    let lines: Vec<(Rational, Rational)> =
        s.generators.iter().map(|&(x, y)| (int(y - x), int(-2 * y))).collect();
    let mut ts = vec![int(0), int(2)];
    for (i, (a1, b1)) in lines.iter().enumerate() {
        for (a2, b2) in &lines[i + 1..] {
            if a1 != a2 {
                let t = (b2 - b1) / (a1 - a2);
                if t.is_positive() && t < int(2) {
                    ts.push(t);
                }
            }
        }
    }
    ts.sort();
    ts.dedup();
    let points = ts
        .into_iter()
        .map(|t| {
            let v = lines.iter().map(|(a, b)| a * &t + b).max().expect("at least one corner");
            (t, v)
        })
        .collect();
    PLFunction::new(points).expect("envelope vanishes at 0 since the first corner has x = 0")
}

pub fn torus_upsilon(p: i64, q: i64) -> Result<PLFunction, UpsilonError> {
    Ok(upsilon_from_staircase(&staircase_from_alexander(&torus_alexander(p, q)?)?))
}

/// `ε_p = (2/(p-1) - 2/p)/2`, so `2/p < 2/p + ε_p < 2/(p-1)`.
pub fn epsilon_p(p: i64) -> Rational {
    (rat(2, p - 1) - rat(2, p)) * rat(1, 2)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntLaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn torus_polynomials() {
        assert_eq!(torus_alexander(2, 3).unwrap(), p("t - 1 + t^-1"));
        assert_eq!(torus_alexander(3, 4).unwrap(), p("t^3 - t^2 + 1 - t^-2 + t^-3"));
        let d = torus_alexander(3, 7).unwrap();
        assert_eq!(d.breadth(), 12);
        // 1 - t + t^3 - t^4 + t^6 - t^8 + t^9 - t^11 + t^12, recentred
        assert_eq!(d.terms().count(), 9);
        assert_eq!(d.eval_rational(&int(1)).unwrap(), int(1));
        assert!(matches!(torus_alexander(2, 4), Err(UpsilonError::NotCoprime { .. })));
    }

    #[test]
    fn semigroup_oracle() {
        // Δ(t) t^g = 1 + (t - 1) Σ_{gaps} t^k
        for (a, b) in [(2, 3), (3, 4), (3, 7), (4, 5), (5, 8)] {
            let s = Semigroup::new(a, b).unwrap();
            let gaps = s.gaps();
            assert_eq!(gaps.len() as i64, (a - 1) * (b - 1) / 2);
            let mut sum = IntLaurentPoly::zero();
            for k in &gaps {
                sum = &sum + &IntLaurentPoly::monomial(1, *k);
            }
            let lhs = &IntLaurentPoly::one() + &(&sum * &p("t - 1"));
            assert_eq!(lhs.symmetric_normalize().unwrap(), torus_alexander(a, b).unwrap());
        }
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase_from_alexander(&p("t - 1 + t^-1")).unwrap().generators(), &[(0, 1), (1, 0)]);
        assert_eq!(
            staircase_from_alexander(&torus_alexander(3, 4).unwrap()).unwrap().generators(),
            &[(0, 3), (1, 1), (3, 0)]
        );
        assert!(matches!(
            staircase_from_alexander(&crate::poly::delta_n(1).unwrap()),
            Err(UpsilonError::NotStaircaseForm(_))
        ));
    }

    #[test]
    fn envelopes() {
        assert_eq!(torus_upsilon(2, 3).unwrap().to_string(), "0:0, 1:-1, 2:0");
        let u = torus_upsilon(3, 4).unwrap();
        assert_eq!(u.to_string(), "0:0, 2/3:-2, 4/3:-2, 2:0");
        assert_eq!(u.singularities(), vec![rat(2, 3), rat(4, 3)]);
        for k in 2..9 {
            let s = torus_upsilon(k, k + 1).unwrap().singularities();
            let expected = [rat(2, k), rat(4, k)];
            let n = s.len().min(2);
            assert_eq!(&s[..n], &expected[..n]);
        }
    }

    #[test]
    fn epsilon() {
        assert_eq!(epsilon_p(3), rat(1, 6));
        assert!(rat(2, 5) + epsilon_p(5) < rat(2, 4));
    }
}
