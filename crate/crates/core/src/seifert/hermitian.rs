//! Exact signatures of Hermitian matrices over ℚ(i) by congruence.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// `re + i·im` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        let n = self.norm();
        GaussRational { re: &self.re / &n, im: -&self.im / &n }
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

/// Signature of a Hermitian matrix, or `None` if it is singular.
///
/// Nonzero diagonal pivots are eliminated one at a time; when the remaining
/// diagonal vanishes, an off-diagonal entry `z` is eliminated together with its
/// `2×2` block `[[0, z], [z̄, 0]]`, which has one positive and one negative
/// eigenvalue.
pub fn hermitian_signature(mut m: Vec<Vec<GaussRational>>) -> Option<i64> {
    let mut sig = 0i64;
    while !m.is_empty() {
        let n = m.len();
        if let Some(p) = (0..n).find(|&i| !m[i][i].re.is_zero()) {
            let d = m[p][p].re.clone();
            sig += if d.is_positive() { 1 } else { -1 };
            let dinv = GaussRational::real(d.recip());
            let mut next = Vec::with_capacity(n - 1);
            for r in (0..n).filter(|&r| r != p) {
                let f = &m[r][p] * &dinv;
                let row = (0..n)
                    .filter(|&c| c != p)
                    .map(|c| &m[r][c] - &(&f * &m[p][c]))
                    .collect();
                next.push(row);
            }
            m = next;
            continue;
        }
        let (i, j) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero())?;
        // Schur complement of [[0, z], [z̄, 0]], whose inverse is [[0, 1/z̄], [1/z, 0]]
        let z = m[i][j].clone();
        let zinv = z.recip();
        let zbinv = z.conj().recip();
        let keep: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        let next = keep
            .iter()
            .map(|&r| {
                keep.iter()
                    .map(|&c| {
                        let a = &(&m[r][i] * &zbinv) * &m[j][c];
                        let b = &(&m[r][j] * &zinv) * &m[i][c];
                        &(&m[r][c] - &a) - &b
                    })
                    .collect()
            })
            .collect();
        m = next;
    }
    Some(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn g(re: i64, im: i64) -> GaussRational {
        GaussRational::new(int(re), int(im))
    }

    #[test]
    fn small_cases() {
        assert_eq!(hermitian_signature(vec![]), Some(0));
        assert_eq!(hermitian_signature(vec![vec![g(-2, 0), g(1, 0)], vec![g(1, 0), g(-2, 0)]]), Some(-2));
        assert_eq!(hermitian_signature(vec![vec![g(0, 0), g(0, 1)], vec![g(0, -1), g(0, 0)]]), Some(0));
        assert_eq!(hermitian_signature(vec![vec![g(1, 0), g(1, 0)], vec![g(1, 0), g(1, 0)]]), None);
        // trefoil at ω = i
        assert_eq!(
            hermitian_signature(vec![vec![g(-2, 0), g(1, -1)], vec![g(1, 1), g(-2, 0)]]),
            Some(-2)
        );
    }

    fn congruent(d: &[Vec<GaussRational>], p: &[Vec<GaussRational>]) -> Vec<Vec<GaussRational>> {
        // Pᴴ D P
        let n = d.len();
        let mut dp = vec![vec![g(0, 0); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    dp[i][j] = &dp[i][j] + &(&d[i][k] * &p[k][j]);
                }
            }
        }
        let mut out = vec![vec![g(0, 0); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[i][j] = &out[i][j] + &(&p[k][i].conj() * &dp[k][j]);
                }
            }
        }
        out
    }

    #[test]
    fn hyperbolic_block_followed_by_definite_part() {
        let z = g(2, 1);
        let d = vec![
            vec![g(0, 0), z.clone(), g(0, 0)],
            vec![z.conj(), g(0, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(3, 0)],
        ];
        let p = vec![
            vec![g(1, 0), g(0, 0), g(1, 1)],
            vec![g(0, 0), g(1, 0), g(2, 0)],
            vec![g(0, 0), g(0, 0), g(1, 0)],
        ];
        let m = congruent(&d, &p);
        assert!(m[0][0].is_zero() && m[1][1].is_zero());
        assert_eq!(hermitian_signature(m), Some(1));
        let mut neg = d.clone();
        neg[2][2] = g(-5, 0);
        assert_eq!(hermitian_signature(congruent(&neg, &p)), Some(-1));
    }

    #[test]
    fn zero_diagonal_goes_through_hyperbolic_blocks() {
        // eigenvalues ≈ -2.78, 0.29, 2.49
        let m = vec![
            vec![g(0, 0), g(2, 1), g(1, 0)],
            vec![g(2, -1), g(0, 0), g(0, 1)],
            vec![g(1, 0), g(0, -1), g(0, 0)],
        ];
        assert_eq!(hermitian_signature(m), Some(1));
        // eigenvalues ≈ -3.38, -1, 1.21, 3.17
        let m = vec![
            vec![g(0, 0), g(2, 1), g(1, 0), g(0, 0)],
            vec![g(2, -1), g(0, 0), g(0, 1), g(1, 0)],
            vec![g(1, 0), g(0, -1), g(0, 0), g(2, 0)],
            vec![g(0, 0), g(1, 0), g(2, 0), g(0, 0)],
        ];
        assert_eq!(hermitian_signature(m), Some(0));
    }
}
