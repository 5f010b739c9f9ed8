//! Seifert-matrix algebra: Alexander polynomials, Levine–Tristram signatures
//! and their jumps, Murasugi's alternating obstruction, realization of
//! symmetric polynomials, and torus-knot signatures from lattice counts.

mod circle;
mod hermitian;
mod murasugi;
mod realize;
mod torus;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{IntLaurentPoly, PolyError, QPoly};
use crate::rational::{int, Rational};

pub use circle::{
    circle_roots, jump_at, s_polynomial, signature_at, signature_profile, CirclePoint, CircleRoot,
};
pub use hermitian::{hermitian_signature, GaussRational};
pub use murasugi::{murasugi_alternating_test, MurasugiVerdict, MurasugiViolation};
pub use realize::realize_polynomial;
pub use torus::{torus_jump_list, torus_signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square of even size, got {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("det(V - V^T) = {0}, expected 1")]
    BadPairing(BigInt),
    #[error("circle point is a root of the Alexander polynomial")]
    AtAlexanderRoot,
    #[error("could not isolate the circle root from the other roots")]
    NotIsolated,
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("torus knot parameters ({p}, {q}) need 2 <= p < q and gcd(p, q) = 1")]
    BadTorus { p: i64, q: i64 },
    #[error("parameter {0} is outside the open interval (0, 1)")]
    BadLambda(String),
    #[error("matrix file: {0}")]
    Format(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Integer Seifert matrix `V` of a genus-`g` surface, `2g × 2g`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    pub name: Option<String>,
}

impl SeifertMatrix {
    /// Validates shape and `det(V - Vᵀ) = 1`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        let n = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(SeifertError::BadShape { rows: n, cols: row.len() });
        }
        if !n.is_multiple_of(2) {
            return Err(SeifertError::BadShape { rows: n, cols: n });
        }
        let m = SeifertMatrix { entries, name: None };
        let d = m.pairing_determinant();
        if !d.is_one() {
            return Err(SeifertError::BadPairing(d));
        }
        Ok(m)
    }

    pub fn unknot() -> Self {
        SeifertMatrix { entries: vec![], name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// `(q-1) × (q-1)` banded matrix (diagonal -1, superdiagonal 1) of the
    /// alternating torus knot `T(2, q)`, `q` odd.
    pub fn torus_two(q: usize) -> Result<Self, SeifertError> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(SeifertError::BadTorus { p: 2, q: q as i64 });
        }
        let n = q - 1;
        let mut e = vec![vec![0; n]; n];
        for i in 0..n {
            e[i][i] = -1;
            if i + 1 < n {
                e[i][i + 1] = 1;
            }
        }
        Ok(SeifertMatrix::new(e)?.with_name(format!("T(2,{q})")))
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        SeifertMatrix {
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect(),
            name: None,
        }
    }

    /// `-Vᵀ`, a Seifert matrix of the mirror image with reversed orientation.
    pub fn concordance_inverse(&self) -> Self {
        let t = self.transpose();
        SeifertMatrix {
            entries: t.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
            name: self.name.as_ref().map(|n| format!("-{n}")),
        }
    }

    /// Block sum, the Seifert matrix of the connected sum.
    pub fn direct_sum(&self, other: &SeifertMatrix) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut e = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            e[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            e[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        SeifertMatrix { entries: e, name: None }
    }

    /// `det(V - Vᵀ)`
    pub fn pairing_determinant(&self) -> BigInt {
        let n = self.size();
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entries[i][j] - self.entries[j][i])).collect())
            .collect();
        det_bareiss(m)
    }

    /// `det(V - t Vᵀ)` as an ordinary polynomial, by evaluation at
    /// `t = 0, 1, ..., 2g` and exact interpolation.
    pub fn alexander_determinant(&self) -> QPoly {
        let n = self.size();
        if n == 0 {
            return QPoly::constant(int(1));
        }
        let points: Vec<(Rational, Rational)> = (0..=n as i64)
            .map(|t| {
                let m: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| BigInt::from(self.entries[i][j] - t * self.entries[j][i]))
                            .collect()
                    })
                    .collect();
                (int(t), Rational::from_integer(det_bareiss(m)))
            })
            .collect();
        interpolate(&points)
    }
}

/// Alexander polynomial `det(V - t Vᵀ)`, symmetrically normalized.
pub fn alexander(v: &SeifertMatrix) -> IntLaurentPoly {
    let d = IntLaurentPoly::from_dense(&v.alexander_determinant(), 0)
        .expect("integer matrix has an integer determinant polynomial");
    d.symmetric_normalize()
        .expect("a Seifert matrix with unimodular pairing has a symmetric Alexander polynomial")
}

/// Fraction-free Gaussian elimination.
pub(crate) fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Newton interpolation through distinct abscissae.
fn interpolate(points: &[(Rational, Rational)]) -> QPoly {
    let n = points.len();
    let mut coef: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&points[i].0 - &points[i - j].0);
        }
    }
    let mut poly = QPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        poly = poly.mul(&QPoly::linear_root(points[i].0.clone())).add(&QPoly::constant(coef[i].clone()));
    }
    poly
}

/// Text form: first line `2g`, then `2g` rows of integers.
impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size())?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({:?}, {:?})", self.name, self.entries)
    }
}

impl FromStr for SeifertMatrix {
    type Err = SeifertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let size: usize = lines
            .next()
            .ok_or_else(|| SeifertError::Format("empty file".into()))?
            .parse()
            .map_err(|_| SeifertError::Format("first line must be the matrix size".into()))?;
        let mut rows = Vec::with_capacity(size);
        for (i, line) in lines.enumerate() {
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|x| x.parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| SeifertError::Format(format!("row {}: expected integers", i + 1)))?;
            if row.len() != size {
                return Err(SeifertError::Format(format!(
                    "row {} has {} entries, expected {size}",
                    i + 1,
                    row.len()
                )));
            }
            rows.push(row);
        }
        if rows.len() != size {
            return Err(SeifertError::Format(format!("expected {size} rows, found {}", rows.len())));
        }
        SeifertMatrix::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander(&SeifertMatrix::unknot()), IntLaurentPoly::one());
        assert_eq!(alexander(&trefoil()), "t - 1 + t^-1".parse().unwrap());
        let t5 = SeifertMatrix::torus_two(5).unwrap();
        assert_eq!(alexander(&t5), "t^2 - t + 1 - t^-1 + t^-2".parse().unwrap());
    }

    #[test]
    fn pairing_is_checked() {
        assert_eq!(
            SeifertMatrix::new(vec![vec![1, 2], vec![0, 1]]).unwrap_err(),
            SeifertError::BadPairing(BigInt::from(4))
        );
        assert!(matches!(
            SeifertMatrix::new(vec![vec![1, 2, 3]; 3]),
            Err(SeifertError::BadShape { .. })
        ));
    }

    #[test]
    fn file_roundtrip() {
        let v = SeifertMatrix::torus_two(7).unwrap();
        let back: SeifertMatrix = v.to_string().parse().unwrap();
        assert_eq!(back.entries(), v.entries());
        let err = "2\n1 2\n0 1\n".parse::<SeifertMatrix>().unwrap_err();
        assert_eq!(err.to_string(), "det(V - V^T) = 4, expected 1");
        assert!(matches!("2\n1 x\n0 1\n".parse::<SeifertMatrix>(), Err(SeifertError::Format(_))));
        assert!(matches!("2\n-1 1\n".parse::<SeifertMatrix>(), Err(SeifertError::Format(_))));
    }

    #[test]
    fn determinants() {
        let m = |v: Vec<Vec<i64>>| {
            det_bareiss(v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
        };
        assert_eq!(m(vec![vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(m(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]), BigInt::from(6));
        assert_eq!(m(vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, 5, 6]]), BigInt::from(16));
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]), BigInt::from(0));
    }

    #[test]
    fn stabilization_preserves_alexander() {
        // V ↦ [[V, ξ, 0], [0, 0, 1], [0, 0, 0]] with an arbitrary column ξ
        let v = SeifertMatrix::torus_two(5).unwrap();
        let n = v.size();
        let mut e = vec![vec![0; n + 2]; n + 2];
        for i in 0..n {
            e[i][..n].copy_from_slice(&v.entries()[i]);
            e[i][n] = (i as i64 * 3) % 5 - 2;
        }
        e[n][n + 1] = 1;
        let big = SeifertMatrix::new(e).unwrap();
        assert_eq!(alexander(&big), alexander(&v));
    }
}
