//! Levine–Tristram signatures at rational points of the unit circle and
//! signature jumps at roots of the Alexander polynomial.
//!
//! Points of the circle other than `1` are parametrized by `s = tan(θ/2)`:
//! `ω(s) = ((1 - s²) + 2is) / (1 + s²)`, so rational `s` gives a point with
//! rational coordinates, `s > 0` is the upper arc, and the argument increases
//! with `s`. Under `x = ω + 1/ω = 2cos θ` a circle root of `Δ` becomes a root
//! of its reduced polynomial `q(x)`, and `x(s) = 2(1 - s²)/(1 + s²)`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::hermitian::{hermitian_signature, GaussRational};
use super::{alexander, SeifertError, SeifertMatrix};
use crate::poly::sturm::{isolate_simple, refine_simple};
use crate::poly::{
    chebyshev_reduce, sturm_isolate_real_roots, IntLaurentPoly, IsolatingInterval, PolyError, QPoly,
    SturmChain,
};
use crate::rational::{int, rat, Rational};

/// A point of the unit circle with rational coordinates, excluding `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CirclePoint {
    /// `ω(s)` for `s ≠ 0`.
    Param(Rational),
    MinusOne,
}

impl CirclePoint {
    pub fn param(s: Rational) -> Result<Self, SeifertError> {
        if s.is_zero() {
            return Err(SeifertError::BadLambda("s = 0 is the point 1".into()));
        }
        Ok(CirclePoint::Param(s))
    }

    pub fn omega(&self) -> GaussRational {
        match self {
            CirclePoint::MinusOne => GaussRational::real(int(-1)),
            CirclePoint::Param(s) => {
                let d = int(1) + s * s;
                GaussRational::new((int(1) - s * s) / &d, (int(2) * s) / &d)
            }
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            CirclePoint::MinusOne => CirclePoint::MinusOne,
            CirclePoint::Param(s) => CirclePoint::Param(-s),
        }
    }

    /// `x = 2 Re ω`.
    pub fn reduced_coordinate(&self) -> Rational {
        int(2) * self.omega().re
    }
}

impl PartialOrd for CirclePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by argument in `(-π, π]`.
impl Ord for CirclePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (CirclePoint::MinusOne, CirclePoint::MinusOne) => Ordering::Equal,
            (CirclePoint::MinusOne, _) => Ordering::Greater,
            (_, CirclePoint::MinusOne) => Ordering::Less,
            (CirclePoint::Param(a), CirclePoint::Param(b)) => a.cmp(b),
        }
    }
}

/// `σ_V(ω)`: signature of `(1 - ω)V + (1 - ω̄)Vᵀ`.
pub fn signature_at(v: &SeifertMatrix, w: &CirclePoint) -> Result<i64, SeifertError> {
    let om = w.omega();
    let one = GaussRational::real(int(1));
    let a = &one - &om;
    let b = a.conj();
    let n = v.size();
    let m: Vec<Vec<GaussRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let vij = GaussRational::real(int(v.get(i, j)));
                    let vji = GaussRational::real(int(v.get(j, i)));
                    &(&a * &vij) + &(&b * &vji)
                })
                .collect()
        })
        .collect();
    hermitian_signature(m).ok_or(SeifertError::AtAlexanderRoot)
}

/// A root `η` of a symmetric polynomial on the open upper unit semicircle,
/// located through its reduced coordinate `x = 2cos θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRoot {
    /// Symmetric normalization of the defining polynomial.
    pub poly: IntLaurentPoly,
    /// Isolates `x` among the roots of `chebyshev_reduce(poly)`; lies in `[-2, 2]`.
    pub interval: IsolatingInterval,
    pub multiplicity: u32,
}

impl CircleRoot {
    pub fn reduced(&self) -> IntLaurentPoly {
        chebyshev_reduce(&self.poly).expect("normalized on construction")
    }

    /// Approximate angle `θ ∈ (0, π)`, for display only.
    pub fn approx_angle(&self) -> f64 {
        let mid = (&self.interval.lo + &self.interval.hi) * rat(1, 2);
        (ratio_f64(&mid) / 2.0).clamp(-1.0, 1.0).acos()
    }
}

pub(crate) fn ratio_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// All roots of `p` on the open upper semicircle, in order of increasing argument.
pub fn circle_roots(p: &IntLaurentPoly) -> Result<Vec<CircleRoot>, SeifertError> {
    let poly = p.symmetric_normalize()?;
    if poly.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    for s in [1, -1] {
        if poly.eval_rational(&int(s))?.is_zero() {
            return Err(PolyError::RootAtPlusMinusOne(s as i32).into());
        }
    }
    let q = chebyshev_reduce(&poly)?;
    if q.max_exp() == Some(0) {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for mut iv in sturm_isolate_real_roots(&q)? {
        loop {
            if iv.lo >= int(-2) && iv.hi <= int(2) {
                out.push(CircleRoot { poly: poly.clone(), multiplicity: iv.multiplicity, interval: iv });
                break;
            }
            if iv.hi <= int(-2) || iv.lo >= int(2) {
                break;
            }
            let w = iv.width() * rat(1, 2);
            iv = iv.refine(&q, &w);
        }
    }
    out.reverse();
    Ok(out)
}

/// `(1 + s²)^m q(2(1 - s²)/(1 + s²))`, `m = deg q`. Positive roots correspond
/// to roots of `q` in `(-2, 2)`.
pub fn s_polynomial(q: &QPoly) -> QPoly {
    let Some(m) = q.degree() else {
        return QPoly::zero();
    };
    let num = QPoly::from_ints([2, 0, -2]);
    let den = QPoly::from_ints([1, 0, 1]);
    let mut out = QPoly::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = num.pow(k as u32).mul(&den.pow((m - k) as u32)).scale(c);
        out = out.add(&term);
    }
    out
}

fn x_of_s(s: &Rational) -> Rational {
    int(2) * (int(1) - s * s) / (int(1) + s * s)
}

const MAX_REFINE: usize = 400;

/// Jump `σ(after) - σ(before)` of the signature function of `v` across `η`,
/// "after" being the side of larger argument. Zero when `η` is not a root of
/// the Alexander polynomial of `v`.
pub fn jump_at(v: &SeifertMatrix, eta: &CircleRoot) -> Result<i64, SeifertError> {
    let dv = alexander(v);
    let qv = chebyshev_reduce(&dv)?.to_ordinary();
    let qe = eta.reduced().to_ordinary();
    let g = qv.gcd(&qe);
    if g.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let g_chain = SturmChain::new(&g.square_free_part());
    if g_chain.count_half_open(&eta.interval.lo, &eta.interval.hi) == 0 {
        return Ok(0);
    }
    let sv = s_polynomial(&qv).square_free_part();
    let sg = s_polynomial(&g).square_free_part();
    let sg_chain = SturmChain::new(&sg);
    let mut matched: Option<(Rational, Rational)> = None;
    for (lo, hi) in isolate_simple(&sv) {
        let Some((lo, hi)) = positive_part(&sv, lo, hi) else {
            continue;
        };
        if sg_chain.count_half_open(&lo, &hi) == 0 {
            continue;
        }
        if let Some(iv) = locate_in_x(&sv, lo, hi, &eta.interval)? {
            if matched.is_some() {
                return Err(SeifertError::NotIsolated);
            }
            matched = Some(iv);
        }
    }
    let (lo, hi) = matched.ok_or(SeifertError::NotIsolated)?;
    let before = signature_at(v, &CirclePoint::Param(lo))?;
    let after = signature_at(v, &CirclePoint::Param(hi))?;
    Ok(after - before)
}

/// Refine a root interval of `s` until it lies strictly right of 0 (`None`
/// if the root is negative).
fn positive_part(sv: &QPoly, mut lo: Rational, mut hi: Rational) -> Option<(Rational, Rational)> {
    for _ in 0..MAX_REFINE {
        if lo.is_positive() {
            return Some((lo, hi));
        }
        if !hi.is_positive() {
            return None;
        }
        let w = (&hi - &lo) * rat(1, 2);
        (lo, hi) = refine_simple(sv, lo, hi, &w);
    }
    None
}

/// Decide whether the root in `(lo, hi)` maps into `target` under `x(s)`,
/// refining until the image is inside or disjoint.
fn locate_in_x(
    sv: &QPoly,
    mut lo: Rational,
    mut hi: Rational,
    target: &IsolatingInterval,
) -> Result<Option<(Rational, Rational)>, SeifertError> {
    for _ in 0..MAX_REFINE {
        let (x_hi, x_lo) = (x_of_s(&lo), x_of_s(&hi));
        if target.lo <= x_lo && x_hi <= target.hi {
            return Ok(Some((lo, hi)));
        }
        if x_hi <= target.lo || x_lo >= target.hi {
            return Ok(None);
        }
        let w = (&hi - &lo) * rat(1, 2);
        (lo, hi) = refine_simple(sv, lo, hi, &w);
    }
    Err(SeifertError::NotIsolated)
}

/// Root-free arcs of the open upper semicircle with the constant signature on
/// each, ordered by argument. Returns `(roots, values)` with
/// `values.len() == roots.len() + 1`.
pub fn signature_profile(v: &SeifertMatrix) -> Result<(Vec<CircleRoot>, Vec<i64>), SeifertError> {
    let dv = alexander(v);
    let roots = circle_roots(&dv)?;
    let qv = chebyshev_reduce(&dv)?.to_ordinary();
    let sv = s_polynomial(&qv).square_free_part();
    let mut cuts: Vec<(Rational, Rational)> =
        isolate_simple(&sv).into_iter().filter_map(|(lo, hi)| positive_part(&sv, lo, hi)).collect();
    cuts.sort();
    let mut samples = Vec::with_capacity(cuts.len() + 1);
    let first = cuts.first().map(|(lo, _)| lo * rat(1, 2)).unwrap_or_else(|| int(1));
    samples.push(CirclePoint::Param(first));
    for (k, (_, hi)) in cuts.iter().enumerate() {
        let s = match cuts.get(k + 1) {
            Some((next_lo, _)) if next_lo > hi => (hi + next_lo) * rat(1, 2),
            Some(_) => hi.clone(),
            None => hi + int(1),
        };
        samples.push(CirclePoint::Param(s));
    }
    let values = samples.iter().map(|w| signature_at(v, w)).collect::<Result<Vec<_>, _>>()?;
    debug_assert_eq!(values.len(), roots.len() + 1);
    Ok((roots, values))
}

impl CircleRoot {
    /// Unit circle root of `Δ_n` in the upper half plane.
    pub fn omega_n(n: i64) -> Result<CircleRoot, SeifertError> {
        let roots = circle_roots(&crate::poly::delta_n(n)?)?;
        match roots.len() {
            1 => Ok(roots.into_iter().next().unwrap()),
            _ => Err(SeifertError::NotIsolated),
        }
    }
}
