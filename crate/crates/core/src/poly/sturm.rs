//! Sturm-sequence real-root isolation with exact rational endpoints.

use num_traits::{One, Signed, Zero};

use super::{IntLaurentPoly, PolyError, QPoly};
use crate::rational::{int, rat, Rational};

/// Open interval `(lo, hi)` holding exactly one distinct real root of its
/// polynomial; the polynomial is nonzero at both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: u32,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Bisect against `p` (the polynomial this interval isolates a root of)
    /// until the width is at most `width`.
    pub fn refine(&self, p: &IntLaurentPoly, width: &Rational) -> IsolatingInterval {
        let sf = p.to_ordinary().square_free_part();
        let (lo, hi) = refine_simple(&sf, self.lo.clone(), self.hi.clone(), width);
        IsolatingInterval { lo, hi, multiplicity: self.multiplicity }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    /// Chain of `p, p', -rem(p, p'), ...`. `p` should be square-free for
    /// counts to mean distinct roots.
    pub fn new(p: &QPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.is_zero() {
            return SturmChain { chain };
        }
        let mut a = p.clone();
        let mut b = p.derivative();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            chain.push(b.clone());
            a = b;
            b = r.scale(&-Rational::one());
        }
        SturmChain { chain }
    }

    fn variations_by<F: Fn(&QPoly) -> i32>(&self, sign: F) -> usize {
        let mut last = 0;
        let mut v = 0;
        for q in &self.chain {
            let s = sign(q);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    pub fn variations(&self, x: &Rational) -> usize {
        self.variations_by(|q| sign_of(&q.eval(x)))
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        let lo = self.variations_by(|q| q.sign_at_infinity(true));
        let hi = self.variations_by(|q| q.sign_at_infinity(false));
        lo.saturating_sub(hi)
    }
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Distinct real roots of `p` in the closed interval `[a, b]`.
pub fn count_roots_in(p: &IntLaurentPoly, a: &Rational, b: &Rational) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if a > b {
        return Ok(0);
    }
    let sf = p.to_ordinary().square_free_part();
    let chain = SturmChain::new(&sf);
    let at_a = usize::from(sf.eval(a).is_zero());
    Ok(chain.count_half_open(a, b) + at_a)
}

/// Cauchy bound: every root has absolute value strictly below the result.
pub(crate) fn root_bound(p: &QPoly) -> Rational {
    let lead = p.lead().expect("nonzero").abs();
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + int(1)
}

/// Isolate all real roots of square-free `p` as sorted open intervals with
/// nonzero endpoint values.
pub(crate) fn isolate_simple(p: &QPoly) -> Vec<(Rational, Rational)> {
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let chain = SturmChain::new(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_half_open(&lo, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort();
    out
}

/// A point strictly inside `(lo, hi)` where `p` does not vanish, near the middle.
fn split_point(p: &QPoly, lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    // midpoint first, then 1/3, 2/3, 1/4, ...
    for k in 2i64.. {
        for j in 1..k {
            let cand = lo + &w * rat(j, k);
            if !p.eval(&cand).is_zero() {
                return cand;
            }
        }
    }
    unreachable!()
}

/// Shrink an isolating interval of square-free `p` (sign change at the ends)
/// to width at most `width`.
pub(crate) fn refine_simple(
    p: &QPoly,
    mut lo: Rational,
    mut hi: Rational,
    width: &Rational,
) -> (Rational, Rational) {
    let mut slo = sign_of(&p.eval(&lo));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) * rat(1, 2);
        let sm = sign_of(&p.eval(&mid));
        if sm == 0 {
            let q = (&hi - &lo) * rat(1, 4);
            return (&mid - &q, &mid + &q);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Isolate every distinct real root of `p` (Laurent input is cleared of
/// negative exponents first). Intervals are sorted, disjoint, and refined to
/// width at most 1/2^16 of the initial search interval.
pub fn sturm_isolate_real_roots(p: &IntLaurentPoly) -> Result<Vec<IsolatingInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let dense = p.to_ordinary();
    let sf = dense.square_free_part();
    let decomposition = dense.square_free_decomposition();
    let width = root_bound(&sf) * int(2) * rat(1, 1 << 16);
    let mut out = Vec::new();
    for (lo, hi) in isolate_simple(&sf) {
        let (lo, hi) = refine_simple(&sf, lo, hi, &width);
        let multiplicity = decomposition
            .iter()
            .find(|(_, f)| SturmChain::new(f).count_half_open(&lo, &hi) == 1)
            .map(|(k, _)| *k)
            .expect("root of the square-free part lies on some factor");
        out.push(IsolatingInterval { lo, hi, multiplicity });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::delta_n;

    fn p(s: &str) -> IntLaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn sqrt_two() {
        let roots = sturm_isolate_real_roots(&p("t^2 - 2")).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].lo >= int(-2) && roots[0].hi <= int(-1));
        assert!(roots[1].lo >= int(1) && roots[1].hi <= int(2));
        assert!(roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn no_real_roots() {
        assert!(sturm_isolate_real_roots(&p("t^2 + 1")).unwrap().is_empty());
        assert_eq!(sturm_isolate_real_roots(&IntLaurentPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn delta_one_has_two_negative_roots() {
        let roots = sturm_isolate_real_roots(&delta_n(1).unwrap()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.hi < int(0)));
    }

    #[test]
    fn multiplicities_and_rational_roots() {
        // (t - 1)^2 (t + 1/2 -> 2t + 1) t^-1
        let q = &(&p("t - 1") * &p("t - 1")) * &p("2*t^0 + t^-1");
        let roots = sturm_isolate_real_roots(&q).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&rat(-1, 2)));
        assert_eq!(roots[0].multiplicity, 1);
        assert!(roots[1].contains(&int(1)));
        assert_eq!(roots[1].multiplicity, 2);
    }

    #[test]
    fn refinement_keeps_the_root() {
        let poly = p("t^2 - 2");
        let r = sturm_isolate_real_roots(&poly).unwrap()[1].clone();
        let tight = r.refine(&poly, &rat(1, 1 << 30));
        assert!(tight.width() <= rat(1, 1 << 30));
        assert!(&tight.lo * &tight.lo < int(2) && &tight.hi * &tight.hi > int(2));
    }

    #[test]
    fn closed_interval_counts() {
        let poly = p("t^3 - t");
        assert_eq!(count_roots_in(&poly, &int(-1), &int(1)).unwrap(), 3);
        assert_eq!(count_roots_in(&poly, &rat(-1, 2), &int(1)).unwrap(), 2);
        assert_eq!(count_roots_in(&poly, &int(2), &int(3)).unwrap(), 0);
    }
}
