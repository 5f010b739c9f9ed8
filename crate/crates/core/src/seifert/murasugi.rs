//! The coefficient test for alternating knots: the Alexander polynomial of an
//! alternating knot has nonzero coefficients of strictly alternating sign.

use num_traits::{Signed, Zero};

use crate::poly::sturm::SturmChain;
use crate::poly::{IntLaurentPoly, QPoly};
use crate::rational::int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MurasugiViolation {
    /// An interior coefficient vanishes.
    ZeroCoefficient { exponent: i64 },
    /// The coefficient at `exponent` has the same sign as the one before it.
    SignRepeat { exponent: i64 },
    /// `Δ` has a root on the negative real axis.
    NegativeRealRoot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MurasugiVerdict {
    Compatible,
    Incompatible(MurasugiViolation),
}

impl MurasugiVerdict {
    pub fn is_compatible(&self) -> bool {
        matches!(self, MurasugiVerdict::Compatible)
    }
}

/// Scans coefficients in ascending exponent order and reports the first
/// violation.
pub fn murasugi_alternating_test(delta: &IntLaurentPoly) -> MurasugiVerdict {
    let (Some(lo), Some(hi)) = (delta.min_exp(), delta.max_exp()) else {
        return MurasugiVerdict::Incompatible(MurasugiViolation::ZeroCoefficient { exponent: 0 });
    };
    let mut prev_positive = delta.coeff(lo).is_positive();
    for e in lo + 1..=hi {
        let c = delta.coeff(e);
        if c.is_zero() {
            return MurasugiVerdict::Incompatible(MurasugiViolation::ZeroCoefficient { exponent: e });
        }
        if c.is_positive() == prev_positive {
            return MurasugiVerdict::Incompatible(MurasugiViolation::SignRepeat { exponent: e });
        }
        prev_positive = c.is_positive();
    }
    // Alternating signs make every term of Δ(-x) share one sign, so this
    // cannot fire after the scan; it is kept as an independent check.
    if negative_real_roots(delta) > 0 {
        return MurasugiVerdict::Incompatible(MurasugiViolation::NegativeRealRoot);
    }
    MurasugiVerdict::Compatible
}

/// Number of distinct roots in `(-∞, 0)`.
pub fn negative_real_roots(delta: &IntLaurentPoly) -> usize {
    let p: QPoly = delta.to_dense();
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf);
    let bound = crate::poly::sturm::root_bound(&sf);
    let at_zero = usize::from(sf.eval(&int(0)).is_zero());
    chain.count_half_open(&-bound, &int(0)) - at_zero
}
