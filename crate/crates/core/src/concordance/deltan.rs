use num_traits::Signed;

use super::{delta_matrix, ConcordanceError};
use crate::poly::{
    count_unit_circle_root_pairs, delta_n, irreducible_over_q, sturm_isolate_real_roots, IntLaurentPoly,
    IsolatingInterval,
};
use crate::rational::{int, rat, Rational};
use crate::seifert::{alexander, jump_at, murasugi_alternating_test, CircleRoot, MurasugiVerdict, SeifertMatrix};

/// Everything needed to see that a knot with Alexander polynomial `Δ_n` is
/// not concordant to any combination of alternating knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaNReport {
    pub n: i64,
    pub polynomial: IntLaurentPoly,
    pub value_at_one: Rational,
    pub irreducible: bool,
    pub real_roots: Vec<IsolatingInterval>,
    pub circle_pairs: usize,
    pub circle_root: CircleRoot,
    pub seifert: SeifertMatrix,
    pub roundtrip: bool,
    pub jump: i64,
    pub murasugi: MurasugiVerdict,
    /// `|J|/4`, a lower bound on the four-genus and on the cobordism genus to
    /// alternating knots.
    pub ag_bound: Rational,
}

impl DeltaNReport {
    pub fn negative_real_roots(&self) -> usize {
        self.real_roots.iter().filter(|r| !r.hi.is_positive()).count()
    }
}

pub fn deltan_report(n: i64) -> Result<DeltaNReport, ConcordanceError> {
    let polynomial = delta_n(n)?;
    let normalized = polynomial.symmetric_normalize()?;
    let seifert = delta_matrix(n)?;
    let circle_root = CircleRoot::omega_n(n)?;
    let jump = jump_at(&seifert, &circle_root)?;
    Ok(DeltaNReport {
        n,
        value_at_one: polynomial.eval_rational(&int(1))?,
        irreducible: irreducible_over_q(&polynomial)?,
        real_roots: sturm_isolate_real_roots(&polynomial)?,
        circle_pairs: count_unit_circle_root_pairs(&polynomial)?,
        roundtrip: alexander(&seifert) == normalized,
        murasugi: murasugi_alternating_test(&normalized),
        ag_bound: rat(jump.abs(), 4),
        circle_root,
        seifert,
        jump,
        polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_reports() {
        for n in 1..=3 {
            let r = deltan_report(n).unwrap();
            assert_eq!(r.value_at_one, int(1));
            assert!(r.irreducible && r.roundtrip);
            assert_eq!(r.negative_real_roots(), 2);
            assert_eq!(r.real_roots.len(), 2);
            assert_eq!(r.circle_pairs, 1);
            assert_eq!(r.jump.abs(), 2);
            assert!(!r.murasugi.is_compatible());
            assert_eq!(r.ag_bound, rat(1, 2));
        }
        assert_eq!(deltan_report(2).unwrap().polynomial.to_string(), "t^4 + 2*t^3 - 5*t^2 + 2*t + 1");
        assert!(deltan_report(0).is_err());
    }
}
