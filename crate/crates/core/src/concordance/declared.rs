//! Knots whose invariants are recorded rather than computed.

use crate::rational::{int, rat, Rational};

use super::hom::Sign;

pub const DECLARED_WATERMARK: &str = "relies on declared (unverified) invariants";

/// How far the `psi_tslice[k]` facts are generated.
const TSLICE_FACTS: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeclaredKnot {
    pub name: String,
    pub tau: Option<Rational>,
    pub sigma: Option<Rational>,
    pub s: Option<Rational>,
    /// `Υ ≡ 0` on `[0, r]`.
    pub upsilon_vanishes_to: Option<Rational>,
    /// Sign facts keyed by functional id.
    pub facts: Vec<(String, Sign)>,
    /// Absolute values keyed by functional id.
    pub magnitudes: Vec<(String, Rational)>,
    pub provenance: String,
}

impl DeclaredKnot {
    fn named(name: &str, provenance: &str) -> Self {
        DeclaredKnot {
            name: name.to_string(),
            tau: None,
            sigma: None,
            s: None,
            upsilon_vanishes_to: None,
            facts: Vec::new(),
            magnitudes: Vec::new(),
            provenance: provenance.to_string(),
        }
    }

    pub fn fact(&self, id: &str) -> Option<Sign> {
        self.facts.iter().find(|(f, _)| f == id).map(|(_, s)| *s)
    }

    pub fn magnitude(&self, id: &str) -> Option<&Rational> {
        self.magnitudes.iter().find(|(f, _)| f == id).map(|(_, m)| m)
    }
}

/// Built-in declared knots:
///
/// * `whitehead0`: positive untwisted Whitehead double of the trefoil.
/// * `whitehead2`: positive 2-twisted Whitehead double of the trefoil.
/// * `tslice<n>`, `n >= 2`: the `(n, 2n-1)` cable of `whitehead0` minus `T(n, 2n-1)`.
pub fn declared_knot(name: &str) -> Option<DeclaredKnot> {
    match name {
        "whitehead0" => {
            let mut k = DeclaredKnot::named(
                name,
                "Wh+(T(2,3),0): tau = 1 from the Floer homology of Whitehead doubles; \
                 sigma = 0 since the knot is topologically slice",
            );
            k.tau = Some(int(1));
            k.sigma = Some(int(0));
            Some(k)
        }
        "whitehead2" => {
            let mut k = DeclaredKnot::named(
                name,
                "Wh+(T(2,3),2): s/2 and -tau are known to differ by one",
            );
            k.magnitudes.push(("s/2+tau".to_string(), int(1)));
            Some(k)
        }
        _ => {
            let n: i64 = name.strip_prefix("tslice")?.parse().ok()?;
            if !(2..=TSLICE_FACTS).contains(&n) {
                return None;
            }
            let mut k = DeclaredKnot::named(
                name,
                "cable of Wh+(T(2,3),0) minus T(n,2n-1): topologically slice, Upsilon \
                 vanishes on [0, 2/(2n-1)], psi_n(K_n) > 0 and psi_k(K_n) = 0 for k > n",
            );
            k.sigma = Some(int(0));
            k.upsilon_vanishes_to = Some(rat(2, 2 * n - 1));
            k.facts.push((tslice_psi_id(n), Sign::Positive));
            for j in n + 1..=TSLICE_FACTS {
                k.facts.push((tslice_psi_id(j), Sign::Zero));
            }
            Some(k)
        }
    }
}

pub(crate) fn tslice_psi_id(k: i64) -> String {
    format!("psi_tslice[{k}]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_ins() {
        assert_eq!(declared_knot("whitehead0").unwrap().tau, Some(int(1)));
        let k = declared_knot("tslice3").unwrap();
        assert_eq!(k.fact("psi_tslice[3]"), Some(Sign::Positive));
        assert_eq!(k.fact("psi_tslice[4]"), Some(Sign::Zero));
        assert_eq!(k.fact("psi_tslice[2]"), None);
        assert_eq!(k.upsilon_vanishes_to, Some(rat(2, 5)));
        assert!(declared_knot("tslice1").is_none());
        assert!(declared_knot("tslicex").is_none());
        assert!(declared_knot("other").is_none());
    }
}
