//! Knots as formal sums in the concordance group, the homomorphisms that see
//! them, and the lower bounds and independence certificates built on top.

mod bounds;
mod certificate;
mod declared;
mod deltan;
mod hom;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use thiserror::Error;

use crate::poly::{delta_n, PolyError};
use crate::seifert::{realize_polynomial, SeifertError, SeifertMatrix};
use crate::upsilon::UpsilonError;

pub use bounds::{
    ag_lower_bound, alternating_obstruction, as_lower_bound, bound_report, jump_bound_theorem,
    singular_inequality_check, Bound, BoundReport, ObstructionReport, Witness,
};
pub use certificate::{
    independence_certificate, Entry, FunctionalChoice, IndependenceCertificate, Verdict,
};
pub use declared::{declared_knot, DeclaredKnot, DECLARED_WATERMARK};
pub use deltan::{deltan_report, DeltaNReport};
pub use hom::{
    evaluate_hom, expr_upsilon, registry, HomDescriptor, Functional, ParseFunctionalError, Sign,
    Value,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConcordanceError {
    #[error("no {functional} data for {atom}")]
    MissingInvariantData { atom: String, functional: String },
    #[error("sign of {functional} is not determined by the available data")]
    IndeterminateSign { functional: String },
    #[error("unknown declared knot {0:?}")]
    UnknownDeclared(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Upsilon(#[from] UpsilonError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A prime summand of a knot expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotAtom {
    /// Positive torus knot, `2 <= p < q`, coprime.
    Torus { p: i64, q: i64 },
    /// A knot given by a Seifert matrix, named after its source.
    Matrix { name: String, matrix: SeifertMatrix },
    /// A fixed knot with Alexander polynomial `Δ_n`, realized by a chain Seifert matrix.
    Delta(i64),
    /// A knot known only through recorded invariant values.
    Declared(String),
}

impl KnotAtom {
    /// `T(p, q)`; the order of `p, q` does not matter.
    pub fn torus(p: i64, q: i64) -> Result<Self, ConcordanceError> {
        let (p, q) = (p.min(q), p.max(q));
        if p < 2 || p.gcd(&q) != 1 {
            return Err(UpsilonError::NotCoprime { p, q }.into());
        }
        Ok(KnotAtom::Torus { p, q })
    }

    pub fn delta(n: i64) -> Result<Self, ConcordanceError> {
        delta_n(n)?;
        Ok(KnotAtom::Delta(n))
    }

    pub fn declared(name: &str) -> Result<Self, ConcordanceError> {
        declared_knot(name).ok_or_else(|| ConcordanceError::UnknownDeclared(name.to_string()))?;
        Ok(KnotAtom::Declared(name.to_string()))
    }

    pub fn is_declared(&self) -> bool {
        matches!(self, KnotAtom::Declared(_))
    }

    /// A Seifert matrix, for atoms that have one.
    pub fn seifert_matrix(&self) -> Result<Option<SeifertMatrix>, ConcordanceError> {
        match self {
            KnotAtom::Matrix { matrix, .. } => Ok(Some(matrix.clone())),
            KnotAtom::Delta(n) => Ok(Some(delta_matrix(*n)?)),
            KnotAtom::Torus { p: 2, q } => Ok(Some(SeifertMatrix::torus_two(*q as usize)?)),
            _ => Ok(None),
        }
    }
}

impl std::fmt::Display for KnotAtom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KnotAtom::Torus { p, q } => write!(f, "T({p},{q})"),
            KnotAtom::Matrix { name, .. } => write!(f, "M({name})"),
            KnotAtom::Delta(n) => write!(f, "K[{n}]"),
            KnotAtom::Declared(name) => write!(f, "D({name})"),
        }
    }
}

/// Realizations are deterministic, so they are computed once per process.
pub fn delta_matrix(n: i64) -> Result<SeifertMatrix, ConcordanceError> {
    static CACHE: OnceLock<Mutex<HashMap<i64, SeifertMatrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("cache poisoned").get(&n) {
        return Ok(m.clone());
    }
    let m = realize_polynomial(&delta_n(n)?)?.with_name(format!("K[{n}]"));
    cache.lock().expect("cache poisoned").insert(n, m.clone());
    Ok(m)
}

/// `Σ aᵢ Kᵢ` in the concordance group; a negative coefficient is the mirror
/// image with reversed orientation. Atoms are distinct and coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct KnotExpr {
    terms: Vec<(i64, KnotAtom)>,
}

impl KnotExpr {
    pub fn unknot() -> Self {
        Self::default()
    }

    pub fn atom(a: KnotAtom) -> Self {
        Self::from_terms([(1, a)])
    }

    /// Collects coefficients of equal atoms, keeping first-appearance order.
    pub fn from_terms<I: IntoIterator<Item = (i64, KnotAtom)>>(terms: I) -> Self {
        let mut out: Vec<(i64, KnotAtom)> = Vec::new();
        for (c, a) in terms {
            match out.iter_mut().find(|(_, b)| *b == a) {
                Some((d, _)) => *d += c,
                None => out.push((c, a)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        KnotExpr { terms: out }
    }

    pub fn terms(&self) -> &[(i64, KnotAtom)] {
        &self.terms
    }

    pub fn is_unknot(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, a: &KnotAtom) -> i64 {
        self.terms.iter().find(|(_, b)| b == a).map_or(0, |(c, _)| *c)
    }

    pub fn add(&self, other: &KnotExpr) -> KnotExpr {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn neg(&self) -> KnotExpr {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> KnotExpr {
        Self::from_terms(self.terms.iter().map(|(c, a)| (c * k, a.clone())))
    }

    pub fn uses_declared(&self) -> bool {
        self.terms.iter().any(|(_, a)| a.is_declared())
    }
}
