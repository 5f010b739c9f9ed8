//! Lower bounds on the cobordism distance to alternating knots.
//!
//! If `ν₁, ν₂` agree on alternating knots and each is bounded by the
//! four-genus, a genus-`g` cobordism to an alternating knot forces
//! `|ν₁(K) - ν₂(K)| <= 2g`. If they also change by at most one under a
//! crossing change, a singular concordance with `d` double points forces
//! `|ν₁(K) - ν₂(K)| <= d`. A homomorphism vanishing on alternating knots with
//! `|ν| <= c·g₄` gives `g >= |ν(K)|/c`.

use num_bigint::BigInt;
use num_traits::Signed;

use super::declared::declared_knot;
use super::hom::{evaluate_hom, is_crossing_difference, Functional, HomDescriptor, Value};
use super::{ConcordanceError, KnotAtom, KnotExpr};
use crate::rational::{ceil, int, rat, Rational};
use crate::upsilon::torus_upsilon;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two homomorphisms agreeing on alternating knots, with their values on `K`.
    Pair { first: Functional, first_value: Rational, second: Functional, second_value: Rational },
    /// A homomorphism vanishing on alternating knots.
    Single { functional: Functional, value: Value },
}

impl Witness {
    /// `first - second` for pairs, the known value or magnitude otherwise.
    pub fn difference(&self) -> Option<Rational> {
        match self {
            Witness::Pair { first_value, second_value, .. } => Some(first_value - second_value),
            Witness::Single { value, .. } => value.magnitude(),
        }
    }

    /// Re-evaluates every recorded value on `k`.
    pub fn verify(&self, k: &KnotExpr) -> bool {
        let same = |f: &Functional, v: &Value| evaluate_hom(f, k).is_ok_and(|w| &w == v);
        match self {
            Witness::Pair { first, first_value, second, second_value } => {
                same(first, &Value::Exact(first_value.clone()))
                    && same(second, &Value::Exact(second_value.clone()))
            }
            Witness::Single { functional, value } => same(functional, value),
        }
    }

    /// Genus bound carried by this witness.
    fn genus_bound(&self) -> Rational {
        match self {
            Witness::Pair { first_value, second_value, .. } => (first_value - second_value).abs() * rat(1, 2),
            Witness::Single { functional, value } => {
                value.magnitude().unwrap_or_default() / HomDescriptor::of(functional.clone()).genus_coefficient
            }
        }
    }
}

/// A lower bound, exact and rounded up to an integer, with what achieves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: Rational,
    pub ceiling: BigInt,
    pub witness: Option<Witness>,
}

impl Bound {
    fn new(value: Rational, witness: Option<Witness>) -> Self {
        let witness = witness.filter(|_| value.is_positive());
        Bound { ceiling: ceil(&value), value, witness }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub expr: KnotExpr,
    /// Genus of a cobordism to an alternating knot.
    pub ag: Bound,
    /// Double points of a singular concordance to an alternating knot.
    pub as_: Bound,
    /// Functionals that could not be evaluated, with the reason.
    pub skipped: Vec<(String, String)>,
    pub uses_declared: bool,
}

/// Exact values of the alternating-agreeing homomorphisms that `k` supports,
/// registry order first, then `Υ(t)/t` at `0` and at the kinks in `(0, 1)`.
fn agreeing_values(k: &KnotExpr, skipped: &mut Vec<(String, String)>) -> Vec<(Functional, Rational)> {
    let mut fs: Vec<Functional> = super::hom::registry().into_iter().map(|h| h.functional).collect();
    let mut ts = vec![int(0)];
    for (_, a) in k.terms() {
        if let KnotAtom::Torus { p, q } = a {
            if let Ok(u) = torus_upsilon(*p, *q) {
                ts.extend(u.singularities().into_iter().filter(|t| t.is_positive() && *t < int(1)));
            }
        }
    }
    ts.sort();
    ts.dedup();
    fs.extend(ts.into_iter().map(Functional::UpsilonOverT));
    let mut out = Vec::new();
    for f in fs {
        match evaluate_hom(&f, k) {
            Ok(Value::Exact(v)) => out.push((f, v)),
            Ok(v) => skipped.push((f.to_string(), format!("only {v} is known"))),
            Err(e) => skipped.push((f.to_string(), e.to_string())),
        }
    }
    out
}

/// Homomorphisms vanishing on alternating knots that are worth trying on `k`:
/// jumps at the `Δ_n` roots present in `k`, and declared functionals of its
/// declared summands.
fn vanishing_candidates(k: &KnotExpr) -> Vec<Functional> {
    let mut fs = Vec::new();
    for (_, a) in k.terms() {
        match a {
            KnotAtom::Delta(n) => fs.push(Functional::Jump(*n)),
            KnotAtom::Declared(name) => {
                if let Some(d) = declared_knot(name) {
                    let ids = d.facts.iter().map(|(id, _)| id).chain(d.magnitudes.iter().map(|(id, _)| id));
                    fs.extend(ids.filter_map(|id| id.parse().ok()));
                }
            }
            _ => {}
        }
    }
    let mut seen = std::collections::HashSet::new();
    fs.retain(|f| seen.insert(f.clone()));
    fs
}

fn vanishing_values(k: &KnotExpr, skipped: &mut Vec<(String, String)>) -> Vec<(Functional, Value)> {
    let mut out = Vec::new();
    for f in vanishing_candidates(k) {
        match evaluate_hom(&f, k) {
            Ok(v) => out.push((f, v)),
            Err(e) => skipped.push((f.to_string(), e.to_string())),
        }
    }
    out
}

/// Largest difference; ties go to `ψ` pairs (two values of `Υ(t)/t`), then to
/// registry order.
fn best_pair(values: &[(Functional, Rational)]) -> Option<Witness> {
    let mut best: Option<((Rational, bool), Witness)> = None;
    for (i, (f1, v1)) in values.iter().enumerate() {
        for (f2, v2) in &values[i + 1..] {
            let psi = matches!((f1, f2), (Functional::UpsilonOverT(_), Functional::UpsilonOverT(_)));
            let score = ((v1 - v2).abs(), psi);
            if best.as_ref().is_none_or(|(b, _)| score > *b) {
                let w = Witness::Pair {
                    first: f1.clone(),
                    first_value: v1.clone(),
                    second: f2.clone(),
                    second_value: v2.clone(),
                };
                best = Some((score, w));
            }
        }
    }
    best.map(|(_, w)| w)
}

fn no_data(k: &KnotExpr) -> ConcordanceError {
    let atom = k.terms().first().map(|(_, a)| a.to_string()).unwrap_or_default();
    ConcordanceError::MissingInvariantData { atom, functional: "any registered homomorphism".into() }
}

fn ag_with(k: &KnotExpr, skipped: &mut Vec<(String, String)>) -> Result<Bound, ConcordanceError> {
    if k.is_unknot() {
        return Ok(Bound::new(int(0), None));
    }
    let pairs = agreeing_values(k, skipped);
    let singles = vanishing_values(k, skipped);
    let mut candidates: Vec<Witness> = best_pair(&pairs).into_iter().collect();
    candidates.extend(
        singles
            .into_iter()
            .filter(|(_, v)| v.magnitude().is_some())
            .map(|(functional, value)| Witness::Single { functional, value }),
    );
    if candidates.is_empty() && pairs.is_empty() {
        return Err(no_data(k));
    }
    let mut best: Option<Witness> = None;
    for w in candidates {
        if best.as_ref().is_none_or(|b| w.genus_bound() > b.genus_bound()) {
            best = Some(w);
        }
    }
    let value = best.as_ref().map(Witness::genus_bound).unwrap_or_default();
    Ok(Bound::new(value, best))
}

fn as_with(k: &KnotExpr, skipped: &mut Vec<(String, String)>) -> Result<Bound, ConcordanceError> {
    if k.is_unknot() {
        return Ok(Bound::new(int(0), None));
    }
    let mut pairs = agreeing_values(k, skipped);
    pairs.retain(|(f, _)| HomDescriptor::of(f.clone()).crossing_lemma_ok);
    let mut candidates: Vec<(Rational, Witness)> = best_pair(&pairs)
        .into_iter()
        .map(|w| (w.difference().unwrap_or_default().abs(), w))
        .collect();
    for (functional, value) in vanishing_values(k, skipped) {
        if let (true, Some(m)) = (is_crossing_difference(&functional), value.magnitude()) {
            candidates.push((m, Witness::Single { functional, value }));
        }
    }
    if candidates.is_empty() {
        return Err(no_data(k));
    }
    let mut best = candidates.swap_remove(0);
    for c in candidates {
        if c.0 > best.0 {
            best = c;
        }
    }
    Ok(Bound::new(best.0, Some(best.1)))
}

/// Lower bound on the genus of a cobordism from `k` to an alternating knot.
pub fn ag_lower_bound(k: &KnotExpr) -> Result<Bound, ConcordanceError> {
    ag_with(k, &mut Vec::new())
}

/// Lower bound on the number of double points of a singular concordance from
/// `k` to an alternating knot.
pub fn as_lower_bound(k: &KnotExpr) -> Result<Bound, ConcordanceError> {
    as_with(k, &mut Vec::new())
}

/// Both bounds. A bound with no usable data is reported as 0 and noted in
/// `skipped`; it is an error only if neither bound has data.
pub fn bound_report(k: &KnotExpr) -> Result<BoundReport, ConcordanceError> {
    let mut skipped = Vec::new();
    let ag = ag_with(k, &mut skipped);
    let as_ = as_with(k, &mut skipped);
    let (ag, as_) = match (ag, as_) {
        (Err(e), Err(_)) => return Err(e),
        (ag, as_) => {
            let mut fallback = |r: Result<Bound, ConcordanceError>, which: &str| {
                r.unwrap_or_else(|e| {
                    skipped.push((which.to_string(), e.to_string()));
                    Bound::new(int(0), None)
                })
            };
            (fallback(ag, "ag bound"), fallback(as_, "as bound"))
        }
    };
    skipped.sort();
    skipped.dedup();
    Ok(BoundReport { expr: k.clone(), ag, as_, skipped, uses_declared: k.uses_declared() })
}

/// `-s₊ <= ν(K₁) - ν(K₂) <= s₋`, which holds whenever `K₁` becomes `K₂` after
/// `s₊` positive-to-negative and `s₋` negative-to-positive crossing changes.
pub fn singular_inequality_check(
    k1: &KnotExpr,
    k2: &KnotExpr,
    s_plus: i64,
    s_minus: i64,
    h: &HomDescriptor,
) -> Result<bool, ConcordanceError> {
    if !h.crossing_lemma_ok {
        return Err(ConcordanceError::Precondition(format!(
            "{} does not satisfy the crossing change hypotheses",
            h.functional
        )));
    }
    let value = |k: &KnotExpr| -> Result<Rational, ConcordanceError> {
        match evaluate_hom(&h.functional, k)? {
            Value::Exact(v) => Ok(v),
            v => Err(ConcordanceError::Precondition(format!("{} is only known as {v}", h.functional))),
        }
    };
    let d = value(k1)? - value(k2)?;
    Ok(int(-s_plus) <= d && d <= int(s_minus))
}

/// For `K = Σ aᵢ·2N·Kᵢ` over `Δ`-knots, `g₄(K) >= |J_{ω_n}(K)|/4 = |aₙ|N`.
pub fn jump_bound_theorem(k: &KnotExpr, n: i64, big_n: i64) -> Result<Rational, ConcordanceError> {
    if big_n < 1 {
        return Err(ConcordanceError::Precondition(format!("N must be positive, got {big_n}")));
    }
    for (c, a) in k.terms() {
        if !matches!(a, KnotAtom::Delta(_)) {
            return Err(ConcordanceError::Precondition(format!("{a} is not a Delta knot")));
        }
        if c % (2 * big_n) != 0 {
            return Err(ConcordanceError::Precondition(format!("coefficient {c} of {a} is not divisible by 2N")));
        }
    }
    let a_n = k.coefficient(&KnotAtom::Delta(n)) / (2 * big_n);
    if a_n == 0 {
        return Err(ConcordanceError::Precondition(format!("K[{n}] does not occur in the expression")));
    }
    let j = match evaluate_hom(&Functional::Jump(n), k)? {
        Value::Exact(j) => j,
        v => return Err(ConcordanceError::Precondition(format!("jump only known as {v}"))),
    };
    Ok(j.abs() * rat(1, 4))
}

/// Certificates that `k` is not concordant to a combination of alternating knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub expr: KnotExpr,
    pub witnesses: Vec<Witness>,
    pub skipped: Vec<(String, String)>,
    pub uses_declared: bool,
}

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Every agreeing pair with different values and every vanishing homomorphism
/// known to be nonzero on `k`.
pub fn alternating_obstruction(k: &KnotExpr) -> Result<ObstructionReport, ConcordanceError> {
    let mut skipped = Vec::new();
    let pairs = agreeing_values(k, &mut skipped);
    let mut witnesses = Vec::new();
    for (i, (f1, v1)) in pairs.iter().enumerate() {
        for (f2, v2) in &pairs[i + 1..] {
            if v1 != v2 {
                witnesses.push(Witness::Pair {
                    first: f1.clone(),
                    first_value: v1.clone(),
                    second: f2.clone(),
                    second_value: v2.clone(),
                });
            }
        }
    }
    for (functional, value) in vanishing_values(k, &mut skipped) {
        if value.is_definitely_nonzero() {
            witnesses.push(Witness::Single { functional, value });
        }
    }
    skipped.sort();
    skipped.dedup();
    Ok(ObstructionReport { expr: k.clone(), witnesses, skipped, uses_declared: k.uses_declared() })
}
