//! Concordance homomorphisms and their evaluation on knot expressions.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::declared::declared_knot;
use super::{ConcordanceError, KnotAtom, KnotExpr};
use crate::poly::{chebyshev_reduce, delta_n};
use crate::rational::{fmt_exact, int, parse_rational, rat, Rational};
use crate::seifert::{jump_at, signature_at, torus_signature, CirclePoint, CircleRoot, SeifertMatrix};
use crate::upsilon::{psi, torus_alexander, torus_upsilon, PLFunction};

/// A homomorphism `𝒞 → ℚ`, possibly known on some knots only through its sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functional {
    NegTau,
    SigmaHalf,
    /// Half the Rasmussen invariant, signed so that it agrees with `σ/2` on
    /// alternating knots; `s(T(p,q)) = -(p-1)(q-1)`.
    SHalf,
    /// `υ = Υ(1)`.
    LittleUpsilon,
    /// `Υ(t)/t` for `t ∈ [0, 1]`; `t = 0` is the initial slope.
    UpsilonOverT(Rational),
    /// `Υ(s)/s - Υ(t)/t`.
    Psi { s: Rational, t: Rational },
    /// Signature jump at the upper-half-plane unit root of `Δ_n`.
    Jump(i64),
    /// A functional known only through declared data (for example `s/2+tau`).
    Declared(String),
}

/// What is known about the alternating behaviour and genus bound of a functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDescriptor {
    pub functional: Functional,
    pub vanishes_on_ca: bool,
    pub agrees_with_sigma_half: bool,
    /// `|ν(K)| <= genus_coefficient · g₄(K)`.
    pub genus_coefficient: Rational,
    /// Changes by 0 or 1 under a positive-to-negative crossing change, with
    /// `ν(T(2,3)) = -1`.
    pub crossing_lemma_ok: bool,
}

impl HomDescriptor {
    pub fn of(f: Functional) -> Self {
        let (vanishes, agrees, c, crossing) = match &f {
            Functional::NegTau
            | Functional::SigmaHalf
            | Functional::SHalf
            | Functional::LittleUpsilon
            | Functional::UpsilonOverT(_) => (false, true, 1, true),
            Functional::Psi { .. } | Functional::Declared(_) => (true, false, 2, false),
            Functional::Jump(_) => (true, false, 4, false),
        };
        HomDescriptor {
            functional: f,
            vanishes_on_ca: vanishes,
            agrees_with_sigma_half: agrees,
            genus_coefficient: int(c),
            crossing_lemma_ok: crossing,
        }
    }

    pub fn evaluate(&self, k: &KnotExpr) -> Result<Value, ConcordanceError> {
        evaluate_hom(&self.functional, k)
    }
}

/// The fixed homomorphisms, `-τ` first. Parametrized families
/// (`Υ(t)/t`, `ψ`, jumps) are built with [`HomDescriptor::of`].
pub fn registry() -> Vec<HomDescriptor> {
    [Functional::NegTau, Functional::SigmaHalf, Functional::SHalf, Functional::LittleUpsilon]
        .into_iter()
        .map(HomDescriptor::of)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn times(self, k: i64) -> Sign {
        match (self, k.signum()) {
            (_, 0) | (Sign::Zero, _) => Sign::Zero,
            (s, 1) => s,
            (Sign::Positive, _) => Sign::Negative,
            (Sign::Negative, _) => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Exact(Rational),
    Sign(Sign),
    /// Known absolute value, unknown sign.
    Abs(Rational),
}

impl Value {
    pub fn sign(&self) -> Option<Sign> {
        match self {
            Value::Exact(q) => Some(Sign::of(q)),
            Value::Sign(s) => Some(*s),
            Value::Abs(q) if q.is_zero() => Some(Sign::Zero),
            Value::Abs(_) => None,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(q) => Some(q),
            _ => None,
        }
    }

    /// Known absolute value.
    pub fn magnitude(&self) -> Option<Rational> {
        match self {
            Value::Exact(q) | Value::Abs(q) => Some(q.abs()),
            Value::Sign(Sign::Zero) => Some(int(0)),
            Value::Sign(_) => None,
        }
    }

    pub fn is_definitely_nonzero(&self) -> bool {
        match self {
            Value::Abs(q) => !q.is_zero(),
            v => matches!(v.sign(), Some(Sign::Positive | Sign::Negative)),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => f.write_str(&fmt_exact(q)),
            Value::Sign(s) => write!(f, "{s}"),
            Value::Abs(q) => write!(f, "+-{}", fmt_exact(q)),
        }
    }
}

/// Declared functionals that are differences of registry homomorphisms, and
/// so can be evaluated on computed knots too.
fn declared_definition(id: &str) -> Option<(Functional, Functional)> {
    match id {
        "s/2+tau" => Some((Functional::SHalf, Functional::NegTau)),
        _ => None,
    }
}

/// Whether `f` is a difference of two homomorphisms satisfying the crossing
/// change hypotheses.
pub(crate) fn is_crossing_difference(f: &Functional) -> bool {
    match f {
        Functional::Declared(id) => declared_definition(id).is_some_and(|(a, b)| {
            HomDescriptor::of(a).crossing_lemma_ok && HomDescriptor::of(b).crossing_lemma_ok
        }),
        _ => false,
    }
}

fn missing(f: &Functional, a: &KnotAtom) -> ConcordanceError {
    ConcordanceError::MissingInvariantData { atom: a.to_string(), functional: f.to_string() }
}

fn check_unit_interval(t: &Rational) -> Result<(), ConcordanceError> {
    if t.is_negative() || *t > int(1) {
        return Err(ConcordanceError::Precondition(format!(
            "Upsilon(t)/t needs t in [0, 1], got {}",
            fmt_exact(t)
        )));
    }
    Ok(())
}

fn atom_value(f: &Functional, a: &KnotAtom) -> Result<Value, ConcordanceError> {
    if let Functional::Declared(id) = f {
        if let Some((x, y)) = declared_definition(id) {
            if let KnotAtom::Declared(name) = a {
                if let Some(m) = declared_knot(name).and_then(|k| k.magnitude(id).cloned()) {
                    return Ok(Value::Abs(m));
                }
            }
            let (vx, vy) = (atom_value(&x, a)?, atom_value(&y, a)?);
            return match (vx, vy) {
                (Value::Exact(x), Value::Exact(y)) => Ok(Value::Exact(x - y)),
                _ => Err(missing(f, a)),
            };
        }
    }
    match a {
        KnotAtom::Torus { p, q } => torus_value(f, *p, *q).and_then(|v| v.ok_or_else(|| missing(f, a))),
        KnotAtom::Matrix { matrix, .. } => matrix_value(f, matrix).and_then(|v| v.ok_or_else(|| missing(f, a))),
        KnotAtom::Delta(n) => {
            let m = super::delta_matrix(*n)?;
            matrix_value(f, &m).and_then(|v| v.ok_or_else(|| missing(f, a)))
        }
        KnotAtom::Declared(name) => declared_value(f, name)?.ok_or_else(|| missing(f, a)),
    }
}

fn torus_value(f: &Functional, p: i64, q: i64) -> Result<Option<Value>, ConcordanceError> {
    let genus = int((p - 1) * (q - 1) / 2);
    let v = match f {
        Functional::SigmaHalf => rat(torus_signature(p, q, &rat(1, 2))?, 2),
        Functional::NegTau | Functional::SHalf => -genus,
        Functional::LittleUpsilon => torus_upsilon(p, q)?.eval(&int(1))?,
        Functional::UpsilonOverT(t) => {
            check_unit_interval(t)?;
            torus_upsilon(p, q)?.over_t(t)?
        }
        Functional::Psi { s, t } => psi(s, t, &torus_upsilon(p, q)?)?,
        Functional::Jump(n) => {
            // the jump vanishes away from roots of Δ_T
            let qn = chebyshev_reduce(&delta_n(*n)?.symmetric_normalize()?)?.to_ordinary();
            let qt = chebyshev_reduce(&torus_alexander(p, q)?)?.to_ordinary();
            if qn.gcd(&qt).degree() != Some(0) {
                return Ok(None);
            }
            int(0)
        }
        Functional::Declared(_) => return Ok(None),
    };
    Ok(Some(Value::Exact(v)))
}

fn matrix_value(f: &Functional, m: &SeifertMatrix) -> Result<Option<Value>, ConcordanceError> {
    let v = match f {
        Functional::SigmaHalf => rat(signature_at(m, &CirclePoint::MinusOne)?, 2),
        Functional::Jump(n) => int(jump_at(m, &CircleRoot::omega_n(*n)?)?),
        _ => return Ok(None),
    };
    Ok(Some(Value::Exact(v)))
}

fn declared_value(f: &Functional, name: &str) -> Result<Option<Value>, ConcordanceError> {
    let k = declared_knot(name).ok_or_else(|| ConcordanceError::UnknownDeclared(name.to_string()))?;
    let id = f.to_string();
    if let Some(s) = k.fact(&id) {
        return Ok(Some(Value::Sign(s)));
    }
    if let Some(m) = k.magnitude(&id) {
        return Ok(Some(Value::Abs(m.clone())));
    }
    let flat = |t: &Rational| k.upsilon_vanishes_to.as_ref().is_some_and(|r| t <= r);
    let v = match f {
        Functional::SigmaHalf => k.sigma.map(|s| s / int(2)),
        Functional::NegTau => k.tau.map(|t| -t).or_else(|| flat(&int(0)).then(|| int(0))),
        Functional::SHalf => k.s.map(|s| s / int(2)),
        Functional::LittleUpsilon => flat(&int(1)).then(|| int(0)),
        Functional::UpsilonOverT(t) => flat(t).then(|| int(0)),
        Functional::Psi { s, t } => (flat(s) && flat(t)).then(|| int(0)),
        Functional::Jump(_) | Functional::Declared(_) => None,
    };
    Ok(v.map(Value::Exact))
}

/// `Σ aᵢ ν(Kᵢ)`. Sign-only data combine only when every unknown term pushes
/// the same way.
pub fn evaluate_hom(f: &Functional, k: &KnotExpr) -> Result<Value, ConcordanceError> {
    let mut exact = Rational::zero();
    let mut signs: Vec<Sign> = Vec::new();
    let mut magnitudes: Vec<Rational> = Vec::new();
    for (c, a) in k.terms() {
        match atom_value(f, a)? {
            Value::Exact(v) => exact += v * int(*c),
            Value::Sign(Sign::Zero) => {}
            Value::Sign(s) => signs.push(s.times(*c)),
            Value::Abs(m) => magnitudes.push(m * int(c.abs())),
        }
    }
    let indeterminate = || ConcordanceError::IndeterminateSign { functional: f.to_string() };
    match (signs.as_slice(), magnitudes.as_slice()) {
        ([], []) => Ok(Value::Exact(exact)),
        ([first, rest @ ..], []) => {
            let base = Sign::of(&exact);
            if rest.iter().all(|s| s == first) && (base == Sign::Zero || base == *first) {
                Ok(Value::Sign(*first))
            } else {
                Err(indeterminate())
            }
        }
        ([], [m]) if exact.is_zero() => Ok(Value::Abs(m.clone())),
        _ => Err(indeterminate()),
    }
}

/// `Υ_K` when every summand has a computable Upsilon function.
pub fn expr_upsilon(k: &KnotExpr) -> Result<PLFunction, ConcordanceError> {
    let mut out = PLFunction::zero();
    for (c, a) in k.terms() {
        match a {
            KnotAtom::Torus { p, q } => out = out.add(&torus_upsilon(*p, *q)?.scale(*c)),
            _ => {
                return Err(ConcordanceError::MissingInvariantData {
                    atom: a.to_string(),
                    functional: "Upsilon".into(),
                })
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functional::NegTau => f.write_str("-tau"),
            Functional::SigmaHalf => f.write_str("sigma/2"),
            Functional::SHalf => f.write_str("s/2"),
            Functional::LittleUpsilon => f.write_str("upsilon"),
            Functional::UpsilonOverT(t) => write!(f, "Upsilon/t@{}", fmt_exact(t)),
            Functional::Psi { s, t } => write!(f, "psi[{},{}]", fmt_exact(s), fmt_exact(t)),
            Functional::Jump(n) => write!(f, "J[{n}]"),
            Functional::Declared(id) => f.write_str(id),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown functional {0:?}")]
pub struct ParseFunctionalError(pub String);

impl FromStr for Functional {
    type Err = ParseFunctionalError;

    /// Accepts the [`Display`](fmt::Display) forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ParseFunctionalError(s.to_string());
        let unit = |x: &str| parse_rational(x).filter(|t| !t.is_negative() && *t <= int(1));
        match s {
            "-tau" => return Ok(Functional::NegTau),
            "sigma/2" => return Ok(Functional::SigmaHalf),
            "s/2" => return Ok(Functional::SHalf),
            "upsilon" => return Ok(Functional::LittleUpsilon),
            "s/2+tau" => return Ok(Functional::Declared(s.to_string())),
            _ => {}
        }
        if let Some(t) = s.strip_prefix("Upsilon/t@") {
            return unit(t).map(Functional::UpsilonOverT).ok_or_else(err);
        }
        if let Some(body) = s.strip_prefix("psi[").and_then(|b| b.strip_suffix(']')) {
            let (a, b) = body.split_once(',').ok_or_else(err)?;
            let (s, t) = (unit(a).ok_or_else(err)?, unit(b).ok_or_else(err)?);
            if t.is_zero() {
                return Err(err());
            }
            return Ok(Functional::Psi { s, t });
        }
        if let Some(n) = s.strip_prefix("J[").and_then(|b| b.strip_suffix(']')) {
            return n.parse().ok().filter(|n| *n >= 1).map(Functional::Jump).ok_or_else(err);
        }
        if let Some(k) = s.strip_prefix("psi_tslice[").and_then(|b| b.strip_suffix(']')) {
            if k.parse::<i64>().is_ok_and(|k| k >= 2) {
                return Ok(Functional::Declared(s.to_string()));
            }
        }
        Err(err())
    }
}
