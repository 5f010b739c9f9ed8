//! Certificates that a finite family of knots is linearly independent modulo
//! the subgroup generated by alternating knots.
//!
//! Every functional used vanishes on alternating knots. If the evaluation
//! matrix (rows are knots, columns functionals) can be ordered to be lower
//! triangular with nonzero diagonal, then applying the functionals in reverse
//! order to a vanishing combination kills its coefficients one at a time.

use num_traits::{Signed, Zero};

use super::declared::declared_knot;
use super::hom::{evaluate_hom, expr_upsilon, Functional, HomDescriptor, Sign, Value};
use super::{ConcordanceError, KnotAtom, KnotExpr};
use crate::rational::{int, rat, to_i64, Rational};
use crate::upsilon::epsilon_p;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Exact(Rational),
    Sign(Sign),
    Abs(Rational),
    Unknown,
}

impl Entry {
    fn from_eval(r: Result<Value, ConcordanceError>) -> Result<Entry, ConcordanceError> {
        match r {
            Ok(Value::Exact(q)) => Ok(Entry::Exact(q)),
            Ok(Value::Sign(s)) => Ok(Entry::Sign(s)),
            Ok(Value::Abs(q)) => Ok(Entry::Abs(q)),
            Err(ConcordanceError::MissingInvariantData { .. } | ConcordanceError::IndeterminateSign { .. }) => {
                Ok(Entry::Unknown)
            }
            Err(e) => Err(e),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Entry::Exact(q) | Entry::Abs(q) => q.is_zero(),
            Entry::Sign(s) => *s == Sign::Zero,
            Entry::Unknown => false,
        }
    }

    pub fn is_nonzero(&self) -> bool {
        match self {
            Entry::Exact(q) | Entry::Abs(q) => !q.is_zero(),
            Entry::Sign(s) => *s != Sign::Zero,
            Entry::Unknown => false,
        }
    }
}

impl std::fmt::Display for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Entry::Exact(q) => write!(f, "{}", Value::Exact(q.clone())),
            Entry::Sign(s) => match s {
                Sign::Positive => f.write_str("+"),
                Sign::Negative => f.write_str("-"),
                Sign::Zero => f.write_str("0"),
            },
            Entry::Abs(q) => write!(f, "{}", Value::Abs(q.clone())),
            Entry::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionalChoice {
    /// One functional per knot, chosen from its data.
    Auto,
    Explicit(Vec<Functional>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Independent,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceCertificate {
    pub knots: Vec<KnotExpr>,
    pub functionals: Vec<Functional>,
    /// Why each functional was chosen.
    pub selection: Vec<String>,
    pub matrix: Vec<Vec<Entry>>,
    /// `(row, column)` pairs; listed in this order, rows and columns make the
    /// matrix lower triangular with nonzero diagonal.
    pub order: Vec<(usize, usize)>,
    pub verdict: Verdict,
    pub note: Option<String>,
    pub uses_declared: bool,
}

impl IndependenceCertificate {
    /// Re-evaluates the matrix from scratch and replays the ordering.
    pub fn verify(&self) -> bool {
        let Ok(fresh) = evaluation_matrix(&self.knots, &self.functionals) else {
            return false;
        };
        if fresh != self.matrix {
            return false;
        }
        let triangular = is_triangular_witness(&fresh, &self.order);
        match self.verdict {
            Verdict::Independent => triangular,
            Verdict::Inconclusive => !triangular,
        }
    }
}

fn evaluation_matrix(knots: &[KnotExpr], fs: &[Functional]) -> Result<Vec<Vec<Entry>>, ConcordanceError> {
    knots
        .iter()
        .map(|k| fs.iter().map(|f| Entry::from_eval(evaluate_hom(f, k))).collect())
        .collect()
}

fn is_triangular_witness(m: &[Vec<Entry>], order: &[(usize, usize)]) -> bool {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) || order.len() != n {
        return false;
    }
    let mut rows: Vec<usize> = order.iter().map(|p| p.0).collect();
    let mut cols: Vec<usize> = order.iter().map(|p| p.1).collect();
    let diag_ok = order.iter().all(|&(r, c)| m[r][c].is_nonzero());
    let upper_ok = order
        .iter()
        .enumerate()
        .all(|(i, &(r, _))| order[i + 1..].iter().all(|&(_, c)| m[r][c].is_zero()));
    rows.sort_unstable();
    cols.sort_unstable();
    rows.dedup();
    cols.dedup();
    diag_ok && upper_ok && rows.len() == n && cols.len() == n
}

/// Repeatedly takes a row whose only possibly nonzero entry among the
/// remaining columns is certainly nonzero.
fn peel(m: &[Vec<Entry>]) -> Option<Vec<(usize, usize)>> {
    let n = m.len();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while !rows.is_empty() {
        let found = rows.iter().enumerate().find_map(|(ri, &r)| {
            let live: Vec<usize> = cols.iter().copied().filter(|&c| !m[r][c].is_zero()).collect();
            match live[..] {
                [c] if m[r][c].is_nonzero() => Some((ri, r, c)),
                _ => None,
            }
        })?;
        let (ri, r, c) = found;
        rows.remove(ri);
        cols.retain(|&x| x != c);
        order.push((r, c));
    }
    Some(order)
}

/// The functional the automatic mode uses for one knot, with the reason.
fn auto_functional(k: &KnotExpr) -> Option<(Functional, String)> {
    if let Ok(u) = expr_upsilon(k) {
        let kinks = u.singularities();
        if let Some(t1) = kinks.first().filter(|t| t.is_positive() && **t < int(1)) {
            let next = kinks.get(1).cloned().unwrap_or_else(|| int(2)).min(int(1));
            let half_gap = (&next - t1) * rat(1, 2);
            // t₁ = 2/p
            let p = to_i64(&(int(2) / t1)).filter(|p| *p >= 3 && rat(2, *p) == *t1);
            let (eps, how) = match p {
                Some(p) if t1 + epsilon_p(p) < next => (epsilon_p(p), format!("eps = (2/{} - 2/{p})/2", p - 1)),
                _ => (half_gap, "eps = half the gap to the next kink".to_string()),
            };
            let t = t1 + &eps;
            let f = Functional::Psi { s: t1.clone(), t };
            return Some((f, format!("psi across the first kink of Upsilon; {how}")));
        }
    }
    let top = k
        .terms()
        .iter()
        .filter_map(|(_, a)| match a {
            KnotAtom::Delta(n) => Some(*n),
            _ => None,
        })
        .max();
    if let Some(n) = top {
        return Some((Functional::Jump(n), format!("signature jump at the circle root of Delta_{n}")));
    }
    for (_, a) in k.terms() {
        if let KnotAtom::Declared(name) = a {
            let d = declared_knot(name)?;
            let fact = d.facts.iter().find(|(_, s)| *s != Sign::Zero).map(|(id, _)| id.clone());
            let mag = d.magnitudes.iter().find(|(_, m)| !m.is_zero()).map(|(id, _)| id.clone());
            if let Some(id) = fact.or(mag) {
                return Some((Functional::Declared(id.clone()), format!("declared nonzero fact {id} of {name}")));
            }
        }
    }
    None
}

pub fn independence_certificate(
    knots: &[KnotExpr],
    choice: &FunctionalChoice,
) -> Result<IndependenceCertificate, ConcordanceError> {
    let uses_declared = knots.iter().any(KnotExpr::uses_declared);
    let mut note = None;
    let (mut functionals, mut selection) = (Vec::new(), Vec::new());
    match choice {
        FunctionalChoice::Explicit(fs) => {
            for f in fs {
                functionals.push(f.clone());
                selection.push("explicit".to_string());
            }
        }
        FunctionalChoice::Auto => {
            for k in knots {
                match auto_functional(k) {
                    Some((f, why)) if !functionals.contains(&f) => {
                        functionals.push(f);
                        selection.push(why);
                    }
                    Some((f, _)) => note = Some(format!("{f} was selected for two knots")),
                    None => note = Some(format!("no functional available for {}", k)),
                }
            }
        }
    }
    if let Some(bad) = functionals.iter().find(|f| !HomDescriptor::of((*f).clone()).vanishes_on_ca) {
        return Err(ConcordanceError::Precondition(format!("{bad} does not vanish on alternating knots")));
    }
    let matrix = evaluation_matrix(knots, &functionals)?;
    let order = if knots.len() == functionals.len() && !knots.is_empty() {
        peel(&matrix)
    } else {
        note.get_or_insert_with(|| {
            format!("{} knots against {} functionals", knots.len(), functionals.len())
        });
        None
    };
    let (order, verdict) = match order {
        Some(o) if is_triangular_witness(&matrix, &o) => (o, Verdict::Independent),
        _ => {
            note.get_or_insert_with(|| "no triangular ordering exists for the known entries".to_string());
            (Vec::new(), Verdict::Inconclusive)
        }
    };
    Ok(IndependenceCertificate { knots: knots.to_vec(), functionals, selection, matrix, order, verdict, note, uses_declared })
}
