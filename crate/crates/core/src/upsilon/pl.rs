use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::UpsilonError;
use crate::rational::{fmt_exact, int, parse_rational, Rational};

/// Continuous piecewise-linear function on `[0, 2]` with rational breakpoints.
///
/// Breakpoints are kept minimal: no stored point lies on the segment joining
/// its neighbours.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    points: Vec<(Rational, Rational)>,
}

impl PLFunction {
    pub fn zero() -> Self {
        PLFunction { points: vec![(int(0), int(0)), (int(2), int(0))] }
    }

    /// From `(t, value)` pairs with strictly increasing `t` from 0 to 2.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self, UpsilonError> {
        let bad = |m: &str| Err(UpsilonError::BadPL(m.to_string()));
        match (points.first(), points.last()) {
            (Some((a, _)), Some((b, _))) if a.is_zero() && *b == int(2) => {}
            _ => return bad("breakpoints must run from 0 to 2"),
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return bad("breakpoints must be strictly increasing");
        }
        if !points[0].1.is_zero() {
            return bad("value at 0 must be 0");
        }
        Ok(Self::pruned(points))
    }

    fn pruned(points: Vec<(Rational, Rational)>) -> Self {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            while out.len() >= 2 {
                let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
                if slope(a, b) == slope(b, &p) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        PLFunction { points: out }
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter().map(|(t, _)| t)
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational, UpsilonError> {
        if t.is_negative() || *t > int(2) {
            return Err(UpsilonError::OutOfDomain(fmt_exact(t)));
        }
        let k = self.points.partition_point(|(x, _)| x < t);
        let (x1, y1) = &self.points[k];
        if x1 == t {
            return Ok(y1.clone());
        }
        let (x0, y0) = &self.points[k - 1];
        Ok(y0 + (y1 - y0) * (t - x0) / (x1 - x0))
    }

    /// Right derivative at 0.
    pub fn initial_slope(&self) -> Rational {
        slope(&self.points[0], &self.points[1])
    }

    /// Interior breakpoints, where the slope changes.
    pub fn singularities(&self) -> Vec<Rational> {
        self.points[1..self.points.len() - 1].iter().map(|(t, _)| t.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.points.iter().all(|(_, y)| y.is_zero())
    }

    fn combine(&self, other: &PLFunction, f: impl Fn(&Rational, &Rational) -> Rational) -> PLFunction {
        let mut ts: Vec<Rational> = self.breakpoints().chain(other.breakpoints()).cloned().collect();
        ts.sort();
        ts.dedup();
        let points = ts
            .into_iter()
            .map(|t| {
                let v = f(&self.eval(&t).unwrap(), &other.eval(&t).unwrap());
                (t, v)
            })
            .collect();
        Self::pruned(points)
    }

    pub fn add(&self, other: &PLFunction) -> PLFunction {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PLFunction) -> PLFunction {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> PLFunction {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> PLFunction {
        if k == 0 {
            return Self::zero();
        }
        PLFunction { points: self.points.iter().map(|(t, y)| (t.clone(), y * int(k))).collect() }
    }

    /// `Υ(t)/t`, with the initial slope at `t = 0`.
    pub fn over_t(&self, t: &Rational) -> Result<Rational, UpsilonError> {
        if t.is_zero() {
            return Ok(self.initial_slope());
        }
        Ok(self.eval(t)? / t)
    }
}

fn slope(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

/// `ψ_{s,t}(f) = f(s)/s - f(t)/t` for `s, t ∈ [0, 1]`, `t > 0`; `s = 0` reads
/// `f(s)/s` as the initial slope.
pub fn psi(s: &Rational, t: &Rational, f: &PLFunction) -> Result<Rational, UpsilonError> {
    for x in [s, t] {
        if x.is_negative() || *x > int(1) {
            return Err(UpsilonError::OutOfDomain(fmt_exact(x)));
        }
    }
    if t.is_zero() {
        return Err(UpsilonError::OutOfDomain("t = 0".into()));
    }
    Ok(f.over_t(s)? - f.over_t(t)?)
}

/// `0:0, 2/3:-4, 4/3:-4, 2:0`
impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.points.iter().map(|(t, y)| format!("{}:{}", fmt_exact(t), fmt_exact(y))).collect();
        f.write_str(&parts.join(", "))
    }
}

impl fmt::Debug for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLFunction[{self}]")
    }
}

impl FromStr for PLFunction {
    type Err = UpsilonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let points = s
            .split(',')
            .map(|part| {
                let (t, y) = part
                    .split_once(':')
                    .ok_or_else(|| UpsilonError::BadPL(format!("expected t:value, got {part:?}")))?;
                match (parse_rational(t), parse_rational(y)) {
                    (Some(t), Some(y)) => Ok((t, y)),
                    _ => Err(UpsilonError::BadPL(format!("bad fraction in {part:?}"))),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        PLFunction::new(points)
    }
}
