//! Levine–Tristram signatures of torus knots from the lattice count
//! `σ(e^{2πiλ}) = (p-1)(q-1) - 2 #{(i, j) : λ < i/p + j/q < λ + 1}`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use super::SeifertError;
use crate::rational::{int, rat, Rational};

fn check(p: i64, q: i64) -> Result<(), SeifertError> {
    if p < 2 || q <= p || p.gcd(&q) != 1 {
        return Err(SeifertError::BadTorus { p, q });
    }
    Ok(())
}

fn lattice(p: i64, q: i64) -> impl Iterator<Item = Rational> {
    (1..p).flat_map(move |i| (1..q).map(move |j| rat(i * q + j * p, p * q)))
}

pub fn torus_signature(p: i64, q: i64, lambda: &Rational) -> Result<i64, SeifertError> {
    check(p, q)?;
    if *lambda <= Rational::zero() || *lambda >= int(1) {
        return Err(SeifertError::BadLambda(crate::rational::fmt_exact(lambda)));
    }
    let upper = lambda + int(1);
    let mut count = 0i64;
    for v in lattice(p, q) {
        if &v == lambda || v == upper {
            return Err(SeifertError::AtAlexanderRoot);
        }
        if lambda < &v && v < upper {
            count += 1;
        }
    }
    Ok((p - 1) * (q - 1) - 2 * count)
}

/// Jumps `σ(λ⁺) - σ(λ⁻)` at every `λ ∈ (0, 1/2]` where the count changes,
/// sorted by `λ`.
pub fn torus_jump_list(p: i64, q: i64) -> Result<Vec<(Rational, i64)>, SeifertError> {
    check(p, q)?;
    let half = rat(1, 2);
    let mut jumps: BTreeMap<Rational, i64> = BTreeMap::new();
    for v in lattice(p, q) {
        // leaving through the bottom raises σ, entering through the top lowers it
        if v <= half {
            *jumps.entry(v.clone()).or_default() += 2;
        }
        let w = &v - int(1);
        if w > Rational::zero() && w <= half {
            *jumps.entry(w).or_default() -= 2;
        }
    }
    Ok(jumps.into_iter().filter(|(_, j)| *j != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_signatures() {
        assert_eq!(torus_signature(2, 3, &rat(1, 2)).unwrap(), -2);
        assert_eq!(torus_signature(3, 7, &rat(1, 2)).unwrap(), -8);
        assert_eq!(torus_signature(2, 11, &rat(1, 2)).unwrap(), -10);
        assert_eq!(torus_signature(3, 4, &rat(1, 2)).unwrap(), -6);
        assert_eq!(torus_signature(2, 3, &rat(1, 10)).unwrap(), 0);
    }

    #[test]
    fn jump_lists() {
        assert_eq!(torus_jump_list(2, 3).unwrap(), vec![(rat(1, 6), -2)]);
        assert_eq!(torus_jump_list(2, 5).unwrap(), vec![(rat(1, 10), -2), (rat(3, 10), -2)]);
        for (p, q) in [(2, 9), (3, 5), (3, 7), (4, 9), (5, 6)] {
            let total: i64 = torus_jump_list(p, q).unwrap().iter().map(|(_, j)| j).sum();
            assert_eq!(total, torus_signature(p, q, &rat(1, 2)).unwrap(), "T({p},{q})");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(torus_signature(2, 1, &rat(1, 2)), Err(SeifertError::BadTorus { .. })));
        assert!(matches!(torus_signature(2, 4, &rat(1, 2)), Err(SeifertError::BadTorus { .. })));
        assert!(matches!(torus_signature(2, 3, &int(1)), Err(SeifertError::BadLambda(_))));
        assert_eq!(torus_signature(2, 3, &rat(1, 6)), Err(SeifertError::AtAlexanderRoot));
    }
}
