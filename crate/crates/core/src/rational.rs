//! Exact rational scalars and their text forms.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `a`, `-a`, or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Exact fraction text: `-4`, `2/3`.
pub fn fmt_exact(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Smallest integer `>= q`.
pub fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

/// Round-half-away-from-zero decimal rendering with `digits` significant digits.
///
/// The rounding is done on the exact value, so the output depends only on `q`.
pub fn fmt_decimal(q: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    // exponent e with 10^e <= a < 10^(e+1)
    let ten = BigInt::from(10);
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    loop {
        let lo = pow10(e);
        if a < lo {
            e -= 1;
            continue;
        }
        if a >= pow10(e + 1) {
            e += 1;
            continue;
        }
        break;
    }
    // scaled = a * 10^(digits-1-e), rounded to an integer
    let shift = digits as i64 - 1 - e;
    let scaled = &a * pow10(shift);
    let (qi, r) = scaled.numer().div_rem(scaled.denom());
    let mut m = qi;
    if (r * BigInt::from(2)).cmp(scaled.denom()) != Ordering::Less {
        m += 1;
    }
    // rounding may carry into a new digit
    let mut shift = shift;
    if m.to_string().len() > digits {
        m /= &ten;
        shift -= 1;
    }
    let mut body = m.to_string();
    let out = if shift <= 0 {
        body.push_str(&"0".repeat((-shift) as usize));
        body
    } else {
        let shift = shift as usize;
        if body.len() <= shift {
            body = format!("{}{}", "0".repeat(shift - body.len() + 1), body);
        }
        let (ip, fp) = body.split_at(body.len() - shift);
        let fp = fp.trim_end_matches('0');
        if fp.is_empty() {
            ip.to_string()
        } else {
            format!("{ip}.{fp}")
        }
    };
    if neg {
        format!("-{out}")
    } else {
        out
    }
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Integer-valued rational to `i64`, if it fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.denom().is_one() {
        i64::try_from(q.numer()).ok()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_text() {
        assert_eq!(fmt_exact(&rat(-4, 1)), "-4");
        assert_eq!(fmt_exact(&rat(4, 6)), "2/3");
        assert_eq!(parse_rational(" -10/15 "), Some(rat(-2, 3)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(fmt_decimal(&rat(2, 3), 6), "0.666667");
        assert_eq!(fmt_decimal(&rat(-1, 1), 6), "-1");
        assert_eq!(fmt_decimal(&rat(1, 8), 2), "0.13");
        assert_eq!(fmt_decimal(&rat(9999, 10), 3), "1000");
        assert_eq!(fmt_decimal(&rat(123456, 1), 2), "120000");
        assert_eq!(fmt_decimal(&rat(1, 120), 6), "0.00833333");
        assert_eq!(fmt_decimal(&int(0), 6), "0");
        assert_eq!(fmt_decimal(&rat(-5, 2), 1), "-3");
    }

    #[test]
    fn ceiling() {
        assert_eq!(ceil(&rat(1, 2)), BigInt::from(1));
        assert_eq!(ceil(&rat(-1, 2)), BigInt::from(0));
        assert_eq!(ceil(&int(3)), BigInt::from(3));
    }
}
