use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(m, i)` as an exact rational.
pub fn binomial(m: usize, i: usize) -> Rational {
    if i > m {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for k in 0..i {
        acc = acc * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    Rational::from_integer(acc)
}

/// `(-1)^i * C(m, i)`.
pub fn signed_binomial(m: usize, i: usize) -> Rational {
    let b = binomial(m, i);
    if i % 2 == 1 {
        -b
    } else {
        b
    }
}

/// Parses `INT` or `INT/INT` (optional leading sign on the numerator only).
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num = parse_int(num).ok_or_else(|| ParseError::new(0, format!("bad rational `{text}`")))?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(ParseError::new(0, format!("bad rational `{text}`")));
            }
            parse_int(d).ok_or_else(|| ParseError::new(0, format!("bad rational `{text}`")))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseError::new(0, format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, 4), int(0));
        assert_eq!(signed_binomial(3, 1), int(-3));
    }

    #[test]
    fn lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&rat(0, 5)), "0");
    }
}
