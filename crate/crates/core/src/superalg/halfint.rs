use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::scalar::{rat, Rational};

/// An element of `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    pub doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        Self { doubled }
    }

    pub const fn int(n: i64) -> Self {
        Self { doubled: 2 * n }
    }

    /// `n + 1/2`.
    pub const fn half(n: i64) -> Self {
        Self { doubled: 2 * n + 1 }
    }

    pub fn is_integral(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn to_rational(self) -> Rational {
        rat(self.doubled, 2)
    }

    /// Parses `n` or `p/2`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        let bad = || ParseError::new(0, format!("index `{text}` is not in ℤ nor ℤ+½"));
        match t.split_once('/') {
            None => parse_i64(t).map(HalfInt::int).ok_or_else(bad),
            Some((p, q)) => {
                if q.trim() != "2" {
                    return Err(bad());
                }
                parse_i64(p.trim()).map(HalfInt::from_doubled).ok_or_else(bad)
            }
        }
    }
}

fn parse_i64(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(HalfInt::parse("3/2").unwrap(), HalfInt::from_doubled(3));
        assert_eq!(HalfInt::parse("-4").unwrap(), HalfInt::int(-4));
        assert_eq!(HalfInt::parse("4/2").unwrap(), HalfInt::int(2));
        assert!(HalfInt::parse("1/3").is_err());
        assert!(HalfInt::parse("x").is_err());
        assert_eq!(HalfInt::from_doubled(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::int(-2).to_string(), "-2");
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::half(0);
        assert_eq!(a + a, HalfInt::int(1));
        assert!(!(a - HalfInt::int(3)).is_integral());
        assert_eq!(-a, HalfInt::from_doubled(-1));
    }
}
