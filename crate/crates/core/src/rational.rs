use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

/// Reduced fraction with an arbitrary-precision numerator and a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactRational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(v: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `ceil(self)` as an integer.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    /// Parses `p`, `p/q` or a plain decimal like `1.5`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((p, q)) = text.split_once('/') {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            return Some(ExactRational(BigRational::new(p, q)));
        }
        if let Some((int, frac)) = text.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let negative = int.trim_start().starts_with('-');
            let int: BigInt = if int.is_empty() || int == "-" {
                BigInt::zero()
            } else {
                int.parse().ok()?
            };
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac: BigInt = frac.parse().ok()?;
            let mut num = int.abs() * &scale + frac;
            if negative {
                num = -num;
            }
            return Some(ExactRational(BigRational::new(num, scale)));
        }
        text.parse::<BigInt>()
            .ok()
            .map(|v| ExactRational(BigRational::from_integer(v)))
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        ExactRational(self.0 - rhs.0)
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        ExactRational(self.0 * rhs.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom() == &BigInt::from(1) {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A toughness value: a finite rational, or infinity for complete graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ToughnessValue {
    Finite(ExactRational),
    Infinite,
}

impl ToughnessValue {
    pub fn finite(&self) -> Option<&ExactRational> {
        match self {
            ToughnessValue::Finite(r) => Some(r),
            ToughnessValue::Infinite => None,
        }
    }

    /// `self >= t` for a finite threshold.
    pub fn at_least(&self, t: &ExactRational) -> bool {
        match self {
            ToughnessValue::Finite(r) => r >= t,
            ToughnessValue::Infinite => true,
        }
    }
}

impl PartialOrd for ToughnessValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ToughnessValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ToughnessValue::Infinite, ToughnessValue::Infinite) => Ordering::Equal,
            (ToughnessValue::Infinite, _) => Ordering::Greater,
            (_, ToughnessValue::Infinite) => Ordering::Less,
            (ToughnessValue::Finite(a), ToughnessValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToughnessValue::Finite(r) => write!(f, "{r}"),
            ToughnessValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ToughnessValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_ordered() {
        let a = ExactRational::new(4, 6);
        assert_eq!(a, ExactRational::new(2, 3));
        assert_eq!(a.to_string(), "2/3");
        assert!(ExactRational::new(3, 2) > ExactRational::new(4, 3));
        assert_eq!(ExactRational::new(-1, -2).to_string(), "1/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(ExactRational::parse("3/2"), Some(ExactRational::new(3, 2)));
        assert_eq!(ExactRational::parse("1.5"), Some(ExactRational::new(3, 2)));
        assert_eq!(ExactRational::parse("2"), Some(ExactRational::from_integer(2)));
        assert_eq!(ExactRational::parse("-0.25"), Some(ExactRational::new(-1, 4)));
        assert_eq!(ExactRational::parse("1/0"), None);
        assert_eq!(ExactRational::parse("x"), None);
    }

    #[test]
    fn infinity_dominates() {
        let inf = ToughnessValue::Infinite;
        let big = ToughnessValue::Finite(ExactRational::from_integer(1_000_000));
        assert!(inf > big);
        assert!(inf.at_least(&ExactRational::from_integer(5)));
    }
}
