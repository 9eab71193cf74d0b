//! Arbitrary-precision exact rational scalar.
//!
//! Wraps `num_rational::BigRational`, which keeps values reduced with a
//! positive denominator. No floating point is ever constructed anywhere in
//! this crate; decimal literals are parsed exactly as p/10^k.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `num/den`. Panics if `den == 0`; use [`Rational::from_frac`]
    /// for fallible construction from untrusted input.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_frac(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Rounds to `digits` decimal places, half away from zero, exactly.
    pub fn round_decimals(&self, digits: u32) -> Self {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        // round half away from zero on |scaled|
        let num = scaled.numer().abs();
        let den = scaled.denom().clone(); // positive
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        let rounded = if &r * BigInt::from(2) >= den { q + BigInt::one() } else { q };
        let signed = if scaled.is_negative() { -rounded } else { rounded };
        Rational(BigRational::new(signed, scale))
    }

    /// Exact conversion to usize when the value is a small nonnegative integer.
    pub fn to_usize(&self) -> Option<usize> {
        if self.is_integer() {
            self.numer().to_usize()
        } else {
            None
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p` or `p/q` with arbitrary-precision integers, q > 0.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => {
                let n = BigInt::from_str(t).map_err(|_| bad())?;
                Ok(Rational::from_bigint(n))
            }
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if den <= BigInt::zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_bigint(BigInt::from(n))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_bigint(BigInt::from(n))
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_bigint(BigInt::from(n))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl DivAssign<&Rational> for Rational {
    fn div_assign(&mut self, rhs: &Rational) {
        self.0 /= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as \"p/q\", \"p\", or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_bigint(BigInt::from(v)))
            }
        }
        d.deserialize_any(V)
    }
}

/// Parses a decimal literal exactly into p/10^k, adjusted by an optional
/// exponent. Grammar: `[+-] digits [. digits] [(e|E) [+-] digits]` or
/// `[+-] . digits [...]`. Never constructs a float.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let bytes = s.as_bytes();
    let err = |pos: usize| Error::ParseDecimal { input: s.to_string(), position: pos };
    let mut i = 0;

    let mut negative = false;
    if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
        negative = bytes[i] == b'-';
        i += 1;
    }

    let int_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let int_digits = &s[int_start..i];

    let mut frac_digits = "";
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        frac_digits = &s[frac_start..i];
    }

    if int_digits.is_empty() && frac_digits.is_empty() {
        return Err(err(i.min(bytes.len().saturating_sub(1))));
    }

    let mut exponent: i64 = 0;
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        i += 1;
        let mut exp_neg = false;
        if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            exp_neg = bytes[i] == b'-';
            i += 1;
        }
        let exp_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if exp_start == i {
            return Err(err(i.min(bytes.len().saturating_sub(1))));
        }
        let e: i64 = s[exp_start..i]
            .parse()
            .map_err(|_| err(exp_start))?;
        exponent = if exp_neg { -e } else { e };
    }

    if i != bytes.len() {
        return Err(err(i));
    }

    let mut mantissa = BigInt::zero();
    for d in int_digits.bytes().chain(frac_digits.bytes()) {
        mantissa = mantissa * BigInt::from(10) + BigInt::from(d - b'0');
    }
    if negative {
        mantissa = -mantissa;
    }

    let shift = exponent - frac_digits.len() as i64;
    let ten = BigInt::from(10u32);
    let value = if shift >= 0 {
        BigRational::from_integer(mantissa * ten.pow(shift as u32))
    } else {
        BigRational::new(mantissa, ten.pow((-shift) as u32))
    };
    Ok(Rational(value))
}

/// Accepts `p/q`, integers, or decimal/scientific literals.
pub fn parse_rational_flexible(s: &str) -> Result<Rational> {
    if s.contains('/') {
        return s.parse();
    }
    match parse_decimal(s) {
        Ok(r) => Ok(r),
        Err(_) => s.parse(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_paper_entries() {
        assert_eq!(
            parse_decimal("3.4083657").unwrap(),
            Rational::new(34083657, 10000000)
        );
        assert_eq!(parse_decimal("0").unwrap(), Rational::zero());
        assert_eq!(
            parse_decimal("-0.5413665").unwrap(),
            Rational::new(-5413665, 10000000)
        );
    }

    #[test]
    fn decimal_scientific() {
        assert_eq!(parse_decimal("1.5e3").unwrap(), Rational::from(1500));
        assert_eq!(parse_decimal("2e-2").unwrap(), Rational::new(1, 50));
        assert_eq!(parse_decimal("-.25").unwrap(), Rational::new(-1, 4));
        assert_eq!(parse_decimal("+12.").unwrap(), Rational::from(12));
    }

    #[test]
    fn decimal_errors_carry_position() {
        match parse_decimal("1.2x3") {
            Err(Error::ParseDecimal { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal(".").is_err());
        assert!(parse_decimal("1e").is_err());
    }

    #[test]
    fn lowest_terms_invariant() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn round_half_away_from_zero() {
        let r = parse_decimal("0.123456").unwrap();
        assert_eq!(r.round_decimals(5), parse_decimal("0.12346").unwrap());
        let r = parse_decimal("-0.123455").unwrap();
        assert_eq!(r.round_decimals(5), parse_decimal("-0.12346").unwrap());
        let r = parse_decimal("0.123454").unwrap();
        assert_eq!(r.round_decimals(5), parse_decimal("0.12345").unwrap());
        // already short: unchanged
        let r = parse_decimal("1.25").unwrap();
        assert_eq!(r.round_decimals(5), parse_decimal("1.25").unwrap());
    }

    #[test]
    fn display_fromstr_roundtrip() {
        for s in ["0", "-3/2", "7", "34083657/10000000"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
    }
}
