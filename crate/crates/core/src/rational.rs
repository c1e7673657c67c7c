//! Exact rational scalars.
//!
//! `Rational` is the only number type in the library. Values are kept in
//! canonical form (reduced, positive denominator, zero as 0/1) so equality
//! is structural and reports are deterministic. There is no rounding
//! anywhere: a residual is zero or it is not.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Fails on a zero denominator.
    pub fn new<N, D>(num: N, den: D) -> Result<Self, Error>
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_int<N: Into<BigInt>>(n: N) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact division; dividing by zero is an error.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
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

/// Text form: `p` or `p/q`, optional leading `-` on `p` only, `q > 0`.
/// Rejects `1/0`, `1/-2`, signs on `q`, `+` signs, whitespace, empty input.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |reason: &'static str| Error::BadRational {
            input: s.to_string(),
            reason,
        };
        let (num_part, den_part) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = parse_int_part(num_part, true).ok_or_else(|| bad("malformed numerator"))?;
        let den = match den_part {
            None => BigInt::one(),
            Some(d) => {
                let d = parse_int_part(d, false).ok_or_else(|| bad("malformed denominator"))?;
                if d.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                d
            }
        };
        Ok(Rational(BigRational::new(num, den)))
    }
}

fn parse_int_part(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mag: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -mag } else { mag })
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

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

impl Rational {
    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Rational::new(2, 4).unwrap(), r("1/2"));
        assert_eq!(Rational::new(3, -3).unwrap(), r("-1"));
        assert_eq!(Rational::new(0, 7).unwrap(), Rational::zero());
        assert_eq!(Rational::new(0, 7).unwrap().to_string(), "0");
        assert_eq!(Rational::new(-4, -6).unwrap().to_string(), "2/3");
        assert_eq!(Rational::new(1, 0i64), Err(Error::ZeroDenominator));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(r("5").to_string(), "5");
        assert_eq!(r("-5/10").to_string(), "-1/2");
        assert_eq!(r("0").to_string(), "0");
        for bad in [
            "", "1/0", "1/-2", "+3", "3/+2", " 1", "1 ", "a", "1/2/3", "-", "1/",
        ] {
            assert!(bad.parse::<Rational>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "7", "-7", "22/7", "-22/7"] {
            assert_eq!(r(s).to_string(), s);
        }
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&r("1/2") + &r("1/3"), r("5/6"));
        assert_eq!(&r("1/2") - &r("1/2"), Rational::zero());
        assert_eq!(&r("2/3") * &r("3/4"), r("1/2"));
        assert_eq!(r("1/2").checked_div(&r("1/4")).unwrap(), r("2"));
        assert_eq!(
            r("1").checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(-r("1/2"), r("-1/2"));
    }
}
