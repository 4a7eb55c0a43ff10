//! The quadratic field Q(c) with c² = −1/2.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::Error;

/// `re + cc·c` where `c² = −1/2`; `c` plays the role of `i/√2`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Scalar {
    pub re: Rational,
    #[serde(rename = "c")]
    pub cc: Rational,
}

impl Scalar {
    pub fn new(re: Rational, cc: Rational) -> Self {
        Scalar { re, cc }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Rational::one().into()
    }

    /// The generator `c`.
    pub fn c() -> Self {
        Scalar { re: Rational::zero(), cc: Rational::one() }
    }

    pub fn from_int(v: i64) -> Self {
        Rational::from_int(v).into()
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Rational::frac(num, den).into()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.cc.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.cc.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.cc.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.re)
    }

    /// Integer value, when this is a rational integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        self.as_rational().and_then(Rational::to_i64)
    }

    /// Conjugate `re − cc·c`.
    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), cc: -&self.cc }
    }

    /// `(re + cc·c)(re − cc·c) = re² + cc²/2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &(&self.cc * &self.cc) * &Rational::frac(1, 2)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.cc.is_zero() {
            return Ok(self.re.inv()?.into());
        }
        let n = self.norm().inv()?;
        Ok(Scalar { re: &self.re * &n, cc: -(&self.cc * &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Scalar::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Scalar { re: &self.re * r, cc: &self.cc * r }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Scalar { re: &self.re + &rhs.re, cc: &self.cc + &rhs.cc }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Scalar { re: &self.re - &rhs.re, cc: &self.cc - &rhs.cc }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.cc.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.cc.is_zero() {
            return self.scale(&rhs.re);
        }
        let bb = &self.cc * &rhs.cc;
        Scalar {
            re: &self.re * &rhs.re - &bb * &Rational::frac(1, 2),
            cc: &self.re * &rhs.cc + &self.cc * &rhs.re,
        }
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero scalar")
    }

    fn neg_ref(&self) -> Self {
        Scalar { re: -&self.re, cc: -&self.cc }
    }
}

impl From<Rational> for Scalar {
    fn from(re: Rational) -> Self {
        Scalar { re, cc: Rational::zero() }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.cc.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*c", self.cc),
            (false, false) if self.cc.is_negative() => {
                write!(f, "{} - {}*c", self.re, -&self.cc)
            }
            (false, false) => write!(f, "{} + {}*c", self.re, self.cc),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the rendering produced by `Display`: `a`, `b*c`, `a + b*c`, `a - b*c`.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar `{s}`"));
        let c_part = |t: &str| -> Result<Rational, Error> {
            let t = t.trim();
            if t == "c" {
                return Ok(Rational::one());
            }
            t.strip_suffix("*c").ok_or_else(bad)?.parse()
        };
        if !s.ends_with('c') {
            return Ok(s.parse::<Rational>()?.into());
        }
        // Search for a binary +/- separating the two parts (skip a leading sign).
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(i, ch)| (ch == '+' || ch == '-') && s[..i].ends_with(' '))
            .last();
        match split {
            Some((i, ch)) => {
                let re: Rational = s[..i].parse()?;
                let mut cc = c_part(&s[i + 1..])?;
                if ch == '-' {
                    cc = -cc;
                }
                Ok(Scalar { re, cc })
            }
            None => Ok(Scalar { re: Rational::zero(), cc: c_part(s)? }),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$imp(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$imp(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.cc += &rhs.cc;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.cc -= &rhs.cc;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}
