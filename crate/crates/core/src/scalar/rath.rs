//! Rational functions of `H`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{HPoly, Scalar};
use crate::error::Error;

/// `num(H) / den(H)` with `den` monic and coprime to `num`. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatH {
    num: HPoly,
    den: HPoly,
}

impl RatH {
    pub fn new(num: HPoly, den: HPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: HPoly, den: HPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lead = den.leading().expect("nonzero denominator").inv().expect("nonzero");
        let (num, den) = (num.scale(&lead), den.scale(&lead));
        if den.degree() == Some(0) {
            return RatH { num, den };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return RatH { num, den };
        }
        let (num, _) = num.div_rem(&g).expect("nonzero gcd");
        let (den, _) = den.div_rem(&g).expect("nonzero gcd");
        RatH { num, den }
    }

    pub fn zero() -> Self {
        RatH { num: HPoly::zero(), den: HPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(s: impl Into<Scalar>) -> Self {
        Self::poly(HPoly::constant(s.into()))
    }

    pub fn poly(p: HPoly) -> Self {
        RatH { num: p, den: HPoly::one() }
    }

    /// The indeterminate `H`.
    pub fn h() -> Self {
        Self::poly(HPoly::h())
    }

    /// `H + k`.
    pub fn h_plus(k: impl Into<Scalar>) -> Self {
        Self::poly(HPoly::h_plus(k))
    }

    pub fn numer(&self) -> &HPoly {
        &self.num
    }

    pub fn denom(&self) -> &HPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&HPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        self.as_polynomial().and_then(HPoly::as_constant)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatH { num: self.num.scale(s), den: self.den.clone() }
    }

    /// `f(H + k)`.
    pub fn shift(&self, k: impl Into<Scalar>) -> Self {
        let k = k.into();
        if k.is_zero() || self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            return self.clone();
        }
        // Substitution preserves coprimality and monicity.
        RatH { num: self.num.shift(&k), den: self.den.shift(&k) }
    }

    /// Exact value at `H = t`, or a pole error naming `t`.
    pub fn eval(&self, t: &Scalar) -> Result<Scalar, Error> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::Pole { at: t.to_string() });
        }
        Ok(self.num.eval(t).checked_div(&d).expect("nonzero denominator"))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(RatH::one(), |acc, _| &acc * self)
    }
}

impl Default for RatH {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Scalar> for RatH {
    fn from(s: Scalar) -> Self {
        RatH::constant(s)
    }
}

impl From<HPoly> for RatH {
    fn from(p: HPoly) -> Self {
        RatH::poly(p)
    }
}

impl Add for &RatH {
    type Output = RatH;
    fn add(self, rhs: &RatH) -> RatH {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatH::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatH::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatH {
    type Output = RatH;
    fn sub(self, rhs: &RatH) -> RatH {
        self + &(-rhs)
    }
}

impl Neg for &RatH {
    type Output = RatH;
    fn neg(self) -> RatH {
        RatH { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatH {
    type Output = RatH;
    fn mul(self, rhs: &RatH) -> RatH {
        if self.is_zero() || rhs.is_zero() {
            return RatH::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatH::poly(&self.num * &rhs.num);
        }
        RatH::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatH {
    type Output = RatH;
    fn div(self, rhs: &RatH) -> RatH {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RatH> for RatH {
            type Output = RatH;
            fn $method(self, rhs: RatH) -> RatH {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatH> for RatH {
            type Output = RatH;
            fn $method(self, rhs: &RatH) -> RatH {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl std::ops::AddAssign<&RatH> for RatH {
    fn add_assign(&mut self, rhs: &RatH) {
        *self = &*self + rhs;
    }
}

impl Neg for RatH {
    type Output = RatH;
    fn neg(self) -> RatH {
        -&self
    }
}

impl fmt::Display for RatH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &HPoly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|a| !a.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RatHJson {
    num: Vec<Scalar>,
    den: Vec<Scalar>,
}

impl Serialize for RatH {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatHJson { num: self.num.coeffs().to_vec(), den: self.den.coeffs().to_vec() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatH {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RatHJson::deserialize(deserializer)?;
        RatH::new(HPoly::new(raw.num), HPoly::new(raw.den)).map_err(serde::de::Error::custom)
    }
}
