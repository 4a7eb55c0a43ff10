//! Elements of the localization with left coefficients rational in `H`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::clifford::{add_into, Metric};
use crate::error::Error;
use crate::scalar::{RatH, Scalar};
use crate::weyl_clifford::{Monomial, Osp, WCElement};

/// `Σ φ_m(H)·m` with every coefficient written to the left of its monomial.
///
/// Moving a coefficient across a monomial obeys `m·φ(H) = φ(H + wt(m))·m`
/// where `wt(m) = |α| − |β|` (see [`Monomial::weight`]).
#[derive(Clone)]
pub struct HCoeffElement {
    metric: Arc<Metric>,
    terms: BTreeMap<Monomial, RatH>,
}

impl HCoeffElement {
    pub fn zero(metric: &Arc<Metric>) -> Self {
        HCoeffElement { metric: metric.clone(), terms: BTreeMap::new() }
    }

    pub fn one(metric: &Arc<Metric>) -> Self {
        Self::rath(metric, RatH::one())
    }

    /// `φ(H)·1`.
    pub fn rath(metric: &Arc<Metric>, f: RatH) -> Self {
        Self::term(metric, Monomial::ONE, f)
    }

    pub fn term(metric: &Arc<Metric>, m: Monomial, f: RatH) -> Self {
        let mut e = Self::zero(metric);
        e.add_term(m, &f);
        e
    }

    pub fn from_wc(a: &WCElement) -> Self {
        HCoeffElement {
            metric: a.metric().clone(),
            terms: a.terms().iter().map(|(m, c)| (*m, RatH::constant(c.clone()))).collect(),
        }
    }

    pub fn metric(&self) -> &Arc<Metric> {
        &self.metric
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RatH> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, f: &RatH) {
        add_into(&mut self.terms, m, f);
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.left_mul(&RatH::constant(s.clone()))
    }

    /// `φ(H)·self`.
    pub fn left_mul(&self, f: &RatH) -> Self {
        let mut out = Self::zero(&self.metric);
        for (m, g) in &self.terms {
            out.add_term(*m, &(f * g));
        }
        out
    }

    /// `self·φ(H)`.
    pub fn right_mul(&self, f: &RatH) -> Self {
        let mut out = Self::zero(&self.metric);
        for (m, g) in &self.terms {
            out.add_term(*m, &(g * &f.shift(m.weight())));
        }
        out
    }

    /// The coefficient functions are all polynomial in `H`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(RatH::is_polynomial)
    }

    /// Substitutes `H = −x^i∂_i − n/2` into polynomial coefficients.
    pub fn to_wc(&self) -> Option<WCElement> {
        let h = Osp::new(&self.metric).h;
        let mut out = WCElement::zero(&self.metric);
        for (m, f) in &self.terms {
            let p = f.as_polynomial()?;
            let mut value = WCElement::zero(&self.metric);
            for c in p.coeffs().iter().rev() {
                value = &(&value * &h) + &WCElement::scalar(&self.metric, c.clone());
            }
            out = &out + &(&value * &WCElement::monomial(&self.metric, *m, Scalar::one()));
        }
        Some(out)
    }

    fn check(&self, rhs: &Self) -> Result<(), Error> {
        if self.metric == rhs.metric {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (m, f) in &rhs.terms {
            out.add_term(*m, f);
        }
        Ok(out)
    }

    /// `(φ(H)m)(ψ(H)m') = φ(H)ψ(H + wt(m))·mm'`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check(rhs)?;
        let mut out = Self::zero(&self.metric);
        for (a, fa) in &self.terms {
            for (b, fb) in &rhs.terms {
                let coeff = fa * &fb.shift(a.weight());
                let prod = WCElement::monomial(&self.metric, *a, Scalar::one())
                    * WCElement::monomial(&self.metric, *b, Scalar::one());
                for (m, s) in prod.terms() {
                    out.add_term(*m, &coeff.scale(s));
                }
            }
        }
        Ok(out)
    }

    pub fn try_mul_wc(&self, rhs: &WCElement) -> Result<Self, Error> {
        self.try_mul(&Self::from_wc(rhs))
    }

    /// `ad(X)` modulo `A′X`: `[X, φ(H)m] ≡ φ(H−1)[X, m]`.
    pub fn ad_x_reduced(&self, osp: &Osp) -> Result<Self, Error> {
        let mut out = Self::zero(&self.metric);
        for (m, f) in &self.terms {
            let adm = osp.ad_x(&WCElement::monomial(&self.metric, *m, Scalar::one()))?;
            let g = f.shift(-1);
            for (mm, s) in adm.terms() {
                out.add_term(*mm, &g.scale(s));
            }
        }
        Ok(out)
    }

    /// `ad_r(Y)` modulo `g₋A′`: `[φ(H)m, Y] ≡ φ(H)[m, Y]`.
    pub fn ad_ry_reduced(&self, osp: &Osp) -> Result<Self, Error> {
        let mut out = Self::zero(&self.metric);
        for (m, f) in &self.terms {
            let adm = osp.ad_ry(&WCElement::monomial(&self.metric, *m, Scalar::one()))?;
            for (mm, s) in adm.terms() {
                out.add_term(*mm, &f.scale(s));
            }
        }
        Ok(out)
    }
}

impl PartialEq for HCoeffElement {
    fn eq(&self, other: &Self) -> bool {
        self.metric == other.metric && self.terms == other.terms
    }
}

impl Eq for HCoeffElement {}

impl fmt::Display for HCoeffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, g)| {
                if m.is_one() {
                    format!("({g})")
                } else if g.is_one() {
                    m.render()
                } else {
                    format!("({g})*{}", m.render())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HCoeffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &HCoeffElement {
    type Output = HCoeffElement;
    fn add(self, rhs: &HCoeffElement) -> HCoeffElement {
        self.try_add(rhs).expect("elements over different metrics")
    }
}

impl Sub for &HCoeffElement {
    type Output = HCoeffElement;
    fn sub(self, rhs: &HCoeffElement) -> HCoeffElement {
        self + &(-rhs)
    }
}

impl Neg for &HCoeffElement {
    type Output = HCoeffElement;
    fn neg(self) -> HCoeffElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul for &HCoeffElement {
    type Output = HCoeffElement;
    fn mul(self, rhs: &HCoeffElement) -> HCoeffElement {
        self.try_mul(rhs).expect("elements over different metrics")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::HPoly;

    #[test]
    fn coefficients_shift_across_monomials() {
        let m = Metric::euclidean(2).unwrap();
        let x1 = HCoeffElement::from_wc(&WCElement::x(&m, 0).unwrap());
        let h = HCoeffElement::rath(&m, RatH::h());
        // x·H = (H+1)·x
        assert_eq!(&x1 * &h, x1.left_mul(&RatH::h_plus(1)));
        let d1 = HCoeffElement::from_wc(&WCElement::d(&m, 0).unwrap());
        assert_eq!(&d1 * &h, d1.left_mul(&RatH::h_plus(-1)));
    }

    #[test]
    fn polynomial_coefficients_substitute_consistently() {
        let m = Metric::lorentzian(3).unwrap();
        let osp = Osp::new(&m);
        let x2 = WCElement::x(&m, 1).unwrap();
        let e = HCoeffElement::from_wc(&x2).left_mul(&RatH::poly(&HPoly::h_plus(1) * &HPoly::h()));
        let expected = &(&(&osp.h + &WCElement::one(&m)) * &osp.h) * &x2;
        assert_eq!(e.to_wc().unwrap(), expected);
        // Right multiplication agrees with the substituted product.
        let r = HCoeffElement::from_wc(&x2).right_mul(&RatH::h());
        assert_eq!(r.to_wc().unwrap(), &x2 * &osp.h);
    }
}
