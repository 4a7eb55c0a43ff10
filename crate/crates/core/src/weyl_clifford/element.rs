//! Elements of `W(2n|n)` in normal order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::{exps_add, exps_from_word, exps_to_word, exps_unit, reorder_d_x, Exps, Monomial, ZERO_EXPS};
use crate::clifford::{add_into, coeff_alone, coeff_prefix, join_terms, one_based_to_internal, Blade, IndexKind, Metric};
use crate::error::Error;
use crate::scalar::{Rational, Scalar};

/// A finite `Scalar` combination of normal-ordered monomials.
#[derive(Clone)]
pub struct WCElement {
    metric: Arc<Metric>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl WCElement {
    pub fn zero(metric: &Arc<Metric>) -> Self {
        WCElement { metric: metric.clone(), terms: BTreeMap::new() }
    }

    pub fn one(metric: &Arc<Metric>) -> Self {
        Self::scalar(metric, Scalar::one())
    }

    pub fn scalar(metric: &Arc<Metric>, s: Scalar) -> Self {
        Self::monomial(metric, Monomial::ONE, s)
    }

    pub fn monomial(metric: &Arc<Metric>, m: Monomial, s: Scalar) -> Self {
        let mut e = Self::zero(metric);
        e.add_term(m, &s);
        e
    }

    pub fn from_terms(metric: &Arc<Metric>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut e = Self::zero(metric);
        for (m, s) in terms {
            e.add_term(m, &s);
        }
        e
    }

    /// `x^i`.
    pub fn x(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        metric.check_index(i)?;
        Ok(Self::monomial(metric, Monomial::new(exps_unit(i), ZERO_EXPS, Blade::EMPTY), Scalar::one()))
    }

    /// `∂_i`.
    pub fn d(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        metric.check_index(i)?;
        Ok(Self::monomial(metric, Monomial::new(ZERO_EXPS, exps_unit(i), Blade::EMPTY), Scalar::one()))
    }

    /// `γ^i`.
    pub fn gamma(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        metric.check_index(i)?;
        Ok(Self::monomial(metric, Monomial::new(ZERO_EXPS, ZERO_EXPS, Blade::single(i)), Scalar::one()))
    }

    /// `x_i = η_{ij} x^j`.
    pub fn x_down(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        Self::combine(metric, IndexKind::XDown, i, Self::x)
    }

    /// `∂^i = η^{ij} ∂_j`.
    pub fn d_up(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        Self::combine(metric, IndexKind::DelUp, i, Self::d)
    }

    /// `γ_i = η_{ij} γ^j`.
    pub fn gamma_down(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        Self::combine(metric, IndexKind::GammaDown, i, Self::gamma)
    }

    fn combine(
        metric: &Arc<Metric>,
        kind: IndexKind,
        i: usize,
        gen: fn(&Arc<Metric>, usize) -> Result<Self, Error>,
    ) -> Result<Self, Error> {
        let mut e = Self::zero(metric);
        for (j, r) in metric.lower_raise(kind, i)? {
            e = &e + &gen(metric, j)?.scale(&r.into());
        }
        Ok(e)
    }

    /// `x^{i₁}⋯x^{i_m}`.
    pub fn x_word(metric: &Arc<Metric>, word: &[usize]) -> Result<Self, Error> {
        for &i in word {
            metric.check_index(i)?;
        }
        Ok(Self::monomial(metric, Monomial::new(exps_from_word(word), ZERO_EXPS, Blade::EMPTY), Scalar::one()))
    }

    pub fn metric(&self) -> &Arc<Metric> {
        &self.metric
    }

    pub fn n(&self) -> usize {
        self.metric.n()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
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

    pub(crate) fn add_term(&mut self, m: Monomial, s: &Scalar) {
        add_into(&mut self.terms, m, s);
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.metric);
        }
        WCElement { metric: self.metric.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    /// Parity of a homogeneous element; `None` when mixed or zero.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Even and odd parts.
    pub fn split_parity(&self) -> (Self, Self) {
        let mut even = Self::zero(&self.metric);
        let mut odd = Self::zero(&self.metric);
        for (m, c) in &self.terms {
            if m.parity() == 0 { &mut even } else { &mut odd }.terms.insert(*m, c.clone());
        }
        (even, odd)
    }

    /// Longest monomial, in generator letters.
    pub fn max_word_length(&self) -> usize {
        self.terms.keys().map(Monomial::word_length).max().unwrap_or(0)
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
        let (mut out, other) =
            if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.try_add(&-rhs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check(rhs)?;
        let mut out = Self::zero(&self.metric);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let c = ca * cb;
                for (m, w) in monomial_product(&self.metric, a, b) {
                    out.add_term(m, &c.scale(&w));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.metric), |acc, _| &acc * self)
    }

    /// Super-commutator `ab − (−1)^{|a||b|} ba`, extended bilinearly over
    /// the parity decomposition.
    pub fn supercommutator(&self, rhs: &Self) -> Result<Self, Error> {
        self.check(rhs)?;
        let (ae, ao) = self.split_parity();
        let (be, bo) = rhs.split_parity();
        // ab − b·a_even − b_even·a_odd + b_odd·a_odd
        let mut out = self.try_mul(rhs)?;
        out = out.try_sub(&rhs.try_mul(&ae)?)?;
        out = out.try_sub(&be.try_mul(&ao)?)?;
        out.try_add(&bo.try_mul(&ao)?)
    }

    pub fn to_json(&self) -> Vec<WCTermJson> {
        self.terms
            .iter()
            .map(|(m, c)| WCTermJson {
                x: exps_to_word(&m.x).into_iter().map(|i| i + 1).collect(),
                d: exps_to_word(&m.d).into_iter().map(|i| i + 1).collect(),
                gammas: m.g.indices().map(|i| i + 1).collect(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_json(metric: &Arc<Metric>, terms: &[WCTermJson]) -> Result<Self, Error> {
        let mut e = Self::zero(metric);
        for t in terms {
            let x = one_based_to_internal(metric, &t.x)?;
            let d = one_based_to_internal(metric, &t.d)?;
            let g = one_based_to_internal(metric, &t.gammas)?;
            let mut term = Self::monomial(
                metric,
                Monomial::new(exps_from_word(&x), exps_from_word(&d), Blade::EMPTY),
                t.coeff.clone(),
            );
            for i in g {
                term = term.try_mul(&Self::gamma(metric, i)?)?;
            }
            e = e.try_add(&term)?;
        }
        Ok(e)
    }
}

/// JSON form of one term: 1-based index words for `x`, `∂` and `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WCTermJson {
    pub x: Vec<usize>,
    pub d: Vec<usize>,
    pub gammas: Vec<usize>,
    pub coeff: Scalar,
}

/// `(x^α ∂^β γ^S)(x^α' ∂^β' γ^S')` in normal order. The `γ`'s are even
/// with respect to `x` and `∂`, so only `∂^β x^α'` needs reordering.
pub(crate) fn monomial_product(metric: &Metric, a: &Monomial, b: &Monomial) -> Vec<(Monomial, Rational)> {
    let gammas = metric.blade_mul(a.g, b.g);
    if gammas.is_empty() {
        return Vec::new();
    }
    let reordered: Vec<(Exps, Exps, Rational)> = if a.d == ZERO_EXPS || b.x == ZERO_EXPS {
        vec![(b.x, a.d, Rational::one())]
    } else {
        reorder_d_x(&a.d, &b.x, metric.n())
    };
    let mut out = Vec::with_capacity(reordered.len() * gammas.len());
    for (xs, ds, w) in reordered {
        let x = exps_add(&a.x, &xs);
        let d = exps_add(&ds, &b.d);
        for (g, r) in gammas {
            out.push((Monomial::new(x, d, *g), &w * r));
        }
    }
    out
}

impl PartialEq for WCElement {
    fn eq(&self, other: &Self) -> bool {
        self.metric == other.metric && self.terms == other.terms
    }
}

impl Eq for WCElement {}

/// Parseable rendering: `(1/2)*x1^2*d2*g1 - c*g3`.
impl fmt::Display for WCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self.terms.iter().map(|(m, c)| {
            if m.is_one() {
                coeff_alone(c)
            } else {
                let (neg, prefix) = coeff_prefix(c);
                (neg, format!("{prefix}{}", m.render()))
            }
        }));
        write!(f, "{s}")
    }
}

impl fmt::Debug for WCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Mul for &WCElement {
    type Output = WCElement;
    fn mul(self, rhs: &WCElement) -> WCElement {
        self.try_mul(rhs).expect("elements over different metrics")
    }
}

impl Add for &WCElement {
    type Output = WCElement;
    fn add(self, rhs: &WCElement) -> WCElement {
        self.try_add(rhs).expect("elements over different metrics")
    }
}

impl Sub for &WCElement {
    type Output = WCElement;
    fn sub(self, rhs: &WCElement) -> WCElement {
        self.try_sub(rhs).expect("elements over different metrics")
    }
}

impl Neg for &WCElement {
    type Output = WCElement;
    fn neg(self) -> WCElement {
        self.scale(&Scalar::from_int(-1))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<WCElement> for WCElement {
            type Output = WCElement;
            fn $method(self, rhs: WCElement) -> WCElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&WCElement> for WCElement {
            type Output = WCElement;
            fn $method(self, rhs: &WCElement) -> WCElement {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
