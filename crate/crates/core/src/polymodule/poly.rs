//! Clifford-valued polynomials `V = Cl(η) ⊗ ℚ(c)[x¹,…,xⁿ]` and the action of
//! `W(2n|n)` on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::clifford::{add_into, coeff_alone, coeff_prefix, join_terms, one_based_to_internal, Blade, CliffordElement, Metric};
use crate::coset::HCoeffElement;
use crate::error::Error;
use crate::scalar::{Rational, Scalar};
use crate::weyl_clifford::monomial::{exps_add, exps_from_word, exps_to_word, exps_total, exps_unit, Exps, ZERO_EXPS};
use crate::weyl_clifford::{Monomial, WCElement};

/// Basis key of `V`: the monomial `x^α` and the blade `γ^S` to its right.
pub type PolyKey = (Exps, Blade);

/// `H` acts on the degree-`d` component by `−(d + n/2)`.
pub fn h_eigenvalue(d: usize, n: usize) -> Result<Scalar, Error> {
    if n == 0 {
        return Err(Error::InvalidDimension("n must be at least 1".into()));
    }
    Ok(Scalar::from(-(Rational::from(d) + Rational::frac(n as i64, 2))))
}

/// A finite sum `Σ x^α p_α` with `p_α` in the Clifford algebra.
#[derive(Clone)]
pub struct CliffordPolynomial {
    metric: Arc<Metric>,
    terms: BTreeMap<PolyKey, Scalar>,
}

impl CliffordPolynomial {
    pub fn zero(metric: &Arc<Metric>) -> Self {
        CliffordPolynomial { metric: metric.clone(), terms: BTreeMap::new() }
    }

    pub fn one(metric: &Arc<Metric>) -> Self {
        Self::term(metric, ZERO_EXPS, Blade::EMPTY, Scalar::one())
    }

    pub fn term(metric: &Arc<Metric>, alpha: Exps, blade: Blade, s: Scalar) -> Self {
        let mut p = Self::zero(metric);
        p.add_term((alpha, blade), &s);
        p
    }

    /// The constant polynomial `p`.
    pub fn constant(p: &CliffordElement) -> Self {
        Self::from_parts(p.metric(), [(ZERO_EXPS, p.clone())])
    }

    /// `Σ x^α p_α` from `(α, p_α)` pairs.
    pub fn from_parts(metric: &Arc<Metric>, parts: impl IntoIterator<Item = (Exps, CliffordElement)>) -> Self {
        let mut out = Self::zero(metric);
        for (alpha, p) in parts {
            for (b, s) in p.terms() {
                out.add_term((alpha, *b), s);
            }
        }
        out
    }

    pub fn from_terms(metric: &Arc<Metric>, terms: impl IntoIterator<Item = (PolyKey, Scalar)>) -> Self {
        let mut out = Self::zero(metric);
        for (k, s) in terms {
            out.add_term(k, &s);
        }
        out
    }

    /// `x^{i₁}⋯x^{i_m}`.
    pub fn x_word(metric: &Arc<Metric>, word: &[usize]) -> Result<Self, Error> {
        for &i in word {
            metric.check_index(i)?;
        }
        Ok(Self::term(metric, exps_from_word(word), Blade::EMPTY, Scalar::one()))
    }

    pub fn metric(&self) -> &Arc<Metric> {
        &self.metric
    }

    pub fn n(&self) -> usize {
        self.metric.n()
    }

    pub fn terms(&self) -> &BTreeMap<PolyKey, Scalar> {
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

    pub(crate) fn add_term(&mut self, key: PolyKey, s: &Scalar) {
        add_into(&mut self.terms, key, s);
    }

    pub fn coeff(&self, key: &PolyKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// The Clifford coefficient `p_α` of `x^α`.
    pub fn clifford_coeff(&self, alpha: &Exps) -> CliffordElement {
        let terms = self
            .terms
            .range((*alpha, Blade::EMPTY)..)
            .take_while(|((a, _), _)| a == alpha)
            .map(|((_, b), s)| (*b, s.clone()));
        CliffordElement::from_terms(&self.metric, terms)
    }

    /// `(α, p_α)` for every `α` that occurs.
    pub fn clifford_parts(&self) -> Vec<(Exps, CliffordElement)> {
        let mut parts: BTreeMap<Exps, Vec<(Blade, Scalar)>> = BTreeMap::new();
        for ((a, b), s) in &self.terms {
            parts.entry(*a).or_default().push((*b, s.clone()));
        }
        parts.into_iter().map(|(a, t)| (a, CliffordElement::from_terms(&self.metric, t))).collect()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.metric);
        }
        CliffordPolynomial { metric: self.metric.clone(), terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    /// Total degrees that occur, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|(a, _)| exps_total(a)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(a, _)| exps_total(a)).max()
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        CliffordPolynomial {
            metric: self.metric.clone(),
            terms: self.terms.iter().filter(|((a, _), _)| exps_total(a) == d).map(|(k, s)| (*k, s.clone())).collect(),
        }
    }

    /// `(d, component)` for every occurring degree.
    pub fn components(&self) -> Vec<(usize, Self)> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (k, s) in &self.terms {
            out.entry(exps_total(&k.0)).or_insert_with(|| Self::zero(&self.metric)).terms.insert(*k, s.clone());
        }
        out.into_iter().collect()
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
        for (k, s) in &other.terms {
            out.add_term(*k, s);
        }
        Ok(out)
    }

    /// `φ·p`: right multiplication by a Clifford element.
    pub fn right_mul(&self, p: &CliffordElement) -> Result<Self, Error> {
        if self.metric != *p.metric() {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.metric);
        for ((a, b), s) in &self.terms {
            for (pb, ps) in p.terms() {
                let sp = s * ps;
                for (blade, r) in self.metric.blade_mul(*b, *pb) {
                    out.add_term((*a, *blade), &sp.scale(r));
                }
            }
        }
        Ok(out)
    }

    /// `p·φ`: left multiplication by a Clifford element.
    pub fn left_mul(&self, p: &CliffordElement) -> Result<Self, Error> {
        if self.metric != *p.metric() {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.metric);
        for ((a, b), s) in &self.terms {
            for (pb, ps) in p.terms() {
                let sp = s * ps;
                for (blade, r) in self.metric.blade_mul(*pb, *b) {
                    out.add_term((*a, *blade), &sp.scale(r));
                }
            }
        }
        Ok(out)
    }

    /// Adds `s · (m · x^α γ^T)` into `out`: differentiate, multiply by `x`,
    /// multiply the Clifford part on the left.
    fn apply_monomial_term(&self, m: &Monomial, key: &PolyKey, s: &Scalar, out: &mut Self) {
        let (alpha, t) = key;
        let mut w = Rational::one();
        let mut rest = *alpha;
        for i in 0..self.n() {
            let (a, b) = (alpha[i] as i64, m.d[i] as i64);
            if a < b {
                return;
            }
            for j in 0..b {
                w *= &Rational::from_int(a - j);
            }
            rest[i] -= m.d[i];
        }
        let x = exps_add(&rest, &m.x);
        let sw = s.scale(&w);
        for (blade, r) in self.metric.blade_mul(m.g, *t) {
            out.add_term((x, *blade), &sw.scale(r));
        }
    }

    /// `a·φ` for `a ∈ W(2n|n)`.
    pub fn act(&self, a: &WCElement) -> Result<Self, Error> {
        if self.metric != *a.metric() {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.metric);
        for (m, c) in a.terms() {
            for (key, s) in &self.terms {
                self.apply_monomial_term(m, key, &(c * s), &mut out);
            }
        }
        Ok(out)
    }

    /// `a·φ` for `a = Σ f_m(H)·m`: each `f_m` is evaluated at the eigenvalue
    /// of `H` on the component that `m` maps into.
    pub fn act_h(&self, a: &HCoeffElement) -> Result<Self, Error> {
        let (out, poles) = self.act_h_partial(a)?;
        match poles.first() {
            None => Ok(out),
            Some(&degree) => Err(Error::PoleAtDegree {
                degree,
                eigenvalue: h_eigenvalue(degree, self.n())?.to_string(),
            }),
        }
    }

    /// Like [`Self::act_h`], but components of the result whose coefficient
    /// has a pole are dropped and their degrees returned.
    pub fn act_h_partial(&self, a: &HCoeffElement) -> Result<(Self, Vec<usize>), Error> {
        if self.metric != *a.metric() {
            return Err(Error::ContextMismatch);
        }
        let n = self.n();
        let comps = self.components();
        let mut by_degree: BTreeMap<usize, Self> = BTreeMap::new();
        let mut poles: Vec<usize> = Vec::new();
        for (m, f) in a.terms() {
            for (d, comp) in &comps {
                let target = *d as i64 + m.weight();
                if target < 0 {
                    continue;
                }
                let target = target as usize;
                let mut image = Self::zero(&self.metric);
                for (key, s) in &comp.terms {
                    self.apply_monomial_term(m, key, s, &mut image);
                }
                if image.is_zero() {
                    continue;
                }
                let Ok(value) = f.eval(&h_eigenvalue(target, n)?) else {
                    poles.push(target);
                    continue;
                };
                let slot = by_degree.entry(target).or_insert_with(|| Self::zero(&self.metric));
                for (key, s) in &image.terms {
                    slot.add_term(*key, &(s * &value));
                }
            }
        }
        poles.sort_unstable();
        poles.dedup();
        let mut out = Self::zero(&self.metric);
        for (d, part) in by_degree {
            if poles.binary_search(&d).is_err() {
                out.terms.extend(part.terms);
            }
        }
        Ok((out, poles))
    }

    /// `∂_i φ`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.metric);
        for ((a, b), s) in &self.terms {
            if a[i] > 0 {
                let mut a2 = *a;
                a2[i] -= 1;
                out.add_term((a2, *b), &s.scale(&Rational::from_int(a[i] as i64)));
            }
        }
        out
    }

    /// `x^i φ`.
    pub fn times_x(&self, i: usize) -> Self {
        let e = exps_unit(i);
        CliffordPolynomial {
            metric: self.metric.clone(),
            terms: self.terms.iter().map(|((a, b), s)| ((exps_add(a, &e), *b), s.clone())).collect(),
        }
    }

    /// `γ^i φ`.
    pub fn gamma_left(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.metric);
        for ((a, b), s) in &self.terms {
            for (blade, r) in self.metric.blade_mul(Blade::single(i), *b) {
                out.add_term((*a, *blade), &s.scale(r));
            }
        }
        out
    }

    /// The Dirac operator `γ^i ∂_i φ` (no constant prefactor).
    pub fn dirac(&self) -> Self {
        let mut out = Self::zero(&self.metric);
        for i in 0..self.n() {
            for (k, s) in self.partial(i).gamma_left(i).terms {
                out.add_term(k, &s);
            }
        }
        out
    }

    /// `X·φ = c γ^i ∂_i φ`.
    pub fn apply_x(&self) -> Self {
        self.dirac().scale(&Scalar::c())
    }

    /// `Y·φ = c γ^i x_i φ`.
    pub fn apply_y(&self) -> Self {
        let mut out = Self::zero(&self.metric);
        for i in 0..self.n() {
            let gi = self.gamma_left(i);
            for j in 0..self.n() {
                let e = self.metric.down(i, j);
                if e.is_zero() {
                    continue;
                }
                let coeff = Scalar::c().scale(e);
                for (k, s) in gi.times_x(j).terms {
                    out.add_term(k, &(&s * &coeff));
                }
            }
        }
        out
    }

    /// Annihilated by the Dirac operator.
    pub fn is_monogenic(&self) -> bool {
        self.dirac().is_zero()
    }

    pub fn to_json(&self) -> Vec<PolyTermJson> {
        self.terms
            .iter()
            .map(|((a, b), s)| PolyTermJson {
                alpha: a[..self.n()].iter().map(|&k| k as usize).collect(),
                gammas: b.indices().map(|i| i + 1).collect(),
                coeff: s.clone(),
            })
            .collect()
    }

    pub fn from_json(metric: &Arc<Metric>, terms: &[PolyTermJson]) -> Result<Self, Error> {
        let mut out = Self::zero(metric);
        for t in terms {
            if t.alpha.len() != metric.n() {
                return Err(Error::Parse(format!("alpha has {} entries, expected {}", t.alpha.len(), metric.n())));
            }
            let mut alpha = ZERO_EXPS;
            for (i, &k) in t.alpha.iter().enumerate() {
                alpha[i] = u8::try_from(k).map_err(|_| Error::Parse("exponent too large".into()))?;
            }
            let g = one_based_to_internal(metric, &t.gammas)?;
            let p = CliffordElement::word(metric, &g)?.scale(&t.coeff);
            out = out.try_add(&Self::from_parts(metric, [(alpha, p)]))?;
        }
        Ok(out)
    }

    /// LaTeX rendering grouped by monomial: `(x^{1})^{2}(\tfrac{1}{2}\gamma^{1}\gamma^{3})`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .clifford_parts()
            .into_iter()
            .map(|(a, p)| {
                let mono: String = exps_to_word(&a)
                    .chunk_by(|x, y| x == y)
                    .map(|run| match run.len() {
                        1 => format!("x^{{{}}}", run[0] + 1),
                        k => format!("(x^{{{}}})^{{{k}}}", run[0] + 1),
                    })
                    .collect();
                let cl: Vec<String> = p
                    .terms()
                    .iter()
                    .map(|(b, s)| {
                        let g: String = b.indices().map(|i| format!("\\gamma^{{{}}}", i + 1)).collect();
                        format!("{}{}", latex_scalar(s), g)
                    })
                    .collect();
                format!("{mono}\\left({}\\right)", cl.join(" + "))
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn latex_scalar(s: &Scalar) -> String {
    let r = |q: &Rational| {
        if q.is_integer() {
            q.to_string()
        } else {
            let sign = if q.is_negative() { "-" } else { "" };
            format!("{sign}\\tfrac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
        }
    };
    match (s.re.is_zero(), s.cc.is_zero()) {
        (_, true) => r(&s.re),
        (true, false) => format!("{}c", r(&s.cc)),
        (false, false) => format!("({} + {}c)", r(&s.re), r(&s.cc)),
    }
}

/// JSON form of one term: exponent vector, 1-based blade, coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub alpha: Vec<usize>,
    pub gammas: Vec<usize>,
    pub coeff: Scalar,
}

impl PartialEq for CliffordPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.metric == other.metric && self.terms == other.terms
    }
}

impl Eq for CliffordPolynomial {}

/// `coeff*x1^2*x3*g1*g2` terms joined with signs.
impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self.terms.iter().map(|((a, b), c)| {
            let m = Monomial::new(*a, ZERO_EXPS, *b);
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

impl fmt::Debug for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.try_add(rhs).expect("polynomials over different metrics")
    }
}

impl Sub for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_clifford::Osp;

    #[test]
    fn h_acts_by_minus_half_n_on_one() {
        let m = Metric::euclidean(3).unwrap();
        let h = Osp::new(&m).h;
        let one = CliffordPolynomial::one(&m);
        assert_eq!(one.act(&h).unwrap(), one.scale(&Scalar::frac(-3, 2)));
        assert_eq!(h_eigenvalue(0, 4).unwrap(), Scalar::from_int(-2));
        assert_eq!(h_eigenvalue(2, 3).unwrap(), Scalar::frac(-7, 2));
        assert!(h_eigenvalue(0, 0).is_err());
    }

    #[test]
    fn x_on_a_coordinate() {
        let m = Metric::lorentzian(3).unwrap();
        let x1 = CliffordPolynomial::x_word(&m, &[0]).unwrap();
        let expected = CliffordPolynomial::constant(&CliffordElement::gamma(&m, 0).unwrap()).scale(&Scalar::c());
        assert_eq!(x1.act(&Osp::new(&m).x).unwrap(), expected);
        assert_eq!(x1.apply_x(), expected);
    }

    #[test]
    fn derivative_of_square() {
        let m = Metric::euclidean(2).unwrap();
        let sq = CliffordPolynomial::x_word(&m, &[0, 0]).unwrap();
        let d1 = WCElement::d(&m, 0).unwrap();
        assert_eq!(sq.act(&d1).unwrap(), CliffordPolynomial::x_word(&m, &[0]).unwrap().scale(&Scalar::from_int(2)));
    }

    #[test]
    fn y_matches_the_algebra_element() {
        let m = Metric::offdiag(3).unwrap();
        let v = &CliffordPolynomial::x_word(&m, &[0, 2]).unwrap()
            + &CliffordPolynomial::constant(&CliffordElement::word(&m, &[1, 2]).unwrap());
        assert_eq!(v.apply_y(), v.act(&Osp::new(&m).y).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let m = Metric::lorentzian(2).unwrap();
        let v = &CliffordPolynomial::x_word(&m, &[0, 1, 1]).unwrap().scale(&Scalar::frac(1, 3))
            + &CliffordPolynomial::constant(&CliffordElement::word(&m, &[1, 0]).unwrap().scale(&Scalar::c()));
        assert_eq!(CliffordPolynomial::from_json(&m, &v.to_json()).unwrap(), v);
    }
}
