//! Denominator-cleared generators acting on monogenics, and the closed form
//! of their products.

use std::sync::Arc;

use super::bracket::{bracket, BracketSpec};
use crate::clifford::{CliffordElement, Metric};
use crate::coset::HCoeffElement;
use crate::error::Error;
use crate::polymodule::CliffordPolynomial;
use crate::scalar::{HPoly, RatH, Scalar};
use crate::weyl_clifford::WCElement;

/// `F̃ = x_k x^k`.
pub fn f_tilde(metric: &Arc<Metric>) -> WCElement {
    (0..metric.n()).fold(WCElement::zero(metric), |acc, k| {
        &acc + &(WCElement::x_down(metric, k).expect("in range") * WCElement::x(metric, k).expect("in range"))
    })
}

/// `Ỹ = x_k γ^k`.
pub fn y_tilde(metric: &Arc<Metric>) -> WCElement {
    (0..metric.n()).fold(WCElement::zero(metric), |acc, k| {
        &acc + &(WCElement::x_down(metric, k).expect("in range") * WCElement::gamma(metric, k).expect("in range"))
    })
}

/// `x̂^i = (H+1)x^i + ½γ^j x_j γ^i + ½x^j x_j ∂^i`.
pub fn hat_x(metric: &Arc<Metric>, i: usize) -> Result<HCoeffElement, Error> {
    let lead = HCoeffElement::from_wc(&WCElement::x(metric, i)?).left_mul(&RatH::h_plus(1));
    let g = WCElement::gamma(metric, i)?;
    let di = WCElement::d_up(metric, i)?;
    let mut rest = WCElement::zero(metric);
    for j in 0..metric.n() {
        let xj = WCElement::x_down(metric, j)?;
        rest = &rest + &(&(&WCElement::gamma(metric, j)? * &xj) * &g);
        rest = &rest + &(&(&WCElement::x(metric, j)? * &xj) * &di);
    }
    lead.try_add(&HCoeffElement::from_wc(&rest.scale(&Scalar::frac(1, 2))))
}

/// `γ̂^i = (H+1)γ^i + γ^j x_j ∂^i`.
pub fn hat_gamma(metric: &Arc<Metric>, i: usize) -> Result<HCoeffElement, Error> {
    hat_gamma_with_sign(metric, i, 1)
}

/// `(H+1)γ^i ± γ^j x_j ∂^i`. Only the `+` sign preserves monogenics; the
/// other sign is kept so that tests can show it does not.
pub fn hat_gamma_with_sign(metric: &Arc<Metric>, i: usize, sign: i64) -> Result<HCoeffElement, Error> {
    let lead = HCoeffElement::from_wc(&WCElement::gamma(metric, i)?).left_mul(&RatH::h_plus(1));
    let di = WCElement::d_up(metric, i)?;
    let mut rest = WCElement::zero(metric);
    for j in 0..metric.n() {
        rest = &rest + &(&(&WCElement::gamma(metric, j)? * &WCElement::x_down(metric, j)?) * &di);
    }
    lead.try_add(&HCoeffElement::from_wc(&rest.scale(&Scalar::from_int(sign))))
}

/// `∂̂_i = ∂_i`.
pub fn hat_del(metric: &Arc<Metric>, i: usize) -> Result<HCoeffElement, Error> {
    Ok(HCoeffElement::from_wc(&WCElement::d(metric, i)?))
}

/// `1/(1 − n/2)`, undefined for `n = 2`.
pub fn tilde_factor(n: usize) -> Result<Scalar, Error> {
    (Scalar::one() - Scalar::frac(n as i64, 2)).inv().map_err(|_| Error::TildeUndefined)
}

/// `γ̃^i = γ̂^i / (1 − n/2)`.
pub fn tilde_gamma(metric: &Arc<Metric>, i: usize) -> Result<HCoeffElement, Error> {
    Ok(hat_gamma(metric, i)?.scale(&tilde_factor(metric.n())?))
}

/// `p̃ = Σ_S c_S γ̃^{s₁}⋯γ̃^{s_r}` for `p = Σ_S c_S γ^{s₁}⋯γ^{s_r}`.
pub fn tilde_p(p: &CliffordElement) -> Result<HCoeffElement, Error> {
    let metric = p.metric();
    let mut out = HCoeffElement::zero(metric);
    for (blade, c) in p.terms() {
        let mut word = HCoeffElement::one(metric);
        for i in blade.indices() {
            word = word.try_mul(&tilde_gamma(metric, i)?)?;
        }
        out = out.try_add(&word.scale(c))?;
    }
    Ok(out)
}

/// The operators exposed on monogenics.
#[derive(Clone, Debug, PartialEq)]
pub enum HatOperator {
    X(usize),
    Gamma(usize),
    Del(usize),
    TildeGamma(usize),
    TildeP(CliffordElement),
}

impl HatOperator {
    /// The operator as an element with left `H`-coefficients.
    pub fn element(&self, metric: &Arc<Metric>) -> Result<HCoeffElement, Error> {
        match self {
            HatOperator::X(i) => hat_x(metric, *i),
            HatOperator::Gamma(i) => hat_gamma(metric, *i),
            HatOperator::Del(i) => hat_del(metric, *i),
            HatOperator::TildeGamma(i) => tilde_gamma(metric, *i),
            HatOperator::TildeP(p) => {
                if p.metric() != metric {
                    return Err(Error::ContextMismatch);
                }
                tilde_p(p)
            }
        }
    }

    /// Applies the operator without checking that `v` is monogenic.
    /// `p̃` is applied as the composition of its `γ̃` factors, rightmost first.
    pub fn apply_unchecked(&self, v: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
        let metric = v.metric();
        match self {
            HatOperator::TildeP(p) => {
                if p.metric() != metric {
                    return Err(Error::ContextMismatch);
                }
                let mut out = CliffordPolynomial::zero(metric);
                for (blade, c) in p.terms() {
                    let idx: Vec<usize> = blade.indices().collect();
                    let mut w = v.clone();
                    for &i in idx.iter().rev() {
                        w = w.act_h(&tilde_gamma(metric, i)?)?;
                    }
                    out = &out + &w.scale(c);
                }
                Ok(out)
            }
            _ => v.act_h(&self.element(metric)?),
        }
    }
}

/// Applies a hat operator to a monogenic `v`.
pub fn hat_apply(op: &HatOperator, v: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
    if !v.is_monogenic() {
        return Err(Error::NotASolution);
    }
    op.apply_unchecked(v)
}

/// `x̂^{i₁}(x̂^{i₂}(⋯ x̂^{i_m}·v))`.
pub fn hat_x_word_apply(indices: &[usize], v: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
    let mut w = v.clone();
    for &i in indices.iter().rev() {
        w = w.act_h(&hat_x(v.metric(), i)?)?;
    }
    Ok(w)
}

/// `(H+1)⋯(H+m) x^{i₁}⋯x^{i_m} + Σ_{q=1}^{m} (Π_{k=q+1}^{m}(H+k)/2^q) F̃^{q−1}(Ỹ S¹_q + F̃ S⁰_q)`
/// with `S⁰_q = Σ_{t=0}^{q} [η^t x^{m−q−t} ∂^{q−t}]` and
/// `S¹_q = Σ_{t=0}^{q−1} [η^t x^{m−q−t} γ ∂^{q−1−t}]`.
pub fn hat_product_closed_form(metric: &Arc<Metric>, indices: &[usize]) -> Result<HCoeffElement, Error> {
    let m = indices.len();
    let f = f_tilde(metric);
    let y = y_tilde(metric);
    let mut out = HCoeffElement::from_wc(&WCElement::x_word(metric, indices)?)
        .left_mul(&RatH::poly(HPoly::rising(1, m as i64)));
    let mut f_pow = WCElement::one(metric);
    for q in 1..=m {
        let mut s0 = WCElement::zero(metric);
        for t in 0..=q {
            let x = m as i32 - q as i32 - t as i32;
            s0 = &s0 + &bracket(metric, &BracketSpec::new(t, x, 0, q - t, indices))?;
        }
        let mut s1 = WCElement::zero(metric);
        for t in 0..q {
            let x = m as i32 - q as i32 - t as i32;
            s1 = &s1 + &bracket(metric, &BracketSpec::new(t, x, 1, q - 1 - t, indices))?;
        }
        let inner = &(&y * &s1) + &(&f * &s0);
        let coeff = RatH::poly(HPoly::rising(q as i64 + 1, m as i64)).scale(&Scalar::frac(1, 1 << q));
        out = out.try_add(&HCoeffElement::from_wc(&(&f_pow * &inner)).left_mul(&coeff))?;
        f_pow = &f_pow * &f;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hat_x_on_one() {
        let m = Metric::euclidean(4).unwrap();
        let one = CliffordPolynomial::one(&m);
        let got = hat_apply(&HatOperator::X(0), &one).unwrap();
        // −(n/2)x¹ + ½x_kγ^kγ¹
        let mut expected = CliffordPolynomial::x_word(&m, &[0]).unwrap().scale(&Scalar::from_int(-2));
        for k in 0..4 {
            let t = CliffordPolynomial::x_word(&m, &[k])
                .unwrap()
                .right_mul(&CliffordElement::word(&m, &[k, 0]).unwrap())
                .unwrap()
                .scale(&Scalar::frac(1, 2));
            expected = &expected + &t;
        }
        assert_eq!(got, expected);
        assert!(got.is_monogenic());
    }

    #[test]
    fn hat_gamma_on_constants() {
        let m = Metric::offdiag(3).unwrap();
        let p = CliffordPolynomial::constant(&CliffordElement::word(&m, &[1, 2]).unwrap());
        let got = hat_apply(&HatOperator::Gamma(0), &p).unwrap();
        assert_eq!(got, p.left_mul(&CliffordElement::gamma(&m, 0).unwrap()).unwrap().scale(&Scalar::frac(-1, 2)));
    }

    #[test]
    fn tilde_rejected_in_dimension_two() {
        let m = Metric::euclidean(2).unwrap();
        assert_eq!(tilde_gamma(&m, 0), Err(Error::TildeUndefined));
    }

    #[test]
    fn non_solutions_rejected() {
        let m = Metric::euclidean(3).unwrap();
        let v = CliffordPolynomial::x_word(&m, &[0]).unwrap();
        assert_eq!(hat_apply(&HatOperator::X(1), &v), Err(Error::NotASolution));
    }

    #[test]
    fn closed_form_for_one_index_is_the_display() {
        let m = Metric::lorentzian(3).unwrap();
        for i in 0..3 {
            assert_eq!(hat_product_closed_form(&m, &[i]).unwrap(), hat_x(&m, i).unwrap());
        }
    }
}
