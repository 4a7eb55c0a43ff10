//! Closed-form polynomial solutions `x̂^{i₁}⋯x̂^{i_m}·p`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::bracket::{bracket, BracketSpec};
use super::hat::{f_tilde, y_tilde};
use crate::clifford::{CliffordElement, Metric};
use crate::error::Error;
use crate::polymodule::{CliffordPolynomial, PolyTermJson};
use crate::scalar::{Rational, Scalar};
use crate::weyl_clifford::WCElement;

/// `C_q = Π_{k=q+1}^{m} (k − m − n/2) / 2^q`: the value of
/// `Π_{k=q+1}^{m}(H+k)/2^q` on the degree-`m` component, where every term
/// of the solution lands.
pub fn solution_coefficient(n: usize, m: usize, q: usize) -> Scalar {
    let half_n = Rational::frac(n as i64, 2);
    let mut c = Rational::one();
    for k in q + 1..=m {
        c *= &(Rational::from_int(k as i64 - m as i64) - &half_n);
    }
    Scalar::from(c * Rational::frac(1, 1 << q))
}

/// `(−1)^m Π_{k=1}^{m} (n/2 + m − k)`, the coefficient of `x^{i₁}⋯x^{i_m}`.
pub fn leading_coefficient(n: usize, m: usize) -> Scalar {
    let half_n = Rational::frac(n as i64, 2);
    let mut c = Rational::from_int(if m % 2 == 0 { 1 } else { -1 });
    for k in 1..=m {
        c *= &(&half_n + &Rational::from_int(m as i64 - k as i64));
    }
    Scalar::from(c)
}

/// The element `Σ_q C_q F̃^q [η^q x^{m−2q}] + Σ_q C_q F̃^{q−1} Ỹ [η^{q−1} x^{m−2q+1} γ]`
/// whose action on `1` is the solution.
pub fn solution_element(metric: &Arc<Metric>, indices: &[usize]) -> Result<WCElement, Error> {
    let n = metric.n();
    let m = indices.len();
    let f = f_tilde(metric);
    let y = y_tilde(metric);
    let mut out = WCElement::zero(metric);
    for q in 0..=m / 2 {
        let b = bracket(metric, &BracketSpec::new(q, (m - 2 * q) as i32, 0, 0, indices))?;
        out = &out + &(&f.pow(q as u32) * &b).scale(&solution_coefficient(n, m, q));
    }
    for q in 1..=(m + 1) / 2 {
        let b = bracket(metric, &BracketSpec::new(q - 1, (m + 1 - 2 * q) as i32, 1, 0, indices))?;
        out = &out + &(&(&f.pow(q as u32 - 1) * &y) * &b).scale(&solution_coefficient(n, m, q));
    }
    Ok(out)
}

/// `x̂^{i₁}⋯x̂^{i_m}·p = (x̂^{i₁}⋯x̂^{i_m}·1)·p`, in closed form.
pub fn solution_from_indices(metric: &Arc<Metric>, indices: &[usize], p: &CliffordElement) -> Result<CliffordPolynomial, Error> {
    if p.metric() != metric {
        return Err(Error::ContextMismatch);
    }
    let e = solution_element(metric, indices)?;
    CliffordPolynomial::one(metric).act(&e)?.right_mul(p)
}

/// A solution with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub degree: usize,
    pub terms: Vec<PolyTermJson>,
    pub provenance: Provenance,
}

/// 1-based indices and the right Clifford factor as 1-based `γ` words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub indices: Vec<usize>,
    pub clifford_factor: Vec<crate::clifford::CliffordTermJson>,
}

impl SolutionJson {
    pub fn new(indices: &[usize], p: &CliffordElement, v: &CliffordPolynomial) -> Self {
        SolutionJson {
            degree: indices.len(),
            terms: v.to_json(),
            provenance: Provenance { indices: indices.iter().map(|i| i + 1).collect(), clifford_factor: p.to_json() },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::hat::hat_x_word_apply;

    #[test]
    fn degree_one_in_four_dimensions() {
        let m = Metric::lorentzian(4).unwrap();
        let s = solution_from_indices(&m, &[0], &CliffordElement::one(&m)).unwrap();
        assert_eq!(s.coeff(&(crate::weyl_clifford::monomial::exps_unit(0), crate::Blade::EMPTY)), Scalar::frac(-3, 2));
        // −n/2 from the lead, +½ from x_1γ^1γ^1
        assert!(s.is_monogenic());
        assert_eq!(leading_coefficient(4, 1), Scalar::from_int(-2));
    }

    #[test]
    fn empty_word_is_one() {
        let m = Metric::euclidean(3).unwrap();
        assert_eq!(solution_from_indices(&m, &[], &CliffordElement::one(&m)).unwrap(), CliffordPolynomial::one(&m));
    }

    #[test]
    fn matches_hat_composition() {
        let m = Metric::offdiag(3).unwrap();
        let one = CliffordPolynomial::one(&m);
        for idx in [vec![0, 1], vec![2, 2, 0], vec![1, 0, 2, 1]] {
            let closed = solution_from_indices(&m, &idx, &CliffordElement::one(&m)).unwrap();
            assert_eq!(closed, hat_x_word_apply(&idx, &one).unwrap(), "{idx:?}");
            assert!(closed.is_monogenic());
        }
    }
}
