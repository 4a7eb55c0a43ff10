//! Writing a monogenic as an operator applied to `1`, and extracting a
//! Clifford coefficient from it.

use std::fmt;
use std::sync::Arc;

use super::hat::{hat_x_word_apply, HatOperator};
use crate::clifford::{CliffordElement, Metric};
use crate::error::Error;
use crate::polymodule::CliffordPolynomial;
use crate::scalar::{Rational, Scalar};
use crate::weyl_clifford::monomial::{exps_factorial, exps_to_word, exps_total, Exps};

/// `1/((−1)^d Π_{k=1}^{d} (n/2 + d − k))`. The sign follows the degree of
/// the component being reconstructed.
pub fn reconstruction_normalization(n: usize, d: usize) -> Scalar {
    let half_n = Rational::frac(n as i64, 2);
    let mut c = Rational::from_int(if d % 2 == 0 { 1 } else { -1 });
    for k in 1..=d {
        c *= &(&half_n + &Rational::from_int(d as i64 - k as i64));
    }
    Scalar::from(c.inv().expect("factors are positive"))
}

/// `coeff · x̂^{w₁}⋯x̂^{w_d} p̃`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructionTerm {
    pub word: Vec<usize>,
    pub clifford: CliffordElement,
    pub coeff: Scalar,
}

/// A formal sum of hat words composed with tilde operators.
#[derive(Clone, Debug, PartialEq)]
pub struct Reconstruction {
    pub metric: Arc<Metric>,
    pub terms: Vec<ReconstructionTerm>,
}

impl Reconstruction {
    /// Applies the operator to `v` by running each factor in turn.
    pub fn apply_to(&self, v: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
        let mut out = CliffordPolynomial::zero(&self.metric);
        for t in &self.terms {
            let w = HatOperator::TildeP(t.clifford.clone()).apply_unchecked(v)?;
            let w = hat_x_word_apply(&t.word, &w)?;
            out = &out + &w.scale(&t.coeff);
        }
        Ok(out)
    }

    /// The operator applied to `1`.
    pub fn apply(&self) -> Result<CliffordPolynomial, Error> {
        self.apply_to(&CliffordPolynomial::one(&self.metric))
    }
}

impl fmt::Display for Reconstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let word: String = t.word.iter().map(|i| format!("xhat{}*", i + 1)).collect();
                format!("({})*{word}tilde({})", t.coeff, t.clifford)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `φ̂ = Σ_d Σ_α N_d · x̂^{α₁}⋯x̂^{α_d} p̃_α` with `N_d` from
/// [`reconstruction_normalization`], so that `φ̂·1 = φ`.
pub fn reconstruct(phi: &CliffordPolynomial) -> Result<Reconstruction, Error> {
    let n = phi.n();
    if n == 2 {
        return Err(Error::TildeUndefined);
    }
    if !phi.is_monogenic() {
        return Err(Error::NotASolution);
    }
    let terms = phi
        .clifford_parts()
        .into_iter()
        .map(|(alpha, p)| {
            let d = exps_total(&alpha);
            ReconstructionTerm { word: exps_to_word(&alpha), clifford: p, coeff: reconstruction_normalization(n, d) }
        })
        .collect();
    Ok(Reconstruction { metric: phi.metric().clone(), terms })
}

/// The multi-index used by [`extract_clifford_top`]: among those of maximal
/// degree with `p_β ≠ 0`, the lexicographically largest exponent vector, so
/// `x¹` is preferred over `x²`.
pub fn top_multi_index(phi: &CliffordPolynomial) -> Option<Exps> {
    let top = phi.max_degree()?;
    phi.clifford_parts().into_iter().map(|(a, _)| a).filter(|a| exps_total(a) == top).max()
}

/// Applies `∂̂^β` for `β` from [`top_multi_index`] and divides by `β!`,
/// which isolates `p_β`.
pub fn extract_clifford_top(phi: &CliffordPolynomial) -> Result<CliffordElement, Error> {
    if phi.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !phi.is_monogenic() {
        return Err(Error::NotASolution);
    }
    let beta = top_multi_index(phi).expect("nonzero");
    let mut w = phi.clone();
    for i in exps_to_word(&beta) {
        w = HatOperator::Del(i).apply_unchecked(&w)?;
    }
    let scale = Scalar::from(exps_factorial(&beta).inv().expect("factorial is positive"));
    Ok(w.clifford_coeff(&crate::weyl_clifford::monomial::ZERO_EXPS).scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::solution::solution_from_indices;

    #[test]
    fn constants_round_trip() {
        let m = Metric::euclidean(3).unwrap();
        let p = CliffordPolynomial::constant(&CliffordElement::word(&m, &[0, 1]).unwrap());
        let r = reconstruct(&p).unwrap();
        assert_eq!(r.apply().unwrap(), p);
        assert_eq!(reconstruct(&CliffordPolynomial::one(&m)).unwrap().apply().unwrap(), CliffordPolynomial::one(&m));
    }

    #[test]
    fn solutions_round_trip() {
        let m = Metric::lorentzian(3).unwrap();
        let phi = &solution_from_indices(&m, &[0], &CliffordElement::one(&m)).unwrap()
            + &solution_from_indices(&m, &[1, 2], &CliffordElement::gamma(&m, 2).unwrap()).unwrap();
        assert_eq!(reconstruct(&phi).unwrap().apply().unwrap(), phi);
    }

    #[test]
    fn top_coefficient() {
        let m = Metric::euclidean(3).unwrap();
        let phi = solution_from_indices(&m, &[0], &CliffordElement::one(&m)).unwrap();
        let beta = crate::weyl_clifford::monomial::exps_unit(0);
        assert_eq!(top_multi_index(&phi), Some(beta));
        assert_eq!(extract_clifford_top(&phi).unwrap(), phi.clifford_coeff(&beta));
        let sq = solution_from_indices(&m, &[1, 1], &CliffordElement::gamma(&m, 0).unwrap()).unwrap();
        let beta = top_multi_index(&sq).unwrap();
        assert_eq!(extract_clifford_top(&sq).unwrap(), sq.clifford_coeff(&beta));
        assert_eq!(extract_clifford_top(&CliffordPolynomial::zero(&m)), Err(Error::ZeroInput));
        assert_eq!(reconstruct(&CliffordPolynomial::one(&Metric::euclidean(2).unwrap())), Err(Error::TildeUndefined));
    }
}
