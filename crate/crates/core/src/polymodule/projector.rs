//! The extremal projector acting on `V`.

use super::poly::{h_eigenvalue, CliffordPolynomial};
use crate::coset::projector::{phi_table, truncation_factors};
use crate::error::Error;
use crate::scalar::{HPoly, Scalar};

/// `Σ_{j=0}^{N} f_j Y^j X^j v` on a homogeneous `v`, by Horner in `Y`.
fn horner(v: &CliffordPolynomial, order: usize, f: impl Fn(usize) -> Result<Scalar, Error>) -> Result<CliffordPolynomial, Error> {
    let mut powers = vec![v.clone()];
    for _ in 0..order {
        let next = powers.last().expect("nonempty").apply_x();
        if next.is_zero() {
            break;
        }
        powers.push(next);
    }
    let mut acc = CliffordPolynomial::zero(v.metric());
    for (j, w) in powers.iter().enumerate().rev() {
        acc = &acc.apply_y() + &w.scale(&f(j)?);
    }
    Ok(acc)
}

/// `P_N v = Σ_{j=0}^{N} ψ_j(H) Y^j X^j v` with `ψ_j = (H+1)⋯(H+k) φ_j`,
/// `k = ⌈N/2⌉`. `N` defaults to `deg(v) + 1`, which makes `X^N v = 0`.
///
/// Each homogeneous component is handled separately; `ψ_j` is a polynomial
/// so no pole can occur.
pub fn truncated_projector(v: &CliffordPolynomial, order: Option<usize>) -> Result<CliffordPolynomial, Error> {
    let n = v.n();
    let big_n = order.unwrap_or_else(|| v.max_degree().unwrap_or(0) + 1);
    let phis = phi_table(big_n);
    let clear = HPoly::rising(1, truncation_factors(big_n) as i64);
    let mut out = CliffordPolynomial::zero(v.metric());
    for (d, comp) in v.components() {
        let t = h_eigenvalue(d, n)?;
        let scale = clear.eval(&t);
        let part = horner(&comp, big_n, |j| Ok(&scale * &phis[j].eval(&t)?))?;
        out = &out + &part;
    }
    Ok(out)
}

/// `P v = Σ_j φ_j(H) Y^j X^j v` evaluated on each component. Fails with
/// [`Error::PoleAtDegree`] if some `φ_j` has a pole at the eigenvalue.
pub fn extremal_projector(v: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
    let n = v.n();
    let top = v.max_degree().unwrap_or(0) + 1;
    let phis = phi_table(top);
    let mut out = CliffordPolynomial::zero(v.metric());
    for (d, comp) in v.components() {
        let t = h_eigenvalue(d, n)?;
        let part = horner(&comp, top, |j| {
            phis[j].eval(&t).map_err(|_| Error::PoleAtDegree { degree: d, eigenvalue: t.to_string() })
        })?;
        out = &out + &part;
    }
    Ok(out)
}

/// The scalar `(H+1)⋯(H+k)` by which `P_N` and `P` differ on degree `d`.
pub fn truncation_scalar(d: usize, n: usize, order: usize) -> Result<Scalar, Error> {
    Ok(HPoly::rising(1, truncation_factors(order) as i64).eval(&h_eigenvalue(d, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{CliffordElement, Metric};

    #[test]
    fn kills_the_image_of_y_and_lands_in_the_kernel_of_x() {
        let m = Metric::euclidean(3).unwrap();
        let v = CliffordPolynomial::x_word(&m, &[0, 1]).unwrap();
        let p = truncated_projector(&v, None).unwrap();
        assert!(!p.is_zero());
        assert!(p.apply_x().is_zero());
        let w = CliffordPolynomial::x_word(&m, &[2]).unwrap().apply_y();
        assert!(truncated_projector(&w, None).unwrap().is_zero());
    }

    #[test]
    fn identity_on_monogenics_up_to_the_factor() {
        let m = Metric::lorentzian(3).unwrap();
        let g1 = CliffordElement::gamma(&m, 0).unwrap();
        // x¹ − x² γ¹ γ² style element: use a constant, which is always monogenic.
        let v = CliffordPolynomial::constant(&g1);
        assert_eq!(truncated_projector(&v, None).unwrap(), v.scale(&truncation_scalar(0, 3, 1).unwrap()));
        assert_eq!(extremal_projector(&v).unwrap(), v);
    }
}
