//! Coefficients of the extremal projector `P = Σ φ_n(H) Yⁿ Xⁿ`.

use crate::scalar::{HPoly, RatH, Scalar};
use crate::weyl_clifford::monomial::factorial;

/// `κ_n(H)`: `−n/2` for even `n`, `H + (n+1)/2` for odd `n`.
pub fn kappa(n: usize) -> RatH {
    if n % 2 == 0 {
        RatH::constant(Scalar::frac(-(n as i64), 2))
    } else {
        RatH::h_plus(Scalar::from_int((n as i64 + 1) / 2))
    }
}

/// `φ_n(H)` from `φ_0 = 1`, `φ_{n+1} = (−1)^{n+1} φ_n / κ_{n+1}`.
pub fn phi(n: usize) -> RatH {
    phi_table(n).pop().expect("table is never empty")
}

/// `[φ_0, …, φ_n]` by the recursion.
pub fn phi_table(n: usize) -> Vec<RatH> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(RatH::one());
    for k in 1..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let next = out[k - 1].scale(&Scalar::from_int(sign)).checked_div(&kappa(k)).expect("κ is nonzero");
        out.push(next);
    }
    out
}

/// The closed forms `φ_{2k+1} = −1/k! Π_{m=0}^{k} 1/(H+m+1)` and
/// `φ_{2k} = 1/k! Π_{m=0}^{k−1} 1/(H+m+1)`.
pub fn phi_closed(n: usize) -> RatH {
    let k = n / 2;
    let (sign, last) = if n % 2 == 0 { (1, k as i64) } else { (-1, k as i64 + 1) };
    let den = HPoly::rising(1, last).scale(&Scalar::from(factorial(k as u32)));
    RatH::new(HPoly::constant(Scalar::from_int(sign)), den).expect("nonzero denominator")
}

/// Number of factors `(H+1)⋯(H+k)` that clear the denominators of
/// `φ_0, …, φ_N`: `k = ⌈N/2⌉`.
pub fn truncation_factors(order: usize) -> usize {
    order.div_ceil(2)
}

/// `ψ_n = (H+1)⋯(H+k) φ_n` with `k = ⌈N/2⌉`, a polynomial for `n ≤ N`.
pub fn psi(n: usize, order: usize) -> RatH {
    psi_with_factors(n, truncation_factors(order))
}

/// `(H+1)⋯(H+k) φ_n` for an explicit number of factors `k`.
pub fn psi_with_factors(n: usize, k: usize) -> RatH {
    &RatH::poly(HPoly::rising(1, k as i64)) * &phi(n)
}

/// Everything the projector needs up to a fixed order.
#[derive(Clone, Debug)]
pub struct ProjectorCoeffs {
    pub kappa: Vec<RatH>,
    pub phi: Vec<RatH>,
}

impl ProjectorCoeffs {
    pub fn new(order: usize) -> Self {
        ProjectorCoeffs { kappa: (0..=order).map(kappa).collect(), phi: phi_table(order) }
    }

    pub fn order(&self) -> usize {
        self.phi.len() - 1
    }

    /// `ψ_n` for the `N`-truncated projector.
    pub fn psi(&self, n: usize, order: usize) -> RatH {
        &RatH::poly(HPoly::rising(1, truncation_factors(order) as i64)) * &self.phi[n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recip(p: HPoly) -> RatH {
        RatH::poly(p).inv().unwrap()
    }

    #[test]
    fn first_terms() {
        assert_eq!(phi(0), RatH::one());
        assert_eq!(phi(1), -recip(HPoly::h_plus(1)));
        assert_eq!(phi(2), recip(HPoly::h_plus(1)));
        assert_eq!(phi(3), -recip(HPoly::rising(1, 2)));
        assert_eq!(phi(4), recip(HPoly::rising(1, 2).scale(&Scalar::from_int(2))));
    }

    #[test]
    fn closed_forms_match_recursion() {
        for (n, f) in phi_table(20).into_iter().enumerate() {
            assert_eq!(f, phi_closed(n), "n = {n}");
        }
    }

    #[test]
    fn psi_is_polynomial_up_to_order() {
        for order in 0..12 {
            for n in 0..=order {
                assert!(psi(n, order).is_polynomial(), "n = {n}, N = {order}");
            }
        }
    }
}
