//! Readings of the formulas that the library deliberately does not use,
//! each built here from public primitives and shown to fail, next to the
//! version that holds.

use std::sync::Arc;

use diracred::coset::{phi, psi_with_factors, HCoeffElement};
use diracred::monogenic::{
    bracket, f_tilde, hat_gamma, hat_gamma_with_sign, hat_x_word_apply, reconstruct, solution_from_indices, y_tilde,
    BracketSpec,
};
use diracred::polymodule::{dirac_kernel, h_eigenvalue, spans};
use diracred::{CliffordElement, CliffordPolynomial, Error, Metric, Osp, RatH, Rational, Scalar, WCElement};

fn half(n: usize) -> Rational {
    Rational::frac(n as i64, 2)
}

/// The solution element with coefficients `coef(q, odd)` in front of the
/// `F̃^q` (even) and `F̃^{q−1}Ỹ` (odd) sums, and the usual leading term.
fn solution_with(metric: &Arc<Metric>, idx: &[usize], coef: impl Fn(usize, bool) -> Scalar) -> CliffordPolynomial {
    let n = metric.n();
    let m = idx.len();
    let f = f_tilde(metric);
    let y = y_tilde(metric);
    let mut lead = Rational::from_int(if m % 2 == 0 { 1 } else { -1 });
    for k in 1..=m {
        lead *= &(&half(n) + &Rational::from_int((m - k) as i64));
    }
    let mut e = bracket(metric, &BracketSpec::xs(idx)).unwrap().scale(&Scalar::from(lead));
    for q in 1..=m / 2 {
        let b = bracket(metric, &BracketSpec::new(q, (m - 2 * q) as i32, 0, 0, idx)).unwrap();
        e = &e + &(&f.pow(q as u32) * &b).scale(&coef(q, false));
    }
    for q in 1..=(m + 1) / 2 {
        let b = bracket(metric, &BracketSpec::new(q - 1, (m + 1 - 2 * q) as i32, 1, 0, idx)).unwrap();
        e = &e + &(&(&f.pow(q as u32 - 1) * &y) * &b).scale(&coef(q, true));
    }
    CliffordPolynomial::one(metric).act(&e).unwrap()
}

/// `Π_{k=q+1}^{m} (k − m + shift − n/2) / 2^q`.
fn coefficient(n: usize, m: usize, q: usize, shift: i64) -> Scalar {
    let mut c = Rational::one();
    for k in q + 1..=m {
        c *= &(Rational::from_int(k as i64 - m as i64 + shift) - &half(n));
    }
    Scalar::from(c * Rational::frac(1, 1 << q))
}

#[test]
fn coefficients_shifted_only_past_the_bracket_are_not_solutions() {
    for metric in [Metric::euclidean(3).unwrap(), Metric::lorentzian(4).unwrap()] {
        let n = metric.n();
        for idx in [vec![0, 1], vec![0, 0, 1], vec![0, 1, 1, 2]] {
            let m = idx.len();
            let composed = hat_x_word_apply(&idx, &CliffordPolynomial::one(&metric)).unwrap();

            // H evaluated after moving it past every factor of weight.
            let full = solution_with(&metric, &idx, |q, _| coefficient(n, m, q, 0));
            assert_eq!(full, composed);
            assert_eq!(full, solution_from_indices(&metric, &idx, &CliffordElement::one(&metric)).unwrap());
            assert!(full.is_monogenic());

            // H moved past the bracket but not past the powers of F̃ and Ỹ.
            let partial = solution_with(&metric, &idx, |q, odd| coefficient(n, m, q, 2 * q as i64 - i64::from(odd)));
            assert!(!partial.is_monogenic(), "{idx:?}");
            assert_ne!(partial, composed);
        }
    }
}

/// `(H+1)·Σ_k φ_k(H) Y^k ad(X)^k(γ^i)`, dropping terms that end in `X`.
fn projected_gamma(metric: &Arc<Metric>, i: usize) -> HCoeffElement {
    let osp = Osp::new(metric);
    let mut out = HCoeffElement::zero(metric);
    let mut ad = WCElement::gamma(metric, i).unwrap();
    let mut y_pow = WCElement::one(metric);
    let mut k = 0;
    while !ad.is_zero() {
        let coeff = &RatH::h_plus(1) * &phi(k);
        out = out.try_add(&HCoeffElement::from_wc(&(&y_pow * &ad)).left_mul(&coeff)).unwrap();
        ad = osp.ad_x(&ad).unwrap();
        y_pow = &y_pow * &osp.y;
        k += 1;
    }
    out
}

#[test]
fn gamma_hat_correction_has_a_plus_sign() {
    let metric = Metric::offdiag(3).unwrap();
    let mut tested = 0;
    for d in 0..=3 {
        for v in dirac_kernel(d, &metric).unwrap().vectors.iter().take(6) {
            for i in 0..3 {
                let plus = v.act_h(&hat_gamma(&metric, i).unwrap()).unwrap();
                assert_eq!(plus, v.act_h(&projected_gamma(&metric, i)).unwrap());
                assert!(plus.is_monogenic());
                let minus = v.act_h(&hat_gamma_with_sign(&metric, i, -1).unwrap()).unwrap();
                if d > 0 && !minus.is_monogenic() {
                    tested += 1;
                }
            }
        }
    }
    assert!(tested > 0, "the minus sign never left the monogenics");
}

#[test]
fn normalization_sign_follows_each_component() {
    let metric = Metric::euclidean(3).unwrap();
    let g1 = CliffordElement::gamma(&metric, 0).unwrap();
    let phi = &CliffordPolynomial::constant(&g1) + &solution_from_indices(&metric, &[1], &g1).unwrap();
    let r = reconstruct(&phi).unwrap();
    assert_eq!(r.apply().unwrap(), phi);

    // One sign for the whole polynomial, taken from its top degree.
    let top = phi.max_degree().unwrap();
    let mut global = r.clone();
    for t in &mut global.terms {
        if (top + t.word.len()) % 2 == 1 {
            t.coeff = -&t.coeff;
        }
    }
    assert_ne!(global.apply().unwrap(), phi);

    // Homogeneous input cannot tell the two apart.
    let homogeneous = solution_from_indices(&metric, &[1, 2], &g1).unwrap();
    assert_eq!(reconstruct(&homogeneous).unwrap().apply().unwrap(), homogeneous);
}

/// `Σ_{j≤N} ψ_j Y^j X^j v` on a homogeneous `v` with `ψ_j = (H+1)⋯(H+k) φ_j`.
fn truncated(v: &CliffordPolynomial, d: usize, order: usize, k: usize) -> CliffordPolynomial {
    let t = h_eigenvalue(d, v.n()).unwrap();
    let mut out = CliffordPolynomial::zero(v.metric());
    let mut xs = v.clone();
    for j in 0..=order {
        let mut term = xs.scale(&psi_with_factors(j, k).eval(&t).unwrap());
        for _ in 0..j {
            term = term.apply_y();
        }
        out = &out + &term;
        xs = xs.apply_x();
    }
    out
}

#[test]
fn truncation_needs_the_ceiling() {
    for order in (1..12usize).step_by(2) {
        let floor = order / 2;
        let ceil = order.div_ceil(2);
        assert!(!psi_with_factors(order, floor).is_polynomial(), "N = {order}");
        assert!((0..=order).all(|j| psi_with_factors(j, ceil).is_polynomial()));
    }
    // On V the two differ by a scalar per degree, so both kill X P_N and
    // P_N Y wherever the floor version has no pole.
    let metric = Metric::lorentzian(3).unwrap();
    for word in [vec![0], vec![0, 2], vec![1, 1, 2]] {
        let v = CliffordPolynomial::x_word(&metric, &word).unwrap();
        let d = word.len();
        for order in [d, d + 1] {
            for k in [order / 2, order.div_ceil(2)] {
                assert!(truncated(&v, d, order, k).apply_x().is_zero());
                assert!(truncated(&v.apply_y(), d + 1, order + 1, k).is_zero());
            }
        }
    }
}

#[test]
fn dimension_two_has_hats_but_no_tildes() {
    let metric = Metric::euclidean(2).unwrap();
    let basis = dirac_kernel(1, &metric).unwrap();
    let blades: Vec<_> = diracred::Blade::all(2)
        .into_iter()
        .map(|b| CliffordElement::blade(&metric, b, Scalar::one()))
        .collect();
    let mut gens = Vec::new();
    for i in 0..2 {
        for p in &blades {
            gens.push(solution_from_indices(&metric, &[i], p).unwrap());
        }
    }
    assert!(spans(&basis, &gens).unwrap());
    assert_eq!(reconstruct(&basis.vectors[0]).unwrap_err(), Error::TildeUndefined);
}
