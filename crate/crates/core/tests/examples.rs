//! Worked examples for each layer, through the public API.

use diracred::coset::{coset_eq, verify_presentation, CosetRep, SolutionSpace};
use diracred::monogenic::{
    ad_x_power_xm, bracket, bracket_gamma_reduce, extract_clifford_top, hat_apply, leading_coefficient, reconstruct,
    solution_from_indices, BracketSpec, HatOperator,
};
use diracred::polymodule::{dirac_kernel, expected_kernel_dim, h_eigenvalue, truncated_projector};
use diracred::weyl_clifford::monomial::exps_unit;
use diracred::{Blade, CliffordElement, CliffordPolynomial, Error, HPoly, Metric, Osp, RatH, Rational, Scalar, WCElement};

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

#[test]
fn scalars_and_functions_of_h() {
    let c = Scalar::c();
    assert_eq!(&c * &c, Scalar::frac(-1, 2));
    assert_eq!(&(&Scalar::one() + &c) * &(&Scalar::one() - &c), Scalar::frac(3, 2));
    assert_eq!(c.inv().unwrap(), &s(-2) * &c);

    let recip = |p: HPoly| RatH::poly(p).inv().unwrap();
    assert_eq!(recip(HPoly::h_plus(1)).scale(&s(-1)).shift(-1), recip(HPoly::h()).scale(&s(-1)));
    assert_eq!(RatH::h().shift(0), RatH::h());
    assert_eq!(recip(HPoly::rising(1, 2)).shift(1), recip(HPoly::rising(2, 3)));
    assert_eq!(recip(HPoly::h_plus(1)).scale(&s(-1)).eval(&s(-2)).unwrap(), s(1));
    assert_eq!(RatH::h().eval(&h_eigenvalue(0, 4).unwrap()).unwrap(), s(-2));
    assert!(recip(HPoly::h()).eval(&s(0)).is_err());
}

#[test]
fn clifford_and_index_gymnastics() {
    let e2 = Metric::euclidean(2).unwrap();
    let g = |m, i| CliffordElement::gamma(m, i).unwrap();
    assert_eq!(&g(&e2, 0) * &g(&e2, 0), CliffordElement::one(&e2));
    assert_eq!(&g(&e2, 1) * &g(&e2, 0), -&CliffordElement::word(&e2, &[0, 1]).unwrap());
    let l2 = Metric::lorentzian(2).unwrap();
    let w12 = CliffordElement::word(&l2, &[0, 1]).unwrap();
    let w21 = CliffordElement::word(&l2, &[1, 0]).unwrap();
    assert_eq!(&w12 * &w21, CliffordElement::scalar(&l2, s(-1)));

    assert_eq!(WCElement::x_down(&l2, 1).unwrap(), -&WCElement::x(&l2, 1).unwrap());
    assert_eq!(WCElement::d_up(&e2, 0).unwrap(), WCElement::d(&e2, 0).unwrap());
    let o2 = Metric::offdiag(2).unwrap();
    assert_eq!(WCElement::gamma_down(&o2, 0).unwrap(), WCElement::gamma(&o2, 1).unwrap());
}

#[test]
fn superalgebra_products() {
    let m = Metric::euclidean(3).unwrap();
    let x1 = WCElement::x(&m, 0).unwrap();
    let d1 = WCElement::d(&m, 0).unwrap();
    assert_eq!(&d1 * &x1, &(&x1 * &d1) + &WCElement::one(&m));

    let o = Osp::new(&m);
    let e = (0..3).fold(WCElement::zero(&m), |acc, i| {
        &acc - &(&WCElement::d_up(&m, i).unwrap() * &WCElement::d(&m, i).unwrap()).scale(&Scalar::frac(1, 2))
    });
    assert_eq!(&o.x * &o.x, e);
    assert!(o.x.supercommutator(&o.e).unwrap().is_zero());
    assert_eq!(o.e.supercommutator(&o.f).unwrap(), o.h);
    assert_eq!(o.ad_x(&WCElement::gamma(&m, 1).unwrap()).unwrap(), WCElement::d_up(&m, 1).unwrap().scale(&(&Scalar::c() * &s(2))));
}

#[test]
fn polynomial_module() {
    let m = Metric::euclidean(3).unwrap();
    let one = CliffordPolynomial::one(&m);
    let o = Osp::new(&m);
    assert_eq!(one.act(&o.h).unwrap(), one.scale(&Scalar::frac(-3, 2)));
    let x1 = CliffordPolynomial::x_word(&m, &[0]).unwrap();
    assert_eq!(x1.act(&o.x).unwrap(), CliffordPolynomial::constant(&CliffordElement::gamma(&m, 0).unwrap()).scale(&Scalar::c()));
    assert_eq!(CliffordPolynomial::x_word(&m, &[0, 0]).unwrap().partial(0), x1.scale(&s(2)));

    assert_eq!(h_eigenvalue(0, 4).unwrap(), s(-2));
    assert_eq!(h_eigenvalue(2, 3).unwrap(), Scalar::frac(-7, 2));
    assert!(h_eigenvalue(0, 0).is_err());

    for n in 1..=4 {
        let m = Metric::lorentzian(n).unwrap();
        assert_eq!(dirac_kernel(0, &m).unwrap().dim(), 1 << n);
        for d in 1..=3 {
            let b = dirac_kernel(d, &m).unwrap();
            assert_eq!(b.dim(), expected_kernel_dim(n, d));
            assert!(b.vectors.iter().all(CliffordPolynomial::is_monogenic));
        }
    }
}

#[test]
fn truncated_projector_examples() {
    let m = Metric::euclidean(3).unwrap();
    let one = CliffordPolynomial::one(&m);
    assert_eq!(truncated_projector(&one, Some(1)).unwrap(), one.scale(&Scalar::frac(-1, 2)));
    let x1 = CliffordPolynomial::x_word(&m, &[0]).unwrap();
    let p = truncated_projector(&x1, None).unwrap();
    assert!(!p.is_zero() && p.apply_x().is_zero());
    assert!(truncated_projector(&x1.apply_y(), Some(2)).unwrap().is_zero());
}

#[test]
fn semantic_coset_equality() {
    let m = Metric::euclidean(3).unwrap();
    let zero = CosetRep::zero(&m);
    assert!(coset_eq(&CosetRep::from_wc(&Osp::new(&m).x), &zero, 4).unwrap());
    assert!(!coset_eq(&CosetRep::from_wc(&WCElement::x(&m, 0).unwrap()), &zero, 2).unwrap());

    let sum = (0..3).fold(zero.clone(), |acc, i| {
        let g = CosetRep::from_wc(&WCElement::gamma(&m, i).unwrap());
        let d = CosetRep::from_wc(&WCElement::d(&m, i).unwrap());
        acc.try_add(&g.diamond(&d).unwrap()).unwrap()
    });
    assert!(coset_eq(&sum, &zero, 4).unwrap());

    let l4 = Metric::parse("diag:1,1,1,-1", 4).unwrap();
    let r = verify_presentation(&SolutionSpace::new(&l4, 3).unwrap());
    assert!(r.passed(), "{r}");
}

#[test]
fn bracket_examples() {
    let m = Metric::lorentzian(3).unwrap();
    let eta = bracket(&m, &BracketSpec::new(1, 0, 0, 0, &[0, 0])).unwrap();
    assert_eq!(eta, WCElement::scalar(&m, s(1)));
    assert!(bracket(&m, &BracketSpec::new(1, -1, 1, 1, &[0, 1, 2])).unwrap().is_zero());

    let gg = BracketSpec::new(0, 0, 2, 0, &[1, 2]);
    let (f, reduced) = bracket_gamma_reduce(&gg).unwrap();
    assert_eq!(f, s(2));
    assert_eq!(reduced.gamma, 0);
    assert_eq!(bracket(&m, &gg).unwrap(), bracket(&m, &reduced).unwrap().scale(&f));
    let (f, _) = bracket_gamma_reduce(&BracketSpec::new(1, 0, 2, 0, &[0, 1, 2, 2])).unwrap();
    assert_eq!(f, s(4));

    let o = Osp::new(&m);
    let eta_d = bracket(&m, &BracketSpec::new(1, 0, 0, 1, &[0, 1, 2])).unwrap();
    assert!(o.ad_x(&eta_d).unwrap().is_zero());
    for idx in [vec![0], vec![0, 2], vec![1, 1, 2]] {
        let xs = bracket(&m, &BracketSpec::xs(&idx)).unwrap();
        assert!(o.ad_x_pow(&xs, 2 * idx.len() + 1).unwrap().is_zero());
    }
    let xg = bracket(&m, &BracketSpec::new(0, 1, 1, 0, &[0, 1])).unwrap().scale(&Scalar::c());
    assert_eq!(ad_x_power_xm(&m, &[0, 1], 0, 1).unwrap(), xg);
    assert_eq!(ad_x_power_xm(&m, &[2], 0, 0).unwrap(), WCElement::x(&m, 2).unwrap());
}

#[test]
fn hat_operator_examples() {
    let m = Metric::lorentzian(3).unwrap();
    let word = CliffordElement::word(&m, &[1, 2]).unwrap();
    let got = hat_apply(&HatOperator::Gamma(0), &CliffordPolynomial::constant(&word)).unwrap();
    let expected = CliffordPolynomial::constant(&(&CliffordElement::gamma(&m, 0).unwrap() * &word)).scale(&Scalar::frac(-1, 2));
    assert_eq!(got, expected);

    let v = solution_from_indices(&m, &[0, 2], &CliffordElement::one(&m)).unwrap();
    let w = hat_apply(&HatOperator::Del(1), &v).unwrap();
    assert!(w.is_monogenic());
    assert!(w.max_degree().unwrap() < 2);
}

#[test]
fn solution_examples() {
    let m = Metric::parse("diag:1,1,1,-1", 4).unwrap();
    let one = CliffordElement::one(&m);
    assert_eq!(solution_from_indices(&m, &[], &one).unwrap(), CliffordPolynomial::one(&m));

    let got = solution_from_indices(&m, &[0], &one).unwrap();
    let mut expected = CliffordPolynomial::x_word(&m, &[0]).unwrap().scale(&s(-2));
    for k in 0..4 {
        let xk = CliffordPolynomial::from_terms(
            &m,
            (0..4).map(|j| ((exps_unit(j), Blade::EMPTY), Scalar::from(m.down(k, j).clone()))),
        );
        let t = xk.right_mul(&CliffordElement::word(&m, &[k, 0]).unwrap()).unwrap();
        expected = &expected + &t.scale(&Scalar::frac(1, 2));
    }
    assert_eq!(got, expected);
    assert!(got.is_monogenic());

    assert_eq!(leading_coefficient(4, 1), s(-2));
    assert_eq!(leading_coefficient(3, 2), Scalar::from(Rational::frac(15, 4)));
}

#[test]
fn reconstruction_examples() {
    let m = Metric::euclidean(3).unwrap();
    let r = reconstruct(&CliffordPolynomial::one(&m)).unwrap();
    assert_eq!(r.terms.len(), 1);
    assert!(r.terms[0].word.is_empty());

    let g12 = CliffordPolynomial::constant(&CliffordElement::word(&m, &[0, 1]).unwrap());
    let r = reconstruct(&g12).unwrap();
    assert!(r.terms[0].word.is_empty());
    assert_eq!(r.apply().unwrap(), g12);

    let phi = solution_from_indices(&m, &[0], &CliffordElement::one(&m)).unwrap();
    assert_eq!(reconstruct(&phi).unwrap().apply().unwrap(), phi);
    assert_eq!(reconstruct(&CliffordPolynomial::x_word(&m, &[0]).unwrap()), Err(Error::NotASolution));

    let g1 = CliffordElement::gamma(&m, 0).unwrap();
    assert_eq!(extract_clifford_top(&CliffordPolynomial::constant(&g1)).unwrap(), g1);
    let top = extract_clifford_top(&phi).unwrap();
    assert_eq!(top, phi.clifford_coeff(&exps_unit(0)));
    assert!(!top.is_zero());
}
