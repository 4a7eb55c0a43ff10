//! Algebraic invariants under random inputs.

use std::sync::Arc;

use proptest::prelude::*;

use diracred::coset::HCoeffElement;
use diracred::monogenic::{bracket, hat_apply, BracketSpec, HatOperator};
use diracred::polymodule::{dirac_kernel, h_eigenvalue};
use diracred::weyl_clifford::monomial::{exps_from_word, ZERO_EXPS};
use diracred::{Blade, CliffordElement, CliffordPolynomial, HPoly, Metric, Monomial, RatH, Rational, Scalar, WCElement};

fn metric(kind: u8, n: usize) -> Arc<Metric> {
    match kind % 3 {
        0 => Metric::euclidean(n).unwrap(),
        1 => Metric::lorentzian(n).unwrap(),
        _ => Metric::offdiag(n).unwrap(),
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| Rational::frac(a, b))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(a, b)| Scalar::new(a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Gen {
    X(usize),
    D(usize),
    G(usize),
}

fn gen_element(metric: &Arc<Metric>, g: Gen) -> WCElement {
    match g {
        Gen::X(i) => WCElement::x(metric, i),
        Gen::D(i) => WCElement::d(metric, i),
        Gen::G(i) => WCElement::gamma(metric, i),
    }
    .unwrap()
}

fn word() -> impl Strategy<Value = Vec<(u8, usize)>> {
    prop::collection::vec((0u8..3, 0usize..8), 0..6)
}

fn to_gens(raw: &[(u8, usize)], n: usize) -> Vec<Gen> {
    raw.iter()
        .map(|&(k, i)| match k {
            0 => Gen::X(i % n),
            1 => Gen::D(i % n),
            _ => Gen::G(i % n),
        })
        .collect()
}

fn product(metric: &Arc<Metric>, w: &[Gen]) -> WCElement {
    w.iter().fold(WCElement::one(metric), |acc, &g| &acc * &gen_element(metric, g))
}

/// Normal form by repeated adjacent swaps using only the defining relations
/// `∂_i x^j = x^j ∂_i + δ_i^j` and `γ^i γ^j = −γ^j γ^i + 2η^{ij}`.
fn swap_normal_form(metric: &Arc<Metric>, w: Vec<Gen>) -> WCElement {
    let mut out = WCElement::zero(metric);
    let mut stack = vec![(Scalar::one(), w)];
    while let Some((c, w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        let bad = (0..w.len().saturating_sub(1)).find(|&p| match (w[p], w[p + 1]) {
            (Gen::G(i), Gen::G(j)) => i >= j,
            (a, b) => a > b,
        });
        let Some(p) = bad else {
            let (mut xs, mut ds, mut gs) = (Vec::new(), Vec::new(), Vec::new());
            for g in &w {
                match *g {
                    Gen::X(i) => xs.push(i),
                    Gen::D(i) => ds.push(i),
                    Gen::G(i) => gs.push(i),
                }
            }
            let m = Monomial::new(exps_from_word(&xs), exps_from_word(&ds), Blade::from_sorted(&gs).unwrap());
            out = &out + &WCElement::monomial(metric, m, c);
            continue;
        };
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        let mut removed = w.clone();
        removed.drain(p..p + 2);
        match (w[p], w[p + 1]) {
            (Gen::D(i), Gen::X(j)) => {
                if i == j {
                    stack.push((c.clone(), removed));
                }
                stack.push((c, swapped));
            }
            (Gen::G(i), Gen::G(j)) => {
                let eta = Scalar::from(metric.up(i, j).clone());
                if i == j {
                    stack.push((&c * &eta, removed));
                } else {
                    stack.push((&(&c * &eta) * &Scalar::from_int(2), removed));
                    stack.push((-&c, swapped));
                }
            }
            _ => stack.push((c, swapped)),
        }
    }
    out
}

fn poly(metric: &Arc<Metric>, raw: &[(Vec<usize>, u32, i64)]) -> CliffordPolynomial {
    let n = metric.n();
    raw.iter().fold(CliffordPolynomial::zero(metric), |acc, (xs, bits, c)| {
        let xs: Vec<usize> = xs.iter().map(|i| i % n).collect();
        let t = CliffordPolynomial::term(metric, exps_from_word(&xs), Blade::from_bits(bits % (1 << n)), Scalar::from_int(*c));
        &acc + &t
    })
}

fn poly_terms() -> impl Strategy<Value = Vec<(Vec<usize>, u32, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..8, 0..4), 0u32..256, -4i64..=4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), a);
    }

    #[test]
    fn shifts_compose_and_match_evaluation(
        roots in prop::collection::vec(-4i64..=4, 0..3),
        poles in prop::collection::vec(-4i64..=4, 0..3),
        j in -3i64..=3,
        k in -3i64..=3,
        t in -9i64..=9,
    ) {
        let num = roots.iter().fold(HPoly::one(), |acc, &r| &acc * &HPoly::h_plus(r));
        let den = poles.iter().fold(HPoly::one(), |acc, &r| &acc * &HPoly::h_plus(r));
        let f = RatH::new(num, den).unwrap();
        prop_assert_eq!(f.shift(j).shift(k), f.shift(j + k));
        let t = Scalar::frac(2 * t + 1, 2);
        prop_assert_eq!(f.shift(k).eval(&t).unwrap(), f.eval(&(&t + &Scalar::from_int(k))).unwrap());
    }

    #[test]
    fn clifford_product_is_associative(kind in 0u8..3, n in 1usize..=4, a in prop::collection::vec((0u32..16, -3i64..=3), 1..4),
                                       b in prop::collection::vec((0u32..16, -3i64..=3), 1..4),
                                       c in prop::collection::vec((0u32..16, -3i64..=3), 1..4)) {
        let m = metric(kind, n);
        let el = |v: &[(u32, i64)]| CliffordElement::from_terms(&m, v.iter().map(|&(bits, s)| (Blade::from_bits(bits % (1 << n)), Scalar::from_int(s))));
        let (a, b, c) = (el(&a), el(&b), el(&c));
        prop_assert_eq!(a.try_mul(&b).unwrap().try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn products_match_the_swap_rewriter(kind in 0u8..3, n in 1usize..=3, w in word()) {
        let m = metric(kind, n);
        let w = to_gens(&w, n);
        prop_assert_eq!(product(&m, &w), swap_normal_form(&m, w));
    }

    #[test]
    fn products_are_associative(kind in 0u8..3, n in 1usize..=3, a in word(), b in word(), c in word()) {
        let m = metric(kind, n);
        let (a, b, c) = (product(&m, &to_gens(&a, n)), product(&m, &to_gens(&b, n)), product(&m, &to_gens(&c, n)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn super_jacobi(kind in 0u8..3, n in 1usize..=3, a in word(), b in word(), c in word()) {
        let m = metric(kind, n);
        let (a, b, c) = (product(&m, &to_gens(&a, n)), product(&m, &to_gens(&b, n)), product(&m, &to_gens(&c, n)));
        let br = |x: &WCElement, y: &WCElement| x.supercommutator(y).unwrap();
        let sign = if a.parity() == Some(1) && b.parity() == Some(1) { -1 } else { 1 };
        let rhs = &br(&br(&a, &b), &c) + &br(&b, &br(&a, &c)).scale(&Scalar::from_int(sign));
        prop_assert_eq!(br(&a, &br(&b, &c)), rhs);
    }

    #[test]
    fn action_is_a_representation(kind in 0u8..3, n in 1usize..=3, a in word(), b in word(), v in poly_terms()) {
        let m = metric(kind, n);
        let (a, b) = (product(&m, &to_gens(&a, n)), product(&m, &to_gens(&b, n)));
        let v = poly(&m, &v);
        prop_assert_eq!(v.act(&(&a * &b)).unwrap(), v.act(&b).unwrap().act(&a).unwrap());
    }

    #[test]
    fn functions_of_h_move_by_the_weight(kind in 0u8..3, n in 1usize..=3, a in word(), xs in prop::collection::vec(0usize..8, 0..4),
                                         roots in prop::collection::vec(-3i64..=3, 1..3)) {
        let m = metric(kind, n);
        let a = product(&m, &to_gens(&a, n));
        let xs: Vec<usize> = xs.iter().map(|i| i % n).collect();
        let v = CliffordPolynomial::x_word(&m, &xs).unwrap();
        let f = RatH::poly(roots.iter().fold(HPoly::one(), |acc, &r| &acc * &HPoly::h_plus(r)));
        // a·f(H) acts as f at the eigenvalue of v, then a.
        let lhs = v.act_h(&HCoeffElement::from_wc(&a).right_mul(&f)).unwrap();
        let rhs = v.act(&a).unwrap().scale(&f.eval(&h_eigenvalue(xs.len(), n).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn brackets_are_symmetric(n in 1usize..=3, kind in 0u8..3, shape in (0usize..2, 0usize..3, 0usize..2, 0usize..2),
                              idx in prop::collection::vec(0usize..8, 6), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let m = metric(kind, n);
        let (a, r, s, t) = shape;
        let len = 2 * a + r + s + t;
        let idx: Vec<usize> = idx[..len].iter().map(|i| i % n).collect();
        let permuted: Vec<usize> = perm.iter().filter(|&&p| p < len).map(|&p| idx[p]).collect();
        let spec = BracketSpec::new(a, r as i32, s, t, &idx);
        let other = BracketSpec::new(a, r as i32, s, t, &permuted);
        prop_assert_eq!(bracket(&m, &spec).unwrap(), bracket(&m, &other).unwrap());
    }

    #[test]
    fn json_round_trips(kind in 0u8..3, n in 1usize..=3, v in poly_terms(), a in word()) {
        let m = metric(kind, n);
        let v = poly(&m, &v);
        let s = serde_json::to_string(&v.to_json()).unwrap();
        prop_assert_eq!(CliffordPolynomial::from_json(&m, &serde_json::from_str::<Vec<_>>(&s).unwrap()).unwrap(), v);
        let a = product(&m, &to_gens(&a, n));
        let s = serde_json::to_string(&a.to_json()).unwrap();
        prop_assert_eq!(WCElement::from_json(&m, &serde_json::from_str::<Vec<_>>(&s).unwrap()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hat_operators_preserve_monogenics(kind in 0u8..3, d in 0usize..=3, pick in 0usize..1000, op in 0u8..5, i in 0usize..3,
                                         bits in 0u32..8) {
        let m = metric(kind, 3);
        let basis = dirac_kernel(d, &m).unwrap();
        let v = &basis.vectors[pick % basis.dim()];
        let op = match op {
            0 => HatOperator::X(i),
            1 => HatOperator::Gamma(i),
            2 => HatOperator::Del(i),
            3 => HatOperator::TildeGamma(i),
            _ => HatOperator::TildeP(CliffordElement::blade(&m, Blade::from_bits(bits), Scalar::one())),
        };
        let w = hat_apply(&op, v).unwrap();
        prop_assert!(w.apply_x().is_zero());
    }
}

#[test]
fn rewriter_knows_the_basic_relations() {
    let m = Metric::euclidean(2).unwrap();
    let lhs = swap_normal_form(&m, vec![Gen::D(0), Gen::X(0)]);
    let rhs = &product(&m, &[Gen::X(0), Gen::D(0)]) + &WCElement::one(&m);
    assert_eq!(lhs, rhs);
    assert_eq!(swap_normal_form(&m, vec![Gen::G(0), Gen::G(0)]), WCElement::one(&m));
    assert_eq!(WCElement::monomial(&m, Monomial::new(ZERO_EXPS, ZERO_EXPS, Blade::EMPTY), Scalar::one()), WCElement::one(&m));
}
