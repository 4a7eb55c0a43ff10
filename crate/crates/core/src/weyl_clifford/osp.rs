//! The `osp(1|2)` oscillator embedding and its adjoint actions.

use std::sync::Arc;

use super::WCElement;
use crate::clifford::Metric;
use crate::error::Error;
use crate::report::{Entry, Report};
use crate::scalar::{Rational, Scalar};

/// Images of `x, y, h, e, f` under the embedding.
#[derive(Clone, Debug)]
pub struct Osp {
    /// `c γ^i ∂_i`, a multiple of the Dirac operator.
    pub x: WCElement,
    /// `c γ^i x_i`.
    pub y: WCElement,
    /// `−x^i ∂_i − n/2`.
    pub h: WCElement,
    /// `−½ ∂^i ∂_i`.
    pub e: WCElement,
    /// `½ x^i x_i`.
    pub f: WCElement,
}

impl Osp {
    pub fn new(metric: &Arc<Metric>) -> Self {
        let n = metric.n();
        let z = || WCElement::zero(metric);
        let (mut x, mut y, mut h, mut e, mut f) = (z(), z(), z(), z(), z());
        let c = Scalar::c();
        let half = Scalar::frac(1, 2);
        for i in 0..n {
            let xi = WCElement::x(metric, i).expect("index in range");
            let di = WCElement::d(metric, i).expect("index in range");
            let gi = WCElement::gamma(metric, i).expect("index in range");
            x = &x + &(&gi * &di).scale(&c);
            y = &y + &(&gi * &WCElement::x_down(metric, i).expect("index in range")).scale(&c);
            h = &h - &(&xi * &di);
            e = &e - &(&WCElement::d_up(metric, i).expect("index in range") * &di).scale(&half);
            f = &f + &(&xi * &WCElement::x_down(metric, i).expect("index in range")).scale(&half);
        }
        h = &h - &WCElement::scalar(metric, Scalar::from(Rational::frac(n as i64, 2)));
        Osp { x, y, h, e, f }
    }

    /// `ad(X)(a) = [X, a]`.
    pub fn ad_x(&self, a: &WCElement) -> Result<WCElement, Error> {
        self.x.supercommutator(a)
    }

    /// `ad_r(Y)(a) = [a, Y]`.
    pub fn ad_ry(&self, a: &WCElement) -> Result<WCElement, Error> {
        a.supercommutator(&self.y)
    }

    pub fn ad_x_pow(&self, a: &WCElement, k: usize) -> Result<WCElement, Error> {
        (0..k).try_fold(a.clone(), |acc, _| self.ad_x(&acc))
    }
}

/// `[X, a]` over the metric of `a`.
pub fn ad_x(a: &WCElement) -> WCElement {
    Osp::new(a.metric()).ad_x(a).expect("same metric")
}

/// `[a, Y]` over the metric of `a`.
pub fn ad_ry(a: &WCElement) -> WCElement {
    Osp::new(a.metric()).ad_ry(a).expect("same metric")
}

/// `None` when `lhs == rhs`, otherwise the rendered difference.
pub(crate) fn witness(lhs: &WCElement, rhs: &WCElement) -> Option<String> {
    let diff = lhs - rhs;
    (!diff.is_zero()).then(|| truncate(format!("lhs - rhs = {diff}")))
}

pub(crate) fn truncate(mut s: String) -> String {
    const LIMIT: usize = 400;
    if s.len() > LIMIT {
        let cut = (0..=LIMIT).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        s.truncate(cut);
        s.push_str(" ...");
    }
    s
}

/// The twelve defining brackets of `osp(1|2)` under the embedding, plus the
/// index identities `[∂_i,x^j] = δ_i^j`, `[∂_i,x_j] = η_{ij}`,
/// `[∂^i,x^j] = η^{ij}`, `[∂^i,x_j] = δ^i_j` for every index pair.
pub fn verify_osp_suite(metric: &Arc<Metric>) -> Report {
    let o = Osp::new(metric);
    let br = |a: &WCElement, b: &WCElement| a.supercommutator(b).expect("same metric");
    let k = |v: i64| Scalar::from_int(v);
    let zero = WCElement::zero(metric);
    let cases: Vec<(&str, WCElement, WCElement)> = vec![
        ("[H,E] = 2E", br(&o.h, &o.e), o.e.scale(&k(2))),
        ("[H,X] = X", br(&o.h, &o.x), o.x.clone()),
        ("[H,Y] = -Y", br(&o.h, &o.y), o.y.scale(&k(-1))),
        ("[H,F] = -2F", br(&o.h, &o.f), o.f.scale(&k(-2))),
        ("[Y,Y] = -2F", br(&o.y, &o.y), o.f.scale(&k(-2))),
        ("[X,X] = 2E", br(&o.x, &o.x), o.e.scale(&k(2))),
        ("[Y,E] = X", br(&o.y, &o.e), o.x.clone()),
        ("[X,F] = Y", br(&o.x, &o.f), o.y.clone()),
        ("[Y,X] = H", br(&o.y, &o.x), o.h.clone()),
        ("[E,F] = H", br(&o.e, &o.f), o.h.clone()),
        ("[Y,F] = 0", br(&o.y, &o.f), zero.clone()),
        ("[X,E] = 0", br(&o.x, &o.e), zero.clone()),
        ("X^2 = E", &o.x * &o.x, o.e.clone()),
        ("Y^2 = -F", &o.y * &o.y, o.f.scale(&k(-1))),
    ];
    let mut report: Report =
        cases.into_iter().map(|(name, lhs, rhs)| Entry::check(name, &[], witness(&lhs, &rhs))).collect();

    let n = metric.n();
    let delta = |i: usize, j: usize| WCElement::scalar(metric, if i == j { k(1) } else { k(0) });
    let num = |r: &Rational| WCElement::scalar(metric, r.clone().into());
    for i in 0..n {
        for j in 0..n {
            let g = |f: fn(&Arc<Metric>, usize) -> Result<WCElement, Error>, idx| f(metric, idx).expect("in range");
            let rows = [
                ("[d_i,x^j] = delta_i^j", br(&g(WCElement::d, i), &g(WCElement::x, j)), delta(i, j)),
                ("[d_i,x_j] = eta_ij", br(&g(WCElement::d, i), &g(WCElement::x_down, j)), num(metric.down(i, j))),
                ("[d^i,x^j] = eta^ij", br(&g(WCElement::d_up, i), &g(WCElement::x, j)), num(metric.up(i, j))),
                ("[d^i,x_j] = delta^i_j", br(&g(WCElement::d_up, i), &g(WCElement::x_down, j)), delta(i, j)),
            ];
            for (name, lhs, rhs) in rows {
                report.push(Entry::check(name, &[i, j], witness(&lhs, &rhs)));
            }
        }
    }
    report
}

/// The nine adjoint identities of `X`, `Y`, `H` on the generators, for every
/// index.
pub fn verify_adjoint_suite(metric: &Arc<Metric>) -> Report {
    let o = Osp::new(metric);
    let c = Scalar::c();
    let two_c = &c + &c;
    let mut report = Report::new();
    for k in 0..metric.n() {
        let xk = WCElement::x(metric, k).expect("in range");
        let dk = WCElement::d(metric, k).expect("in range");
        let gk = WCElement::gamma(metric, k).expect("in range");
        let zero = WCElement::zero(metric);
        let br = |a: &WCElement, b: &WCElement| a.supercommutator(b).expect("same metric");
        let rows = [
            ("[X,x^k] = c g^k", br(&o.x, &xk), gk.scale(&c)),
            ("[X,d_k] = 0", br(&o.x, &dk), zero.clone()),
            ("[X,g^k] = 2c d^k", br(&o.x, &gk), WCElement::d_up(metric, k).expect("in range").scale(&two_c)),
            ("[Y,x^k] = 0", br(&o.y, &xk), zero.clone()),
            ("[Y,d_k] = -c g_k", br(&o.y, &dk), WCElement::gamma_down(metric, k).expect("in range").scale(&-&c)),
            ("[Y,g^k] = 2c x^k", br(&o.y, &gk), xk.scale(&two_c)),
            ("[H,x^k] = -x^k", br(&o.h, &xk), -&xk),
            ("[H,d_k] = d_k", br(&o.h, &dk), dk.clone()),
            ("[H,g^k] = 0", br(&o.h, &gk), zero),
        ];
        for (name, lhs, rhs) in rows {
            report.push(Entry::check(name, &[k], witness(&lhs, &rhs)));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_squared_is_e() {
        let m = Metric::euclidean(3).unwrap();
        let o = Osp::new(&m);
        assert_eq!(&o.x * &o.x, o.e);
        assert_eq!(&o.y * &o.y, -&o.f);
    }

    #[test]
    fn adjoint_examples() {
        let m = Metric::lorentzian(3).unwrap();
        let o = Osp::new(&m);
        let x1 = WCElement::x(&m, 0).unwrap();
        assert_eq!(o.ad_x(&x1).unwrap(), WCElement::gamma(&m, 0).unwrap().scale(&Scalar::c()));
        assert!(o.ad_x(&WCElement::d(&m, 2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn suites_pass_on_small_grid() {
        for m in [Metric::euclidean(1).unwrap(), Metric::offdiag(2).unwrap(), Metric::lorentzian(3).unwrap()] {
            let r = verify_osp_suite(&m);
            assert!(r.passed(), "{r}");
            let r = verify_adjoint_suite(&m);
            assert!(r.passed(), "{r}");
        }
    }
}
