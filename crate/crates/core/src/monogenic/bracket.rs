//! Orbit-symmetrized bracket symbols `[η^a x^r γ^s ∂^t; i₁,…,i_m]`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::clifford::Metric;
use crate::error::Error;
use crate::scalar::{Rational, Scalar};
use crate::weyl_clifford::monomial::factorial;
use crate::weyl_clifford::WCElement;

/// Shape of a bracket: `eta` metric pairs, `x` coordinates (may be
/// negative, meaning the symbol is zero), `gamma` Clifford generators and
/// `del` raised derivatives, distributed over `indices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketSpec {
    pub eta: usize,
    pub x: i32,
    pub gamma: usize,
    pub del: usize,
    pub indices: Vec<usize>,
}

impl BracketSpec {
    pub fn new(eta: usize, x: i32, gamma: usize, del: usize, indices: &[usize]) -> Self {
        BracketSpec { eta, x, gamma, del, indices: indices.to_vec() }
    }

    /// `[x^m; i₁,…,i_m]`.
    pub fn xs(indices: &[usize]) -> Self {
        Self::new(0, indices.len() as i32, 0, 0, indices)
    }

    pub fn m(&self) -> usize {
        self.indices.len()
    }

    pub fn is_vanishing(&self) -> bool {
        self.x < 0
    }

    fn check(&self) -> Result<(), Error> {
        let expected = 2 * self.eta + self.x.max(0) as usize + self.gamma + self.del;
        if expected == self.m() {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected, got: self.m() })
        }
    }

    /// `m! / (2^a a! r! t!)`.
    pub fn orbit_count(&self) -> Rational {
        if self.is_vanishing() {
            return Rational::zero();
        }
        let m = factorial(self.m() as u32);
        let den = Rational::from_int(1 << self.eta)
            * factorial(self.eta as u32)
            * factorial(self.x as u32)
            * factorial(self.del as u32);
        &m / &den
    }

    /// The same shape with different counts, same indices.
    pub fn with(&self, eta: usize, x: i32, gamma: usize, del: usize) -> Self {
        Self::new(eta, x, gamma, del, &self.indices)
    }
}

/// One orbit representative: positions (into `indices`) assigned to each slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub pairs: Vec<(usize, usize)>,
    pub x: Vec<usize>,
    pub gamma: Vec<usize>,
    pub del: Vec<usize>,
}

fn subsets(from: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if from.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in from.iter().enumerate() {
        for mut rest in subsets(&from[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn arrangements(from: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in from.iter().enumerate() {
        let mut rest: Vec<usize> = from.to_vec();
        rest.remove(i);
        for mut tail in arrangements(&rest, k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn matchings(from: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = from.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (i, &partner) in rest.iter().enumerate() {
        let mut remaining = rest.to_vec();
        remaining.remove(i);
        for mut tail in matchings(&remaining) {
            tail.insert(0, (first, partner));
            out.push(tail);
        }
    }
    out
}

fn without(from: &[usize], taken: &[usize]) -> Vec<usize> {
    from.iter().copied().filter(|p| !taken.contains(p)).collect()
}

/// Canonical orbit representatives: pairs sorted internally and among
/// themselves, `x` and `∂` positions sorted, `γ` positions in order.
pub fn orbits(spec: &BracketSpec) -> Result<Vec<Orbit>, Error> {
    if spec.is_vanishing() {
        return Ok(Vec::new());
    }
    spec.check()?;
    let all: Vec<usize> = (0..spec.m()).collect();
    let mut out = Vec::new();
    for gamma in arrangements(&all, spec.gamma) {
        let rest = without(&all, &gamma);
        for x in subsets(&rest, spec.x as usize) {
            let rest2 = without(&rest, &x);
            for del in subsets(&rest2, spec.del) {
                let rest3 = without(&rest2, &del);
                for pairs in matchings(&rest3) {
                    out.push(Orbit { pairs, x: x.clone(), gamma: gamma.clone(), del: del.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// Expands the bracket as an element of `W(2n|n)`; zero when `x < 0`.
pub fn bracket(metric: &Arc<Metric>, spec: &BracketSpec) -> Result<WCElement, Error> {
    for &i in &spec.indices {
        metric.check_index(i)?;
    }
    let idx = &spec.indices;
    let mut out = WCElement::zero(metric);
    for o in orbits(spec)? {
        let eta: Rational = o.pairs.iter().map(|&(p, q)| metric.up(idx[p], idx[q]).clone()).product();
        if eta.is_zero() {
            continue;
        }
        let xs: Vec<usize> = o.x.iter().map(|&p| idx[p]).collect();
        let mut term = WCElement::x_word(metric, &xs)?.scale(&Scalar::from(eta));
        for &p in &o.gamma {
            term = &term * &WCElement::gamma(metric, idx[p])?;
        }
        for &p in &o.del {
            term = &term * &WCElement::d_up(metric, idx[p])?;
        }
        out = &out + &term;
    }
    Ok(out)
}

/// `[η^a x^r γ^{s+2} ∂^t] = 2(a+1)[η^{a+1} x^r γ^s ∂^t]`: returns the factor
/// and the reduced shape.
pub fn bracket_gamma_reduce(spec: &BracketSpec) -> Result<(Scalar, BracketSpec), Error> {
    if spec.gamma < 2 {
        return Err(Error::InvalidDimension(format!("need at least two gammas, got {}", spec.gamma)));
    }
    let factor = Scalar::from_int(2 * (spec.eta as i64 + 1));
    Ok((factor, spec.with(spec.eta + 1, spec.x, spec.gamma - 2, spec.del)))
}

/// `ad(X)` of a bracket with at most one `γ`, by the closed form:
/// without `γ`, `c[η^a x^{r−1} γ ∂^t]`; with one `γ`,
/// `2c(a+1)[η^{a+1} x^{r−1} ∂^t] + 2c(t+1)[η^a x^r ∂^{t+1}]`.
pub fn ad_x_bracket(metric: &Arc<Metric>, spec: &BracketSpec) -> Result<WCElement, Error> {
    if spec.is_vanishing() {
        return Ok(WCElement::zero(metric));
    }
    spec.check()?;
    let c = Scalar::c();
    match spec.gamma {
        0 => Ok(bracket(metric, &spec.with(spec.eta, spec.x - 1, 1, spec.del))?.scale(&c)),
        1 => {
            let a = bracket(metric, &spec.with(spec.eta + 1, spec.x - 1, 0, spec.del))?
                .scale(&(&c * &Scalar::from_int(2 * (spec.eta as i64 + 1))));
            let b = bracket(metric, &spec.with(spec.eta, spec.x, 0, spec.del + 1))?
                .scale(&(&c * &Scalar::from_int(2 * (spec.del as i64 + 1))));
            Ok(&a + &b)
        }
        g => Err(Error::InvalidDimension(format!("closed form needs at most one gamma, got {g}"))),
    }
}

/// `ad(X)^{2k+r}([x^m]) = (−1)^k k! c^r Σ_{t=0}^{k} [η^t x^{m−k−t−r} γ^r ∂^{k−t}]`.
pub fn ad_x_power_xm(metric: &Arc<Metric>, indices: &[usize], k: usize, r: usize) -> Result<WCElement, Error> {
    if r > 1 {
        return Err(Error::InvalidDimension(format!("r must be 0 or 1, got {r}")));
    }
    let m = indices.len() as i32;
    let mut sum = WCElement::zero(metric);
    for t in 0..=k {
        let x = m - k as i32 - t as i32 - r as i32;
        sum = &sum + &bracket(metric, &BracketSpec::new(t, x, r, k - t, indices))?;
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let pre = Scalar::from(factorial(k as u32)).scale(&Rational::from_int(sign));
    let pre = if r == 1 { &pre * &Scalar::c() } else { pre };
    Ok(sum.scale(&pre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_clifford::ad_x;

    #[test]
    fn small_brackets() {
        let m = Metric::lorentzian(3).unwrap();
        let eta = bracket(&m, &BracketSpec::new(1, 0, 0, 0, &[2, 2])).unwrap();
        assert_eq!(eta, WCElement::scalar(&m, Scalar::from_int(-1)));
        let xx = bracket(&m, &BracketSpec::xs(&[0, 1])).unwrap();
        assert_eq!(xx, WCElement::x_word(&m, &[0, 1]).unwrap());
        assert!(bracket(&m, &BracketSpec::new(1, -1, 1, 1, &[0, 1, 2])).unwrap().is_zero());
        assert!(matches!(bracket(&m, &BracketSpec::new(1, 1, 0, 0, &[0, 1])), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn orbit_counts() {
        for (a, r, s, t) in [(1, 1, 1, 1), (2, 0, 1, 0), (0, 2, 1, 2), (1, 0, 0, 3)] {
            let m = 2 * a + r + s + t;
            let spec = BracketSpec::new(a, r as i32, s, t, &vec![0; m]);
            assert_eq!(Rational::from(orbits(&spec).unwrap().len()), spec.orbit_count());
        }
    }

    #[test]
    fn ad_x_of_square() {
        let m = Metric::euclidean(3).unwrap();
        let spec = BracketSpec::xs(&[0, 1]);
        let direct = ad_x(&bracket(&m, &spec).unwrap());
        assert_eq!(ad_x_bracket(&m, &spec).unwrap(), direct);
        let expected = (WCElement::x(&m, 0).unwrap() * WCElement::gamma(&m, 1).unwrap()
            + WCElement::x(&m, 1).unwrap() * WCElement::gamma(&m, 0).unwrap())
        .scale(&Scalar::c());
        assert_eq!(direct, expected);
    }
}
