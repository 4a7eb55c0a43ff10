//! Semantic equality in `A′/II` through the action on monogenics, and the
//! verification suites for generator products and the presentation.

use std::sync::Arc;

use rayon::prelude::*;

use super::diamond::CosetRep;
use super::hcoeff::HCoeffElement;
use super::projector::phi;
use crate::clifford::Metric;
use crate::error::Error;
use crate::polymodule::{dirac_kernel, right_generators, truncated_projector, truncation_scalar, CliffordPolynomial};
use crate::report::{Entry, Report, Status};
use crate::scalar::{RatH, Rational, Scalar};
use crate::weyl_clifford::{Osp, WCElement};

/// Monogenics of degree `≤ bound`, stored as generators of each graded
/// piece as a right Clifford module.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    metric: Arc<Metric>,
    degree_bound: usize,
    generators: Vec<(usize, Vec<CliffordPolynomial>)>,
}

impl SolutionSpace {
    pub fn new(metric: &Arc<Metric>, degree_bound: usize) -> Result<Self, Error> {
        let generators = (0..=degree_bound)
            .into_par_iter()
            .map(|d| Ok((d, right_generators(&dirac_kernel(d, metric)?))))
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(SolutionSpace { metric: metric.clone(), degree_bound, generators })
    }

    pub fn metric(&self) -> &Arc<Metric> {
        &self.metric
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn generators(&self) -> &[(usize, Vec<CliffordPolynomial>)] {
        &self.generators
    }
}

/// Outcome of comparing two classes on a [`SolutionSpace`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    /// First graded component where the projected actions differ.
    pub witness: Option<String>,
    /// Components that could not be tested.
    pub skipped: Vec<String>,
    /// Number of components actually compared.
    pub checked: usize,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.witness.is_none()
    }

    /// A report entry: pass, fail, or skipped when nothing was compared.
    pub fn entry(self, relation: &str, indices: &[usize]) -> Entry {
        let status = match (&self.witness, self.checked) {
            (Some(_), _) => Status::Fail,
            (None, 0) => Status::Skipped,
            (None, _) => Status::Pass,
        };
        Entry { witness: self.witness, warnings: self.skipped, ..Entry::new(relation, indices, status) }
    }
}

/// Compares `P(a·v)` with `P(b·v)` on every generator `v`. On a component
/// of degree `e` the projector is `P_{e+1}`, which differs from `P` by the
/// scalar `(H+1)⋯(H+k)`; components where that scalar vanishes, or where a
/// coefficient of `a` or `b` has a pole, are skipped.
pub fn compare(space: &SolutionSpace, a: &CosetRep, b: &CosetRep) -> Result<Comparison, Error> {
    if a.metric() != space.metric() || b.metric() != space.metric() {
        return Err(Error::ContextMismatch);
    }
    let n = space.metric.n();
    let mut out = Comparison::default();
    for (d, gens) in &space.generators {
        for (k, v) in gens.iter().enumerate() {
            let (wa, pa) = v.act_h_partial(&a.rep)?;
            let (wb, pb) = v.act_h_partial(&b.rep)?;
            let mut poles = pa;
            poles.extend(pb);
            poles.sort_unstable();
            poles.dedup();
            for &e in &poles {
                out.skipped.push(format!("pole on degree {e} from generator {k} of degree {d}"));
            }
            let diff = &wa - &wb;
            // Degrees the operators could reach: every weight shift present.
            let mut degrees: Vec<usize> = a
                .rep
                .terms()
                .keys()
                .chain(b.rep.terms().keys())
                .filter_map(|m| usize::try_from(*d as i64 + m.weight()).ok())
                .collect();
            degrees.sort_unstable();
            degrees.dedup();
            for e in degrees {
                if poles.binary_search(&e).is_ok() {
                    continue;
                }
                if truncation_scalar(e, n, e + 1)?.is_zero() {
                    out.skipped.push(format!("truncated projector vanishes on degree {e}"));
                    continue;
                }
                out.checked += 1;
                let p = truncated_projector(&diff.component(e), Some(e + 1))?;
                if !p.is_zero() && out.witness.is_none() {
                    out.witness = Some(crate::weyl_clifford::truncate(format!(
                        "degree {e} component, generator {k} of degree {d}: P(lhs v) - P(rhs v) = {p}"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// `true` iff `P(a·v) = P(b·v)` for all monogenics `v` of degree at most
/// `degree_bound`. Sound but possibly incomplete; see the crate docs.
pub fn coset_eq(a: &CosetRep, b: &CosetRep, degree_bound: usize) -> Result<bool, Error> {
    coset_eq_in(&SolutionSpace::new(a.metric(), degree_bound)?, a, b)
}

/// [`coset_eq`] against a precomputed space.
pub fn coset_eq_in(space: &SolutionSpace, a: &CosetRep, b: &CosetRep) -> Result<bool, Error> {
    let c = compare(space, a, b)?;
    if c.checked == 0 && c.witness.is_none() {
        return Err(Error::Indeterminate);
    }
    Ok(c.equal())
}

/// Named generators of `W(2n|n)` as coset classes.
pub(crate) struct Gens {
    pub metric: Arc<Metric>,
}

impl Gens {
    pub fn new(metric: &Arc<Metric>) -> Self {
        Gens { metric: metric.clone() }
    }
    fn wrap(e: Result<WCElement, Error>) -> CosetRep {
        CosetRep::from_wc(&e.expect("index in range"))
    }
    pub fn x(&self, i: usize) -> CosetRep {
        Self::wrap(WCElement::x(&self.metric, i))
    }
    pub fn x_down(&self, i: usize) -> CosetRep {
        Self::wrap(WCElement::x_down(&self.metric, i))
    }
    pub fn d(&self, i: usize) -> CosetRep {
        Self::wrap(WCElement::d(&self.metric, i))
    }
    pub fn d_up(&self, i: usize) -> CosetRep {
        Self::wrap(WCElement::d_up(&self.metric, i))
    }
    pub fn g(&self, i: usize) -> CosetRep {
        Self::wrap(WCElement::gamma(&self.metric, i))
    }
    pub fn g_down(&self, i: usize) -> CosetRep {
        Self::wrap(WCElement::gamma_down(&self.metric, i))
    }
    pub fn one(&self) -> CosetRep {
        CosetRep::one(&self.metric)
    }
}

fn rep_witness(lhs: &CosetRep, rhs: &CosetRep) -> Option<String> {
    let diff = lhs.try_sub(rhs).expect("same metric");
    (!diff.rep.is_zero()).then(|| crate::weyl_clifford::truncate(format!("lhs - rhs = {diff}")))
}

fn inv_h_plus(k: i64) -> RatH {
    RatH::h_plus(k).inv().expect("nonzero")
}

/// Sample elements for the identities quantified over all `a`.
fn samples(metric: &Arc<Metric>) -> Vec<(String, CosetRep)> {
    let n = metric.n();
    let last = n - 1;
    let mut out = Vec::new();
    let g = Gens::new(metric);
    out.push(("1".into(), g.one()));
    out.push(("x1".into(), g.x(0)));
    out.push(("d1".into(), g.d(0)));
    out.push((format!("g{}", n), g.g(last)));
    let words = [format!("x1*d{}*g1", n), format!("d1^2*g{}", n), format!("x{}*x1*g1*g{}", n, n)];
    for w in words {
        let e = crate::weyl_clifford::parse_wc(&w, metric).expect("valid sample");
        out.push((w, CosetRep::from_wc(&e)));
    }
    out.push(("(1/(H+1))*x1".into(), g.x(0).left_mul(&inv_h_plus(1))));
    out
}

/// The eight generator products, compared syntactically against the
/// closed forms built with the same multiplication. Identities quantified
/// over `a` or `φ` run over a fixed sample set.
pub fn verify_diamond_formulas(metric: &Arc<Metric>) -> Report {
    let n = metric.n();
    let osp = Osp::new(metric);
    let g = Gens::new(metric);
    let dia = |a: &CosetRep, b: &CosetRep| CosetRep::diamond_with(&osp, a, b).expect("same metric");
    let mul = |a: &CosetRep, b: &CosetRep| CosetRep::new(a.rep.try_mul(&b.rep).expect("same metric"));
    let phi1 = phi(1);
    let phi2 = phi(2);
    let mut report = Report::new();
    let sample_set = samples(metric);
    let funcs = [RatH::h(), inv_h_plus(1), &RatH::h_plus(3) * &inv_h_plus(2)];
    for j in 0..n {
        for (name, a) in &sample_set {
            let w = rep_witness(&dia(a, &g.d(j)), &mul(a, &g.d(j))).map(|s| format!("a = {name}: {s}"));
            report.push(Entry::check("a<>d_j = a d_j", &[j], w));
            let w = rep_witness(&dia(&g.x(j), a), &mul(&g.x(j), a)).map(|s| format!("a = {name}: {s}"));
            report.push(Entry::check("x^i<>a = x^i a", &[j], w));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let idx = [i, j];
            let rhs = mul(&g.d(i), &g.g(j)).try_sub(&mul(&g.g_down(i), &g.d_up(j)).left_mul(&phi1.shift(-1))).unwrap();
            report.push(Entry::check("d_i<>g^j", &idx, rep_witness(&dia(&g.d(i), &g.g(j)), &rhs)));

            let rhs = mul(&g.g(i), &g.g(j))
                .try_sub(&mul(&g.x(i), &g.d_up(j)).left_mul(&phi1).scale(&Scalar::from_int(2)))
                .unwrap();
            report.push(Entry::check("g^i<>g^j", &idx, rep_witness(&dia(&g.g(i), &g.g(j)), &rhs)));

            let rhs = mul(&g.d(i), &g.x(j))
                .try_sub(&mul(&g.g_down(i), &g.g(j)).left_mul(&phi1.shift(-1)).scale(&Scalar::frac(1, 2)))
                .unwrap()
                .try_add(&mul(&g.x_down(i), &g.d_up(j)).left_mul(&phi2.shift(-1)))
                .unwrap();
            report.push(Entry::check("d_i<>x^j", &idx, rep_witness(&dia(&g.d(i), &g.x(j)), &rhs)));

            let rhs = mul(&g.g(i), &g.x(j)).try_sub(&mul(&g.x(i), &g.g(j)).left_mul(&phi1)).unwrap();
            report.push(Entry::check("g^i<>x^j", &idx, rep_witness(&dia(&g.g(i), &g.x(j)), &rhs)));
        }
    }
    for (fi, f) in funcs.iter().enumerate() {
        let fr = CosetRep::rath(metric, f.clone());
        for (name, a) in &sample_set {
            let w = rep_witness(&dia(&fr, a), &mul(&fr, a)).map(|s| format!("a = {name}: {s}"));
            report.push(Entry::check("phi(H)<>a = phi(H) a", &[fi], w));
            let w = rep_witness(&dia(a, &fr), &mul(a, &fr)).map(|s| format!("a = {name}: {s}"));
            report.push(Entry::check("a<>phi(H) = a phi(H)", &[fi], w));
        }
    }
    report
}

/// Relations (a)–(g) of the presentation for every index pair, each side
/// computed with the diamond product and compared with [`compare`].
pub fn verify_presentation(space: &SolutionSpace) -> Report {
    let metric = space.metric().clone();
    let n = metric.n();
    let osp = Osp::new(&metric);
    let g = Gens::new(&metric);
    let dia = |a: &CosetRep, b: &CosetRep| CosetRep::diamond_with(&osp, a, b).expect("same metric");
    let run = |name: &str, idx: &[usize], lhs: CosetRep, rhs: CosetRep| -> Entry {
        match compare(space, &lhs, &rhs) {
            Ok(c) => c.entry(name, idx),
            Err(e) => Entry { witness: Some(e.to_string()), ..Entry::new(name, idx, Status::Fail) },
        }
    };
    let inv_h = RatH::h().inv().expect("nonzero");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut entries: Vec<Entry> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let idx = [i, j];
            let eta_up = Scalar::from(metric.up(i, j).clone());
            let delta = Scalar::from_int((i == j) as i64);
            let mut out = Vec::new();

            let lhs = dia(&g.d(i), &g.g(j)).try_sub(&dia(&g.g(j), &g.d(i))).unwrap();
            let rhs = dia(&g.g_down(i), &g.d_up(j)).left_mul(&inv_h);
            out.push(run("(a) d_i<>g^j - g^j<>d_i", &idx, lhs, rhs));

            let lhs = dia(&g.g(i), &g.g(j)).try_add(&dia(&g.g(j), &g.g(i))).unwrap();
            let rhs = g
                .one()
                .scale(&(&eta_up * &Scalar::from_int(2)))
                .try_add(
                    &dia(&g.x(j), &g.d_up(i))
                        .try_add(&dia(&g.x(i), &g.d_up(j)))
                        .unwrap()
                        .left_mul(&inv_h_plus(1).scale(&Scalar::from_int(2))),
                )
                .unwrap();
            out.push(run("(b) g^i<>g^j + g^j<>g^i", &idx, lhs, rhs));

            let lhs = dia(&g.d(i), &g.x(j)).try_sub(&dia(&g.x(j), &g.d(i))).unwrap();
            let rhs = g
                .one()
                .scale(&delta)
                .try_add(&dia(&g.g_down(i), &g.g(j)).left_mul(&inv_h.scale(&Scalar::frac(1, 2))))
                .unwrap()
                .try_add(&dia(&g.x_down(i), &g.d_up(j)).left_mul(&inv_h_plus(1)))
                .unwrap();
            out.push(run("(c) d_i<>x^j - x^j<>d_i", &idx, lhs, rhs));

            let lhs = dia(&g.g(i), &g.x(j)).try_sub(&dia(&g.x(j), &g.g(i))).unwrap();
            let rhs = dia(&g.x(i), &g.g(j)).left_mul(&inv_h_plus(1));
            out.push(run("(d) g^i<>x^j - x^j<>g^i", &idx, lhs, rhs));
            out
        })
        .collect();

    let sum = |f: &dyn Fn(usize) -> CosetRep| {
        (0..n).fold(CosetRep::zero(&metric), |acc, i| acc.try_add(&f(i)).expect("same metric"))
    };
    let minus_h_minus_half_n =
        &(-RatH::h()) + &RatH::constant(Scalar::from(Rational::frac(-(n as i64), 2)));
    let lhs = sum(&|i| dia(&g.x(i), &g.d(i)));
    entries.push(run("(e) x^i<>d_i = -n/2 - H", &[], lhs, CosetRep::rath(&metric, minus_h_minus_half_n)));
    let lhs = sum(&|i| dia(&g.g(i), &g.d(i)));
    entries.push(run("(f) g^i<>d_i = 0", &[], lhs, CosetRep::zero(&metric)));
    let lhs = sum(&|i| dia(&g.g_down(i), &g.x(i)));
    entries.push(run("(g) g_i<>x^i = 0", &[], lhs, CosetRep::zero(&metric)));
    let mut report: Report = entries.into_iter().collect();
    report.sort();
    report
}

/// Associativity `(a◇b)◇c = a◇(b◇c)` on every generator triple from the
/// given list, compared semantically.
pub fn verify_associativity(space: &SolutionSpace, triples: &[[usize; 3]]) -> Report {
    let metric = space.metric().clone();
    let osp = Osp::new(&metric);
    let g = Gens::new(&metric);
    let n = metric.n();
    // Generators indexed 0..3n: x^i, ∂_i, γ^i.
    let gen = |k: usize| match k / n {
        0 => g.x(k % n),
        1 => g.d(k % n),
        _ => g.g(k % n),
    };
    let dia = |a: &CosetRep, b: &CosetRep| CosetRep::diamond_with(&osp, a, b).expect("same metric");
    let entries: Vec<Entry> = triples
        .par_iter()
        .map(|t| {
            let (a, b, c) = (gen(t[0]), gen(t[1]), gen(t[2]));
            let left = dia(&dia(&a, &b), &c);
            let right = dia(&a, &dia(&b, &c));
            match compare(space, &left, &right) {
                Ok(cmp) => cmp.entry("(a<>b)<>c = a<>(b<>c)", t),
                Err(e) => Entry { witness: Some(e.to_string()), ..Entry::new("associativity", t, Status::Fail) },
            }
        })
        .collect();
    let mut report: Report = entries.into_iter().collect();
    report.sort();
    report
}

/// The diamond product against its defining property: on monogenics,
/// `P((a◇b)·v) = P(a·P(b·v))` with the exact projector.
pub fn diamond_matches_composition(space: &SolutionSpace, a: &CosetRep, b: &CosetRep) -> Result<Option<String>, Error> {
    use crate::polymodule::extremal_projector;
    let ab = a.diamond(b)?;
    for (d, gens) in space.generators() {
        for v in gens {
            let direct = match v.act_h(&ab.rep).and_then(|w| extremal_projector(&w)) {
                Ok(w) => w,
                Err(Error::PoleAtDegree { .. }) => continue,
                Err(e) => return Err(e),
            };
            let composed = match v
                .act_h(&b.rep)
                .and_then(|w| extremal_projector(&w))
                .and_then(|w| w.act_h(&a.rep))
                .and_then(|w| extremal_projector(&w))
            {
                Ok(w) => w,
                Err(Error::PoleAtDegree { .. }) => continue,
                Err(e) => return Err(e),
            };
            if direct != composed {
                return Ok(Some(crate::weyl_clifford::truncate(format!(
                    "degree {d}: P((a<>b)v) - P(a P(b v)) = {}",
                    &direct - &composed
                ))));
            }
        }
    }
    Ok(None)
}

/// `(H+1)·P(x^i)` with `P = Σ φ_k(H) Y^k X^k`, as an element with left
/// `H`-coefficients. Terms ending in `X` are dropped since they act as
/// zero on monogenics.
pub fn projected_x(metric: &Arc<Metric>, i: usize) -> Result<HCoeffElement, Error> {
    let osp = Osp::new(metric);
    let mut out = HCoeffElement::zero(metric);
    let mut ad = WCElement::x(metric, i)?;
    let mut y_pow = WCElement::one(metric);
    for k in 0.. {
        if ad.is_zero() {
            break;
        }
        let term = HCoeffElement::from_wc(&y_pow.try_mul(&ad)?).left_mul(&(&RatH::h_plus(1) * &phi(k)));
        out = out.try_add(&term)?;
        ad = osp.ad_x(&ad)?;
        y_pow = y_pow.try_mul(&osp.y)?;
    }
    Ok(out)
}
