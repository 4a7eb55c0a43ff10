//! Named verification suites over one metric, as run by the CLI and the
//! acceptance tests.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::clifford::{Blade, CliffordElement, Metric};
use crate::coset::{phi, phi_closed, phi_table, verify_diamond_formulas, verify_presentation, SolutionSpace};
use crate::error::Error;
use crate::linalg::Echelon;
use crate::monogenic::{
    ad_x_bracket, ad_x_power_xm, bracket, bracket_gamma_reduce, extract_clifford_top, hat_product_closed_form,
    hat_x_word_apply, leading_coefficient, reconstruct, solution_from_indices, top_multi_index, BracketSpec,
};
use crate::polymodule::{dirac_kernel, spans, truncated_projector, truncation_scalar, Coordinates, CliffordPolynomial};
use crate::report::{Entry, Report, Status};
use crate::scalar::{HPoly, RatH, Scalar};
use crate::weyl_clifford::monomial::{exps_of_degree, exps_to_word};
use crate::weyl_clifford::{truncate, verify_adjoint_suite, verify_osp_suite, Osp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Osp,
    Adjoint,
    Projector,
    Diamond,
    Presentation,
    Brackets,
    Product,
    Solutions,
    Cyclicity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Osp,
        Suite::Adjoint,
        Suite::Projector,
        Suite::Diamond,
        Suite::Presentation,
        Suite::Brackets,
        Suite::Product,
        Suite::Solutions,
        Suite::Cyclicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Osp => "osp",
            Suite::Adjoint => "adjoint",
            Suite::Projector => "projector",
            Suite::Diamond => "diamond",
            Suite::Presentation => "presentation",
            Suite::Brackets => "brackets",
            Suite::Product => "product",
            Suite::Solutions => "solutions",
            Suite::Cyclicity => "cyclicity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parameters shared by the suites; each suite reads what it needs.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub metric: Arc<Metric>,
    /// Largest polynomial degree.
    pub degree_bound: usize,
    /// Largest number of indices for brackets, products and solutions.
    pub max_m: usize,
    pub seed: u64,
    /// Random combinations tried by the cyclicity suite.
    pub samples: usize,
}

impl SuiteConfig {
    pub fn new(metric: &Arc<Metric>) -> Self {
        SuiteConfig { metric: metric.clone(), degree_bound: 4, max_m: 4, seed: 0, samples: 50 }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut r = match suite {
        Suite::Osp => verify_osp_suite(&cfg.metric),
        Suite::Adjoint => verify_adjoint_suite(&cfg.metric),
        Suite::Projector => {
            let mut r = projector_coefficients(20);
            r.extend(truncated_projector_suite(&cfg.metric, cfg.degree_bound)?);
            r
        }
        Suite::Diamond => verify_diamond_formulas(&cfg.metric),
        Suite::Presentation => verify_presentation(&SolutionSpace::new(&cfg.metric, cfg.degree_bound)?),
        Suite::Brackets => brackets_suite(&cfg.metric, cfg.max_m)?,
        Suite::Product => product_suite(&cfg.metric, cfg.max_m)?,
        Suite::Solutions => solutions_suite(&cfg.metric, cfg.max_m, cfg.seed)?,
        Suite::Cyclicity => cyclicity_suite(&cfg.metric, cfg.degree_bound, cfg.samples, cfg.seed)?,
    };
    r.sort();
    Ok(r)
}

/// Nondecreasing index tuples of length `m`.
pub fn sorted_tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    exps_of_degree(n, m).iter().map(exps_to_word).collect()
}

/// All `n^m` index tuples of length `m`.
pub fn all_tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    (0..m).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect()
    })
}

fn differ<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| truncate(format!("lhs = {lhs}, rhs = {rhs}")))
}

fn failed(relation: &str, idx: &[usize], e: Error) -> Entry {
    Entry { witness: Some(e.to_string()), ..Entry::new(relation, idx, Status::Fail) }
}

/// `φ_k` from the recursion against the closed forms for `k ≤ up_to`, and
/// the first four against their explicit values.
pub fn projector_coefficients(up_to: usize) -> Report {
    let mut r: Report = phi_table(up_to)
        .into_iter()
        .enumerate()
        .map(|(k, f)| Entry::check("phi_k recursion = closed form", &[], differ(&f, &phi_closed(k))).labelled(&[k]))
        .collect();
    let recip = |p: HPoly| RatH::poly(p).inv().expect("nonzero");
    let neg = Scalar::from_int(-1);
    let first = [
        RatH::one(),
        recip(HPoly::h_plus(1)).scale(&neg),
        recip(HPoly::h_plus(1)),
        recip(HPoly::rising(1, 2)).scale(&neg),
        recip(HPoly::rising(1, 2).scale(&Scalar::from_int(2))),
    ];
    for (k, f) in first.iter().enumerate() {
        r.push(Entry::check("phi_k first values", &[], differ(&phi(k), f)).labelled(&[k]));
    }
    r
}

/// `X P_N = 0` and `P_N Y = 0` on `V` up to degree `bound`, for `N` equal
/// to the degree and one more, and `P_N v = (H+1)⋯(H+k) v` on the kernel
/// bases. `X`, `Y` and `P_N` commute with right Clifford multiplication, so
/// the scalar monomials `x^α` span `V` for this purpose.
pub fn truncated_projector_suite(metric: &Arc<Metric>, bound: usize) -> Result<Report, Error> {
    let n = metric.n();
    let mut jobs = Vec::new();
    for d in 0..=bound {
        for alpha in exps_of_degree(n, d) {
            jobs.push((d, alpha));
        }
    }
    let mut entries: Vec<Entry> = jobs
        .par_iter()
        .flat_map_iter(|(d, alpha)| {
            let word = exps_to_word(alpha);
            let v = CliffordPolynomial::x_word(metric, &word).expect("in range");
            let yv = v.apply_y();
            let mut out = Vec::new();
            for big_n in [*d, d + 1] {
                let e = match truncated_projector(&v, Some(big_n)) {
                    Ok(p) => {
                        let xp = p.apply_x();
                        Entry::check("X P_N = 0", &[], (!xp.is_zero()).then(|| truncate(format!("x^{word:?}: {xp}"))))
                            .labelled(&[*d, big_n])
                    }
                    Err(e) => failed("X P_N = 0", &[], e).labelled(&[*d, big_n]),
                };
                out.push(e);
            }
            for big_n in [d + 1, d + 2] {
                let e = match truncated_projector(&yv, Some(big_n)) {
                    Ok(p) => Entry::check("P_N Y = 0", &[], (!p.is_zero()).then(|| truncate(format!("x^{word:?}: {p}")))),
                    Err(e) => failed("P_N Y = 0", &[], e),
                };
                out.push(e.labelled(&[d + 1, big_n]));
            }
            out
        })
        .collect();
    for d in 0..=bound {
        let basis = dirac_kernel(d, metric)?;
        for big_n in [d, d + 1] {
            let s = truncation_scalar(d, n, big_n)?;
            let mut w = None;
            for v in &basis.vectors {
                let p = truncated_projector(v, Some(big_n))?;
                if w.is_none() {
                    w = differ(&p, &v.scale(&s));
                }
            }
            entries.push(Entry::check("P_N v = (H+1)...(H+k) v on monogenics", &[], w).labelled(&[d, big_n]));
        }
    }
    Ok(entries.into_iter().collect())
}

/// Shapes `(a, r, s, t)` with `2a + r + s + t = m`.
fn shapes(m: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..=m / 2 {
        for r in 0..=m - 2 * a {
            for s in 0..=m - 2 * a - r {
                out.push((a, r, s, m - 2 * a - r - s));
            }
        }
    }
    out
}

/// The three bracket lemmas against direct expansion and iterated `ad(X)`,
/// for every shape with `m ≤ max_m` and every sorted index tuple. Brackets
/// are symmetric in their indices, so sorted tuples cover all of them.
pub fn brackets_suite(metric: &Arc<Metric>, max_m: usize) -> Result<Report, Error> {
    let n = metric.n();
    let osp = Osp::new(metric);
    let jobs: Vec<Vec<usize>> = (0..=max_m).flat_map(|m| sorted_tuples(n, m)).collect();
    let entries = jobs
        .par_iter()
        .map(|idx| -> Result<Vec<Entry>, Error> {
            let m = idx.len();
            let mut out = Vec::new();
            for (a, r, s, t) in shapes(m) {
                let spec = BracketSpec::new(a, r as i32, s, t, idx);
                let label = [a, r, s, t];
                if s >= 2 {
                    let (f, reduced) = bracket_gamma_reduce(&spec)?;
                    let lhs = bracket(metric, &spec)?;
                    let rhs = bracket(metric, &reduced)?.scale(&f);
                    out.push(shape_entry("gamma pair reduction", &label, idx, differ(&lhs, &rhs)));
                }
                if s <= 1 {
                    let lhs = osp.ad_x(&bracket(metric, &spec)?)?;
                    let rhs = ad_x_bracket(metric, &spec)?;
                    out.push(shape_entry("ad(X) of a bracket", &label, idx, differ(&lhs, &rhs)));
                }
            }
            let xs = bracket(metric, &BracketSpec::xs(idx))?;
            let mut iterated = vec![xs];
            for _ in 0..m {
                let next = osp.ad_x(iterated.last().expect("nonempty"))?;
                iterated.push(next);
            }
            for p in 0..=m {
                let (k, r) = (p / 2, p % 2);
                let rhs = ad_x_power_xm(metric, idx, k, r)?;
                out.push(shape_entry("ad(X)^p of x^m", &[p], idx, differ(&iterated[p], &rhs)));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(entries.into_iter().flatten().collect())
}

fn shape_entry(relation: &str, shape: &[usize], idx: &[usize], w: Option<String>) -> Entry {
    Entry::check(format!("{relation} {shape:?}"), idx, w)
}

/// The closed form of `x̂^{i₁}⋯x̂^{i_m}` against the composition of single
/// hat operators on every constant `γ^S`, for all index tuples with
/// `m ≤ max_m`.
pub fn product_suite(metric: &Arc<Metric>, max_m: usize) -> Result<Report, Error> {
    let n = metric.n();
    let constants: Vec<CliffordPolynomial> = Blade::all(n)
        .into_iter()
        .map(|b| CliffordPolynomial::constant(&CliffordElement::blade(metric, b, Scalar::one())))
        .collect();
    let jobs: Vec<Vec<usize>> = (1..=max_m).flat_map(|m| all_tuples(n, m)).collect();
    let entries = jobs
        .par_iter()
        .map(|idx| -> Result<Entry, Error> {
            let closed = hat_product_closed_form(metric, idx)?;
            for v in &constants {
                let lhs = v.act_h(&closed)?;
                let rhs = hat_x_word_apply(idx, v)?;
                if lhs != rhs {
                    let w = truncate(format!("on {v}: closed - composed = {}", &lhs - &rhs));
                    return Ok(Entry::check("closed form = hat composition", idx, Some(w)));
                }
            }
            Ok(Entry::check("closed form = hat composition", idx, None))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(entries.into_iter().collect())
}

/// Span of `Y·V_{d−1}` inside `V_d`.
fn y_image(metric: &Arc<Metric>, d: usize) -> (Coordinates, Echelon) {
    let n = metric.n();
    let coords = Coordinates::graded(n, d);
    let mut e = Echelon::new();
    if d > 0 {
        for alpha in exps_of_degree(n, d - 1) {
            for b in Blade::all(n) {
                let w = CliffordPolynomial::term(metric, alpha, b, Scalar::one()).apply_y();
                e.insert(coords.vector(&w).expect("graded"));
            }
        }
    }
    (coords, e)
}

fn random_clifford(metric: &Arc<Metric>, rng: &mut ChaCha8Rng) -> CliffordElement {
    let terms = Blade::all(metric.n()).into_iter().map(|b| (b, Scalar::from_int(rng.gen_range(-3..=3))));
    CliffordElement::from_terms(metric, terms)
}

/// For every sorted index tuple with `m ≤ max_m`: the closed-form solution
/// is annihilated by the Dirac operator, agrees with composing hat
/// operators on `1`, differs from `(−1)^m Π(n/2+m−k) x^{i₁}⋯x^{i_m}` by an
/// element of `Y·V_{m−1}`, and commutes with a right Clifford factor,
/// checked against composing hat operators on the constant `p`.
pub fn solutions_suite(metric: &Arc<Metric>, max_m: usize, seed: u64) -> Result<Report, Error> {
    let n = metric.n();
    let one = CliffordPolynomial::one(metric);
    let mut entries = Vec::new();
    for m in 0..=max_m {
        let (coords, y_img) = y_image(metric, m);
        let lead = leading_coefficient(n, m);
        let tuples = sorted_tuples(n, m);
        let part = tuples
            .par_iter()
            .enumerate()
            .map(|(t, idx)| -> Result<Vec<Entry>, Error> {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((m as u64) << 32) ^ t as u64);
                let s = solution_from_indices(metric, idx, &CliffordElement::one(metric))?;
                let mut out = Vec::new();
                let dv = s.dirac();
                out.push(Entry::check("Dirac annihilates", idx, (!dv.is_zero()).then(|| truncate(dv.to_string()))));
                out.push(Entry::check("closed form = hat composition on 1", idx, differ(&s, &hat_x_word_apply(idx, &one)?)));
                let rest = &s - &CliffordPolynomial::x_word(metric, idx)?.scale(&lead);
                let inside = y_img.contains(coords.vector(&rest).expect("graded"));
                out.push(Entry::check(
                    "leading coefficient modulo Y V",
                    idx,
                    (!inside).then(|| truncate(format!("remainder not in Y V: {rest}"))),
                ));
                let p = random_clifford(metric, &mut rng);
                let lhs = solution_from_indices(metric, idx, &p)?;
                let rhs = hat_x_word_apply(idx, &CliffordPolynomial::constant(&p))?;
                out.push(Entry::check("right Clifford factor", idx, differ(&lhs, &rhs)));
                Ok(out)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        entries.extend(part.into_iter().flatten());
    }
    Ok(entries.into_iter().collect())
}

/// Generated solutions span each kernel, reconstruction reproduces random
/// combinations of kernel basis vectors across degrees, and the extracted
/// top coefficient matches direct read-off.
pub fn cyclicity_suite(metric: &Arc<Metric>, bound: usize, samples: usize, seed: u64) -> Result<Report, Error> {
    let n = metric.n();
    let blades: Vec<CliffordElement> =
        Blade::all(n).into_iter().map(|b| CliffordElement::blade(metric, b, Scalar::one())).collect();
    let bases = (0..=bound).into_par_iter().map(|d| dirac_kernel(d, metric)).collect::<Result<Vec<_>, Error>>()?;
    let mut report: Report = bases
        .par_iter()
        .map(|basis| -> Result<Entry, Error> {
            let d = basis.degree;
            let mut gens = Vec::new();
            for idx in sorted_tuples(n, d) {
                let s = solution_from_indices(metric, &idx, &CliffordElement::one(metric))?;
                for b in &blades {
                    gens.push(s.right_mul(b)?);
                }
            }
            let ok = spans(basis, &gens)?;
            let w = (!ok).then(|| format!("degree {d}: kernel dimension {}", basis.dim()));
            Ok(Entry::check("generated solutions span the kernel", &[], w).labelled(&[d]))
        })
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .collect();

    let pool: Vec<&CliffordPolynomial> = bases.iter().flat_map(|b| &b.vectors).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combos: Vec<CliffordPolynomial> = (0..samples)
        .map(|_| {
            let k = rng.gen_range(1..=4);
            (0..k).fold(CliffordPolynomial::zero(metric), |acc, _| {
                let v = pool[rng.gen_range(0..pool.len())];
                let c = Scalar::from_int(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
                &acc + &v.scale(&c)
            })
        })
        .collect();
    let entries: Vec<Entry> = combos
        .par_iter()
        .enumerate()
        .flat_map_iter(|(s, phi)| {
            let mut out = Vec::new();
            let e = match reconstruct(phi).and_then(|r| r.apply()) {
                Ok(back) => Entry::check("reconstruction applied to 1", &[], differ(&back, phi)),
                Err(Error::TildeUndefined) if n == 2 => Entry {
                    warnings: vec!["tilde operators are undefined for n = 2".into()],
                    ..Entry::new("reconstruction applied to 1", &[], Status::Skipped)
                },
                Err(e) => failed("reconstruction applied to 1", &[], e),
            };
            out.push(e);
            if !phi.is_zero() {
                let beta = top_multi_index(phi).expect("nonzero");
                let e = match extract_clifford_top(phi) {
                    Ok(p) => {
                        let direct = phi.clifford_coeff(&beta);
                        let w = differ(&p, &direct).or_else(|| p.is_zero().then(|| "zero coefficient".to_string()));
                        Entry::check("top coefficient = direct read-off", &[], w)
                    }
                    Err(e) => failed("top coefficient = direct read-off", &[], e),
                };
                out.push(e);
            }
            out.into_iter().map(move |e| e.labelled(&[s]))
        })
        .collect();
    report.extend(entries.into_iter().collect());
    Ok(report)
}
