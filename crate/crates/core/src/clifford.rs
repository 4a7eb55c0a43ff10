//! Clifford algebras `Cl(η)` for symmetric invertible rational metrics.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::{Rational, Scalar};
use crate::MAX_DIM;

/// A basis monomial `γ^{s₁}⋯γ^{s_k}` with `s₁ < ⋯ < s_k`, stored as a bit set.
///
/// Blades are ordered by grade first, then lexicographically by index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub fn single(i: usize) -> Blade {
        Blade(1 << i)
    }

    pub fn from_bits(bits: u32) -> Blade {
        Blade(bits)
    }

    /// From a strictly increasing index list.
    pub fn from_sorted(indices: &[usize]) -> Option<Blade> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(Blade(indices.iter().fold(0, |acc, &i| acc | 1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn parity(self) -> u8 {
        (self.0.count_ones() & 1) as u8
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    fn with(self, i: usize) -> Blade {
        Blade(self.0 | 1 << i)
    }

    fn without(self, i: usize) -> Blade {
        Blade(self.0 & !(1 << i))
    }

    /// All blades over `n` generators in canonical order.
    pub fn all(n: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..1u32 << n).map(Blade).collect();
        v.sort();
        v
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_blade(*self, "g", "^"))
    }
}

/// `g1^g3` style rendering with 1-based indices; `1` for the empty blade.
pub(crate) fn render_blade(b: Blade, prefix: &str, sep: &str) -> String {
    if b.is_empty() {
        return "1".into();
    }
    b.indices().map(|i| format!("{prefix}{}", i + 1)).collect::<Vec<_>>().join(sep)
}

type BladeTerms = Vec<(Blade, Rational)>;

/// Which index of a generator is moved by the metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    /// `x_i = η_{ij} x^j`
    XDown,
    /// `∂^i = η^{ij} ∂_j`
    DelUp,
    /// `γ_i = η_{ij} γ^j`
    GammaDown,
}

/// The metric `η^{ij}` together with its inverse `η_{ij}`.
pub struct Metric {
    n: usize,
    up: Vec<Vec<Rational>>,
    down: Vec<Vec<Rational>>,
    table: OnceLock<Vec<BladeTerms>>,
}

impl Metric {
    /// Builds a metric from `η^{ij}`, validating symmetry and invertibility.
    pub fn from_matrix(up: Vec<Vec<Rational>>) -> Result<Arc<Metric>, Error> {
        let n = up.len();
        if n == 0 {
            return Err(Error::InvalidDimension("n must be at least 1".into()));
        }
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge(n));
        }
        if up.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMetric("matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if up[i][j] != up[j][i] {
                    return Err(Error::InvalidMetric("matrix is not symmetric".into()));
                }
            }
        }
        let down = invert(&up).ok_or_else(|| Error::InvalidMetric("matrix is singular".into()))?;
        Ok(Arc::new(Metric { n, up, down, table: OnceLock::new() }))
    }

    pub fn diag(entries: &[Rational]) -> Result<Arc<Metric>, Error> {
        let n = entries.len();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (i, e) in entries.iter().enumerate() {
            m[i][i] = e.clone();
        }
        Self::from_matrix(m)
    }

    pub fn euclidean(n: usize) -> Result<Arc<Metric>, Error> {
        Self::diag(&vec![Rational::one(); n])
    }

    /// `diag(1, …, 1, −1)`.
    pub fn lorentzian(n: usize) -> Result<Arc<Metric>, Error> {
        let mut e = vec![Rational::one(); n];
        if let Some(last) = e.last_mut() {
            *last = Rational::from_int(-1);
        }
        Self::diag(&e)
    }

    /// Hyperbolic pairs `[[0,1],[1,0]]` along the diagonal, with a trailing `1`
    /// when `n` is odd.
    pub fn offdiag(n: usize) -> Result<Arc<Metric>, Error> {
        let mut m = vec![vec![Rational::zero(); n]; n];
        for k in (0..n / 2).map(|k| 2 * k) {
            m[k][k + 1] = Rational::one();
            m[k + 1][k] = Rational::one();
        }
        if n % 2 == 1 {
            m[n - 1][n - 1] = Rational::one();
        }
        Self::from_matrix(m)
    }

    /// Parses `euclidean`, `lorentzian`, `offdiag` (sized by `n`), the
    /// shorthand `diag:1,1,-1`, or a JSON matrix such as `[[0,1],[1,0]]`
    /// whose entries are integers or `"p/q"` strings.
    pub fn parse(spec: &str, n: usize) -> Result<Arc<Metric>, Error> {
        let spec = spec.trim();
        let m = match spec {
            "euclidean" | "identity" => Self::euclidean(n)?,
            "lorentzian" => Self::lorentzian(n)?,
            "offdiag" => Self::offdiag(n)?,
            _ if spec.starts_with("diag:") => {
                let entries = spec["diag:".len()..]
                    .split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<Rational>, _>>()?;
                Self::diag(&entries)?
            }
            _ if spec.starts_with('[') => Self::from_matrix(parse_json_matrix(spec)?)?,
            _ => return Err(Error::InvalidMetric(format!("unrecognised metric `{spec}`"))),
        };
        if m.n != n {
            return Err(Error::InvalidMetric(format!(
                "metric has dimension {} but n = {n}",
                m.n
            )));
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `η^{ij}`.
    pub fn up(&self, i: usize, j: usize) -> &Rational {
        &self.up[i][j]
    }

    /// `η_{ij}`.
    pub fn down(&self, i: usize, j: usize) -> &Rational {
        &self.down[i][j]
    }

    pub fn up_matrix(&self) -> &[Vec<Rational>] {
        &self.up
    }

    pub fn check_index(&self, i: usize) -> Result<(), Error> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i + 1, n: self.n })
        }
    }

    /// Expresses a lowered or raised generator over upper-index `x`, `γ` or
    /// lower-index `∂` generators: `(j, coefficient)` pairs with nonzero
    /// coefficients.
    pub fn lower_raise(&self, kind: IndexKind, i: usize) -> Result<Vec<(usize, Rational)>, Error> {
        self.check_index(i)?;
        let row = match kind {
            IndexKind::XDown | IndexKind::GammaDown => &self.down[i],
            IndexKind::DelUp => &self.up[i],
        };
        Ok(row.iter().cloned().enumerate().filter(|(_, r)| !r.is_zero()).collect())
    }

    /// Product of two basis blades.
    pub fn blade_mul(&self, a: Blade, b: Blade) -> &[(Blade, Rational)] {
        let table = self.table.get_or_init(|| self.build_table());
        &table[(a.0 as usize) << self.n | b.0 as usize]
    }

    fn build_table(&self) -> Vec<BladeTerms> {
        let size = 1usize << self.n;
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                table.push(self.compute_blade_mul(Blade(a), Blade(b)));
            }
        }
        table
    }

    fn compute_blade_mul(&self, a: Blade, b: Blade) -> BladeTerms {
        let mut acc: BTreeMap<Blade, Rational> = BTreeMap::from([(a, Rational::one())]);
        for j in b.indices() {
            let mut next = BTreeMap::new();
            for (blade, coeff) in &acc {
                for (out, c) in self.blade_times_gen(*blade, j) {
                    add_into(&mut next, out, &(coeff * &c));
                }
            }
            acc = next;
        }
        acc.into_iter().collect()
    }

    /// `γ^S · γ^j` by moving `γ^j` leftwards through the word.
    fn blade_times_gen(&self, s: Blade, j: usize) -> BladeTerms {
        let Some(last) = s.max_index() else {
            return vec![(Blade::single(j), Rational::one())];
        };
        let rest = s.without(last);
        match last.cmp(&j) {
            Ordering::Less => vec![(s.with(j), Rational::one())],
            Ordering::Equal => {
                if self.up[j][j].is_zero() {
                    vec![]
                } else {
                    vec![(rest, self.up[j][j].clone())]
                }
            }
            Ordering::Greater => {
                // γ^last γ^j = −γ^j γ^last + 2η^{last j}; every blade of
                // rest·γ^j only has indices below `last`.
                let mut out: BTreeMap<Blade, Rational> = BTreeMap::new();
                for (b, c) in self.blade_times_gen(rest, j) {
                    add_into(&mut out, b.with(last), &-c);
                }
                let e = &self.up[last][j];
                if !e.is_zero() {
                    add_into(&mut out, rest, &(e + e));
                }
                out.into_iter().collect()
            }
        }
    }
}

impl PartialEq for Metric {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.up == other.up
    }
}

impl Eq for Metric {}

impl fmt::Debug for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .up
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "Metric([{}])", rows.join("; "))
    }
}

pub(crate) fn add_into<K: Ord, V>(map: &mut BTreeMap<K, V>, key: K, c: &V)
where
    V: Clone + for<'a> std::ops::AddAssign<&'a V> + IsZero,
{
    if c.is_zero_value() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero_value() {
                o.remove();
            }
        }
    }
}

/// Zero test shared by the coefficient types stored in sparse maps.
pub(crate) trait IsZero {
    fn is_zero_value(&self) -> bool;
}

impl IsZero for Rational {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl IsZero for crate::scalar::RatH {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl IsZero for Scalar {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

fn parse_json_matrix(s: &str) -> Result<Vec<Vec<Rational>>, Error> {
    let v: Vec<Vec<serde_json::Value>> =
        serde_json::from_str(s).map_err(|e| Error::InvalidMetric(e.to_string()))?;
    v.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    serde_json::Value::Number(num) => num.to_string().parse(),
                    serde_json::Value::String(t) => t.parse(),
                    other => Err(Error::InvalidMetric(format!("bad matrix entry {other}"))),
                })
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse over the rationals.
fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A finite combination of blades with [`Scalar`] coefficients.
#[derive(Clone)]
pub struct CliffordElement {
    metric: Arc<Metric>,
    terms: BTreeMap<Blade, Scalar>,
}

impl CliffordElement {
    pub fn zero(metric: &Arc<Metric>) -> Self {
        CliffordElement { metric: metric.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(metric: &Arc<Metric>, s: Scalar) -> Self {
        Self::blade(metric, Blade::EMPTY, s)
    }

    pub fn one(metric: &Arc<Metric>) -> Self {
        Self::scalar(metric, Scalar::one())
    }

    pub fn blade(metric: &Arc<Metric>, b: Blade, s: Scalar) -> Self {
        let mut e = Self::zero(metric);
        if !s.is_zero() {
            e.terms.insert(b, s);
        }
        e
    }

    /// `γ^i`.
    pub fn gamma(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        metric.check_index(i)?;
        Ok(Self::blade(metric, Blade::single(i), Scalar::one()))
    }

    /// `γ_i = η_{ij} γ^j`.
    pub fn gamma_down(metric: &Arc<Metric>, i: usize) -> Result<Self, Error> {
        let mut e = Self::zero(metric);
        for (j, r) in metric.lower_raise(IndexKind::GammaDown, i)? {
            e.terms.insert(Blade::single(j), r.into());
        }
        Ok(e)
    }

    /// Product `γ^{i₁}⋯γ^{i_k}` of generators in the given order.
    pub fn word(metric: &Arc<Metric>, indices: &[usize]) -> Result<Self, Error> {
        let mut acc = Self::one(metric);
        for &i in indices {
            acc = &acc * &Self::gamma(metric, i)?;
        }
        Ok(acc)
    }

    pub fn from_terms(metric: &Arc<Metric>, terms: impl IntoIterator<Item = (Blade, Scalar)>) -> Self {
        let mut e = Self::zero(metric);
        for (b, s) in terms {
            e.add_term(b, &s);
        }
        e
    }

    pub fn metric(&self) -> &Arc<Metric> {
        &self.metric
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, b: Blade, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let slot = self.terms.entry(b).or_default();
        *slot += s;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.metric);
        }
        CliffordElement {
            metric: self.metric.clone(),
            terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    /// Parity of a homogeneous element; `None` when mixed or zero.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|b| b.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.metric != rhs.metric {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.metric);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let cab = ca * cb;
                for (blade, r) in self.metric.blade_mul(*a, *b) {
                    out.add_term(*blade, &cab.scale(r));
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.metric != rhs.metric {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Vec<CliffordTermJson> {
        self.terms
            .iter()
            .map(|(b, c)| CliffordTermJson { gammas: b.indices().map(|i| i + 1).collect(), coeff: c.clone() })
            .collect()
    }

    pub fn from_json(metric: &Arc<Metric>, terms: &[CliffordTermJson]) -> Result<Self, Error> {
        let mut e = Self::zero(metric);
        for t in terms {
            let idx = one_based_to_internal(metric, &t.gammas)?;
            e = e.try_add(&Self::word(metric, &idx)?.scale(&t.coeff))?;
        }
        Ok(e)
    }
}

pub(crate) fn one_based_to_internal(metric: &Metric, idx: &[usize]) -> Result<Vec<usize>, Error> {
    idx.iter()
        .map(|&i| {
            if i == 0 || i > metric.n() {
                Err(Error::IndexOutOfRange { index: i, n: metric.n() })
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// JSON form of one Clifford term: 1-based γ indices and a coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordTermJson {
    pub gammas: Vec<usize>,
    pub coeff: Scalar,
}

impl PartialEq for CliffordElement {
    fn eq(&self, other: &Self) -> bool {
        self.metric == other.metric && self.terms == other.terms
    }
}

impl Eq for CliffordElement {}

/// Renders a coefficient as a prefix for a monomial: `""`, `"-"`, `"3*"`,
/// `"(1/2)*"`, `"(1 + 2*c)*"`. The sign is returned separately.
pub(crate) fn coeff_prefix(c: &Scalar) -> (bool, String) {
    let neg = c.re.is_negative() || c.re.is_zero() && c.cc.is_negative();
    let mag = if neg { -c } else { c.clone() };
    let text = if mag.is_one() {
        String::new()
    } else if mag == Scalar::c() {
        "c*".into()
    } else if mag.as_rational().is_some_and(Rational::is_integer) {
        format!("{mag}*")
    } else {
        format!("({mag})*")
    };
    (neg, text)
}

/// A coefficient standing alone, e.g. the constant term of a sum.
pub(crate) fn coeff_alone(c: &Scalar) -> (bool, String) {
    let neg = c.re.is_negative() || c.re.is_zero() && c.cc.is_negative();
    let mag = if neg { -c } else { c.clone() };
    let text = if mag.is_rational() || mag.re.is_zero() { mag.to_string() } else { format!("({mag})") };
    (neg, text)
}

/// Joins signed term renderings into `a + b - c` form.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self.terms.iter().map(|(b, c)| {
            let (neg, prefix) = coeff_prefix(c);
            if b.is_empty() {
                coeff_alone(c)
            } else {
                (neg, format!("{prefix}{}", render_blade(*b, "g", "^")))
            }
        }));
        write!(f, "{s}")
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        self.try_mul(rhs).expect("Clifford elements over different metrics")
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        self.try_add(rhs).expect("Clifford elements over different metrics")
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self + &(-rhs)
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn generator_squares_and_swaps() {
        let m = Metric::euclidean(2).unwrap();
        let g1 = CliffordElement::gamma(&m, 0).unwrap();
        let g2 = CliffordElement::gamma(&m, 1).unwrap();
        assert_eq!(&g1 * &g1, CliffordElement::one(&m));
        assert_eq!(&g2 * &g1, -&(&g1 * &g2));
    }

    #[test]
    fn contraction_with_lorentzian_metric() {
        let m = Metric::diag(&[r(1), r(-1)]).unwrap();
        let a = CliffordElement::word(&m, &[0, 1]).unwrap();
        let b = CliffordElement::word(&m, &[1, 0]).unwrap();
        assert_eq!(&a * &b, CliffordElement::scalar(&m, Scalar::from_int(-1)));
    }

    #[test]
    fn lowering_examples() {
        let lor = Metric::diag(&[r(1), r(-1)]).unwrap();
        assert_eq!(lor.lower_raise(IndexKind::XDown, 1).unwrap(), vec![(1, r(-1))]);
        let id = Metric::euclidean(2).unwrap();
        assert_eq!(id.lower_raise(IndexKind::DelUp, 0).unwrap(), vec![(0, r(1))]);
        let off = Metric::offdiag(2).unwrap();
        assert_eq!(off.lower_raise(IndexKind::GammaDown, 0).unwrap(), vec![(1, r(1))]);
        assert!(matches!(
            id.lower_raise(IndexKind::XDown, 2),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn metric_validation() {
        assert!(Metric::from_matrix(vec![vec![r(1), r(2)], vec![r(3), r(1)]]).is_err());
        assert!(Metric::from_matrix(vec![vec![r(1), r(1)], vec![r(1), r(1)]]).is_err());
        assert!(Metric::parse("diag:1,1,-1", 3).is_ok());
        assert!(Metric::parse("diag:1,1,-1", 2).is_err());
        let m = Metric::parse(r#"[[0,1],["1",0]]"#, 2).unwrap();
        assert_eq!(*m, *Metric::offdiag(2).unwrap());
    }

    #[test]
    fn blade_order_is_grade_then_lexicographic() {
        let names: Vec<String> = Blade::all(3).into_iter().map(|b| format!("{b:?}")).collect();
        assert_eq!(names, ["1", "g1", "g2", "g3", "g1^g2", "g1^g3", "g2^g3", "g1^g2^g3"]);
    }

    #[test]
    fn rendering_and_json() {
        let m = Metric::euclidean(3).unwrap();
        let e = &CliffordElement::word(&m, &[2, 0]).unwrap().scale(&Scalar::c())
            + &CliffordElement::scalar(&m, Scalar::frac(-1, 2));
        assert_eq!(e.to_string(), "-1/2 - c*g1^g3");
        let back = CliffordElement::from_json(&m, &e.to_json()).unwrap();
        assert_eq!(back, e);
    }
}
