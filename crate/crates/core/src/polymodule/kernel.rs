//! Exact bases of the homogeneous monogenics `ker(γ^i∂_i) ∩ V_d`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly::{CliffordPolynomial, PolyKey, PolyTermJson};
use crate::clifford::{Blade, Metric};
use crate::error::Error;
use crate::linalg::{self, Echelon, SparseVec};
use crate::scalar::Rational;
use crate::weyl_clifford::monomial::exps_of_degree;

/// Every `(α, S)` with `|α| = d`, in lexicographic order.
pub fn graded_keys(n: usize, d: usize) -> Vec<PolyKey> {
    let mut keys: Vec<PolyKey> =
        exps_of_degree(n, d).into_iter().flat_map(|a| Blade::all(n).into_iter().map(move |b| (a, b))).collect();
    keys.sort();
    keys
}

/// Coordinates of polynomials in a fixed list of keys.
#[derive(Clone, Debug)]
pub struct Coordinates {
    keys: Vec<PolyKey>,
    index: BTreeMap<PolyKey, usize>,
}

impl Coordinates {
    pub fn new(keys: Vec<PolyKey>) -> Self {
        let index = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        Coordinates { keys, index }
    }

    pub fn graded(n: usize, d: usize) -> Self {
        Self::new(graded_keys(n, d))
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// `None` if `v` has a term outside the key list.
    pub fn vector(&self, v: &CliffordPolynomial) -> Option<SparseVec> {
        let mut out: SparseVec = v.terms().iter().map(|(k, s)| self.index.get(k).map(|&i| (i, s.clone()))).collect::<Option<_>>()?;
        out.sort_by_key(|e| e.0);
        Some(out)
    }

    pub fn polynomial(&self, metric: &Arc<Metric>, v: &[(usize, crate::scalar::Scalar)]) -> CliffordPolynomial {
        CliffordPolynomial::from_terms(metric, v.iter().map(|(i, s)| (self.keys[*i], s.clone())))
    }
}

/// A basis of the degree-`d` monogenics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicBasis {
    pub degree: usize,
    pub vectors: Vec<CliffordPolynomial>,
}

impl MonogenicBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn to_json(&self) -> BasisJson {
        BasisJson { degree: self.degree, terms: self.vectors.iter().map(CliffordPolynomial::to_json).collect() }
    }
}

/// JSON form of a basis: one term list per vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub degree: usize,
    pub terms: Vec<Vec<PolyTermJson>>,
}

/// `2^n · C(n+d−2, d)`: the kernel dimension when the Dirac operator maps
/// `V_d` onto `V_{d−1}`.
pub fn expected_kernel_dim(n: usize, d: usize) -> usize {
    if d == 0 {
        return 1 << n;
    }
    if n == 1 {
        return 0;
    }
    let mut c: u128 = 1;
    for k in 0..d as u128 {
        c = c * (n as u128 - 1 + k) / (k + 1);
    }
    (c as usize) << n
}

/// Exact basis of `ker D ∩ V_d`, `D = γ^i∂_i`, by fraction-free integer
/// elimination. The basis is in reduced row echelon form over the
/// lexicographic `(α, S)` order, each vector with leading coefficient `1`.
pub fn dirac_kernel(degree: usize, metric: &Arc<Metric>) -> Result<MonogenicBasis, Error> {
    let n = metric.n();
    let cols = Coordinates::graded(n, degree);
    if degree == 0 {
        let vectors = (0..cols.len())
            .map(|i| cols.polynomial(metric, &[(i, crate::scalar::Scalar::one())]))
            .collect();
        return Ok(MonogenicBasis { degree, vectors });
    }
    let rows_of = Coordinates::graded(n, degree - 1);
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows_of.len()];
    for (j, key) in cols.keys.iter().enumerate() {
        let image = CliffordPolynomial::term(metric, key.0, key.1, crate::scalar::Scalar::one()).dirac();
        for (k, s) in image.terms() {
            let r = s.as_rational().cloned().ok_or_else(|| Error::InvalidMetric("irrational Dirac entry".into()))?;
            rows[rows_of.index[k]].push((j, r));
        }
    }
    let ns = linalg::nullspace(&rows, cols.len());
    let vectors = ns
        .into_iter()
        .map(|v| CliffordPolynomial::from_terms(metric, v.into_iter().map(|(i, q)| (cols.keys[i], q.into()))))
        .collect();
    Ok(MonogenicBasis { degree, vectors })
}

/// Whether `vectors` span exactly the space spanned by `basis`: both sets lie
/// in one space of dimension `basis.dim()`.
pub fn spans(basis: &MonogenicBasis, vectors: &[CliffordPolynomial]) -> Result<bool, Error> {
    let Some(first) = basis.vectors.first().or(vectors.first()) else {
        return Ok(true);
    };
    let coords = Coordinates::graded(first.n(), basis.degree);
    let to_vec = |v: &CliffordPolynomial| coords.vector(v).ok_or(Error::ContextMismatch);
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(to_vec(v)?);
    }
    if e.rank() != basis.dim() {
        return Ok(false);
    }
    for b in &basis.vectors {
        if !e.contains(to_vec(b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A subset of the basis whose right Clifford multiples span the whole
/// kernel. The action of the algebra commutes with right Clifford
/// multiplication, so operator identities need only be checked on it.
pub fn right_generators(basis: &MonogenicBasis) -> Vec<CliffordPolynomial> {
    let Some(first) = basis.vectors.first() else {
        return Vec::new();
    };
    let metric = first.metric().clone();
    let coords = Coordinates::graded(metric.n(), basis.degree);
    let blades: Vec<_> = Blade::all(metric.n())
        .into_iter()
        .map(|b| crate::clifford::CliffordElement::blade(&metric, b, crate::scalar::Scalar::one()))
        .collect();
    let mut e = Echelon::new();
    let mut gens = Vec::new();
    for v in &basis.vectors {
        if e.rank() == basis.dim() {
            break;
        }
        if e.contains(coords.vector(v).expect("graded")) {
            continue;
        }
        for b in &blades {
            e.insert(coords.vector(&v.right_mul(b).expect("same metric")).expect("graded"));
        }
        gens.push(v.clone());
    }
    gens
}
