//! Normal-ordered monomials `x^α ∂^β γ^S`.

use std::fmt;

use crate::clifford::{render_blade, Blade};
use crate::scalar::Rational;
use crate::MAX_DIM;

/// Exponent vector of a multi-index; entries past `n` are always zero.
pub type Exps = [u8; MAX_DIM];

pub const ZERO_EXPS: Exps = [0; MAX_DIM];

pub fn exps_total(e: &Exps) -> usize {
    e.iter().map(|&v| v as usize).sum()
}

pub fn exps_add(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn exps_unit(i: usize) -> Exps {
    let mut e = ZERO_EXPS;
    e[i] = 1;
    e
}

/// Multi-index of an index word: `(i₁,…,i_m)` ↦ counts per coordinate.
pub fn exps_from_word(word: &[usize]) -> Exps {
    let mut e = ZERO_EXPS;
    for &i in word {
        e[i] += 1;
    }
    e
}

/// The sorted index word with the given counts.
pub fn exps_to_word(e: &Exps) -> Vec<usize> {
    e.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i).take(k as usize)).collect()
}

/// `α! = Π αᵢ!`.
pub fn exps_factorial(e: &Exps) -> Rational {
    e.iter().map(|&k| factorial(k as u32)).product()
}

pub fn factorial(k: u32) -> Rational {
    (1..=k as i64).map(Rational::from_int).product()
}

pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    (0..k as i64).fold(Rational::one(), |acc, j| {
        acc * Rational::from_int(n as i64 - j) / Rational::from_int(j + 1)
    })
}

/// All exponent vectors in the first `n` coordinates with total degree `d`,
/// in increasing lexicographic order.
pub fn exps_of_degree(n: usize, d: usize) -> Vec<Exps> {
    fn rec(n: usize, pos: usize, left: usize, cur: &mut Exps, out: &mut Vec<Exps>) {
        if pos + 1 == n {
            cur[pos] = left as u8;
            out.push(*cur);
            cur[pos] = 0;
            return;
        }
        for k in 0..=left {
            cur[pos] = k as u8;
            rec(n, pos + 1, left - k, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, 0, d, &mut ZERO_EXPS.clone(), &mut out);
    }
    out.sort();
    out
}

/// A monomial in canonical order: `x`-part, then `∂`-part, then `γ`-part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: Exps,
    pub d: Exps,
    pub g: Blade,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: ZERO_EXPS, d: ZERO_EXPS, g: Blade::EMPTY };

    pub fn new(x: Exps, d: Exps, g: Blade) -> Self {
        Monomial { x, d, g }
    }

    pub fn x_degree(&self) -> usize {
        exps_total(&self.x)
    }

    pub fn d_degree(&self) -> usize {
        exps_total(&self.d)
    }

    /// `|α| − |β|`: commuting a function of `H` from right to left across
    /// the monomial shifts its argument by this amount.
    pub fn weight(&self) -> i64 {
        self.x_degree() as i64 - self.d_degree() as i64
    }

    pub fn parity(&self) -> u8 {
        self.g.parity()
    }

    /// Number of generator letters in the monomial.
    pub fn word_length(&self) -> usize {
        self.x_degree() + self.d_degree() + self.g.grade()
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// `x1^2*d2*g1*g3` style rendering; `1` for the unit monomial.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (prefix, e) in [("x", &self.x), ("d", &self.d)] {
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(format!("{prefix}{}", i + 1)),
                    _ => parts.push(format!("{prefix}{}^{k}", i + 1)),
                }
            }
        }
        if !self.g.is_empty() {
            parts.push(render_blade(self.g, "g", "*"));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Expands `∂^β x^α` into normal order:
/// `Σ_κ Π C(βᵢ,κᵢ) C(αᵢ,κᵢ) κᵢ! · x^{α−κ} ∂^{β−κ}`.
pub fn reorder_d_x(beta: &Exps, alpha: &Exps, n: usize) -> Vec<(Exps, Exps, Rational)> {
    let mut out = vec![(*alpha, *beta, Rational::one())];
    for i in 0..n {
        let top = beta[i].min(alpha[i]);
        if top == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (top as usize + 1));
        for (a, b, c) in &out {
            for k in 0..=top {
                let mut a2 = *a;
                let mut b2 = *b;
                a2[i] -= k;
                b2[i] -= k;
                let w = binomial(beta[i] as u32, k as u32)
                    * binomial(alpha[i] as u32, k as u32)
                    * factorial(k as u32);
                next.push((a2, b2, c * &w));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(exps_of_degree(3, 2).len(), 6);
        assert_eq!(exps_of_degree(4, 4).len(), 35);
        assert_eq!(exps_of_degree(1, 0), vec![ZERO_EXPS]);
    }

    #[test]
    fn second_derivative_past_square() {
        // ∂² x² = x²∂² + 4x∂ + 2
        let terms = reorder_d_x(&exps_from_word(&[0, 0]), &exps_from_word(&[0, 0]), 1);
        let coeffs: Vec<String> = terms.iter().map(|t| t.2.to_string()).collect();
        assert_eq!(coeffs, ["1", "4", "2"]);
    }

    #[test]
    fn word_round_trip() {
        let w = vec![0, 0, 2, 3, 3, 3];
        assert_eq!(exps_to_word(&exps_from_word(&w)), w);
    }
}
