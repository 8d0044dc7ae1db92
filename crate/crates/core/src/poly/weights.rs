//! Variable weights, weighted degrees, and graded monomial enumeration.

use super::{Monomial, Poly};
use crate::field::Scalar;
use num_integer::Integer;

/// Positive integer weights, one per variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weights(Vec<u32>);

impl Weights {
    pub fn new(w: Vec<u32>) -> Self {
        assert!(!w.is_empty() && w.iter().all(|&x| x >= 1), "weights must be >= 1");
        Weights(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the weights.
    pub fn total(&self) -> i64 {
        self.0.iter().map(|&w| w as i64).sum()
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0u32, |g, &w| g.gcd(&w))
    }

    /// Divide every weight by the common gcd.
    pub fn normalized(&self) -> Weights {
        let g = self.gcd();
        Weights(self.0.iter().map(|&w| w / g).collect())
    }

    pub fn scaled_down(&self, indices: &[usize], g: u32) -> Weights {
        let mut w = self.0.clone();
        for &i in indices {
            assert_eq!(w[i] % g, 0);
            w[i] /= g;
        }
        Weights(w)
    }
}

impl std::fmt::Display for Weights {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", w)?;
        }
        write!(f, ")")
    }
}

pub fn weighted_degree(m: &Monomial, w: &Weights) -> i64 {
    assert_eq!(m.0.len(), w.len(), "dimension mismatch");
    m.0.iter().zip(w.as_slice()).map(|(&e, &wi)| e as i64 * wi as i64).sum()
}

/// Some(d) iff f is nonzero and every term has weighted degree d.
pub fn is_weighted_homogeneous<K: Scalar>(f: &Poly<K>, w: &Weights) -> Option<i64> {
    let mut it = f.terms();
    let d = weighted_degree(it.next()?.0, w);
    if it.all(|(m, _)| weighted_degree(m, w) == d) {
        Some(d)
    } else {
        None
    }
}

/// All monomials of weighted degree exactly k, in canonical (graded-lex
/// ascending) order. Empty for k < 0.
pub fn monomials_of_weighted_degree(w: &Weights, k: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if k < 0 {
        return out;
    }
    let mut exps = vec![0u32; w.len()];
    fill(w, 0, k, &mut exps, &mut out);
    out.sort();
    out
}

fn fill(w: &Weights, i: usize, remaining: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == w.len() {
        if remaining == 0 {
            out.push(Monomial(exps.clone()));
        }
        return;
    }
    let wi = w.get(i) as i64;
    let max = remaining / wi;
    for e in 0..=max {
        exps[i] = e as u32;
        fill(w, i + 1, remaining - e * wi, exps, out);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Poly, Vars};

    #[test]
    fn weighted_degree_examples() {
        // x*s with weights (s,t,x,y)=(3,4,4,6) -> 7
        let w = Weights::new(vec![3, 4, 4, 6]);
        let xs = Monomial(vec![1, 0, 1, 0]);
        assert_eq!(weighted_degree(&xs, &w), 7);
        // constant -> 0
        assert_eq!(weighted_degree(&Monomial::constant(4), &w), 0);
        // s^5 t with w=(6,9,...) at k=2: 5*6+9 = 39
        let w2 = Weights::new(vec![6, 9, 6, 9]);
        let m = Monomial(vec![5, 1, 0, 0]);
        assert_eq!(weighted_degree(&m, &w2), 39);
    }

    #[test]
    fn wh_detection() {
        let v = Vars::stxy();
        let f: Poly = parse_poly("y^2 - x^3 - t^2 - s^3", &v).unwrap();
        assert_eq!(is_weighted_homogeneous(&f, &Weights::new(vec![2, 3, 2, 3])), Some(6));
        assert_eq!(is_weighted_homogeneous(&f, &Weights::new(vec![1, 1, 1, 1])), None);
        // triple-line flex germ: weights 1,3,4,6 -> degree 12
        let g: Poly = parse_poly("y^2 - x^3 - t^3*t - t^3*s^3", &v).unwrap();
        assert_eq!(is_weighted_homogeneous(&g, &Weights::new(vec![1, 3, 4, 6])), Some(12));
    }

    #[test]
    fn enumeration_examples() {
        // w=(3,4,4,6), k=7 -> {xs, ts}
        let w = Weights::new(vec![3, 4, 4, 6]);
        let ms = monomials_of_weighted_degree(&w, 7);
        // xs and ts, in canonical order
        assert_eq!(ms, vec![Monomial(vec![1, 0, 1, 0]), Monomial(vec![1, 1, 0, 0])]);
        // k = 0 -> {1}
        assert_eq!(monomials_of_weighted_degree(&w, 0), vec![Monomial::constant(4)]);
        // w=(1,1), k=3 -> 4 monomials
        let w2 = Weights::new(vec![1, 1]);
        assert_eq!(monomials_of_weighted_degree(&w2, 3).len(), 4);
        // negative k -> empty
        assert!(monomials_of_weighted_degree(&w2, -1).is_empty());
    }
}
