//! Exact multivariate polynomials over a scalar field.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`] under graded-lex order,
//! so every polynomial has one canonical form and printing is
//! deterministic. The coefficient field defaults to `Rat`; the same type
//! instantiated at [`crate::field::Zeta3`] carries the Q(w) computations.

mod binary;
mod geom;
mod parse;
mod power;
mod weights;

pub use binary::multiplicity_pattern;
pub use geom::{local_expand, restrict_to_line, GeomError};
pub use parse::{parse_poly, parse_rat, ParseError};
pub use power::{perfect_power_root, PowerRoot};
pub use weights::{
    is_weighted_homogeneous, monomials_of_weighted_degree, weighted_degree, Weights,
};

use crate::field::{Rat, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Exponent vector, one entry per variable of the ambient [`Vars`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }
}

// Graded lexicographic: first by total degree, then by the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shared ordered list of variable names.
#[derive(Clone, Debug)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    /// Local germ variables, in the fixed order used throughout.
    pub fn stxy() -> Self {
        Vars::new(&["s", "t", "x", "y"])
    }

    /// Plane coordinates for the discriminant curve.
    pub fn zzz() -> Self {
        Vars::new(&["z0", "z1", "z2"])
    }

    /// Parameters of a pencil / binary form.
    pub fn ab() -> Self {
        Vars::new(&["a", "b"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Vars {}

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K = Rat> {
    vars: Vars,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Scalar> Poly<K> {
    pub fn zero(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: K) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(vars.len()), c);
        }
        p
    }

    pub fn variable(vars: &Vars, i: usize) -> Self {
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), K::one());
        p
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: K) -> Self {
        assert_eq!(m.0.len(), vars.len());
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Largest monomial in graded-lex order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        assert_eq!(m.0.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::constant(&self.vars, K::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable i.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c.clone() * K::from_rat(&crate::field::rint(e as i64)));
        }
        out
    }

    /// All partials, in variable order.
    pub fn partials(&self) -> Vec<Self> {
        (0..self.vars.len()).map(|i| self.partial(i)).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Some(d) if nonzero and every term has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.total_degree();
        if it.all(|m| m.total_degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn involves_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn eval(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitute images[i] (a polynomial in `out_vars`) for variable i.
    pub fn substitute(&self, out_vars: &Vars, images: &[Poly<K>]) -> Poly<K> {
        assert_eq!(images.len(), self.vars.len());
        let mut acc = Poly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Map the coefficients into another scalar type (e.g. Q into Q(w)).
    pub fn lift<K2: Scalar + From<K>>(&self) -> Poly<K2> {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), K2::from(c.clone()))).collect(),
        }
    }

    // --- weighted-grading helpers ---

    pub fn min_weighted_degree(&self, w: &Weights) -> Option<i64> {
        self.terms.keys().map(|m| weighted_degree(m, w)).min()
    }

    pub fn max_weighted_degree(&self, w: &Weights) -> Option<i64> {
        self.terms.keys().map(|m| weighted_degree(m, w)).max()
    }

    /// The weighted-degree-k homogeneous part.
    pub fn weighted_part(&self, w: &Weights, k: i64) -> Poly<K> {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| weighted_degree(m, w) == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Truncation to weighted degree <= k.
    pub fn weighted_trunc_le(&self, w: &Weights, k: i64) -> Poly<K> {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| weighted_degree(m, w) <= k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Truncation to total degree <= n.
    pub fn trunc_total_le(&self, n: u32) -> Poly<K> {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Scalar> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        assert_eq!(self.vars, rhs.vars, "variable sets differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<K: Scalar> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        assert_eq!(self.vars, rhs.vars, "variable sets differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<K: Scalar> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<K: Scalar> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        assert_eq!(self.vars, rhs.vars, "variable sets differ");
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = K::one();
        let minus_one = -K::one();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            // sign / separator
            let coeff_str = format!("{}", c);
            let neg = coeff_str.starts_with('-');
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let body = if neg { coeff_str[1..].to_string() } else { coeff_str };
            if m.is_constant() {
                write!(f, "{}", body)?;
                continue;
            }
            let unit = *c == one || *c == minus_one;
            if !unit {
                write!(f, "{}*", body)?;
            }
            let mut first = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{}", self.vars.name(i))?;
                } else {
                    write!(f, "{}^{}", self.vars.name(i), e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rint, Rat};

    fn p(s: &str, vars: &Vars) -> Poly {
        parse_poly(s, vars).unwrap()
    }

    #[test]
    fn partials_power_rule() {
        let v = Vars::stxy();
        // f = y^2 + x^3 + t^2 + s^3 -> (3s^2, 2t, 3x^2, 2y)
        let f = p("y^2 + x^3 + t^2 + s^3", &v);
        let ps = f.partials();
        assert_eq!(ps[0], p("3*s^2", &v));
        assert_eq!(ps[1], p("2*t", &v));
        assert_eq!(ps[2], p("3*x^2", &v));
        assert_eq!(ps[3], p("2*y", &v));
    }

    #[test]
    fn partials_of_constant_vanish() {
        let v = Vars::zzz();
        let f = Poly::constant(&v, rint(7));
        assert!(f.partials().iter().all(|g| g.is_zero()));
    }

    #[test]
    fn partial_mixed_term() {
        let v = Vars::stxy();
        let f = p("x^3 + s^2*t^2*x", &v);
        assert_eq!(f.partial(2), p("3*x^2 + s^2*t^2", &v));
    }

    #[test]
    fn display_roundtrip() {
        let v = Vars::zzz();
        let f = p("z0^6 - 1/2*z1^2*z2^2*z0^2 + 3*z1 - 7", &v);
        let g = p(&f.to_string(), &v);
        assert_eq!(f, g);
    }

    #[test]
    fn eval_simple() {
        let v = Vars::zzz();
        let f = p("z0^2 + z1*z2", &v);
        let val: Rat = f.eval(&[rint(2), rint(3), rint(5)]);
        assert_eq!(val, rint(19));
    }
}
