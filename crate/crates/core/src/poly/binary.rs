//! Multiplicity structure of binary forms via gcd chains.
//!
//! No roots are ever extracted: the squarefree decomposition over Q (Yun's
//! algorithm) determines the multiset of root multiplicities over the
//! algebraic closure. A squarefree factor of degree e at multiplicity m
//! contributes e copies of m.

use super::{Poly, Vars};
use crate::field::Rat;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinaryFormError {
    ZeroForm,
    NotBinary,
    NotHomogeneous,
}

impl std::fmt::Display for BinaryFormError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BinaryFormError::ZeroForm => write!(f, "zero binary form"),
            BinaryFormError::NotBinary => write!(f, "expected a polynomial in two variables"),
            BinaryFormError::NotHomogeneous => write!(f, "binary form must be homogeneous"),
        }
    }
}

impl std::error::Error for BinaryFormError {}

/// Dense univariate polynomial over Q, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct UPoly(pub Vec<Rat>);

impl UPoly {
    fn normalize(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rat {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    fn monic(&self) -> Self {
        let l = self.lead().clone();
        UPoly(self.0.iter().map(|c| c / &l).collect())
    }

    fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return UPoly(vec![]);
        }
        UPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * crate::field::rint(i as i64))
                .collect(),
        )
        .normalize()
    }

    /// (quotient, remainder) of self by d.
    fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone().normalize();
        let dd = d.degree();
        let dl = d.lead().clone();
        if rem.is_zero() || rem.degree() < dd {
            return (UPoly(vec![]), rem);
        }
        let mut q = vec![Rat::zero(); rem.degree() - dd + 1];
        while !rem.is_zero() && rem.degree() >= dd {
            let shift = rem.degree() - dd;
            let f = rem.lead() / &dl;
            q[shift] = f.clone();
            for (i, c) in d.0.iter().enumerate() {
                let idx = i + shift;
                let v = &rem.0[idx] - &(c * &f);
                rem.0[idx] = v;
            }
            rem = rem.normalize();
        }
        (UPoly(q).normalize(), rem)
    }

    fn divide_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone().normalize();
        let mut b = other.clone().normalize();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }
}

/// Yun's squarefree decomposition: pairs (multiplicity, squarefree factor),
/// with multiplicities strictly increasing. Factors are monic.
pub(crate) fn squarefree_decomposition(f: &UPoly) -> Vec<(u32, UPoly)> {
    let f = f.monic();
    if f.degree() == 0 {
        return vec![];
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut out = Vec::new();
    let mut b = f.divide_exact(&a0);
    let mut c = df.divide_exact(&a0);
    let mut i = 1u32;
    loop {
        let d = c.clone().normalize();
        let db = b.derivative();
        let d = UPoly(sub_coeffs(&d, &db)).normalize();
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((i, a.clone()));
        }
        b = b.divide_exact(&a);
        if b.degree() == 0 {
            break;
        }
        c = d.divide_exact(&a);
        i += 1;
    }
    out
}

fn sub_coeffs(a: &UPoly, b: &UPoly) -> Vec<Rat> {
    let n = a.0.len().max(b.0.len());
    (0..n)
        .map(|i| {
            let x = a.0.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.0.get(i).cloned().unwrap_or_else(Rat::zero);
            x - y
        })
        .collect()
}

/// Dehomogenize a binary form by setting the second variable to 1 and
/// record the multiplicity of the root at (1:0).
fn dehomogenize(f: &Poly<Rat>) -> Result<(UPoly, u32), BinaryFormError> {
    if f.vars().len() != 2 {
        return Err(BinaryFormError::NotBinary);
    }
    if f.is_zero() {
        return Err(BinaryFormError::ZeroForm);
    }
    let Some(n) = f.homogeneous_degree() else {
        return Err(BinaryFormError::NotHomogeneous);
    };
    let mut coeffs = vec![Rat::zero(); n as usize + 1];
    for (m, c) in f.terms() {
        coeffs[m.0[0] as usize] = c.clone();
    }
    let g = UPoly(coeffs).normalize();
    let root_at_infinity = n - g.degree() as u32;
    Ok((g, root_at_infinity))
}

/// Sorted (descending) multiset of root multiplicities of a nonzero binary
/// form over the algebraic closure. Invariant under linear changes of the
/// two variables; multiplicities sum to deg f.
pub fn multiplicity_pattern(f: &Poly<Rat>) -> Result<Vec<u32>, BinaryFormError> {
    let (g, m_inf) = dehomogenize(f)?;
    let mut pattern = Vec::new();
    if m_inf > 0 {
        pattern.push(m_inf);
    }
    if g.degree() > 0 {
        for (mult, factor) in squarefree_decomposition(&g) {
            for _ in 0..factor.degree() {
                pattern.push(mult);
            }
        }
    }
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(
        pattern.iter().map(|&m| m as i64).sum::<i64>(),
        f.homogeneous_degree().unwrap() as i64
    );
    Ok(pattern)
}

/// Convenience: parse a binary form in variables (a, b).
pub(crate) fn binary_vars() -> Vars {
    Vars::ab()
}
