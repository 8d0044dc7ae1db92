//! Scalar fields for the exact linear algebra layer.
//!
//! Everything in this crate is exact: no floating point anywhere. The two
//! concrete fields are the rationals `Rat` and the quadratic extension
//! `Zeta3` = Q(w) with w^2 = -w - 1 (w a primitive cube root of unity),
//! which is needed for point configurations defined over Q(w). All linear
//! algebra and polynomial code is generic over [`Scalar`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Returns q as an integer if its denominator is 1.
pub fn rat_to_int(q: &Rat) -> Option<BigInt> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Exact field scalar: the operations row reduction and polynomial
/// arithmetic need, plus an embedding of Q.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Element a + b*w of Q(w), where w^2 = -w - 1.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Zeta3 {
    pub a: Rat,
    pub b: Rat,
}

impl Zeta3 {
    pub fn new(a: Rat, b: Rat) -> Self {
        Zeta3 { a, b }
    }

    pub fn from_parts(a: i64, b: i64) -> Self {
        Zeta3 { a: rint(a), b: rint(b) }
    }

    /// The generator w itself.
    pub fn omega() -> Self {
        Zeta3::from_parts(0, 1)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: w -> w^2 = -1 - w.
    pub fn conj(&self) -> Self {
        Zeta3 {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    /// Field norm a^2 - ab + b^2; zero only at zero.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }
}

impl Zero for Zeta3 {
    fn zero() -> Self {
        Zeta3::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Zeta3 {
    fn one() -> Self {
        Zeta3 { a: Rat::one(), b: Rat::zero() }
    }
}

impl Add for Zeta3 {
    type Output = Zeta3;
    fn add(self, rhs: Zeta3) -> Zeta3 {
        Zeta3 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for Zeta3 {
    type Output = Zeta3;
    fn sub(self, rhs: Zeta3) -> Zeta3 {
        Zeta3 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Neg for Zeta3 {
    type Output = Zeta3;
    fn neg(self) -> Zeta3 {
        Zeta3 { a: -self.a, b: -self.b }
    }
}

impl Mul for Zeta3 {
    type Output = Zeta3;
    // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w, using w^2 = -w - 1.
    fn mul(self, rhs: Zeta3) -> Zeta3 {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        Zeta3 { a: ac - &bd, b: ad + bc - bd }
    }
}

impl Div for Zeta3 {
    type Output = Zeta3;
    fn div(self, rhs: Zeta3) -> Zeta3 {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(w)");
        let c = rhs.conj();
        let num = self * c;
        Zeta3 { a: num.a / &n, b: num.b / &n }
    }
}

impl fmt::Display for Zeta3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b.is_one() {
                return write!(f, "w");
            }
            return write!(f, "{}*w", self.b);
        }
        if self.b.is_positive() {
            if self.b.is_one() {
                write!(f, "{}+w", self.a)
            } else {
                write!(f, "{}+{}*w", self.a, self.b)
            }
        } else if self.b == -Rat::one() {
            write!(f, "{}-w", self.a)
        } else {
            write!(f, "{}-{}*w", self.a, -self.b.clone())
        }
    }
}

impl From<Rat> for Zeta3 {
    fn from(a: Rat) -> Self {
        Zeta3 { a, b: Rat::zero() }
    }
}

impl Scalar for Zeta3 {
    fn from_rat(r: &Rat) -> Self {
        Zeta3 { a: r.clone(), b: Rat::zero() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_cube_root() {
        let w = Zeta3::omega();
        let w2 = w.clone() * w.clone();
        let w3 = w2.clone() * w.clone();
        assert_eq!(w3, Zeta3::one());
        assert_ne!(w2, Zeta3::one());
        // 1 + w + w^2 = 0
        assert!((Zeta3::one() + w + w2).is_zero());
    }

    #[test]
    fn zeta3_division() {
        let x = Zeta3::new(rat(3, 2), rint(-2));
        let y = Zeta3::new(rint(1), rint(5));
        let q = x.clone() / y.clone();
        assert_eq!(q * y, x);
    }

    #[test]
    fn zeta3_inverse_of_omega() {
        let w = Zeta3::omega();
        let inv = w.inv();
        // w^-1 = w^2 = -1 - w
        assert_eq!(inv, Zeta3::new(rint(-1), rint(-1)));
    }
}
