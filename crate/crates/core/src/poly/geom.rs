//! Geometric substitutions: expansion of a plane form in a local frame at
//! a point, and restriction of a curve to a line through two points.

use super::{Poly, Vars};
use crate::field::{Rat, Scalar};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    /// The requested chart coordinate vanishes at the point.
    ChartVanishes(usize),
    /// The point/frame triple does not span; in particular u, v dependent.
    FrameDegenerate,
    /// The two points defining a line coincide projectively.
    PointsCoincide,
}

impl std::fmt::Display for GeomError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeomError::ChartVanishes(j) => {
                write!(f, "coordinate {} vanishes at the point; pick another chart", j)
            }
            GeomError::FrameDegenerate => write!(f, "frame vectors are degenerate"),
            GeomError::PointsCoincide => write!(f, "the two points spanning the line coincide"),
        }
    }
}

impl std::error::Error for GeomError {}

fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    let d = |a: &Rat, b: &Rat, c: &Rat, d: &Rat| a * d - b * c;
    &m[0][0] * &d(&m[1][1], &m[1][2], &m[2][1], &m[2][2])
        - &m[0][1] * &d(&m[1][0], &m[1][2], &m[2][0], &m[2][2])
        + &m[0][2] * &d(&m[1][0], &m[1][1], &m[2][0], &m[2][1])
}

/// Expand G(p + s*u + t*v) as an exact polynomial in the local variables
/// (s, t), after scaling p so that coordinate `chart` equals 1.
///
/// The result evaluated at (0,0) is the dehomogenized value of G at p.
pub fn local_expand(
    g: &Poly<Rat>,
    p: &[Rat],
    chart: usize,
    u: &[Rat],
    v: &[Rat],
    out_vars: &Vars,
) -> Result<Poly<Rat>, GeomError> {
    assert_eq!(g.vars().len(), 3, "local_expand expects a plane form");
    assert!(p.len() == 3 && u.len() == 3 && v.len() == 3);
    assert!(out_vars.len() >= 2);
    if p[chart].is_zero() {
        return Err(GeomError::ChartVanishes(chart));
    }
    let frame = [
        [p[0].clone(), p[1].clone(), p[2].clone()],
        [u[0].clone(), u[1].clone(), u[2].clone()],
        [v[0].clone(), v[1].clone(), v[2].clone()],
    ];
    if det3(&frame).is_zero() {
        return Err(GeomError::FrameDegenerate);
    }
    let scale = p[chart].clone();
    let s = Poly::variable(out_vars, 0);
    let t = Poly::variable(out_vars, 1);
    let images: Vec<Poly<Rat>> = (0..3)
        .map(|i| {
            let c = Poly::constant(out_vars, &p[i] / &scale);
            let su = s.scale(&u[i]);
            let tv = t.scale(&v[i]);
            &(&c + &su) + &tv
        })
        .collect();
    Ok(g.substitute(out_vars, &images))
}

/// Restrict a homogeneous plane form to the line spanned by points A and B:
/// returns C(a*A + b*B), a binary form in (a, b) of the same degree.
/// Identically zero iff the line lies inside C.
pub fn restrict_to_line<K: Scalar>(
    c: &Poly<K>,
    pt_a: &[K],
    pt_b: &[K],
) -> Result<Poly<K>, GeomError> {
    assert_eq!(c.vars().len(), 3, "restrict_to_line expects a plane form");
    if projectively_equal(pt_a, pt_b) {
        return Err(GeomError::PointsCoincide);
    }
    let vars = super::binary::binary_vars();
    let a = Poly::<K>::variable(&vars, 0);
    let b = Poly::<K>::variable(&vars, 1);
    let images: Vec<Poly<K>> = (0..3)
        .map(|i| &a.scale(&pt_a[i]) + &b.scale(&pt_b[i]))
        .collect();
    Ok(c.substitute(&vars, &images))
}

/// Projective equality test for nonzero coordinate vectors.
pub fn projectively_equal<K: Scalar>(a: &[K], b: &[K]) -> bool {
    assert_eq!(a.len(), b.len());
    // a ~ b iff all 2x2 minors vanish
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let m = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            if !m.is_zero() {
                return false;
            }
        }
    }
    true
}
