//! Input and report types for the global Mordell-Weil analysis.

use crate::cohomology::{HkPoint, Method};
use crate::field::{Rat, Zeta3};
use crate::group::{AbstractGroup, Torsion};
use crate::jacobian::WeightedGerm;
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::tables::JCase;
use num_traits::Zero;
use std::fmt;

/// A singular point of the discriminant curve, annotated with the local
/// frame and the germ of the threefold above it.
#[derive(Clone, Debug)]
pub struct SingularPointAnnotation {
    /// Projective point on the curve, rational coordinates.
    pub point: Vec<Rat>,
    /// Tangent directions (u, v) of the expansion frame.
    pub frame: (Vec<Rat>, Vec<Rat>),
    pub germ: WeightedGerm,
    /// Singular points of the germ's weighted projective surface, for the
    /// Hulek-Kloosterman engine; empty means the germ is isolated.
    pub hk_points: Vec<HkPoint>,
    pub label: Option<String>,
}

/// Cusp configuration: points with distinguished tangent directions, over
/// Q(w) (rational configurations embed). An optional curve enables full
/// validation of the cusp structure.
#[derive(Clone, Debug)]
pub struct CuspConfig {
    pub points: Vec<Vec<Zeta3>>,
    pub directions: Vec<Vec<Zeta3>>,
}

impl CuspConfig {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One analyzed threefold: y^2 = x^3 + A P^2 x + B P^3 (generic),
/// y^2 = x^3 + Q x (j = 1728), or y^2 = x^3 + R (j = 0).
#[derive(Clone, Debug)]
pub struct ThreefoldInput {
    pub j: JCase,
    /// P, Q or R depending on the case; always in (z0, z1, z2).
    pub curve: Poly<Rat>,
    pub coef_a: Option<Rat>,
    pub coef_b: Option<Rat>,
    pub points: Vec<SingularPointAnnotation>,
    pub cusps: Option<CuspConfig>,
}

impl ThreefoldInput {
    pub fn curve_degree(j: JCase) -> u32 {
        match j {
            JCase::Generic => 2,
            JCase::J1728 => 4,
            JCase::Zero => 6,
        }
    }
}

#[derive(Debug, Clone)]
pub enum AnalyzeError {
    /// Bad input: wrong degrees, zero curve, malformed annotations.
    Input(String),
    /// The discriminant is a union of lines through one point.
    ConeConstruction(String),
    /// A consistency cross-check failed; indicates a bad annotation.
    CrossCheck(String),
    Cohomology(crate::cohomology::CohomError),
    Table(crate::tables::TableError),
    Geometry(crate::poly::GeomError),
}

impl fmt::Display for AnalyzeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyzeError::Input(s) => write!(f, "input error: {}", s),
            AnalyzeError::ConeConstruction(s) => write!(f, "cone construction excluded: {}", s),
            AnalyzeError::CrossCheck(s) => write!(f, "internal cross-check failed: {}", s),
            AnalyzeError::Cohomology(e) => write!(f, "local cohomology: {}", e),
            AnalyzeError::Table(e) => write!(f, "surface table: {}", e),
            AnalyzeError::Geometry(e) => write!(f, "geometry: {}", e),
        }
    }
}

impl std::error::Error for AnalyzeError {}

impl From<crate::cohomology::CohomError> for AnalyzeError {
    fn from(e: crate::cohomology::CohomError) -> Self {
        AnalyzeError::Cohomology(e)
    }
}

impl From<crate::tables::TableError> for AnalyzeError {
    fn from(e: crate::tables::TableError) -> Self {
        AnalyzeError::Table(e)
    }
}

impl From<crate::poly::GeomError> for AnalyzeError {
    fn from(e: crate::poly::GeomError) -> Self {
        AnalyzeError::Geometry(e)
    }
}

/// Exact rank or a conservative interval (present when a point of an
/// unsupported singularity family is annotated).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankValue {
    Exact(u32),
    Interval(u32, u32),
}

impl RankValue {
    pub fn lower(&self) -> u32 {
        match *self {
            RankValue::Exact(r) => r,
            RankValue::Interval(lo, _) => lo,
        }
    }
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankValue::Exact(r) => write!(f, "{}", r),
            RankValue::Interval(lo, hi) => write!(f, "{}..{}", lo, hi),
        }
    }
}

/// Per-point line of the final report.
#[derive(Clone, Debug)]
pub struct PointReport {
    pub point: String,
    pub h4: u32,
    pub method: Method,
    pub provenance: String,
}

/// A section witness with exact verification data. Irrational scalings are
/// carried symbolically: `y_scale` c means the section has y = sqrt(c) *
/// y_poly, verified over Q by the identity c * y_poly^2 = x^3 + P x + Q.
#[derive(Clone, Debug)]
pub enum Witness {
    /// y = 0, x = r P for each root r of T^3 + A T + B (generic j).
    GenericTwoTorsion,
    /// y = 0, x = 0 (j = 1728).
    XZero,
    /// y = 0, x = lambda g with lambda^2 = -1/c and g^2 = c Q (j = 1728).
    DoubleConic { g: Poly<Rat>, c: Rat },
    /// x = 0, y = lambda f with lambda^2 = 1/c and f^2 = c R (3-torsion).
    DoubleCubic { f: Poly<Rat>, c: Rat },
    /// y = 0, x = -omega^i lambda g with lambda^3 = 1/c and g^3 = c R.
    TripleConic { g: Poly<Rat>, c: Rat },
    /// Non-torsion section (x, sqrt(c) y).
    Section { x: Poly<Rat>, y: Poly<Rat>, c: Rat },
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::GenericTwoTorsion => {
                "x = r*P, y = 0 for each root r of T^3 + A*T + B".to_string()
            }
            Witness::XZero => "x = 0, y = 0".to_string(),
            Witness::DoubleConic { g, c } => {
                format!("x = l*({}), y = 0 with l^2 = -1/({})", g, c)
            }
            Witness::DoubleCubic { f, c } => {
                format!("x = 0, y = l*({}) with l^2 = 1/({})", f, c)
            }
            Witness::TripleConic { g, c } => {
                format!("x = -w^i*l*({}), y = 0 with l^3 = 1/({})", g, c)
            }
            Witness::Section { x, y, c } => {
                if c == &crate::field::rint(1) {
                    format!("x = {}, y = {}", x, y)
                } else {
                    format!("x = {}, y = l*({}) with l^2 = {}", x, y, c)
                }
            }
        }
    }
}

/// The assembled result of a Mordell-Weil analysis.
#[derive(Clone, Debug)]
pub struct MWReport {
    pub j: JCase,
    pub torsion: Torsion,
    pub witnesses: Vec<Witness>,
    pub rank: RankValue,
    pub per_point: Vec<PointReport>,
    pub total_h4: u32,
    pub group: Option<AbstractGroup>,
    /// (rank bound, witness line description, pattern) from specialization.
    pub specialization: Option<(u32, String, Vec<u32>)>,
    pub matrix_info: Option<MatrixInfo>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct MatrixInfo {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub coker: usize,
}

impl MWReport {
    /// The machine block: RANK= / TORSION= / GROUP= plus POINT= lines.
    pub fn machine_block(&self) -> String {
        let mut out = String::new();
        let group = match &self.group {
            Some(g) => g.to_string(),
            None => "undetermined".to_string(),
        };
        out.push_str(&format!(
            "RANK={} TORSION={} GROUP={}\n",
            self.rank, self.torsion, group
        ));
        for p in &self.per_point {
            out.push_str(&format!(
                "POINT={} H4={} METHOD={} REF=\"{}\"\n",
                p.point, p.h4, p.method, p.provenance
            ));
        }
        out
    }
}

/// Cone test: the curve (with multiplicities) is a union of lines through
/// one point iff its three partials are linearly dependent over constants,
/// i.e. the coefficient matrix of the gradient has rank <= 2. Equivalent
/// to the existence of a point p with D_p C = 0, which holds exactly when
/// C is a binary form in two linear forms vanishing at p.
pub fn is_cone(curve: &Poly<Rat>) -> bool {
    let parts = curve.partials();
    // collect all monomials appearing in any partial
    let mut monos: Vec<_> = Vec::new();
    for p in &parts {
        for (m, _) in p.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    monos.sort();
    if monos.is_empty() {
        return true; // constant curve: degenerate
    }
    let rows: Vec<Vec<Rat>> = parts
        .iter()
        .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
        .collect();
    Mat::from_rows(rows).rank() <= 2
}

/// Determinant test: does the line through a and b pass through p?
pub fn line_through_contains(a: &[Rat], b: &[Rat], p: &[Rat]) -> bool {
    let det = &a[0] * (&b[1] * &p[2] - &b[2] * &p[1])
        - &a[1] * (&b[0] * &p[2] - &b[2] * &p[0])
        + &a[2] * (&b[0] * &p[1] - &b[1] * &p[0]);
    det.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rint;
    use crate::poly::{parse_poly, Vars};

    fn zp(s: &str) -> Poly<Rat> {
        parse_poly(s, &Vars::zzz()).unwrap()
    }

    #[test]
    fn cone_fixtures() {
        // concurrent lines (through (0:0:1)), reduced and not
        assert!(is_cone(&zp("z0*z1")));
        assert!(is_cone(&zp("z0*z1*(z0+z1)")));
        assert!(is_cone(&zp("z0^3*z1^3")));
        assert!(is_cone(&zp("z0^6")));
        // non-concurrent arrangements and honest curves
        assert!(!is_cone(&zp("z0*z1*z2")));
        assert!(!is_cone(&zp("z0*z1*(z0+z1+z2)")));
        assert!(!is_cone(&zp("z0^2 + z1*z2")));
        assert!(!is_cone(&zp("z0^4 - z1^2*z2^2")));
        // triple conic is not a cone
        assert!(!is_cone(&zp("z0^2+z1*z2").pow(3)));
    }

    #[test]
    fn line_membership() {
        let a = vec![rint(1), rint(0), rint(0)];
        let b = vec![rint(0), rint(1), rint(0)];
        assert!(line_through_contains(&a, &b, &[rint(2), rint(3), rint(0)]));
        assert!(!line_through_contains(&a, &b, &[rint(2), rint(3), rint(1)]));
    }
}
