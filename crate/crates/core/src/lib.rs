//! constj: Mordell-Weil groups of constant-j Weierstrass elliptic threefolds.
//!
//! The pipeline: exact polynomial arithmetic over Q ([`poly`]), graded
//! Jacobian-ring linear algebra ([`jacobian`]), local cohomology of the
//! singular points ([`cohomology`]), the rational-elliptic-surface
//! classification data ([`tables`]), and the global analyzer that turns
//! per-point local cohomology into a Mordell-Weil rank and group
//! ([`analyzer`]). Core math is generic over the scalar field; the two
//! concrete instances are Q and Q(w) with w a cube root of unity.

pub mod analyzer;
pub mod catalogue;
pub mod cli;
pub mod cohomology;
pub mod field;
pub mod group;
pub mod jacobian;
pub mod linalg;
pub mod poly;
pub mod tables;

pub use field::{Rat, Zeta3};
pub use tables::JCase;

/// Polynomial with rational coefficients (the default everywhere).
pub type QPoly = poly::Poly<Rat>;
/// Polynomial over Q(w), used by the cyclotomic point configurations.
pub type WPoly = poly::Poly<Zeta3>;
/// Exact matrix over Q.
pub type QMat = linalg::Mat<Rat>;
/// Exact matrix over Q(w).
pub type WMat = linalg::Mat<Zeta3>;
