//! Perfect-power roots of homogeneous polynomials, up to a rational scale.
//!
//! `perfect_power_root(f, k)` looks for g with g^k = c*f for some nonzero
//! rational c. The scale is allowed because the torsion structure a double
//! cubic or triple conic induces is insensitive to rescaling the form; the
//! caller records c. Verified by re-expansion before returning.

use super::{Monomial, Poly};
use crate::field::Rat;
use num_traits::One;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerRoot {
    /// Monic (leading coefficient 1) k-th root.
    pub root: Poly<Rat>,
    /// The scale with root^k = scale * f.
    pub scale: Rat,
}

/// Attempt to extract a k-th root of a homogeneous f over Q, allowing a
/// rational scalar mismatch. Returns None when no such root exists.
pub fn perfect_power_root(f: &Poly<Rat>, k: u32) -> Option<PowerRoot> {
    assert!(k >= 2);
    if f.is_zero() {
        return None;
    }
    let deg = f.homogeneous_degree()?;
    if deg % k != 0 {
        return None;
    }
    let (lead_m, lead_c) = f.leading_term()?;
    if lead_m.0.iter().any(|&e| e % k != 0) {
        return None;
    }
    let scale = Rat::one() / lead_c.clone();
    let target = f.scale(&scale); // monic; g^k should equal target

    let g_lead = Monomial(lead_m.0.iter().map(|&e| e / k).collect());
    let mut g = Poly::monomial(f.vars(), g_lead.clone(), Rat::one());
    // lead(g)^(k-1), the divisor for each successive coefficient
    let lead_pow = g_lead.pow(k - 1);
    let k_rat = crate::field::rint(k as i64);

    // Determine successive terms of g from the leading term of the residue.
    // Candidate monomials strictly decrease, so this terminates.
    let max_iters = target.num_terms().max(16) * 4 + 8;
    let mut last_added = g_lead.clone();
    for _ in 0..max_iters {
        let residue = &target - &g.pow(k);
        let Some((rm, rc)) = residue.leading_term() else {
            return Some(PowerRoot { root: g, scale });
        };
        if !lead_pow.divides(rm) {
            return None;
        }
        let qm = lead_pow.quotient_into(rm);
        if qm >= last_added {
            return None;
        }
        let qc = rc.clone() / &k_rat;
        g.add_term(qm.clone(), qc);
        last_added = qm;
    }
    None
}
