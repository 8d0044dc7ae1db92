//! Local cohomology h^4_p(Y) of a singular point of a Weierstrass
//! threefold, with its Hodge split.
//!
//! Three computing engines plus one lookup:
//!
//! * **Dimca** — isolated (semi-)weighted homogeneous germs: h^4_p is the
//!   sum of the three graded pieces R(f)_{i d - w}, i = 1, 2, 3.
//! * **Hulek-Kloosterman** — non-isolated weighted homogeneous germs with
//!   transversal ADE type: h^{2,2} is the kernel of the evaluation of
//!   R(f)_{2d-w} into the (stabilizer-invariant) local Milnor algebras at
//!   the singular points of the associated weighted projective surface.
//! * **Three-weights reduction** — when exactly three weights share a
//!   divisor prime to the fourth, an isomorphism of weighted projective
//!   surfaces divides the distinguished variable's exponents; iterating
//!   often produces a linear term, i.e. 1 lies in the Jacobian ideal and
//!   the local cohomology vanishes.
//! * **Table** — the non-quasihomogeneous sextic germ classes whose h^4
//!   values come from Brieskorn-method monodromy computations and are
//!   encoded as data with provenance.

use crate::field::{rint, Rat};
use crate::jacobian::{
    graded_piece, invariant_subalgebra, truncated_milnor_algebra, DiagonalAction, GermError,
    LocalMilnorData, WeightedGerm,
};
use crate::linalg::Mat;
use crate::poly::{Poly, Vars, Weights};
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Dimca,
    HK,
    ThreeWeights,
    Table,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Dimca => write!(f, "Dimca"),
            Method::HK => write!(f, "HK"),
            Method::ThreeWeights => write!(f, "ThreeWeights"),
            Method::Table => write!(f, "Table"),
        }
    }
}

/// h^4_p(Y) with its Hodge numbers and, for the computed engines, an
/// explicit generator basis in the local variables.
#[derive(Clone, Debug)]
pub struct H4Report {
    pub h4: u32,
    pub h31: u32,
    pub h22: u32,
    pub h13: u32,
    /// Generators: monomials for Dimca, kernel combinations for HK.
    pub basis: Vec<Poly<Rat>>,
    pub method: Method,
    pub provenance: String,
    pub notes: Vec<String>,
}

impl H4Report {
    fn consistent(&self) -> bool {
        self.h4 == self.h31 + self.h22 + self.h13 && self.h31 == self.h13
    }
}

#[derive(Debug, Clone)]
pub enum CohomError {
    Germ(GermError),
    /// The germ is not isolated; Dimca does not apply.
    NotIsolated,
    /// Non-isolated germ but no singular points supplied for HK.
    MissingSingularPoints,
    /// A supplied point does not annihilate all partials.
    PointNotSingular(String),
    /// A supplied point cannot be normalized to chart coordinate 1 over Q.
    PointNotNormalizable(String),
    /// Local Milnor algebra failed to stabilize at the jet order used.
    JetNotStabilized(String),
    /// Three-weights hypothesis violated.
    ThreeWeightsNotApplicable,
    /// One of the germ families with no computing method.
    Unsupported(String),
    /// Unknown table name or parameters out of range.
    UnknownTableEntry(String),
}

impl fmt::Display for CohomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomError::Germ(e) => write!(f, "{}", e),
            CohomError::NotIsolated => write!(
                f,
                "germ is not isolated (jet dimensions do not stabilize); route it to the \
                 Hulek-Kloosterman engine with its singular points"
            ),
            CohomError::MissingSingularPoints => write!(
                f,
                "non-isolated germ needs the singular points of its weighted projective surface"
            ),
            CohomError::PointNotSingular(s) => write!(f, "supplied point is not singular: {}", s),
            CohomError::PointNotNormalizable(s) => {
                write!(f, "cannot normalize point over Q: {}", s)
            }
            CohomError::JetNotStabilized(s) => {
                write!(f, "local Milnor algebra did not stabilize: {}", s)
            }
            CohomError::ThreeWeightsNotApplicable => {
                write!(f, "three-weights hypothesis violated: no valid divisor")
            }
            CohomError::Unsupported(s) => {
                write!(f, "no computing method for this singularity class: {}", s)
            }
            CohomError::UnknownTableEntry(s) => write!(f, "unknown table entry: {}", s),
        }
    }
}

impl std::error::Error for CohomError {}

impl From<GermError> for CohomError {
    fn from(e: GermError) -> Self {
        CohomError::Germ(e)
    }
}

const DIMCA_REF: &str = "Dimca graded-piece formula";
const HK_REF: &str = "Hulek-Kloosterman kernel method";
const TW_REF: &str = "three-weights reduction";
const TABLE_REF: &str = "Brieskorn-method monodromy table";

/// 1 lies in the Jacobian ideal iff some partial has a nonzero constant
/// term, i.e. f has a linear term.
pub fn jacobian_contains_unit(f: &Poly<Rat>) -> bool {
    let nv = f.vars().len();
    f.terms().any(|(m, _)| m.total_degree() == 1 && m.0.len() == nv)
}

/// Dimca's method for an isolated (semi-)weighted homogeneous germ:
/// h^{3,1} = dim R_{d-w}, h^{2,2} = dim R_{2d-w}, h^{1,3} = dim R_{3d-w}.
pub fn dimca_h4(g: &WeightedGerm) -> Result<H4Report, CohomError> {
    let g = g.normalized();
    if !isolated(&g) {
        return Err(CohomError::NotIsolated);
    }
    let (d, w) = (g.degree(), g.weight_sum());
    let p1 = graded_piece(&g, d - w);
    let p2 = graded_piece(&g, 2 * d - w);
    let p3 = graded_piece(&g, 3 * d - w);
    let mut basis: Vec<Poly<Rat>> = Vec::new();
    for piece in [&p1, &p2, &p3] {
        for m in &piece.basis {
            basis.push(Poly::monomial(g.vars(), m.clone(), rint(1)));
        }
    }
    let rep = H4Report {
        h4: (p1.dim() + p2.dim() + p3.dim()) as u32,
        h31: p1.dim() as u32,
        h22: p2.dim() as u32,
        h13: p3.dim() as u32,
        basis,
        method: Method::Dimca,
        provenance: DIMCA_REF.to_string(),
        notes: vec![],
    };
    debug_assert!(rep.consistent());
    Ok(rep)
}

/// Exact isolatedness test for a weighted homogeneous germ: the Jacobian
/// quotient of an isolated singularity is Artinian with socle degree
/// 4d - 2w, so the germ is isolated iff R(f)_k = 0 for max-weight-many
/// consecutive degrees past the socle (a zero window propagates upward:
/// any higher monomial is a variable times one inside the window).
pub fn isolated(g: &WeightedGerm) -> bool {
    let g = g.normalized();
    let socle = 4 * g.degree() - 2 * g.weight_sum();
    let maxw = g.weights().as_slice().iter().copied().max().unwrap() as i64;
    let start = socle.max(-1) + 1;
    (start..start + maxw).all(|k| graded_piece(&g, k).dim() == 0)
}

/// A singular point of the weighted projective surface S = {f = 0},
/// given in the germ's (weighted homogeneous) coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct HkPoint {
    pub coords: Vec<Rat>,
    pub label: Option<String>,
}

impl HkPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        HkPoint { coords, label: None }
    }

    pub fn display(&self) -> String {
        let inner: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(":"))
    }
}

/// Everything the evaluation map needs about one singular point: the local
/// Milnor algebra (already restricted to stabilizer invariants) and the
/// recipe to localize a global monomial there.
pub struct LocalizedPoint {
    pub point: HkPoint,
    pub chart: usize,
    /// Normalized coordinates with chart coordinate 1.
    pub coords: Vec<Rat>,
    pub action: DiagonalAction,
    pub milnor: LocalMilnorData,
    pub local_vars: Vars,
    /// Positions of the germ variables among the local variables.
    var_map: Vec<Option<usize>>,
}

impl LocalizedPoint {
    /// Taylor data of a germ-variable polynomial at this point: substitute
    /// the chart variable by 1 and shift the others by the coordinates.
    pub fn localize(&self, p: &Poly<Rat>) -> Poly<Rat> {
        let images: Vec<Poly<Rat>> = (0..p.vars().len())
            .map(|i| match self.var_map[i] {
                None => Poly::constant(&self.local_vars, rint(1)),
                Some(li) => {
                    let c = Poly::constant(&self.local_vars, self.coords[i].clone());
                    &c + &Poly::variable(&self.local_vars, li)
                }
            })
            .collect();
        p.substitute(&self.local_vars, &images)
    }
}

/// Normalize a point of weighted projective space so the chart coordinate
/// is 1, using only rational rescalings. The chart is the first nonzero
/// coordinate of minimal weight that admits a rational normalization.
fn normalize_point(
    g: &WeightedGerm,
    pt: &HkPoint,
) -> Result<(usize, Vec<Rat>), CohomError> {
    let w = g.weights();
    let n = pt.coords.len();
    assert_eq!(n, w.len());
    let mut candidates: Vec<usize> = (0..n).filter(|&i| !pt.coords[i].is_zero()).collect();
    candidates.sort_by_key(|&i| (w.get(i), i));
    for &j in &candidates {
        let vj = &pt.coords[j];
        let lambda_pow: Option<Vec<Rat>> = if vj == &rint(1) {
            Some(pt.coords.clone())
        } else if w.get(j) == 1 {
            // scale by lambda = 1/vj
            let l = rint(1) / vj.clone();
            Some(scale_weighted(&pt.coords, w, &l))
        } else if vj == &rint(-1) && w.get(j) % 2 == 1 {
            let l = rint(-1);
            Some(scale_weighted(&pt.coords, w, &l))
        } else {
            None
        };
        if let Some(c) = lambda_pow {
            return Ok((j, c));
        }
    }
    Err(CohomError::PointNotNormalizable(pt.display()))
}

fn scale_weighted(coords: &[Rat], w: &Weights, lambda: &Rat) -> Vec<Rat> {
    coords
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut f = Rat::from_integer(1.into());
            for _ in 0..w.get(i) {
                f *= lambda.clone();
            }
            c * f
        })
        .collect()
}

/// Stabilizer of the (normalized) point inside the weighted C*-action:
/// scalars lambda with lambda^{w_j} = 1 fixing every nonzero coordinate.
/// It acts diagonally on the local variables by lambda^{w_i}.
fn stabilizer_action(g: &WeightedGerm, chart: usize, coords: &[Rat], local_of: &[Option<usize>], nlocal: usize) -> DiagonalAction {
    let w = g.weights();
    let mut order = w.get(chart);
    for (i, c) in coords.iter().enumerate() {
        if i != chart && !c.is_zero() {
            order = order.gcd(&w.get(i));
        }
    }
    if order <= 1 {
        return DiagonalAction::trivial(nlocal);
    }
    let mut exps = vec![0u32; nlocal];
    for i in 0..coords.len() {
        if let Some(li) = local_of[i] {
            exps[li] = w.get(i) % order;
        }
    }
    DiagonalAction { order, exps }
}

/// Default jet order for transversal ADE local algebras.
const HK_JET_ORDER: u32 = 10;

/// Prepare a singular point for the evaluation map: validate, normalize,
/// build the local equation, its truncated Milnor algebra, and the
/// stabilizer-invariant part.
pub fn localize_point(g: &WeightedGerm, pt: &HkPoint) -> Result<LocalizedPoint, CohomError> {
    // the point must annihilate every partial
    for df in g.f().partials() {
        if !df.eval(&pt.coords).is_zero() {
            return Err(CohomError::PointNotSingular(pt.display()));
        }
    }
    let (chart, coords) = normalize_point(g, pt)?;
    let all = g.vars();
    let local_names: Vec<&str> = (0..all.len())
        .filter(|&i| i != chart)
        .map(|i| all.name(i))
        .collect();
    let local_vars = Vars::new(&local_names);
    let mut var_map = vec![None; all.len()];
    let mut li = 0;
    for i in 0..all.len() {
        if i != chart {
            var_map[i] = Some(li);
            li += 1;
        }
    }
    // local equation g(locals) = f(chart=1, others = coord + local)
    let images: Vec<Poly<Rat>> = (0..all.len())
        .map(|i| match var_map[i] {
            None => Poly::constant(&local_vars, rint(1)),
            Some(l) => {
                let c = Poly::constant(&local_vars, coords[i].clone());
                &c + &Poly::variable(&local_vars, l)
            }
        })
        .collect();
    let local_eq = g.f().substitute(&local_vars, &images);
    let milnor_full = truncated_milnor_algebra(&local_eq, HK_JET_ORDER)?;
    if !milnor_full.stabilized {
        return Err(CohomError::JetNotStabilized(pt.display()));
    }
    let action = stabilizer_action(g, chart, &coords, &var_map, local_vars.len());
    let milnor = invariant_subalgebra(&milnor_full, &action);
    Ok(LocalizedPoint { point: pt.clone(), chart, coords, action, milnor, local_vars, var_map })
}

/// Hulek-Kloosterman method for a non-isolated weighted homogeneous germ
/// with transversal ADE type. `sing_pts` must be the complete vanishing
/// locus of the partials in the weighted projective surface; each point is
/// validated, completeness is the caller's assertion and is recorded.
pub fn hk_h4(g: &WeightedGerm, sing_pts: &[HkPoint]) -> Result<H4Report, CohomError> {
    let g = g.normalized();
    let (d, w) = (g.degree(), g.weight_sum());
    let p1 = graded_piece(&g, d - w);
    let p2 = graded_piece(&g, 2 * d - w);
    let localized: Vec<LocalizedPoint> = sing_pts
        .iter()
        .map(|pt| localize_point(&g, pt))
        .collect::<Result<_, _>>()?;

    // Evaluation map R_{2d-w} -> (+) M_q: rows are the selected local basis
    // functionals, columns the quotient basis of R_{2d-w}.
    let total_rows: usize = localized.iter().map(|lp| lp.milnor.dim()).sum();
    let cols = p2.dim();
    let kernel: Vec<Vec<Rat>> = if total_rows == 0 || cols == 0 {
        // map to the zero space: kernel is everything
        (0..cols)
            .map(|i| {
                let mut v = vec![Rat::zero(); cols];
                v[i] = rint(1);
                v
            })
            .collect()
    } else {
        let mut mat = Mat::zero(total_rows, cols);
        for (j, bm) in p2.basis.iter().enumerate() {
            let bp = Poly::monomial(g.vars(), bm.clone(), rint(1));
            let mut r0 = 0;
            for lp in &localized {
                let local = lp.localize(&bp);
                for (k, c) in lp.milnor.reduce(&local).into_iter().enumerate() {
                    mat.set(r0 + k, j, c);
                }
                r0 += lp.milnor.dim();
            }
        }
        mat.kernel_basis()
    };
    let h22 = kernel.len() as u32;
    let basis: Vec<Poly<Rat>> = kernel
        .iter()
        .map(|v| p2.from_quotient_coords(g.vars(), v))
        .collect();
    let h31 = p1.dim() as u32;
    let mut notes = vec![format!(
        "completeness of the {} supplied singular point(s) is caller-asserted",
        sing_pts.len()
    )];
    for lp in &localized {
        notes.push(format!(
            "point {}: chart {}, local Milnor dim {} (invariant part of {}), stabilizer order {}",
            lp.point.display(),
            g.vars().name(lp.chart),
            lp.milnor.dim(),
            lp.milnor.basis.len(),
            lp.action.order
        ));
    }
    let rep = H4Report {
        h4: 2 * h31 + h22,
        h31,
        h22,
        h13: h31,
        basis,
        method: Method::HK,
        provenance: HK_REF.to_string(),
        notes,
    };
    debug_assert!(rep.consistent());
    Ok(rep)
}

/// One step of the three-weights reduction. Finds a prime gamma dividing
/// exactly three of the weights and not the fourth, such that every
/// exponent of the distinguished variable is divisible by gamma; divides
/// those exponents and the three weights.
pub fn three_weights_reduce(g: &WeightedGerm) -> Result<WeightedGerm, CohomError> {
    let w = g.weights();
    let n = w.len();
    for special in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != special).collect();
        let mut gg = 0u32;
        for &i in &others {
            gg = gg.gcd(&w.get(i));
        }
        for gamma in primes_dividing(gg) {
            if w.get(special) % gamma == 0 {
                continue;
            }
            // all exponents of the special variable divisible by gamma?
            if !g.f().terms().all(|(m, _)| m.0[special] % gamma == 0) {
                continue;
            }
            let mut f2 = Poly::zero(g.vars());
            for (m, c) in g.f().terms() {
                let mut e = m.clone();
                e.0[special] /= gamma;
                f2.add_term(e, c.clone());
            }
            let w2 = w.scaled_down(&others, gamma);
            let reduced = WeightedGerm::new(f2, w2)?;
            return Ok(reduced.normalized());
        }
    }
    Err(CohomError::ThreeWeightsNotApplicable)
}

fn primes_dividing(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Iterate the reduction until it no longer applies. Returns the final
/// germ and the number of steps taken.
pub fn three_weights_reduce_fully(g: &WeightedGerm) -> (WeightedGerm, u32) {
    let mut cur = g.normalized();
    let mut steps = 0;
    while let Ok(next) = three_weights_reduce(&cur) {
        cur = next;
        steps += 1;
        if jacobian_contains_unit(cur.f()) {
            break;
        }
    }
    (cur, steps)
}

/// Zero report produced when the reduction exposes a linear term.
fn zero_by_three_weights(note: String) -> H4Report {
    H4Report {
        h4: 0,
        h31: 0,
        h22: 0,
        h13: 0,
        basis: vec![],
        method: Method::ThreeWeights,
        provenance: TW_REF.to_string(),
        notes: vec![note],
    }
}

/// Routing instruction for a germ whose computation path is known.
#[derive(Clone, Debug)]
pub enum Route {
    Dimca,
    Hk(Vec<HkPoint>),
    /// Apply three-weights steps first, then continue. With `then: None`
    /// the reduction is expected to expose a linear term (h^4 = 0).
    ThreeWeights { then: Option<Box<Route>> },
    Table(NonQhClass),
    Unsupported(&'static str),
}

/// Execute a route on a germ.
pub fn run_route(g: &WeightedGerm, route: &Route) -> Result<H4Report, CohomError> {
    match route {
        Route::Dimca => dimca_h4(g),
        Route::Hk(pts) => hk_h4(g, pts),
        Route::ThreeWeights { then } => {
            let (reduced, steps) = three_weights_reduce_fully(g);
            if steps == 0 {
                return Err(CohomError::ThreeWeightsNotApplicable);
            }
            if jacobian_contains_unit(reduced.f()) {
                return Ok(zero_by_three_weights(format!(
                    "{} reduction step(s) expose a linear term: 1 lies in the Jacobian ideal",
                    steps
                )));
            }
            match then {
                None => Err(CohomError::Unsupported(
                    "three-weights reduction did not expose a linear term and no follow-up \
                     route was given"
                        .to_string(),
                )),
                Some(next) => {
                    let mut rep = run_route(&reduced, next)?;
                    rep.notes.push(format!(
                        "after {} three-weights step(s): germ {} with weights {}",
                        steps,
                        reduced.f(),
                        reduced.weights()
                    ));
                    Ok(rep)
                }
            }
        }
        Route::Table(class) => lookup_nonqh(class),
        Route::Unsupported(which) => Err(CohomError::Unsupported(format!(
            "{}: no method computes h^4 for this family",
            which
        ))),
    }
}

/// Route a bare germ automatically: isolated -> Dimca; non-isolated with
/// points -> HK; non-isolated without points -> error.
pub fn auto_route(g: &WeightedGerm, pts: Option<&[HkPoint]>) -> Result<H4Report, CohomError> {
    match pts {
        Some(p) if !p.is_empty() => hk_h4(g, p),
        _ => {
            if isolated(g) {
                dimca_h4(g)
            } else {
                Err(CohomError::MissingSingularPoints)
            }
        }
    }
}

// ---------------------------------------------------------------------
// Encoded results for the non-quasihomogeneous sextic germ classes.
// ---------------------------------------------------------------------

/// Sextic germ classes handled by the Brieskorn-method monodromy table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonQhClass {
    /// x^k + y^l + x^2 y^2
    C(u32, u32),
    /// y (x^k + y^l + x^2 y^2)
    YC(u32, u32),
    /// x^k + y^l + x^2 y^3
    Dkl(u32, u32),
    /// x^k + y^l + x^2 y^3 + x^3 y^2
    Fkl(u32, u32),
    /// The S_n series, n = 1..6 (moduli families around (x^2+y^3)^2).
    S(u32),
}

impl fmt::Display for NonQhClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonQhClass::C(k, l) => write!(f, "C[{},{}]", k, l),
            NonQhClass::YC(k, l) => write!(f, "yC[{},{}]", k, l),
            NonQhClass::Dkl(k, l) => write!(f, "D[{},{}]", k, l),
            NonQhClass::Fkl(k, l) => write!(f, "F[{},{}]", k, l),
            NonQhClass::S(n) => write!(f, "S{}", n),
        }
    }
}

impl NonQhClass {
    /// Parameter ranges of the reduced-sextic classification.
    pub fn in_range(&self) -> bool {
        match *self {
            NonQhClass::C(k, l) => {
                // k <= l, 2/k + 2/l <= 1, l <= n(k) for k = 3..9
                let n_of_k = |k: u32| -> Option<u32> {
                    [15u32, 14, 14, 12, 11, 11, 9].get((k as usize).checked_sub(3)?).copied()
                };
                if k > l || k < 2 {
                    return false;
                }
                // 2/k + 2/l <= 1  <=>  2l + 2k <= kl
                if 2 * (k + l) > k * l {
                    return false;
                }
                match n_of_k(k) {
                    Some(n) => l <= n,
                    None => false,
                }
            }
            NonQhClass::YC(k, l) => {
                (k == 3 && (7..=12).contains(&l)) || (k == 5 && (5..=6).contains(&l))
            }
            NonQhClass::Dkl(k, l) => {
                (k == 3 && (9..=13).contains(&l))
                    || matches!((k, l), (4, 7) | (5, 6) | (5, 7) | (6, 5) | (6, 6) | (6, 7))
            }
            NonQhClass::Fkl(k, l) => (6..=7).contains(&k) && k <= l && l <= 7,
            NonQhClass::S(n) => (1..=6).contains(&n),
        }
    }

    /// Enumerate the complete admissible list.
    pub fn all() -> Vec<NonQhClass> {
        let mut out = Vec::new();
        for k in 2..=9 {
            for l in k..=15 {
                let c = NonQhClass::C(k, l);
                if c.in_range() {
                    out.push(c);
                }
            }
        }
        for k in [3u32, 5] {
            for l in 5..=12 {
                let c = NonQhClass::YC(k, l);
                if c.in_range() {
                    out.push(c);
                }
            }
        }
        for k in 3..=6 {
            for l in 5..=13 {
                let c = NonQhClass::Dkl(k, l);
                if c.in_range() {
                    out.push(c);
                }
            }
        }
        for k in 6..=7 {
            for l in k..=7 {
                out.push(NonQhClass::Fkl(k, l));
            }
        }
        for n in 1..=6 {
            out.push(NonQhClass::S(n));
        }
        out
    }
}

/// Encoded h^4 values for the non-quasihomogeneous classes: 4 for C with
/// both indices divisible by 3, 2 for C with exactly one index divisible
/// by 3, 2 for S3 and S6, and 0 otherwise.
pub fn lookup_nonqh(class: &NonQhClass) -> Result<H4Report, CohomError> {
    if !class.in_range() {
        return Err(CohomError::UnknownTableEntry(class.to_string()));
    }
    let h4 = match *class {
        NonQhClass::C(k, l) => {
            let divs = (k % 3 == 0) as u32 + (l % 3 == 0) as u32;
            match divs {
                2 => 4,
                1 => 2,
                _ => 0,
            }
        }
        NonQhClass::S(3) | NonQhClass::S(6) => 2,
        _ => 0,
    };
    Ok(H4Report {
        h4,
        h31: 0,
        h22: h4,
        h13: 0,
        basis: vec![],
        method: Method::Table,
        provenance: TABLE_REF.to_string(),
        notes: vec![format!("encoded value for {}", class)],
    })
}

/// Multiply a multiset of monodromy rotation numbers by all nontrivial
/// d-th roots of unity: { e + j/d mod 1 : e in eigs, j = 1..d-1 }.
pub fn suspension_eigenvalues(eigs: &[Rat], d: u32) -> Vec<Rat> {
    assert!(d >= 2);
    let mut out = Vec::new();
    for e in eigs {
        for j in 1..d {
            out.push(frac_mod_one(e + Rat::new(j.into(), d.into())));
        }
    }
    out.sort();
    out
}

/// Canonical representative in [0, 1).
pub fn frac_mod_one(q: Rat) -> Rat {
    let f = q.floor();
    q - f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::poly::parse_poly;

    fn germ(f: &str, w: Vec<u32>) -> WeightedGerm {
        let v = Vars::stxy();
        WeightedGerm::new(parse_poly(f, &v).unwrap(), Weights::new(w)).unwrap()
    }

    fn basis_names(rep: &H4Report) -> Vec<String> {
        rep.basis.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn dimca_a2_j0() {
        // y^2 = x^3 + t^2 + s^3: h4 = 2, basis {x, s}
        let g = germ("y^2 - x^3 - t^2 - s^3", vec![2, 3, 2, 3]);
        let rep = dimca_h4(&g).unwrap();
        assert_eq!((rep.h4, rep.h31, rep.h22, rep.h13), (2, 0, 2, 0));
        assert_eq!(basis_names(&rep), vec!["x", "s"]);
    }

    #[test]
    fn dimca_a1_j0_vanishes() {
        // k=1: y^2 = x^3 + t^2 + s^2, weights (3,3,2,3), d = 6
        let g = germ("y^2 - x^3 - t^2 - s^2", vec![3, 3, 2, 3]);
        let rep = dimca_h4(&g).unwrap();
        assert_eq!(rep.h4, 0);
    }

    #[test]
    fn dimca_b36_and_b46() {
        // B_{3,6}: h4 = 4
        let g = germ("y^2 - x^3 - t^3 - s^6", vec![1, 2, 2, 3]);
        let rep = dimca_h4(&g).unwrap();
        assert_eq!(rep.h4, 4);
        let ns = basis_names(&rep);
        for e in ["s^4", "s^2*t", "s^2*x", "t*x"] {
            assert!(ns.contains(&e.to_string()), "missing {} in {:?}", e, ns);
        }
        // B_{4,6}: h4 = 2, basis {s t x, s^3 t}
        let g2 = germ("y^2 - x^3 - t^4 - s^6", vec![2, 3, 4, 6]);
        let rep2 = dimca_h4(&g2).unwrap();
        assert_eq!(rep2.h4, 2);
        let ns2 = basis_names(&rep2);
        assert!(ns2.contains(&"s*t*x".to_string()));
        assert!(ns2.contains(&"s^3*t".to_string()));
        // B_{5,6}: h4 = 0
        let g3 = germ("y^2 - x^3 - t^5 - s^6", vec![5, 6, 10, 15]);
        assert_eq!(dimca_h4(&g3).unwrap().h4, 0);
    }

    #[test]
    fn dimca_rejects_nonisolated() {
        // t^2 s germ is non-isolated
        let g = germ("y^2 - x^3 - t^2*s", vec![2, 2, 2, 3]);
        assert!(matches!(dimca_h4(&g), Err(CohomError::NotIsolated)));
    }

    #[test]
    fn three_weights_on_t2s_germ() {
        // y^2 = x^3 + t^2 s, weights (2,2,2,3): one step exposes a linear y
        let g = germ("y^2 - x^3 - t^2*s", vec![2, 2, 2, 3]);
        let r = three_weights_reduce(&g).unwrap();
        assert!(jacobian_contains_unit(r.f()));
        let rep = run_route(&g, &Route::ThreeWeights { then: None }).unwrap();
        assert_eq!(rep.h4, 0);
    }

    #[test]
    fn three_weights_not_applicable_for_a2() {
        let g = germ("y^2 - x^3 - t^2 - s^3", vec![2, 3, 2, 3]);
        assert!(matches!(
            three_weights_reduce(&g),
            Err(CohomError::ThreeWeightsNotApplicable)
        ));
    }

    #[test]
    fn three_weights_b_family_reduction() {
        // B_{k,l} with 2 not dividing kl: (3,7): weights (6k,6l,2kl,3kl) -> y^2 becomes y
        let g = germ("y^2 - x^3 - t^3 - s^7", vec![18, 42, 42, 63]);
        let rep = run_route(&g, &Route::ThreeWeights { then: None }).unwrap();
        assert_eq!(rep.h4, 0);
    }

    #[test]
    fn hk_two_a3_quartic_germ() {
        // y^2 = x^3 + (t^4 - s^2) x... local germ of the two-A3 quartic:
        // f = y^2 - x^3 - s^4 x + t^2 x, weights (1,2,2,3), A1 points at
        // (s:t) = (1:1), (1:-1); kernel = {s^4 - t^2, s^2 x}, h4 = 2.
        let g = germ("y^2 - x^3 - s^4*x + t^2*x", vec![1, 2, 2, 3]);
        let pts = vec![
            HkPoint::new(vec![rint(1), rint(1), rint(0), rint(0)]),
            HkPoint::new(vec![rint(1), rint(-1), rint(0), rint(0)]),
        ];
        let rep = hk_h4(&g, &pts).unwrap();
        assert_eq!((rep.h4, rep.h31, rep.h22, rep.h13), (2, 0, 2, 0));
        let ns = basis_names(&rep);
        assert!(ns.iter().any(|s| s.contains("x")), "one generator involves x: {:?}", ns);
    }

    #[test]
    fn hk_rejects_nonsingular_point() {
        let g = germ("y^2 - x^3 - s^4*x + t^2*x", vec![1, 2, 2, 3]);
        let bad = vec![HkPoint::new(vec![rint(1), rint(2), rint(0), rint(0)])];
        assert!(matches!(hk_h4(&g, &bad), Err(CohomError::PointNotSingular(_))));
    }

    #[test]
    fn hk_with_empty_point_list_is_full_middle_piece() {
        // kernel of a map to the zero space: h4 = dim R_{2d-w} + 2 dim R_{d-w}
        let g = germ("y^2 - x^3 - s^4*x + t^2*x", vec![1, 2, 2, 3]);
        let rep = hk_h4(&g, &[]).unwrap();
        let p1 = graded_piece(&g, g.degree() - g.weight_sum());
        let p2 = graded_piece(&g, 2 * g.degree() - g.weight_sum());
        assert_eq!(rep.h4 as usize, p2.dim() + 2 * p1.dim());
        assert_eq!(rep.h4, 4);
    }

    #[test]
    fn hk_bitangent_germ() {
        // y^2 = x^3 + t^2(t + s^2), weights (1,2,2,3): A2 point at (1:0:0:0),
        // kernel dim 2
        let g = germ("y^2 - x^3 - t^3 - t^2*s^2", vec![1, 2, 2, 3]);
        let pts = vec![HkPoint::new(vec![rint(1), rint(0), rint(0), rint(0)])];
        let rep = hk_h4(&g, &pts).unwrap();
        assert_eq!(rep.h4, 2);
    }

    #[test]
    fn hk_j0_t3s_germ_vanishes() {
        // lemNull case: y^2 = x^3 + t^3 s, weights (3,1,2,3), stabilizer of
        // order 3 at (1:0:0:0) with invariants {1, xt}: h4 = 0
        let g = germ("y^2 - x^3 - t^3*s", vec![3, 1, 2, 3]);
        let pts = vec![HkPoint::new(vec![rint(1), rint(0), rint(0), rint(0)])];
        let rep = hk_h4(&g, &pts).unwrap();
        assert_eq!(rep.h4, 0);
    }

    #[test]
    fn point_normalization_cases() {
        let g = germ("y^2 - x^3 - t^6*x - t*s^2*x", vec![5, 2, 6, 9]);
        // (1:-1:0:0) has chart s of weight 5 (odd): -1 normalization not needed;
        // (s,t) = (1,-1) is already chart-1
        let pt = HkPoint::new(vec![rint(1), rint(-1), rint(0), rint(0)]);
        let lp = localize_point(&g, &pt).unwrap();
        assert_eq!(lp.chart, 0);
        // negative chart coordinate with odd weight normalizes by lambda = -1:
        // (-1:0:0:0) is the same weighted-projective point as (1:0:0:0)
        let pt2 = HkPoint::new(vec![rint(-1), rint(0), rint(0), rint(0)]);
        let lp2 = localize_point(&g, &pt2).unwrap();
        assert_eq!(lp2.coords[0], rint(1));
        // and both presentations produce the same local Milnor dimension
        let lp3 = localize_point(&g, &HkPoint::new(vec![rint(1), rint(0), rint(0), rint(0)])).unwrap();
        assert_eq!(lp2.milnor.dim(), lp3.milnor.dim());
    }

    #[test]
    fn nonqh_table_values() {
        assert_eq!(lookup_nonqh(&NonQhClass::C(3, 6)).unwrap().h4, 4);
        assert_eq!(lookup_nonqh(&NonQhClass::C(3, 7)).unwrap().h4, 2);
        assert_eq!(lookup_nonqh(&NonQhClass::C(6, 7)).unwrap().h4, 2);
        assert_eq!(lookup_nonqh(&NonQhClass::C(4, 4)).unwrap().h4, 0);
        // out-of-range pairs are rejected, e.g. 2/3 + 2/4 > 1
        assert!(lookup_nonqh(&NonQhClass::C(3, 4)).is_err());
        assert_eq!(lookup_nonqh(&NonQhClass::S(4)).unwrap().h4, 0);
        assert_eq!(lookup_nonqh(&NonQhClass::S(3)).unwrap().h4, 2);
        assert_eq!(lookup_nonqh(&NonQhClass::S(6)).unwrap().h4, 2);
        assert!(lookup_nonqh(&NonQhClass::C(3, 16)).is_err());
        assert!(lookup_nonqh(&NonQhClass::S(7)).is_err());
    }

    #[test]
    fn c_range_bounds() {
        assert!(NonQhClass::C(3, 15).in_range());
        assert!(!NonQhClass::C(3, 16).in_range());
        assert!(NonQhClass::C(4, 4).in_range());
        assert!(!NonQhClass::C(2, 9).in_range()); // 2/2 + 2/9 > 1
        assert!(NonQhClass::C(9, 9).in_range());
        assert!(!NonQhClass::C(10, 10).in_range());
    }

    #[test]
    fn suspension_rule() {
        // {1/2} suspended by d=2 -> {0}
        let out = suspension_eigenvalues(&[rat(1, 2)], 2);
        assert_eq!(out, vec![rat(0, 1)]);
        // empty in, empty out
        assert!(suspension_eigenvalues(&[], 3).is_empty());
        // A2 plane rotations {1/6, 5/6} under d=3 then d=2: exactly two land on 0
        let once = suspension_eigenvalues(&[rat(1, 6), rat(5, 6)], 3);
        let twice = suspension_eigenvalues(&once, 2);
        let invariant = twice.iter().filter(|e| e.is_zero()).count();
        assert_eq!(invariant, 2);
    }
}
