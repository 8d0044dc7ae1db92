//! Classification data for rational elliptic surfaces with constant
//! j-invariant (Oguiso-Shioda), keyed by the multiplicity pattern of the
//! degenerate binary form, plus the closed lists of Mordell-Weil groups
//! that can occur for the threefolds.
//!
//! The rows are classification inputs, not computed; each carries a
//! provenance string so reports never pass a table value off as a computed
//! one. A transcription cross-check (rank + lattice rank = 8, Shioda-Tate
//! for rational elliptic surfaces) guards the data.

use crate::group::{AbstractGroup, Torsion};
use std::fmt;

/// Which constant j-invariant case a fibration belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum JCase {
    /// y^2 = x^3 + R, R a sextic.
    Zero,
    /// y^2 = x^3 + Q x, Q a quartic.
    J1728,
    /// y^2 = x^3 + A P^2 x + B P^3, P a conic, j != 0, 1728.
    Generic,
}

impl fmt::Display for JCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JCase::Zero => write!(f, "0"),
            JCase::J1728 => write!(f, "1728"),
            JCase::Generic => write!(f, "generic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceClass {
    pub j: JCase,
    /// Multiplicity pattern of the restricted form, sorted descending.
    pub pattern: Vec<u32>,
    /// Contribution of the singular fibers to the Neron-Severi lattice.
    pub lattice: &'static str,
    pub mw_rank: u32,
    pub torsion_order: u32,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    /// Pattern corresponds to a cone / product configuration, outside the
    /// rational-elliptic-surface table.
    ConeCase(String),
    UnknownPattern(String),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::ConeCase(s) => write!(f, "{}", s),
            TableError::UnknownPattern(s) => write!(f, "pattern {} not in the surface table", s),
        }
    }
}

impl std::error::Error for TableError {}

const OS_J0: &str = "Oguiso-Shioda classification, j=0 rows";
const OS_J1728: &str = "Oguiso-Shioda classification, j=1728 rows";
const OS_GEN: &str = "Oguiso-Shioda classification, generic constant j";

fn row(j: JCase, pattern: &[u32], lattice: &'static str, mw_rank: u32, torsion_order: u32) -> SurfaceClass {
    let provenance = match j {
        JCase::Zero => OS_J0,
        JCase::J1728 => OS_J1728,
        JCase::Generic => OS_GEN,
    };
    SurfaceClass { j, pattern: pattern.to_vec(), lattice, mw_rank, torsion_order, provenance }
}

/// All table rows: 10 for j=0 (factorizations of a sextic binary form),
/// 4 for j=1728 (quartic), 1 for generic j.
pub fn all_rows() -> Vec<SurfaceClass> {
    vec![
        row(JCase::Zero, &[1, 1, 1, 1, 1, 1], "-", 8, 1),
        row(JCase::Zero, &[2, 1, 1, 1, 1], "A2", 6, 1),
        row(JCase::Zero, &[2, 2, 1, 1], "2A2", 4, 1),
        row(JCase::Zero, &[2, 2, 2], "3A2", 2, 3),
        row(JCase::Zero, &[3, 1, 1, 1], "D4", 4, 1),
        row(JCase::Zero, &[3, 2, 1], "D4+A2", 2, 1),
        row(JCase::Zero, &[3, 3], "2D4", 0, 4),
        row(JCase::Zero, &[4, 1, 1], "E6", 2, 1),
        row(JCase::Zero, &[4, 2], "E6+A2", 0, 3),
        row(JCase::Zero, &[5, 1], "E8", 0, 1),
        row(JCase::J1728, &[1, 1, 1, 1], "4A1", 4, 2),
        row(JCase::J1728, &[2, 1, 1], "D4+2A1", 2, 2),
        row(JCase::J1728, &[2, 2], "2D4", 0, 4),
        row(JCase::J1728, &[3, 1], "E7+A1", 0, 2),
        row(JCase::Generic, &[1, 1], "2D4", 0, 4),
    ]
}

/// Look up the surface class for a multiplicity pattern. The pattern is
/// sorted internally, so any order is accepted.
pub fn lookup_surface(j: JCase, pattern: &[u32]) -> Result<SurfaceClass, TableError> {
    let mut p = pattern.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    let expected_sum: u32 = match j {
        JCase::Zero => 6,
        JCase::J1728 => 4,
        JCase::Generic => 2,
    };
    if p.iter().sum::<u32>() != expected_sum {
        return Err(TableError::UnknownPattern(format!("{:?} (j={})", p, j)));
    }
    // Full-degeneration patterns are excluded: the surface degenerates to a
    // cone / product and carries no Mordell-Weil data of its own.
    let cone = match j {
        JCase::Zero => p == [6],
        JCase::J1728 => p == [4],
        JCase::Generic => p == [2],
    };
    if cone {
        return Err(TableError::ConeCase(format!(
            "pattern {:?} (j={}) means the form is a perfect power of one linear form; \
             the fibration degenerates to a cone/product and is excluded",
            p, j
        )));
    }
    all_rows()
        .into_iter()
        .find(|r| r.j == j && r.pattern == p)
        .ok_or_else(|| TableError::UnknownPattern(format!("{:?} (j={})", p, j)))
}

/// Rank of a Neron-Severi contribution string such as "D4+2A1" or "3A2".
pub fn lattice_rank(lattice: &str) -> u32 {
    if lattice == "-" {
        return 0;
    }
    lattice
        .split('+')
        .map(|part| {
            let part = part.trim();
            let (mult, rest) = match part.find(|c: char| c.is_ascii_alphabetic()) {
                Some(0) => (1u32, part),
                Some(i) => (part[..i].parse().unwrap(), &part[i..]),
                None => panic!("bad lattice symbol {}", part),
            };
            let rank: u32 = rest[1..].parse().unwrap();
            mult * rank
        })
        .sum()
}

/// A Mordell-Weil group a threefold can have, with a flag for groups that
/// only arise from the (excluded) cone construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PossibleGroup {
    pub group: AbstractGroup,
    pub cone_only: bool,
}

/// The closed list of Mordell-Weil groups for each j-case. Entries flagged
/// `cone_only` are admitted by the specialization bounds but occur only for
/// discriminants that are unions of lines (cone configurations).
pub fn enumerate_possible_groups(j: JCase) -> Vec<PossibleGroup> {
    let g = |torsion, rank, cone_only| PossibleGroup {
        group: AbstractGroup::new(torsion, rank),
        cone_only,
    };
    match j {
        JCase::Generic => vec![g(Torsion::Z2xZ2, 0, false)],
        JCase::J1728 => vec![
            g(Torsion::Z2, 0, false),
            g(Torsion::Z2, 2, false),
            g(Torsion::Z2, 4, true),
            g(Torsion::Z2xZ2, 0, false),
        ],
        JCase::Zero => vec![
            g(Torsion::Trivial, 0, false),
            g(Torsion::Trivial, 2, false),
            g(Torsion::Trivial, 4, false),
            g(Torsion::Trivial, 6, false),
            g(Torsion::Trivial, 8, true),
            g(Torsion::Z3, 0, false),
            g(Torsion::Z3, 2, true),
            g(Torsion::Z2xZ2, 0, false),
        ],
    }
}

/// True if the group is attainable for this j-case without the cone
/// construction.
pub fn group_is_possible(j: JCase, group: &AbstractGroup) -> bool {
    enumerate_possible_groups(j).iter().any(|p| !p.cone_only && &p.group == group)
}

/// Text dump of the tables: an aligned block per j-case plus one
/// machine-readable line per row.
pub fn dump() -> String {
    let mut out = String::new();
    for (j, title) in [
        (JCase::Zero, "j = 0 (sextic binary forms)"),
        (JCase::J1728, "j = 1728 (quartic binary forms)"),
        (JCase::Generic, "generic constant j"),
    ] {
        out.push_str(title);
        out.push('\n');
        out.push_str("  pattern          lattice   rank  torsion\n");
        for r in all_rows().into_iter().filter(|r| r.j == j) {
            out.push_str(&format!(
                "  {:<16} {:<9} {:<5} {}\n",
                pattern_string(&r.pattern),
                r.lattice,
                r.mw_rank,
                r.torsion_order
            ));
        }
    }
    for r in all_rows() {
        out.push_str(&format!(
            "j={} pattern={} lattice={} rank={} torsion={}\n",
            r.j,
            pattern_string(&r.pattern),
            r.lattice.replace(' ', ""),
            r.mw_rank,
            r.torsion_order
        ));
    }
    out
}

pub fn pattern_string(pattern: &[u32]) -> String {
    let inner: Vec<String> = pattern.iter().map(|m| m.to_string()).collect();
    format!("[{}]", inner.join(","))
}
