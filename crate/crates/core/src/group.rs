//! Abstract group descriptors for Mordell-Weil groups.

use std::fmt;

/// Torsion subgroups that occur for constant-j Weierstrass threefolds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Torsion {
    Trivial,
    Z2,
    Z2xZ2,
    Z3,
}

impl Torsion {
    pub fn order(self) -> u32 {
        match self {
            Torsion::Trivial => 1,
            Torsion::Z2 => 2,
            Torsion::Z2xZ2 => 4,
            Torsion::Z3 => 3,
        }
    }
}

impl fmt::Display for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Torsion::Trivial => write!(f, "0"),
            Torsion::Z2 => write!(f, "Z/2Z"),
            Torsion::Z2xZ2 => write!(f, "(Z/2Z)^2"),
            Torsion::Z3 => write!(f, "Z/3Z"),
        }
    }
}

/// torsion x Z^rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AbstractGroup {
    pub torsion: Torsion,
    pub rank: u32,
}

impl AbstractGroup {
    pub fn new(torsion: Torsion, rank: u32) -> Self {
        AbstractGroup { torsion, rank }
    }

    pub fn free(rank: u32) -> Self {
        AbstractGroup { torsion: Torsion::Trivial, rank }
    }
}

impl fmt::Display for AbstractGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.torsion, self.rank) {
            (Torsion::Trivial, 0) => write!(f, "0"),
            (Torsion::Trivial, 1) => write!(f, "Z"),
            (Torsion::Trivial, r) => write!(f, "Z^{}", r),
            (t, 0) => write!(f, "{}", t),
            (t, 1) => write!(f, "{} x Z", t),
            (t, r) => write!(f, "{} x Z^{}", t, r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(AbstractGroup::free(0).to_string(), "0");
        assert_eq!(AbstractGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbstractGroup::new(Torsion::Z2, 2).to_string(), "Z/2Z x Z^2");
        assert_eq!(AbstractGroup::new(Torsion::Z2xZ2, 0).to_string(), "(Z/2Z)^2");
        assert_eq!(AbstractGroup::new(Torsion::Z3, 0).to_string(), "Z/3Z");
    }
}
