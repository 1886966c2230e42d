use std::fmt;

/// The closed set of variable families used by every polynomial in the crate.
///
/// The declaration order is the variable order: `q < p < x < y < a < b < c < d
/// < lambda < xi < v < u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Q,
    P,
    X,
    Y,
    A,
    B,
    C,
    D,
    Lambda,
    Xi,
    V,
    U,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Q,
        Family::P,
        Family::X,
        Family::Y,
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::Lambda,
        Family::Xi,
        Family::V,
        Family::U,
    ];

    /// Families whose variables are attached to ground-set elements.
    pub fn is_indexed(self) -> bool {
        matches!(self, Family::V | Family::U)
    }

    /// Printed name of the family.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Q => "q",
            Family::P => "p",
            Family::X => "x",
            Family::Y => "y",
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::Lambda => "l",
            Family::Xi => "s",
            Family::V => "v",
            Family::U => "u",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.symbol() == s)
    }
}

/// A polynomial variable.
///
/// Variables of the `v` and `u` families normally carry the label of the
/// ground-set element they belong to (`v0`, `u3`, ...). The index-free `v` and
/// `u` are the shared variables obtained by setting every `v_e` equal to one
/// value. All other families never carry an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    family: Family,
    index: Option<u32>,
}

impl VarId {
    pub const Q: VarId = VarId::plain(Family::Q);
    pub const P: VarId = VarId::plain(Family::P);
    pub const X: VarId = VarId::plain(Family::X);
    pub const Y: VarId = VarId::plain(Family::Y);
    pub const A: VarId = VarId::plain(Family::A);
    pub const B: VarId = VarId::plain(Family::B);
    pub const C: VarId = VarId::plain(Family::C);
    pub const D: VarId = VarId::plain(Family::D);
    pub const LAMBDA: VarId = VarId::plain(Family::Lambda);
    pub const XI: VarId = VarId::plain(Family::Xi);
    /// The shared `v`, standing in for every `v_e` at once.
    pub const V: VarId = VarId::plain(Family::V);
    /// The shared `u`, standing in for every `u_e` at once.
    pub const U: VarId = VarId::plain(Family::U);

    const fn plain(family: Family) -> VarId {
        VarId {
            family,
            index: None,
        }
    }

    /// `v_e` for the ground-set element labelled `e`.
    pub const fn v(e: u32) -> VarId {
        VarId {
            family: Family::V,
            index: Some(e),
        }
    }

    /// `u_e` for the ground-set element labelled `e`.
    pub const fn u(e: u32) -> VarId {
        VarId {
            family: Family::U,
            index: Some(e),
        }
    }

    /// Builds a variable, rejecting an index on a non-indexed family.
    pub fn new(family: Family, index: Option<u32>) -> Option<VarId> {
        if index.is_some() && !family.is_indexed() {
            return None;
        }
        Some(VarId { family, index })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> Option<u32> {
        self.index
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.symbol())?;
        if let Some(i) = self.index {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}
