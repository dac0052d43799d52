//! Finite groups `Z_Q` and `S_N`, addressed through canonical element indices.
//!
//! Elements of `S_N` are indexed by the lexicographic rank of their one-line
//! notation; elements of `Z_Q` by their residue. Index 0 is the identity in
//! both cases.

mod cyclic;
mod perm;
mod subgroup;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use cyclic::CyclicElement;
pub use perm::{compose, factorial, transposition, Permutation};
pub use subgroup::{
    are_conjugate, left_cosets, left_cosets_with_representatives, normal_core,
    stabilizer_coset_representatives, stabilizer_subgroup, Coset, Subgroup,
};

use crate::error::{Error, Result};

/// Largest `N` for which `S_N` may be enumerated.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;
/// Largest supported cyclic order.
pub const MAX_CYCLIC_ORDER: usize = 1 << 24;

/// Group descriptor. Serializes as `{"kind": "sym"|"cyclic", "n": N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Group {
    #[serde(rename = "sym")]
    Symmetric { n: usize },
    #[serde(rename = "cyclic")]
    Cyclic { n: usize },
}

/// A concrete group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Element {
    Perm(Permutation),
    Cyclic(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => write!(f, "{p}"),
            Element::Cyclic(m) => write!(f, "{m}"),
        }
    }
}

impl Group {
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedGroup("S_0".into()));
        }
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::TooLarge {
                what: "symmetric degree N",
                size: n,
                cap: MAX_SYMMETRIC_DEGREE,
            });
        }
        Ok(Group::Symmetric { n })
    }

    pub fn cyclic(q: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::UnsupportedGroup("Z_0".into()));
        }
        if q > MAX_CYCLIC_ORDER {
            return Err(Error::TooLarge {
                what: "cyclic order Q",
                size: q,
                cap: MAX_CYCLIC_ORDER,
            });
        }
        Ok(Group::Cyclic { n: q })
    }

    /// Re-checks the size caps; used after deserializing a descriptor.
    pub fn validated(self) -> Result<Self> {
        match self {
            Group::Symmetric { n } => Self::symmetric(n),
            Group::Cyclic { n } => Self::cyclic(n),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Group::Symmetric { n } => factorial(n),
            Group::Cyclic { n } => n,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match *self {
            Group::Symmetric { n } => n <= 2,
            Group::Cyclic { .. } => true,
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, idx: usize) -> Element {
        debug_assert!(idx < self.order());
        match *self {
            Group::Symmetric { n } => Element::Perm(Permutation::unrank(n, idx)),
            Group::Cyclic { .. } => Element::Cyclic(idx),
        }
    }

    /// The permutation with canonical index `idx`; `None` for cyclic groups.
    pub fn permutation(&self, idx: usize) -> Option<Permutation> {
        match *self {
            Group::Symmetric { n } => Some(Permutation::unrank(n, idx)),
            Group::Cyclic { .. } => None,
        }
    }

    pub fn index_of(&self, element: &Element) -> Result<usize> {
        match (self, element) {
            (Group::Symmetric { n }, Element::Perm(p)) if p.size() == *n => Ok(p.rank()),
            (Group::Cyclic { n }, Element::Cyclic(m)) if m < n => Ok(*m),
            _ => Err(Error::Malformed(format!(
                "{element} is not an element of {self}"
            ))),
        }
    }

    pub fn permutation_index(&self, p: &Permutation) -> Result<usize> {
        self.index_of(&Element::Perm(p.clone()))
    }

    /// Index of the product `a · b`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match *self {
            Group::Symmetric { n } => Permutation::unrank(n, a)
                .compose_unchecked(&Permutation::unrank(n, b))
                .rank(),
            Group::Cyclic { n } => (a + b) % n,
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        match *self {
            Group::Symmetric { n } => Permutation::unrank(n, a).inverse().rank(),
            Group::Cyclic { n } => (n - a) % n,
        }
    }

    /// Index of `g · k · g⁻¹`.
    pub fn conjugate(&self, g: usize, k: usize) -> usize {
        self.multiply(self.multiply(g, k), self.inverse(g))
    }

    pub fn describe(&self, idx: usize) -> String {
        match *self {
            Group::Symmetric { n } => Permutation::unrank(n, idx).to_string(),
            Group::Cyclic { n } => format!("{idx} mod {n}"),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Symmetric { n } => write!(f, "S_{n}"),
            Group::Cyclic { n } => write!(f, "Z_{n}"),
        }
    }
}
