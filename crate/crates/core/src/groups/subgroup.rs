use std::collections::HashMap;

use serde::{Serialize, Serializer};

use super::{Element, Group, Permutation};
use crate::error::{Error, Result};

/// Explicitly enumerated subgroup, stored as the sorted canonical indices of
/// its elements so membership is a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    group: Group,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates that `indices` is closed under the group law and contains the identity.
    pub fn new(group: Group, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if indices.iter().any(|&i| i >= group.order())
            || indices.binary_search(&group.identity()).is_err()
        {
            return Err(Error::NotClosed);
        }
        // A finite set closed under multiplication is a subgroup.
        for &a in &indices {
            for &b in &indices {
                if indices.binary_search(&group.multiply(a, b)).is_err() {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(Self {
            group,
            elements: indices,
        })
    }

    pub fn from_elements(group: Group, elements: &[Element]) -> Result<Self> {
        let indices = elements
            .iter()
            .map(|e| group.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, indices)
    }

    pub fn from_permutations(group: Group, perms: &[Permutation]) -> Result<Self> {
        let indices = perms
            .iter()
            .map(|p| group.permutation_index(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, indices)
    }

    pub fn whole(group: Group) -> Self {
        Self {
            group,
            elements: (0..group.order()).collect(),
        }
    }

    pub fn trivial(group: Group) -> Self {
        Self {
            group,
            elements: vec![group.identity()],
        }
    }

    /// Constructor for index sets already known to be closed.
    pub(crate) fn new_unchecked(group: Group, mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self {
            group,
            elements: indices,
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn parent_order(&self) -> usize {
        self.group.order()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent_order() / self.order()
    }

    pub fn indices(&self) -> &[usize] {
        &self.elements
    }

    pub fn elements(&self) -> Vec<Element> {
        self.elements
            .iter()
            .map(|&i| self.group.element(i))
            .collect()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// `g K g⁻¹`.
    pub fn conjugate_by(&self, g: usize) -> Self {
        let conj = self
            .elements
            .iter()
            .map(|&k| self.group.conjugate(g, k))
            .collect();
        Self::new_unchecked(self.group, conj)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&i| other.contains(i))
            .collect();
        Self {
            group: self.group,
            elements,
        }
    }

    pub fn is_normal(&self) -> bool {
        left_cosets(self)
            .iter()
            .all(|c| self.conjugate_by(c.representative()) == *self)
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::Malformed(format!(
                "subgroups of {} and {}",
                self.group, other.group
            )));
        }
        Ok(())
    }
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements.iter().map(|&i| self.group.element(i)))
    }
}

/// Left coset `g K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    representative: usize,
    members: Vec<usize>,
}

impl Coset {
    fn of(rep: usize, k: &Subgroup) -> Self {
        let mut members: Vec<usize> = k
            .indices()
            .iter()
            .map(|&h| k.group().multiply(rep, h))
            .collect();
        members.sort_unstable();
        Self {
            representative: rep,
            members,
        }
    }

    pub fn representative(&self) -> usize {
        self.representative
    }

    /// Sorted canonical indices of `representative · K`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Same coset as `other`, i.e. `rep₁⁻¹ · rep₂ ∈ K`.
    pub fn same_as(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

/// All distinct left cosets `gK`, in canonical order of their smallest element,
/// which is also the chosen representative.
pub fn left_cosets(k: &Subgroup) -> Vec<Coset> {
    let group = k.group();
    let mut assigned = vec![false; group.order()];
    let mut cosets = Vec::with_capacity(k.index_in_parent());
    for g in 0..group.order() {
        if assigned[g] {
            continue;
        }
        let coset = Coset::of(g, k);
        for &m in coset.members() {
            assigned[m] = true;
        }
        cosets.push(coset);
    }
    cosets
}

/// Left cosets with caller-chosen representatives; fails unless the
/// representatives hit every coset exactly once.
pub fn left_cosets_with_representatives(k: &Subgroup, reps: &[usize]) -> Result<Vec<Coset>> {
    let group = k.group();
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut cosets = Vec::with_capacity(reps.len());
    for (pos, &rep) in reps.iter().enumerate() {
        if rep >= group.order() {
            return Err(Error::LabelOutOfRange {
                label: rep,
                size: group.order(),
            });
        }
        let coset = Coset::of(rep, k);
        if let Some(&prev) = owner.get(&coset.members()[0]) {
            return Err(Error::Malformed(format!(
                "representatives {} and {} lie in the same coset",
                group.describe(reps[prev]),
                group.describe(rep)
            )));
        }
        owner.insert(coset.members()[0], pos);
        cosets.push(coset);
    }
    if cosets.len() * k.order() != group.order() {
        return Err(Error::Malformed(format!(
            "{} representatives do not cover all {} cosets",
            cosets.len(),
            k.index_in_parent()
        )));
    }
    Ok(cosets)
}

/// `Stab_{j0} = { g ∈ S_N : g(j0) = j0 }`.
pub fn stabilizer_subgroup(n: usize, j0: usize) -> Result<Subgroup> {
    let group = Group::symmetric(n)?;
    if j0 >= n {
        return Err(Error::LabelOutOfRange { label: j0, size: n });
    }
    let indices = (0..group.order())
        .filter(|&i| Permutation::unrank(n, i).apply(j0) == j0)
        .collect();
    Ok(Subgroup::new_unchecked(group, indices))
}

/// The transpositions `(0 j0), (1 j0), …, (N−1 j0)`, one per left coset of `Stab_{j0}`.
pub fn stabilizer_coset_representatives(n: usize, j0: usize) -> Result<Vec<Permutation>> {
    (0..n)
        .map(|j| Permutation::transposition(j, j0, n))
        .collect()
}

/// `∩_{g} g K g⁻¹`, the largest normal subgroup of the parent contained in `K`.
pub fn normal_core(k: &Subgroup) -> Subgroup {
    // Conjugation by g and by gk agree, so one representative per left coset suffices.
    left_cosets(k).iter().fold(k.clone(), |core, c| {
        core.intersection(&k.conjugate_by(c.representative()))
    })
}

/// First `g` in canonical order with `g K1 g⁻¹ = K2`, if any.
pub fn are_conjugate(k1: &Subgroup, k2: &Subgroup) -> Result<Option<usize>> {
    k1.check_same_group(k2)?;
    if k1.order() != k2.order() {
        return Ok(None);
    }
    Ok((0..k1.group().order()).find(|&g| k1.conjugate_by(g) == *k2))
}
