//! Hidden subgroup problem instances, verification of hidden structure, and
//! pushing an oracle along an epimorphism/transversal pair.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{
    left_cosets, stabilizer_subgroup, Coset, Element, Group, Permutation, Subgroup,
};
use crate::shor::{choose_q, gcd, multiplicative_order, pow_mod};

/// A map `φ: G → S` stored as a dense table over canonical element indices,
/// with `S = {0, …, target_size − 1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInstance", into = "RawInstance")]
pub struct HspInstance {
    group: Group,
    target_size: usize,
    oracle: Vec<usize>,
    hidden: Option<Subgroup>,
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    group: Group,
    oracle: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hidden: Option<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target_size: Option<usize>,
}

impl TryFrom<RawInstance> for HspInstance {
    type Error = Error;

    fn try_from(raw: RawInstance) -> Result<Self> {
        let group = raw.group.validated()?;
        let target_size = raw
            .target_size
            .unwrap_or_else(|| raw.oracle.iter().max().map_or(1, |m| m + 1));
        let hidden = raw
            .hidden
            .map(|els| Subgroup::from_elements(group, &els))
            .transpose()?;
        Self::new(group, target_size, raw.oracle, hidden)
    }
}

impl From<HspInstance> for RawInstance {
    fn from(inst: HspInstance) -> Self {
        RawInstance {
            group: inst.group,
            hidden: inst.hidden.as_ref().map(Subgroup::elements),
            target_size: Some(inst.target_size),
            oracle: inst.oracle,
        }
    }
}

impl HspInstance {
    pub fn new(
        group: Group,
        target_size: usize,
        oracle: Vec<usize>,
        hidden: Option<Subgroup>,
    ) -> Result<Self> {
        if oracle.len() != group.order() {
            return Err(Error::SizeMismatch {
                expected: group.order(),
                got: oracle.len(),
            });
        }
        if let Some((index, &value)) = oracle.iter().enumerate().find(|(_, &v)| v >= target_size) {
            return Err(Error::OracleOutOfRange {
                index,
                value,
                target_size,
            });
        }
        if let Some(k) = &hidden {
            if k.group() != group {
                return Err(Error::Malformed(format!(
                    "hidden subgroup of {} given for {}",
                    k.group(),
                    group
                )));
            }
        }
        Ok(Self {
            group,
            target_size,
            oracle,
            hidden,
        })
    }

    /// `φ ≡ 0`, whose hidden subgroup is the whole group.
    pub fn constant(group: Group) -> Self {
        Self {
            group,
            target_size: 1,
            oracle: vec![0; group.order()],
            hidden: Some(Subgroup::whole(group)),
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn oracle(&self) -> &[usize] {
        &self.oracle
    }

    pub fn value(&self, idx: usize) -> usize {
        self.oracle[idx]
    }

    pub fn claimed_hidden(&self) -> Option<&Subgroup> {
        self.hidden.as_ref()
    }

    /// `s0 = φ(1)`.
    pub fn s0(&self) -> usize {
        self.oracle[self.group.identity()]
    }

    pub fn distinct_values(&self) -> usize {
        let mut seen = vec![false; self.target_size];
        self.oracle
            .iter()
            .filter(|&&v| !std::mem::replace(&mut seen[v], true))
            .count()
    }
}

/// Factorization `φ = ι ∘ ν` through the left coset space `G/K`.
#[derive(Clone, Debug)]
pub struct HiddenStructure {
    subgroup: Subgroup,
    cosets: Vec<Coset>,
    injection: Vec<usize>,
}

impl HiddenStructure {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// `ι(cosets[i])`.
    pub fn injection(&self) -> &[usize] {
        &self.injection
    }

    /// `ι` evaluated on the coset containing `idx`.
    pub fn value_on_coset_of(&self, idx: usize) -> Option<usize> {
        self.cosets
            .iter()
            .position(|c| c.contains(idx))
            .map(|i| self.injection[i])
    }
}

/// Checks that `φ` is constant on every left coset `gK` and distinct across cosets.
pub fn verify_hidden_structure(inst: &HspInstance, k: &Subgroup) -> Result<HiddenStructure> {
    if k.group() != inst.group {
        return Err(Error::Malformed(format!(
            "subgroup of {} checked against {}",
            k.group(),
            inst.group
        )));
    }
    let group = inst.group;
    let cosets = left_cosets(k);
    let mut injection = Vec::with_capacity(cosets.len());
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (ci, coset) in cosets.iter().enumerate() {
        let rep = coset.representative();
        let value = inst.value(rep);
        if let Some(&g2) = coset.members().iter().find(|&&g| inst.value(g) != value) {
            return Err(Error::NotConstantOnCoset {
                g1: group.describe(rep),
                g2: group.describe(g2),
            });
        }
        if let Some(&prev) = owner.get(&value) {
            return Err(Error::NotInjectiveAcrossCosets {
                c1: group.describe(cosets[prev].representative()),
                c2: group.describe(rep),
            });
        }
        owner.insert(value, ci);
        injection.push(value);
    }
    Ok(HiddenStructure {
        subgroup: k.clone(),
        cosets,
        injection,
    })
}

/// Domain of the un-pushed oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushSource {
    Finite(Group),
    /// The infinite cyclic group `Z`, never materialized.
    Integers,
}

/// Epimorphism `μ: G → G̃` together with a transversal `τ: G̃ → G`, `μ ∘ τ = id`.
///
/// `G̃` is the index set `{0, …, quotient_size − 1}`; it carries group
/// structure only when `quotient_group` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct PushSpec {
    source: PushSource,
    quotient_size: usize,
    quotient_group: Option<Group>,
    /// Canonical element indices for finite sources, integers for `Z`.
    transversal: Vec<i64>,
    /// Table of `μ` for finite sources; `μ(x) = x mod quotient_size` on `Z`.
    epimorphism: Option<Vec<usize>>,
}

impl PushSpec {
    pub fn finite(
        source: Group,
        quotient_group: Option<Group>,
        transversal: Vec<usize>,
        epimorphism: Vec<usize>,
    ) -> Result<Self> {
        if epimorphism.len() != source.order() {
            return Err(Error::SizeMismatch {
                expected: source.order(),
                got: epimorphism.len(),
            });
        }
        let quotient_size = transversal.len();
        if let Some(q) = quotient_group {
            if q.order() != quotient_size {
                return Err(Error::SizeMismatch {
                    expected: q.order(),
                    got: quotient_size,
                });
            }
        }
        for (x, &t) in transversal.iter().enumerate() {
            if t >= source.order() || epimorphism[t] != x {
                return Err(Error::NotASection(x));
            }
        }
        if let Some(&bad) = epimorphism.iter().find(|&&m| m >= quotient_size) {
            return Err(Error::LabelOutOfRange {
                label: bad,
                size: quotient_size,
            });
        }
        Ok(Self {
            source: PushSource::Finite(source),
            quotient_size,
            quotient_group,
            transversal: transversal.into_iter().map(|t| t as i64).collect(),
            epimorphism: Some(epimorphism),
        })
    }

    /// `μ = τ = id`.
    pub fn identity(group: Group) -> Self {
        let ids: Vec<usize> = (0..group.order()).collect();
        Self::finite(group, Some(group), ids.clone(), ids).expect("identity is a section")
    }

    /// `Z → Z_Q` with an arbitrary integer transversal.
    pub fn integers(q: usize, transversal: Vec<i64>) -> Result<Self> {
        let quotient_group = Group::cyclic(q)?;
        if transversal.len() != q {
            return Err(Error::SizeMismatch {
                expected: q,
                got: transversal.len(),
            });
        }
        for (x, &t) in transversal.iter().enumerate() {
            if t.rem_euclid(q as i64) as usize != x {
                return Err(Error::NotASection(x));
            }
        }
        Ok(Self {
            source: PushSource::Integers,
            quotient_size: q,
            quotient_group: Some(quotient_group),
            transversal,
            epimorphism: None,
        })
    }

    /// `Z → Z_Q` with `τ: m mod Q ↦ m`, `0 ≤ m < Q`.
    pub fn integers_mod(q: usize) -> Result<Self> {
        Self::integers(q, (0..q as i64).collect())
    }

    /// `S_N → S_N/Stab_0` with `μ(g) = g(0)` (the coset `gStab_0` is determined by
    /// where `g` sends 0) and `τ(j) = (0 j)`.
    pub fn stabilizer_quotient(n: usize) -> Result<Self> {
        let group = Group::symmetric(n)?;
        let epimorphism = (0..group.order())
            .map(|i| Permutation::unrank(n, i).apply(0))
            .collect();
        let transversal = (0..n)
            .map(|j| Permutation::transposition(0, j, n).map(|t| t.rank()))
            .collect::<Result<Vec<_>>>()?;
        Self::finite(group, None, transversal, epimorphism)
    }

    pub fn source(&self) -> PushSource {
        self.source
    }

    pub fn quotient_size(&self) -> usize {
        self.quotient_size
    }

    pub fn quotient_group(&self) -> Option<Group> {
        self.quotient_group
    }

    pub fn transversal(&self) -> &[i64] {
        &self.transversal
    }

    /// `μ(x)` for a source element given by index (finite) or integer value (`Z`).
    pub fn project(&self, x: i64) -> usize {
        match &self.epimorphism {
            Some(table) => table[x as usize],
            None => x.rem_euclid(self.quotient_size as i64) as usize,
        }
    }
}

/// `φ̃ = φ ∘ τ` as a total table on `G̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushedOracle {
    pub quotient_group: Option<Group>,
    pub target_size: usize,
    pub values: Vec<usize>,
}

impl PushedOracle {
    /// Reinterprets the push as an instance on `G̃`; requires `G̃` to be a group.
    pub fn into_instance(self, hidden: Option<Subgroup>) -> Result<HspInstance> {
        let group = self.quotient_group.ok_or_else(|| {
            Error::UnsupportedGroup("pushed domain is a coset space, not a group".into())
        })?;
        HspInstance::new(group, self.target_size, self.values, hidden)
    }
}

pub fn push(inst: &HspInstance, spec: &PushSpec) -> Result<PushedOracle> {
    if spec.source != PushSource::Finite(inst.group) {
        return Err(Error::Malformed(format!(
            "push spec source does not match {}",
            inst.group
        )));
    }
    let values = spec
        .transversal
        .iter()
        .map(|&t| inst.value(t as usize))
        .collect();
    Ok(PushedOracle {
        quotient_group: spec.quotient_group,
        target_size: inst.target_size,
        values,
    })
}

/// Push of an oracle defined on `Z`, given as a function.
pub fn push_integer_oracle(
    phi: impl Fn(i64) -> usize,
    target_size: usize,
    spec: &PushSpec,
) -> Result<PushedOracle> {
    if spec.source != PushSource::Integers {
        return Err(Error::Malformed("push spec source is not Z".into()));
    }
    let values: Vec<usize> = spec.transversal.iter().map(|&m| phi(m)).collect();
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v >= target_size) {
        return Err(Error::OracleOutOfRange {
            index,
            value,
            target_size,
        });
    }
    Ok(PushedOracle {
        quotient_group: spec.quotient_group,
        target_size,
        values,
    })
}

/// Shor's oracle: `m ↦ a^m mod N` on `Z` pushed to `Z_Q` along `τ: m mod Q ↦ m`.
///
/// The hidden subgroup `PZ_Q` is attached only when the order `P` divides `Q`;
/// otherwise the pushed map has no exact hidden subgroup structure.
pub fn shor_hsp(n: u64, a: u64) -> Result<HspInstance> {
    if n < 3 {
        return Err(Error::InvalidModulus {
            n,
            reason: "must be at least 3",
        });
    }
    if gcd(a, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let q = choose_q(n);
    if q > crate::groups::MAX_CYCLIC_ORDER as u64 {
        return Err(Error::TooLarge {
            what: "Q",
            size: q as usize,
            cap: crate::groups::MAX_CYCLIC_ORDER,
        });
    }
    let q = q as usize;
    let spec = PushSpec::integers_mod(q)?;
    let pushed = push_integer_oracle(|m| pow_mod(a, m as u64, n) as usize, n as usize, &spec)?;
    let period = multiplicative_order(a, n)? as usize;
    let group = Group::Cyclic { n: q };
    let hidden = q
        .is_multiple_of(period)
        .then(|| Subgroup::new_unchecked(group, (0..q).step_by(period).collect()));
    pushed.into_instance(hidden)
}

/// Grover's HSP on `S_N`: `φ(g) = g(j0)`, the label `j` with `g ∈ (j j0)Stab_{j0}`.
pub fn grover_hsp(n: usize, j0: usize) -> Result<HspInstance> {
    let stab = stabilizer_subgroup(n, j0)?;
    let group = stab.group();
    let oracle = (0..group.order())
        .map(|i| Permutation::unrank(n, i).apply(j0))
        .collect();
    HspInstance::new(group, n, oracle, Some(stab))
}

/// `φ̃ = φ ∘ τ` for Grover's HSP pushed along `S_N → S_N/Stab_0`, `τ(j) = (0 j)`,
/// i.e. `φ̃(j) = (0 j)(j0)`. Evaluated pointwise, so `S_N` is never enumerated.
pub fn push_grover_oracle(n: usize, j0: usize) -> Result<Vec<usize>> {
    if j0 >= n {
        return Err(Error::LabelOutOfRange { label: j0, size: n });
    }
    let swap = |j: usize| match j0 {
        0 => j,
        x if x == j => 0,
        x => x,
    };
    Ok((0..n).map(swap).collect())
}

/// Grover's search oracle `f(j) = [j = j0]` on `{0, …, N−1}`.
pub fn grover_search_oracle(n: usize, j0: usize) -> Result<Vec<usize>> {
    if j0 >= n {
        return Err(Error::LabelOutOfRange { label: j0, size: n });
    }
    Ok((0..n).map(|j| usize::from(j == j0)).collect())
}

/// Partition of the domain into fibers of `values`, each fiber sorted, fibers
/// ordered by their smallest element.
pub fn fibers(values: &[usize]) -> Vec<Vec<usize>> {
    let mut by_value: HashMap<usize, Vec<usize>> = HashMap::new();
    for (x, &v) in values.iter().enumerate() {
        by_value.entry(v).or_default().push(x);
    }
    let mut out: Vec<Vec<usize>> = by_value.into_values().collect();
    out.sort();
    out
}

/// Whether two oracles on the same domain induce the same fibers.
pub fn informationally_equivalent(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && fibers(a) == fibers(b)
}
