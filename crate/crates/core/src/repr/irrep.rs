use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex;
use serde::Serialize;

use super::partition::{partitions, Partition};
use super::tableau::{standard_tableaux, StandardTableau};
use crate::error::{Error, Result};
use crate::groups::{Element, Group, Permutation};
use crate::linalg::Matrix;
use crate::scalar::{root_of_unity, Real};

/// Largest `N` for which a complete irrep set of `S_N` is built.
pub const MAX_IRREP_DEGREE_N: usize = 6;

/// Groups up to this order get their evaluation table memoized.
const MEMO_LIMIT: usize = 720;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum IrrepLabel {
    Partition(Partition),
    Frequency(usize),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Partition(p) => write!(f, "{p}"),
            IrrepLabel::Frequency(y) => write!(f, "{y}"),
        }
    }
}

#[derive(Clone, Debug)]
enum Model<T> {
    /// `m ↦ exp(2πi·m·y/Q)`.
    Character { modulus: usize, frequency: usize },
    /// Young's orthogonal form; `generators[k]` represents the adjacent transposition `(k k+1)`.
    Young {
        tableaux: Vec<StandardTableau>,
        generators: Vec<Matrix<T>>,
    },
}

/// Irreducible unitary representation of `Z_Q` or `S_N`.
#[derive(Debug)]
pub struct Irrep<T: Real> {
    label: IrrepLabel,
    group: Group,
    degree: usize,
    model: Model<T>,
    /// Entrywise conjugate of the underlying model, i.e. `g ↦ γ(g⁻¹)ᵀ`.
    conjugated: bool,
    table: OnceLock<Vec<Matrix<T>>>,
}

impl<T: Real> Clone for Irrep<T> {
    fn clone(&self) -> Self {
        Self {
            label: self.label.clone(),
            group: self.group,
            degree: self.degree,
            model: self.model.clone(),
            conjugated: self.conjugated,
            table: self.table.clone(),
        }
    }
}

impl<T: Real> PartialEq for Irrep<T> {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
            && self.group == other.group
            && self.conjugated == other.conjugated
    }
}

impl<T: Real> Irrep<T> {
    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_contragredient(&self) -> bool {
        self.conjugated
    }

    /// Basis tableaux for Young irreps, in the order used for matrix rows and columns.
    pub fn tableaux(&self) -> Option<&[StandardTableau]> {
        match &self.model {
            Model::Young { tableaux, .. } => Some(tableaux),
            Model::Character { .. } => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match &self.label {
            IrrepLabel::Partition(p) => p.is_trivial(),
            IrrepLabel::Frequency(y) => *y == 0,
        }
    }

    pub fn evaluate(&self, g: &Element) -> Result<Matrix<T>> {
        let idx = self.group.index_of(g)?;
        Ok(self.evaluate_index(idx))
    }

    pub fn evaluate_permutation(&self, g: &Permutation) -> Result<Matrix<T>> {
        self.evaluate(&Element::Perm(g.clone()))
    }

    /// `γ(g)` for the element with canonical index `idx`, memoized for small groups.
    pub fn evaluate_index(&self, idx: usize) -> Matrix<T> {
        if self.group.order() <= MEMO_LIMIT {
            self.table()[idx].clone()
        } else {
            self.compute(idx)
        }
    }

    /// `γ(g)` for every element in canonical order.
    pub fn table(&self) -> &[Matrix<T>] {
        self.table
            .get_or_init(|| (0..self.group.order()).map(|i| self.compute(i)).collect())
    }

    /// `γ(g)†`, the matrix whose trace pairing defines the Fourier coefficients.
    pub fn adjoint_at(&self, idx: usize) -> Matrix<T> {
        self.evaluate_index(idx).adjoint()
    }

    fn compute(&self, idx: usize) -> Matrix<T> {
        let m = match (&self.model, self.group) {
            (Model::Character { modulus, frequency }, _) => Matrix::scalar(root_of_unity(
                (idx as u64) * (*frequency as u64),
                *modulus as u64,
            )),
            (Model::Young { generators, .. }, Group::Symmetric { n }) => {
                // g = s_{bm} ⋯ s_{b1} for the bubble-sort swaps b1..bm
                let g = Permutation::unrank(n, idx);
                g.bubble_sort_swaps()
                    .into_iter()
                    .fold(Matrix::identity(self.degree), |acc, k| {
                        generators[k].matmul(&acc)
                    })
            }
            (Model::Young { .. }, Group::Cyclic { .. }) => {
                unreachable!("Young model on a cyclic group")
            }
        };
        if self.conjugated {
            m.conj()
        } else {
            m
        }
    }

    /// `γ†(g) = γ(g⁻¹)ᵀ`, which equals the entrywise conjugate of `γ(g)` for unitary `γ`.
    pub fn contragredient(&self) -> Self {
        match self.model {
            Model::Character { modulus, frequency } => {
                let dual = (modulus - frequency) % modulus;
                character(modulus, dual)
            }
            Model::Young { .. } => Self {
                label: self.label.clone(),
                group: self.group,
                degree: self.degree,
                model: self.model.clone(),
                conjugated: !self.conjugated,
                table: OnceLock::new(),
            },
        }
    }

    /// Character value `tr γ(g)`.
    pub fn character_at(&self, idx: usize) -> Complex<T> {
        self.evaluate_index(idx).trace()
    }

    pub fn export(&self) -> IrrepTable {
        let entries = (0..self.group.order())
            .map(|idx| {
                let m = self.evaluate_index(idx);
                let matrix = (0..m.rows())
                    .map(|r| {
                        m.row(r)
                            .iter()
                            .map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()])
                            .collect()
                    })
                    .collect();
                IrrepTableEntry {
                    element: self.group.element(idx),
                    matrix,
                }
            })
            .collect();
        IrrepTable {
            label: self.label.clone(),
            degree: self.degree,
            entries,
        }
    }
}

/// JSON form of an irrep: every group element with its matrix as `[re, im]` pairs.
#[derive(Clone, Debug, Serialize)]
pub struct IrrepTable {
    pub label: IrrepLabel,
    pub degree: usize,
    pub entries: Vec<IrrepTableEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrepTableEntry {
    pub element: Element,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

fn character<T: Real>(modulus: usize, frequency: usize) -> Irrep<T> {
    Irrep {
        label: IrrepLabel::Frequency(frequency),
        group: Group::Cyclic { n: modulus },
        degree: 1,
        model: Model::Character { modulus, frequency },
        conjugated: false,
        table: OnceLock::new(),
    }
}

/// Young's orthogonal form matrix of the adjacent transposition swapping
/// entries `k+1` and `k+2` (0-based symbols `k`, `k+1`).
fn yor_generator<T: Real>(tableaux: &[StandardTableau], k: usize) -> Matrix<T> {
    let d = tableaux.len();
    let (a, b) = (k + 1, k + 2);
    let mut m = Matrix::zeros(d, d);
    for (col, t) in tableaux.iter().enumerate() {
        // axial distance from a to b
        let r = (t.content(b) - t.content(a)) as f64;
        m[(col, col)] = Complex::new(T::from_f64_lossy(1.0 / r), T::zero());
        if r.abs() > 1.0 {
            let swapped = t
                .swap_entries(a, b)
                .expect("swap of non-adjacent cells is standard");
            let row = tableaux
                .iter()
                .position(|u| *u == swapped)
                .expect("swapped tableau in basis");
            m[(row, col)] =
                Complex::new(T::from_f64_lossy((1.0 - 1.0 / (r * r)).sqrt()), T::zero());
        }
    }
    m
}

/// The irrep of `S_N` labelled by `lambda`, in Young's orthogonal form over the
/// last-letter-ordered standard tableaux.
pub fn yor_irrep<T: Real>(lambda: &Partition) -> Result<Irrep<T>> {
    let n = lambda.size();
    let group = Group::symmetric(n)?;
    let tableaux = standard_tableaux(lambda);
    let generators = (0..n.saturating_sub(1))
        .map(|k| yor_generator(&tableaux, k))
        .collect();
    Ok(Irrep {
        label: IrrepLabel::Partition(lambda.clone()),
        group,
        degree: tableaux.len(),
        model: Model::Young {
            tableaux,
            generators,
        },
        conjugated: false,
        table: OnceLock::new(),
    })
}

/// The `Q` characters `γ_y : m ↦ exp(2πi·m·y/Q)`, indexed by `y`.
pub fn cyclic_irreps<T: Real>(q: usize) -> Result<Vec<Irrep<T>>> {
    Group::cyclic(q)?;
    Ok((0..q).map(|y| character(q, y)).collect())
}

pub fn contragredient<T: Real>(gamma: &Irrep<T>) -> Irrep<T> {
    gamma.contragredient()
}

/// A complete set of pairwise inequivalent irreps: all characters of `Z_Q`, or
/// one Young irrep per partition of `N` (reverse-lexicographic order) for `S_N`.
pub fn complete_irrep_set<T: Real>(group: Group) -> Result<Vec<Irrep<T>>> {
    match group.validated()? {
        Group::Cyclic { n } => cyclic_irreps(n),
        Group::Symmetric { n } if n <= MAX_IRREP_DEGREE_N => {
            partitions(n).iter().map(yor_irrep).collect()
        }
        Group::Symmetric { n } => Err(Error::TooLarge {
            what: "irrep set for S_N, N",
            size: n,
            cap: MAX_IRREP_DEGREE_N,
        }),
    }
}
