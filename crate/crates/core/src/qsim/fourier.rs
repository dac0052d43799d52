use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::LabelLayout;
use crate::error::Result;
use crate::groups::Group;
use crate::linalg::Matrix;
use crate::repr::{complete_irrep_set, Irrep};
use crate::scalar::Real;

/// Fourier basis label `γ_ij`: an index into the complete irrep set plus a
/// matrix position, both 0-based here (serialized forms are 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FourierLabel {
    pub irrep: usize,
    pub row: usize,
    pub col: usize,
}

/// A complete irrep set together with the canonical enumeration of its labels.
#[derive(Clone, Debug)]
pub struct FourierBasis<T: Real> {
    layout: LabelLayout,
    irreps: Vec<Irrep<T>>,
}

impl<T: Real> FourierBasis<T> {
    pub fn new(group: Group) -> Result<Self> {
        let layout = LabelLayout::new(group)?;
        let irreps = complete_irrep_set(group)?;
        debug_assert_eq!(irreps.len(), layout.num_irreps());
        Ok(Self { layout, irreps })
    }

    pub fn group(&self) -> Group {
        self.layout.group()
    }

    pub fn layout(&self) -> &LabelLayout {
        &self.layout
    }

    pub fn irreps(&self) -> &[Irrep<T>] {
        &self.irreps
    }

    pub fn labels(&self) -> Vec<FourierLabel> {
        self.layout.labels().collect()
    }

    pub fn position(&self, label: FourierLabel) -> usize {
        self.layout.position(label)
    }

    /// Position of the trivial label `1̂` (always the first irrep's only entry).
    pub fn trivial_position(&self) -> usize {
        debug_assert!(self.irreps[0].is_trivial());
        0
    }

    /// `F_G`: row `(γ,i,j)`, column `g`, entry `sqrt(|γ|/|G|) · γ(g)_{ij}`.
    pub fn matrix(&self) -> Matrix<T> {
        let order = self.group().order();
        let mut m = Matrix::zeros(order, order);
        for (k, gamma) in self.irreps.iter().enumerate() {
            let d = gamma.degree();
            let scale = Complex::new(
                (T::from_usize_lossy(d) / T::from_usize_lossy(order)).sqrt(),
                T::zero(),
            );
            let offset = self.layout.offset(k);
            for g in 0..order {
                let value = gamma.evaluate_index(g);
                for i in 0..d {
                    for j in 0..d {
                        m[(offset + i * d + j, g)] = value[(i, j)] * scale;
                    }
                }
            }
        }
        m
    }
}

/// The unitary group Fourier transform of `group`, rows in [`FourierBasis`] label order.
pub fn group_fourier_matrix<T: Real>(group: Group) -> Result<Matrix<T>> {
    Ok(FourierBasis::<T>::new(group)?.matrix())
}
