use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hsp::HspInstance;
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Pure state of `H_G ⊗ H_S`, row-major in `(left index, target label)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteState<T> {
    left_dim: usize,
    target_dim: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> BipartiteState<T> {
    /// `|left⟩|target⟩`.
    pub fn basis(left_dim: usize, target_dim: usize, left: usize, target: usize) -> Result<Self> {
        if left >= left_dim {
            return Err(Error::LabelOutOfRange {
                label: left,
                size: left_dim,
            });
        }
        if target >= target_dim {
            return Err(Error::LabelOutOfRange {
                label: target,
                size: target_dim,
            });
        }
        let mut amplitudes = vec![Complex::zero(); left_dim * target_dim];
        amplitudes[left * target_dim + target] = Complex::new(T::one(), T::zero());
        Ok(Self {
            left_dim,
            target_dim,
            amplitudes,
        })
    }

    /// `(1/√|G|) Σ_g |g⟩|s⟩`.
    pub fn uniform(left_dim: usize, target_dim: usize, s: usize) -> Result<Self> {
        if s >= target_dim {
            return Err(Error::LabelOutOfRange {
                label: s,
                size: target_dim,
            });
        }
        let amp = Complex::new(T::one() / T::from_usize_lossy(left_dim).sqrt(), T::zero());
        let mut amplitudes = vec![Complex::zero(); left_dim * target_dim];
        for g in 0..left_dim {
            amplitudes[g * target_dim + s] = amp;
        }
        Ok(Self {
            left_dim,
            target_dim,
            amplitudes,
        })
    }

    pub fn from_amplitudes(
        left_dim: usize,
        target_dim: usize,
        amplitudes: Vec<Complex<T>>,
    ) -> Result<Self> {
        if amplitudes.len() != left_dim * target_dim {
            return Err(Error::SizeMismatch {
                expected: left_dim * target_dim,
                got: amplitudes.len(),
            });
        }
        Ok(Self {
            left_dim,
            target_dim,
            amplitudes,
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.left_dim, self.target_dim)
    }

    pub fn amplitude(&self, left: usize, target: usize) -> Complex<T> {
        self.amplitudes[left * self.target_dim + target]
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    /// Applies `m ⊗ I` to the state.
    pub fn apply_left(&self, m: &Matrix<T>) -> Result<Self> {
        if m.cols() != self.left_dim {
            return Err(Error::SizeMismatch {
                expected: self.left_dim,
                got: m.cols(),
            });
        }
        let t = self.target_dim;
        let mut out = vec![Complex::zero(); m.rows() * t];
        for r in 0..m.rows() {
            let dst = &mut out[r * t..(r + 1) * t];
            for (c, coeff) in m.row(r).iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (o, a) in dst.iter_mut().zip(&self.amplitudes[c * t..(c + 1) * t]) {
                    *o = *o + *coeff * *a;
                }
            }
        }
        Ok(Self {
            left_dim: m.rows(),
            target_dim: t,
            amplitudes: out,
        })
    }

    /// Born probabilities of measuring the left register.
    pub fn left_probabilities(&self) -> Vec<T> {
        self.amplitudes
            .chunks(self.target_dim)
            .map(|block| block.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()))
            .collect()
    }
}

/// `U_φ`: on the block of each `g`, the permutation of `S` exchanging `s0` and
/// `φ(g)` and fixing every other label, so `|g⟩|s0⟩ ↦ |g⟩|φ(g)⟩`.
pub fn apply_oracle<T: Real>(
    state: &BipartiteState<T>,
    inst: &HspInstance,
) -> Result<BipartiteState<T>> {
    let (left, target) = state.dims();
    if left != inst.group().order() {
        return Err(Error::SizeMismatch {
            expected: inst.group().order(),
            got: left,
        });
    }
    if target != inst.target_size() {
        return Err(Error::SizeMismatch {
            expected: inst.target_size(),
            got: target,
        });
    }
    let s0 = inst.s0();
    let mut amplitudes = state.amplitudes().to_vec();
    for g in 0..left {
        let image = inst.value(g);
        if image != s0 {
            amplitudes.swap(g * target + s0, g * target + image);
        }
    }
    BipartiteState::from_amplitudes(left, target, amplitudes)
}
