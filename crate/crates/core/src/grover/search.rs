use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qsim::inverse_cdf;
use crate::scalar::Real;

/// State of the `n`-qubit register during Grover's iteration. Amplitudes are
/// stored as complex numbers even though the dynamics keep them real.
#[derive(Clone, Debug, PartialEq)]
pub struct GroverState<T> {
    amplitudes: Vec<Complex<T>>,
    iteration: usize,
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(())
}

impl<T: Real> GroverState<T> {
    /// `H|0⟩ = (1/√N) Σ_j |j⟩`.
    pub fn uniform(n: usize) -> Result<Self> {
        check_dimension(n)?;
        let amp = Complex::new(T::one() / T::from_usize_lossy(n).sqrt(), T::zero());
        Ok(Self {
            amplitudes: vec![amp; n],
            iteration: 0,
        })
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_dimension(amplitudes.len())?;
        Ok(Self {
            amplitudes,
            iteration: 0,
        })
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn probability(&self, j: usize) -> T {
        self.amplitudes[j].norm_sqr()
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |a, z| a + z.norm_sqr())
    }

    pub fn max_imag(&self) -> T {
        self.amplitudes
            .iter()
            .map(|z| z.im.abs())
            .fold(T::zero(), T::max)
    }

    /// `I_{|j⟩} = I − 2|j⟩⟨j|`.
    pub fn reflect_about(&mut self, j: usize) {
        self.amplitudes[j] = -self.amplitudes[j];
    }

    /// `H^{⊗n}` as an in-place Walsh-Hadamard transform.
    pub fn hadamard(&mut self) {
        let n = self.amplitudes.len();
        let scale = T::FRAC_1_SQRT_2();
        let mut half = 1;
        while half < n {
            for block in (0..n).step_by(2 * half) {
                for i in block..block + half {
                    let (a, b) = (self.amplitudes[i], self.amplitudes[i + half]);
                    self.amplitudes[i] = (a + b).scale(scale);
                    self.amplitudes[i + half] = (a - b).scale(scale);
                }
            }
            half *= 2;
        }
    }

    /// One application of `Q = −H I_{|0⟩} H I_{|j0⟩}`.
    pub fn grover_step(&mut self, j0: usize) {
        self.reflect_about(j0);
        self.hadamard();
        self.reflect_about(0);
        self.hadamard();
        for z in &mut self.amplitudes {
            *z = -*z;
        }
        self.iteration += 1;
    }

    /// Norm of the component orthogonal to `span{|j0⟩, H|0⟩}`.
    pub fn residual_outside_plane(&self, j0: usize) -> T {
        let n = self.dimension();
        // Orthonormal basis of the plane: |j0⟩ and the uniform state over j ≠ j0.
        let rest = T::one() / T::from_usize_lossy(n - 1).sqrt();
        let overlap = self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != j0)
            .fold(Complex::<T>::zero(), |acc, (_, z)| acc + z.scale(rest));
        let mut residual = T::zero();
        for (j, z) in self.amplitudes.iter().enumerate() {
            if j != j0 {
                residual = residual + (*z - overlap.scale(rest)).norm_sqr();
            }
        }
        residual.sqrt()
    }
}

/// Applies `I_{|j0⟩}` to `v`.
pub fn grover_oracle_reflection<T: Real>(
    n: usize,
    j0: usize,
    v: &[Complex<T>],
) -> Result<Vec<Complex<T>>> {
    check_dimension(n)?;
    if v.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: v.len(),
        });
    }
    if j0 >= n {
        return Err(Error::LabelOutOfRange { label: j0, size: n });
    }
    let mut out = v.to_vec();
    out[j0] = -out[j0];
    Ok(out)
}

/// `⌊π / (4·arcsin(1/√N))⌋`.
///
/// At `N = 2` the ratio is exactly 1 but evaluates to `1 − ε` in floating
/// point, so the floor is taken after a `1e−9` nudge; no other `N = 2^n`
/// lands within that distance of an integer.
pub fn grover_iteration_count(n: usize) -> usize {
    let theta = (1.0 / (n as f64).sqrt()).asin();
    (std::f64::consts::PI / (4.0 * theta) + 1e-9).floor() as usize
}

/// `⌊(π/4)·√N⌋`, the usual approximation of the iteration count.
pub fn approximate_iteration_count(n: usize) -> usize {
    (std::f64::consts::FRAC_PI_4 * (n as f64).sqrt()).floor() as usize
}

/// `sin²((2K+1)·θ)`, `θ = arcsin(1/√N)`.
pub fn closed_form_success<T: Real>(n: usize, iterations: usize) -> T {
    let theta = (T::one() / T::from_usize_lossy(n).sqrt()).asin();
    let s = (T::from_usize_lossy(2 * iterations + 1) * theta).sin();
    s * s
}

#[derive(Clone, Debug)]
pub struct GroverOutcome<T> {
    pub state: GroverState<T>,
    pub iterations: usize,
    pub success_probability: T,
    pub closed_form: T,
}

/// Runs the iteration `K = grover_iteration_count(N)` times from `H|0⟩`.
pub fn grover_run<T: Real>(n: usize, j0: usize) -> Result<GroverOutcome<T>> {
    let mut state = GroverState::<T>::uniform(n)?;
    if j0 >= n {
        return Err(Error::LabelOutOfRange { label: j0, size: n });
    }
    let iterations = grover_iteration_count(n);
    for _ in 0..iterations {
        state.grover_step(j0);
    }
    let success_probability = state.probability(j0);
    Ok(GroverOutcome {
        state,
        iterations,
        success_probability,
        closed_form: closed_form_success(n, iterations),
    })
}

/// Measures the final state of [`grover_run`] in the standard basis.
pub fn grover_classical_sample(n: usize, j0: usize, seed: u64) -> Result<usize> {
    Ok(grover_sample_many(n, j0, seed, 1)?[0])
}

/// `shots` independent measurements of the final Grover state from one seeded stream.
pub fn grover_sample_many(n: usize, j0: usize, seed: u64, shots: usize) -> Result<Vec<usize>> {
    let outcome = grover_run::<f64>(n, j0)?;
    let probs: Vec<f64> = (0..n).map(|j| outcome.state.probability(j)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..shots)
        .map(|_| inverse_cdf(&probs, rng.gen::<f64>()))
        .collect())
}
