use std::any::{Any, TypeId};
use std::cell::RefCell;
use std::collections::HashMap;
use std::io::Write;
use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::{Fft, FftPlanner};
use serde::Serialize;

use super::state::{apply_oracle, BipartiteState};
use super::{FourierBasis, FourierLabel, LabelLayout, LabelName};
use crate::error::{Error, Result};
use crate::groups::Group;
use crate::hsp::HspInstance;
use crate::repr::{yor_irrep, IrrepLabel, Partition};
use crate::scalar::{root_of_unity, Real};

/// Largest group order for which the dense unitary route is built.
pub const MAX_DENSE_ORDER: usize = 1024;

/// Exact distribution of the label `γ_ij` returned by QRand.
#[derive(Clone, Debug, PartialEq)]
pub struct OutcomeDistribution<T> {
    layout: LabelLayout,
    probabilities: Vec<T>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OutcomeRow {
    #[serde(flatten)]
    pub label: LabelName,
    pub p: f64,
}

impl<T: Real> OutcomeDistribution<T> {
    pub fn new(layout: LabelLayout, probabilities: Vec<T>) -> Result<Self> {
        if probabilities.len() != layout.len() {
            return Err(Error::SizeMismatch {
                expected: layout.len(),
                got: probabilities.len(),
            });
        }
        Ok(Self {
            layout,
            probabilities,
        })
    }

    pub fn layout(&self) -> &LabelLayout {
        &self.layout
    }

    pub fn group(&self) -> Group {
        self.layout.group()
    }

    /// Probabilities in canonical label order.
    pub fn probabilities(&self) -> &[T] {
        &self.probabilities
    }

    pub fn probability(&self, label: FourierLabel) -> T {
        self.probabilities[self.layout.position(label)]
    }

    pub fn total(&self) -> T {
        self.probabilities.iter().fold(T::zero(), |a, &p| a + p)
    }

    pub fn check_normalized(&self) -> Result<()> {
        let total = self.total();
        if (total - T::one()).abs() > T::check_tolerance()
            || self
                .probabilities
                .iter()
                .any(|p| *p < -T::check_tolerance())
        {
            return Err(Error::NormalizationBreach {
                total: total.to_f64_lossy(),
            });
        }
        Ok(())
    }

    /// Labels with probability above `threshold`.
    pub fn support(&self, threshold: T) -> Vec<FourierLabel> {
        self.probabilities
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > threshold)
            .map(|(pos, _)| self.layout.label_at(pos))
            .collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(
            self.layout, other.layout,
            "distributions over different label sets"
        );
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }

    pub fn rows(&self) -> Vec<OutcomeRow> {
        self.probabilities
            .iter()
            .enumerate()
            .map(|(pos, p)| OutcomeRow {
                label: self.layout.describe(self.layout.label_at(pos)),
                p: p.to_f64_lossy(),
            })
            .collect()
    }

    /// CSV with columns `irrep,i,j,p`, rows in canonical order.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(writer);
        let io = |e: csv::Error| Error::Malformed(e.to_string());
        w.write_record(["irrep", "i", "j", "p"]).map_err(io)?;
        for row in self.rows() {
            w.serialize((row.label.irrep.to_string(), row.label.i, row.label.j, row.p))
                .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Malformed(e.to_string()))
    }

    /// Inverse-CDF lookup of `u ∈ [0, 1)`.
    pub fn label_for_uniform(&self, u: f64) -> FourierLabel {
        self.layout.label_at(inverse_cdf(&self.probabilities, u))
    }
}

impl<T: Real> Serialize for OutcomeDistribution<T> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rows())
    }
}

/// Index `k` with `Σ_{<k} p ≤ u < Σ_{≤k} p`; rounding shortfall falls to the
/// last index of positive probability.
pub fn inverse_cdf<T: Real>(probabilities: &[T], u: f64) -> usize {
    let mut acc = 0.0;
    let mut last_positive = 0;
    for (k, p) in probabilities.iter().enumerate() {
        let p = p.to_f64_lossy();
        if p > 0.0 {
            last_positive = k;
        }
        acc += p;
        if u < acc {
            return k;
        }
    }
    last_positive
}

/// Exact QRand distribution via `Prob(γ_ij) = (|γ|/|G|²)·⟨Φ(γ_ij†)|Φ(γ_ij†)⟩`,
/// `|Φ(γ_ij†)⟩ = Σ_g conj(γ_ji(g)) |φ(g)⟩`.
///
/// Cyclic groups take an FFT per occupied fiber of `φ`; symmetric groups sum
/// over all elements in canonical order.
pub fn qrand_distribution<T: Real>(inst: &HspInstance) -> Result<OutcomeDistribution<T>> {
    let dist = match inst.group() {
        Group::Cyclic { .. } => cyclic_distribution_fft(inst)?,
        Group::Symmetric { .. } => phi_distribution(inst)?,
    };
    dist.check_normalized()?;
    Ok(dist)
}

/// Same formula as [`qrand_distribution`], summed directly over group elements
/// for every group (no FFT).
pub fn phi_distribution<T: Real>(inst: &HspInstance) -> Result<OutcomeDistribution<T>> {
    let group = inst.group();
    let layout = LabelLayout::new(group)?;
    let order = group.order();
    let order_sq = T::from_usize_lossy(order) * T::from_usize_lossy(order);
    let s = inst.target_size();
    let mut probabilities = vec![T::zero(); order];
    match group {
        Group::Cyclic { n: q } => {
            let mut phi = vec![Complex::<T>::zero(); s];
            for (y, p) in probabilities.iter_mut().enumerate() {
                phi.iter_mut().for_each(|z| *z = Complex::zero());
                for m in 0..q {
                    phi[inst.value(m)] =
                        phi[inst.value(m)] + root_of_unity::<T>((m * y) as u64, q as u64).conj();
                }
                *p = norm_sqr(&phi) / order_sq;
            }
        }
        Group::Symmetric { .. } => {
            let basis = FourierBasis::<T>::new(group)?;
            for (k, gamma) in basis.irreps().iter().enumerate() {
                let d = gamma.degree();
                // acc[(i*d + j)*s + target] accumulates Φ(γ_ij†)
                let mut acc = vec![Complex::<T>::zero(); d * d * s];
                for (g, value) in gamma.table().iter().enumerate() {
                    let target = inst.value(g);
                    for i in 0..d {
                        for j in 0..d {
                            let slot = (i * d + j) * s + target;
                            acc[slot] = acc[slot] + value[(j, i)].conj();
                        }
                    }
                }
                let scale = T::from_usize_lossy(d) / order_sq;
                let offset = layout.offset(k);
                for (ij, chunk) in acc.chunks(s).enumerate() {
                    probabilities[offset + ij] = scale * norm_sqr(chunk);
                }
            }
        }
    }
    OutcomeDistribution::new(layout, probabilities)
}

fn cyclic_distribution_fft<T: Real>(inst: &HspInstance) -> Result<OutcomeDistribution<T>> {
    let q = inst.group().order();
    let layout = LabelLayout::new(inst.group())?;
    let mut fiber_sizes = vec![0usize; inst.target_size()];
    for &v in inst.oracle() {
        fiber_sizes[v] += 1;
    }
    // The fiber indicators sum to the all-ones vector, whose transform is Q·δ_0,
    // so the largest fiber's transform is recovered without its own FFT.
    let largest = (0..fiber_sizes.len())
        .max_by_key(|&v| (fiber_sizes[v], std::cmp::Reverse(v)))
        .unwrap_or(0);
    let fft = forward_fft::<T>(q);
    let mut totals = vec![T::zero(); q];
    let mut rest = vec![Complex::<T>::zero(); q];
    rest[0] = Complex::new(T::from_usize_lossy(q), T::zero());
    let mut buffer = vec![Complex::<T>::zero(); q];
    for value in (0..inst.target_size()).filter(|&v| fiber_sizes[v] > 0 && v != largest) {
        // forward DFT of the fiber indicator: Σ_{φ(m)=value} exp(−2πi·m·y/Q) = Φ(γ_y†)[value]
        for (m, slot) in buffer.iter_mut().enumerate() {
            *slot = if inst.value(m) == value {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::zero()
            };
        }
        fft.process(&mut buffer);
        for ((t, r), z) in totals.iter_mut().zip(rest.iter_mut()).zip(&buffer) {
            *t = *t + z.norm_sqr();
            *r = *r - z;
        }
    }
    for (t, r) in totals.iter_mut().zip(&rest) {
        *t = *t + r.norm_sqr();
    }
    let q_sq = T::from_usize_lossy(q) * T::from_usize_lossy(q);
    OutcomeDistribution::new(layout, totals.into_iter().map(|t| t / q_sq).collect())
}

/// Forward FFT plans are expensive for lengths with large prime factors, so they
/// are kept per thread (bounded).
fn forward_fft<T: Real>(q: usize) -> Arc<dyn Fft<T>> {
    const CAPACITY: usize = 64;
    thread_local! {
        static PLANS: RefCell<HashMap<(TypeId, usize), Box<dyn Any>>> = RefCell::new(HashMap::new());
    }
    PLANS.with(|plans| {
        let mut plans = plans.borrow_mut();
        let key = (TypeId::of::<T>(), q);
        if !plans.contains_key(&key) {
            if plans.len() >= CAPACITY {
                plans.clear();
            }
            plans.insert(key, Box::new(FftPlanner::<T>::new().plan_fft_forward(q)));
        }
        plans[&key]
            .downcast_ref::<Arc<dyn Fft<T>>>()
            .expect("plan type matches key")
            .clone()
    })
}

fn norm_sqr<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
}

/// Intermediate states of one QRand pass through the dense unitaries.
#[derive(Clone, Debug)]
pub struct QrandTrace<T> {
    pub psi0: BipartiteState<T>,
    pub psi1: BipartiteState<T>,
    pub psi2: BipartiteState<T>,
    pub psi3: BipartiteState<T>,
}

/// Runs the circuit with explicit matrices: `|1̂⟩|s0⟩`, then `F_G⁻¹ = F_G†`,
/// `U_φ`, and `F_G` on the left register.
pub fn qrand_trace<T: Real>(inst: &HspInstance) -> Result<QrandTrace<T>> {
    let group = inst.group();
    if group.order() > MAX_DENSE_ORDER {
        return Err(Error::TooLarge {
            what: "group order for dense simulation",
            size: group.order(),
            cap: MAX_DENSE_ORDER,
        });
    }
    let basis = FourierBasis::<T>::new(group)?;
    let f = basis.matrix();
    let psi0 = BipartiteState::basis(
        group.order(),
        inst.target_size(),
        basis.trivial_position(),
        inst.s0(),
    )?;
    let psi1 = psi0.apply_left(&f.adjoint())?;
    let psi2 = apply_oracle(&psi1, inst)?;
    let psi3 = psi2.apply_left(&f)?;
    Ok(QrandTrace {
        psi0,
        psi1,
        psi2,
        psi3,
    })
}

/// The distribution read from `|ψ3⟩` of [`qrand_trace`].
///
/// With forward coefficients `γ(g)_{ij}` on row `(γ,i,j)`, the basis vector
/// `|γ_ij⟩` whose residual is `Φ(γ_ij†)` sits on row `(γ,j,i)`; the result is
/// reported under the `γ_ij` labelling so it is directly comparable with
/// [`qrand_distribution`].
pub fn qrand_distribution_unitary<T: Real>(inst: &HspInstance) -> Result<OutcomeDistribution<T>> {
    let trace = qrand_trace::<T>(inst)?;
    let rows = trace.psi3.left_probabilities();
    let layout = LabelLayout::new(inst.group())?;
    let probabilities = layout
        .labels()
        .map(|l| {
            rows[layout.position(FourierLabel {
                irrep: l.irrep,
                row: l.col,
                col: l.row,
            })]
        })
        .collect();
    OutcomeDistribution::new(layout, probabilities)
}

/// `|Φ(γ_ij†)⟩ = Σ_g conj(γ_ji(g)) |φ(g)⟩` over the target set.
pub fn phi_vector<T: Real>(inst: &HspInstance, label: FourierLabel) -> Result<Vec<Complex<T>>> {
    let group = inst.group();
    let mut phi = vec![Complex::<T>::zero(); inst.target_size()];
    match group {
        Group::Cyclic { n: q } => {
            let y = label.irrep as u64;
            for m in 0..q {
                let v = inst.value(m);
                phi[v] = phi[v] + root_of_unity::<T>(m as u64 * y, q as u64).conj();
            }
        }
        Group::Symmetric { n } => {
            let layout = LabelLayout::new(group)?;
            let IrrepLabel::Partition(shape) = layout.irrep_label(label.irrep) else {
                unreachable!()
            };
            let gamma = yor_irrep::<T>(&shape)?;
            debug_assert_eq!(shape.size(), n);
            for g in 0..group.order() {
                let v = inst.value(g);
                phi[v] = phi[v] + gamma.evaluate_index(g)[(label.col, label.row)].conj();
            }
        }
    }
    Ok(phi)
}

/// Output of one QRand execution.
#[derive(Clone, Debug)]
pub struct QrandSample<T> {
    pub label: FourierLabel,
    pub probability: T,
    /// Normalized collapsed second register `Φ(γ_ij†)/‖Φ(γ_ij†)‖`.
    pub residual: Vec<Complex<T>>,
}

/// Draws a label from the exact distribution with a seeded ChaCha generator.
pub fn qrand_sample<T: Real>(inst: &HspInstance, seed: u64) -> Result<QrandSample<T>> {
    let dist = qrand_distribution::<T>(inst)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_from::<T, _>(inst, &dist, &mut rng)
}

pub fn sample_from<T: Real, R: Rng>(
    inst: &HspInstance,
    dist: &OutcomeDistribution<T>,
    rng: &mut R,
) -> Result<QrandSample<T>> {
    let label = dist.label_for_uniform(rng.gen::<f64>());
    let mut residual = phi_vector::<T>(inst, label)?;
    let norm = norm_sqr(&residual).sqrt();
    residual.iter_mut().for_each(|z| *z = *z / norm);
    Ok(QrandSample {
        label,
        probability: dist.probability(label),
        residual,
    })
}

/// Histogram of `shots` labels drawn from `dist`, in canonical label order.
pub fn sample_counts<T: Real>(
    dist: &OutcomeDistribution<T>,
    seed: u64,
    shots: usize,
) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0; dist.probabilities().len()];
    for _ in 0..shots {
        counts[inverse_cdf(dist.probabilities(), rng.gen::<f64>())] += 1;
    }
    counts
}

/// Marginal over the irrep label, `Prob(γ) = Σ_{i,j} Prob(γ_ij)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeakMarginal<T> {
    pub labels: Vec<IrrepLabel>,
    pub probabilities: Vec<T>,
}

impl<T: Real> WeakMarginal<T> {
    pub fn probability_of(&self, label: &IrrepLabel) -> Option<T> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|k| self.probabilities[k])
    }

    pub fn of_partition(&self, parts: &[usize]) -> Option<T> {
        let p = Partition::new(parts.to_vec()).ok()?;
        self.probability_of(&IrrepLabel::Partition(p))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.labels, other.labels);
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }
}

pub fn weak_marginal<T: Real>(dist: &OutcomeDistribution<T>) -> WeakMarginal<T> {
    let layout = dist.layout();
    let labels = (0..layout.num_irreps())
        .map(|k| layout.irrep_label(k))
        .collect();
    let probabilities = (0..layout.num_irreps())
        .map(|k| {
            let start = layout.offset(k);
            let d = layout.degree(k);
            dist.probabilities()[start..start + d * d]
                .iter()
                .fold(T::zero(), |a, &p| a + p)
        })
        .collect();
    WeakMarginal {
        labels,
        probabilities,
    }
}
