//! The no-information experiments: QRand over the Grover oracle gives the same
//! outcome statistics whichever label is marked.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::hsp::{
    fibers, grover_hsp, grover_search_oracle, informationally_equivalent, push_grover_oracle,
    HspInstance,
};
use crate::qsim::{qrand_distribution, weak_marginal, OutcomeDistribution, WeakMarginal};
use crate::scalar::Real;

/// Largest `N` for the symmetric-group experiment.
pub const MAX_SYMMETRIC_NOINFO_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NoInfoMode {
    Cyclic,
    Symmetric,
}

#[derive(Clone, Debug, Serialize)]
pub struct NoInfoRun<T: Real> {
    pub j0: usize,
    /// Cyclic mode: whether the pushed Grover oracle's fibers are `{j0}` and its complement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub push_matches_search_oracle: Option<bool>,
    pub marginal: WeakMarginal<T>,
    pub distribution: OutcomeDistribution<T>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NoInfoReport<T: Real> {
    pub n: usize,
    pub mode: NoInfoMode,
    pub runs: Vec<NoInfoRun<T>>,
    /// Largest spread `max_j0 − min_j0` of any weak-marginal entry.
    pub max_marginal_deviation: T,
    /// Largest spread of any full `(γ,i,j)` entry.
    pub max_distribution_deviation: T,
    pub full_distributions_coincide: bool,
    /// Cyclic mode: largest deviation from `((N−1)²+1)/N²` at 0 and `2/N²` elsewhere.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_deviation: Option<T>,
}

fn spread<T: Real>(rows: impl Iterator<Item = Vec<T>>) -> T {
    let mut lo: Vec<T> = Vec::new();
    let mut hi: Vec<T> = Vec::new();
    for row in rows {
        if lo.is_empty() {
            lo = row.clone();
            hi = row;
            continue;
        }
        for (k, v) in row.into_iter().enumerate() {
            lo[k] = lo[k].min(v);
            hi[k] = hi[k].max(v);
        }
    }
    lo.iter()
        .zip(&hi)
        .map(|(a, b)| *b - *a)
        .fold(T::zero(), T::max)
}

impl<T: Real> NoInfoReport<T> {
    fn assemble(
        n: usize,
        mode: NoInfoMode,
        runs: Vec<NoInfoRun<T>>,
        closed_form_deviation: Option<T>,
    ) -> Self {
        let max_marginal_deviation = spread(runs.iter().map(|r| r.marginal.probabilities.clone()));
        let max_distribution_deviation =
            spread(runs.iter().map(|r| r.distribution.probabilities().to_vec()));
        Self {
            n,
            mode,
            full_distributions_coincide: max_distribution_deviation <= T::check_tolerance(),
            runs,
            max_marginal_deviation,
            max_distribution_deviation,
            closed_form_deviation,
        }
    }

    /// Marginals as CSV: one row per irrep label, one column per `j0`.
    pub fn write_marginals_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(writer);
        let io = |e: csv::Error| Error::Malformed(e.to_string());
        let mut header = vec!["irrep".to_string()];
        header.extend(self.runs.iter().map(|r| format!("j0={}", r.j0)));
        w.write_record(&header).map_err(io)?;
        if let Some(first) = self.runs.first() {
            for (k, label) in first.marginal.labels.iter().enumerate() {
                let values: Vec<f64> = self
                    .runs
                    .iter()
                    .map(|r| r.marginal.probabilities[k].to_f64_lossy())
                    .collect();
                w.serialize((label.to_string(), values)).map_err(io)?;
            }
        }
        w.flush().map_err(|e| Error::Malformed(e.to_string()))
    }
}

/// The Grover oracle as an instance on `Z_N`, canonicalized to `f(j) = [j = j0]`.
/// Also reports whether the pushed oracle's fibers agree with `f`'s.
pub fn cyclic_grover_instance(n: usize, j0: usize) -> Result<(HspInstance, bool)> {
    let f = grover_search_oracle(n, j0)?;
    let pushed = push_grover_oracle(n, j0)?;
    let matches = informationally_equivalent(&pushed, &f);
    debug_assert!(j0 == 0 || matches, "fibers {:?}", fibers(&pushed));
    Ok((HspInstance::new(Group::cyclic(n)?, 2, f, None)?, matches))
}

/// `((N−1)² + 1)/N²` at `y = 0`, `2/N²` elsewhere.
pub fn cyclic_closed_form<T: Real>(n: usize, y: usize) -> T {
    let nf = T::from_usize_lossy(n);
    let num = if y == 0 {
        T::from_usize_lossy((n - 1) * (n - 1) + 1)
    } else {
        T::from_usize_lossy(2)
    };
    num / (nf * nf)
}

pub fn no_info_experiment_cyclic<T: Real>(n: usize) -> Result<NoInfoReport<T>> {
    if n < 2 {
        return Err(Error::LabelOutOfRange { label: n, size: 2 });
    }
    let mut runs = Vec::with_capacity(n);
    let mut closed = T::zero();
    for j0 in 0..n {
        let (inst, matches) = cyclic_grover_instance(n, j0)?;
        let distribution = qrand_distribution::<T>(&inst)?;
        for (y, &p) in distribution.probabilities().iter().enumerate() {
            closed = closed.max((p - cyclic_closed_form::<T>(n, y)).abs());
        }
        runs.push(NoInfoRun {
            j0,
            push_matches_search_oracle: Some(matches),
            marginal: weak_marginal(&distribution),
            distribution,
        });
    }
    Ok(NoInfoReport::assemble(
        n,
        NoInfoMode::Cyclic,
        runs,
        Some(closed),
    ))
}

pub fn no_info_experiment_symmetric<T: Real>(n: usize) -> Result<NoInfoReport<T>> {
    if !(2..=MAX_SYMMETRIC_NOINFO_N).contains(&n) {
        return Err(Error::TooLarge {
            what: "symmetric no-information N",
            size: n,
            cap: MAX_SYMMETRIC_NOINFO_N,
        });
    }
    let runs = (0..n)
        .map(|j0| {
            let distribution = qrand_distribution::<T>(&grover_hsp(n, j0)?)?;
            Ok(NoInfoRun {
                j0,
                push_matches_search_oracle: None,
                marginal: weak_marginal(&distribution),
                distribution,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NoInfoReport::assemble(n, NoInfoMode::Symmetric, runs, None))
}
