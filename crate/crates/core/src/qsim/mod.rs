//! Exact bipartite state-vector simulation of the QRand subroutine.

mod fourier;
mod layout;
mod qrand;
mod state;

pub use fourier::{group_fourier_matrix, FourierBasis, FourierLabel};
pub use layout::{LabelLayout, LabelName};
pub use qrand::{
    inverse_cdf, phi_distribution, phi_vector, qrand_distribution, qrand_distribution_unitary,
    qrand_sample, qrand_trace, sample_counts, sample_from, weak_marginal, OutcomeDistribution,
    OutcomeRow, QrandSample, QrandTrace, WeakMarginal, MAX_DENSE_ORDER,
};
pub use state::{apply_oracle, BipartiteState};
