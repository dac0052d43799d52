//! Grover's search and the Grover hidden subgroup experiments.

mod noinfo;
mod search;

pub use noinfo::{
    cyclic_closed_form, cyclic_grover_instance, no_info_experiment_cyclic,
    no_info_experiment_symmetric, NoInfoMode, NoInfoReport, NoInfoRun, MAX_SYMMETRIC_NOINFO_N,
};
pub use search::{
    approximate_iteration_count, closed_form_success, grover_classical_sample,
    grover_iteration_count, grover_oracle_reflection, grover_run, grover_sample_many,
    GroverOutcome, GroverState,
};
