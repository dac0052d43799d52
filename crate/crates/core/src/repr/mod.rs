//! Irreducible unitary representations of `Z_Q` and `S_N`.

mod irrep;
mod partition;
mod tableau;

pub use irrep::{
    complete_irrep_set, contragredient, cyclic_irreps, yor_irrep, Irrep, IrrepLabel, IrrepTable,
    IrrepTableEntry, MAX_IRREP_DEGREE_N,
};
pub use partition::{hook_dimension, partitions, Partition};
pub use tableau::{standard_tableaux, StandardTableau};
