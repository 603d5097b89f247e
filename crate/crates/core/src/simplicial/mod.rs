//! Truncated simplicial sets, the chains functor and its right adjoint `Gr`,
//! normalized homology, and the weak-equivalence and cofibration predicates.

mod coalgebra;
mod homology;
pub mod models;
mod sset;

pub use coalgebra::{
    chains_functor, chains_of_map, gr_simplicial, gr_simplicial_map, unit_is_isomorphism, SimplicialCoalgebra,
    SimplicialCoalgebraMap,
};
pub use homology::{
    are_pure_injections, homology, is_cofibration, is_weak_equivalence, normalized_complex, ChainComplex,
    HomologyGroup,
};
pub use sset::{validate_sset, FiniteSimplicialSet, SimplicialMap};
