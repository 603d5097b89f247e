//! Exact computation with finite-rank coalgebras over ℤ, ℤ[S⁻¹], ℚ and 𝔽_p,
//! their coradical filtrations, and simplicial coalgebras built from finite
//! simplicial sets.

pub mod error;
pub mod grouplike;
pub mod io;
pub mod binomial;
pub mod coalgebra;
pub mod corpus;
pub mod lattice;
pub mod linalg;
pub mod matrix;
pub mod ntheory;
pub mod poly;
pub mod report;
pub mod ring;
pub mod simplicial;
pub mod structure;

pub use error::{Error, Result};
pub use lattice::{kernel_lattice, Lattice};
pub use matrix::Matrix;
pub use report::ValidationReport;
pub use ring::{RingElement, RingSpec, Scalar};
