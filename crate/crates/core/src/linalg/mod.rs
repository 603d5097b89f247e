//! Exact matrix algebra: elimination over fields, Hermite and Smith normal
//! forms over the supported principal ideal domains.

pub mod field;
pub mod hnf;
pub mod snf;

pub use hnf::{hnf, Hnf};
pub use snf::{snf, Smith};
