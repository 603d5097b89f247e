//! Wedges, coradical filtrations and the component decomposition of pointed coalgebras.

mod components;
mod filtration;
mod wedge;

pub use components::{
    check_splitting_naturality, components, components_by_wedge, split_coradical, ComponentDecomposition,
};
pub use filtration::{coradical_filtration, push_filtration, tensor_filtration, Filtration};
pub use wedge::{primitives, wedge};
