//! Young diagrams, covariant super-diagrams of Gl(m|n), their exact
//! coefficients and the (super)characters built from them.

mod coefficients;
mod lr;
mod partition;
mod schur;
mod superdiagram;

pub use coefficients::{
    dimension_glm, hook_product, norm_alpha, sigma_coefficient, sigma_decomposition_factor,
    sigma_over_factorial, KIndices,
};
pub use lr::lr_coefficient;
pub use partition::Partition;
pub use schur::{
    cross_product, schur_bialternant, schur_numeric, schur_tableaux, super_schur_tableaux,
    supercharacter_amu, supercharacter_amu_numeric,
};
pub use superdiagram::{decompose_superdiagram, is_hook_covariant, Decomposition, SuperDiagram};
