//! Numerical and exact evidence for the identity `J₀ = J_m` between two
//! multivariate power series, together with the coefficient relations and
//! determinant theorems it rests on.

mod checks;
mod relations;
mod series;
mod verify;

pub use checks::{
    character_expansion_check, supercharacter_consistency, theorem1_holds, theorem2_holds, theorem3_holds,
    theorem_c_checks, ExpansionCheck, TheoremReport,
};
pub use relations::{
    f_coefficient, g_coefficient, lr_relation_check, lr_sweep, partial_coefficient_check, partial_coefficient_grid,
    LrCheck, PartialCheck,
};
pub use series::{j0_conditioned, j0_truncated, jm_conditioned, jm_truncated, tail_bound, Conditioned, TailBound};
pub use verify::{
    sample_point, verify_conjecture, ConjectureParams, ConjectureReport, ConjectureSample, DEFAULT_MAX_N, MAX_RADIUS,
};
