//! Finite Grassmann algebra with Berezin integration, even-element
//! calculus, block supermatrices, the (1|1) diagonalization and the
//! explicit U(1|1) / U(2|1) integration used as an independent oracle.

mod analytic;
pub mod brute_force;
mod element;
mod supermatrix;

pub use analytic::{analytic_eval, EvenElement};
pub use brute_force::brute_force_ls;
pub use element::{alpha, alpha_star, GrassmannElement, MAX_GENERATORS};
pub use supermatrix::{diagonalize_1p1, exp_odd_block, odd_pair, Diagonalization, ImaginaryUnit, SuperMatrix};
