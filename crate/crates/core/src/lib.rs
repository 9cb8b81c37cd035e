pub mod error;
pub mod precision;
pub mod young;
pub mod grassmann;
pub mod integrals;
pub mod rng;
pub mod conjecture;
pub mod selftest;
