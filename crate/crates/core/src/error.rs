use thiserror::Error;

use crate::young::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A series needed more terms than the configured cap allows.
    #[error("series did not converge within {cap} terms")]
    TruncationCapExceeded { cap: usize },

    #[error("partition {partition} has more than {rows} rows")]
    TooManyRows { partition: Partition, rows: usize },

    #[error("diagram {partition} violates the ({m}|{n}) hook condition")]
    NotCovariant {
        partition: Partition,
        m: usize,
        n: usize,
    },

    /// Two arguments of a bialternant coincide (0/0 form).
    #[error("arguments {i} and {j} coincide within the separation threshold")]
    DegenerateArguments { i: usize, j: usize },

    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorMismatch { left: usize, right: usize },

    /// Even element whose body vanishes; this is exactly the
    /// non-diagonalizable case of a (1|1) supermatrix.
    #[error("even element has a non-invertible body")]
    NonInvertibleBody,

    #[error("bosonic entry {boson} coincides with fermionic entry {fermion}")]
    BosonFermionCoincidence { boson: usize, fermion: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
