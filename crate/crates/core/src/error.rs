use thiserror::Error;

/// Domain errors raised by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(u64),
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(u64),
    #[error("inconsistent ambient group: modulus {found} does not match {expected}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("twist {twist} is not in the cyclic subgroup generated by L[1/{modulus},0]")]
    NotRepresentable { twist: String, modulus: u64 },
    #[error("the zero object generates no ring")]
    ZeroObject,
    #[error("expected an indecomposable object, got {0}")]
    NotIndecomposable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
