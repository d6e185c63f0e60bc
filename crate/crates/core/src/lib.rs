pub mod catalog;
pub mod characters;
pub mod cli;
pub mod framing;
pub mod linalg;
pub mod monad;
pub mod ncalg;
pub mod partitions;
pub mod qseries;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational scalar used throughout the symbolic core.
pub type Q = BigRational;

pub(crate) fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}
