//! Shared primitives: binary genotypes, deterministic splittable randomness,
//! and target-space (achievable fitness set) arithmetic.

mod bitstring;
mod rng;
mod target_space;

pub use bitstring::{flip_bits, BitString, BitStringError};
pub use rng::{derive_stream, RngStream};
pub use target_space::{target_space_stats, TargetSpace, TargetSpaceError};
