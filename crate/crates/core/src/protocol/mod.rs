//! BLS signatures with aggregation, side-channel hardened ECSM and pairing,
//! and the split-scalar G2 benchmark of inner-product encryption.

mod bls;
mod hardened;
mod ipe;

pub use bls::{aggregate, aggregate_verify, sign, verify, verify_naive, PublicKey, SecretKey, Signature};
pub use hardened::{hardened_ecsm, hardened_pairing, CountermeasureConfig, Draw, RandomField};
pub use ipe::{ipe_encrypt, ipe_encrypt_benchmark, IpeMode, IpeReport};
