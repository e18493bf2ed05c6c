//! SHA-256, the hash-counter random generator and hash-to-G1.

mod csprng;
mod h2c;
mod iso_consts;

use sha2::Digest;

pub use csprng::Csprng;
pub use h2c::{expand_message_xmd, hash_to_field, hash_to_g1, map_to_curve, DST_G1_RO};

/// One-shot SHA-256.
pub fn sha256(msg: &[u8]) -> [u8; 32] {
    sha2::Sha256::digest(msg).into()
}

/// Incremental SHA-256.
#[derive(Clone, Default)]
pub struct Sha256(sha2::Sha256);

impl Sha256 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn update(&mut self, data: &[u8]) -> &mut Self {
        self.0.update(data);
        self
    }

    pub fn finalize(self) -> [u8; 32] {
        self.0.finalize().into()
    }
}
