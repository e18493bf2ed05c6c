use std::io::Read;

use crate::counter;
use crate::curve::Scalar;
use crate::error::{Error, Result};
use crate::field::{Fp, Fq};
use crate::tower::Fp2;

use super::{sha256, Sha256};

/// Hash-counter generator: block `i` is `SHA-256(seed || i)` with `i` a
/// big-endian 64-bit counter. Field elements are drawn by masking to the
/// modulus bit length and rejecting out-of-range values; the rejection
/// loop is bounded in expectation (fewer than 1.25 draws), not worst case.
/// Converting a draw into Montgomery form is not charged to the ledger, so
/// counts do not depend on how many candidates were rejected.
#[derive(Clone)]
pub struct Csprng {
    seed: [u8; 32],
    counter: u64,
    buf: [u8; 32],
    avail: usize,
}

impl Csprng {
    pub fn from_seed(seed: [u8; 32]) -> Self {
        Csprng { seed, counter: 0, buf: [0; 32], avail: 0 }
    }

    /// Seed given as 64 hex characters.
    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|_| Error::Malformed("seed is not hex"))?;
        let seed: [u8; 32] = bytes.try_into().map_err(|_| Error::Malformed("seed must be 32 bytes"))?;
        Ok(Self::from_seed(seed))
    }

    /// Seeded from the operating system.
    pub fn from_entropy() -> Self {
        let mut seed = [0u8; 32];
        let ok = std::fs::File::open("/dev/urandom")
            .and_then(|mut f| f.read_exact(&mut seed))
            .is_ok();
        if !ok {
            use std::hash::{BuildHasher, Hasher};
            let mut h = std::collections::hash_map::RandomState::new().build_hasher();
            h.write_u128(
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_nanos())
                    .unwrap_or(0),
            );
            seed = sha256(&h.finish().to_be_bytes());
        }
        Self::from_seed(seed)
    }

    pub fn seed(&self) -> [u8; 32] {
        self.seed
    }

    pub fn seed_hex(&self) -> String {
        hex::encode(self.seed)
    }

    /// Number of blocks emitted so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn next_block(&mut self) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update(&self.seed).update(&self.counter.to_be_bytes());
        self.counter += 1;
        h.finalize()
    }

    pub fn fill_bytes(&mut self, out: &mut [u8]) {
        for b in out.iter_mut() {
            if self.avail == 0 {
                self.buf = self.next_block();
                self.avail = 32;
            }
            *b = self.buf[32 - self.avail];
            self.avail -= 1;
        }
    }

    /// Independent generator derived from the current state and a label.
    pub fn fork(&mut self, label: &[u8]) -> Csprng {
        let mut h = Sha256::new();
        h.update(&self.next_block()).update(label);
        Csprng::from_seed(h.finalize())
    }

    /// Uniform element of `Fp`.
    pub fn random_fp(&mut self) -> Fp {
        loop {
            let mut b = [0u8; 48];
            self.fill_bytes(&mut b);
            b[0] &= 0x1f;
            if let Some(v) = Option::from(counter::uncounted(|| Fp::from_bytes_be(&b))) {
                return v;
            }
        }
    }

    pub fn random_fp_nonzero(&mut self) -> Fp {
        loop {
            let v = self.random_fp();
            if !bool::from(v.is_zero()) {
                return v;
            }
        }
    }

    pub fn random_fp2_nonzero(&mut self) -> Fp2 {
        Fp2::new(self.random_fp_nonzero(), self.random_fp())
    }

    /// Uniform element of `Fq`.
    pub fn random_fq(&mut self) -> Fq {
        loop {
            let mut b = [0u8; 32];
            self.fill_bytes(&mut b);
            b[0] &= 0x7f;
            if let Some(v) = Option::from(counter::uncounted(|| Fq::from_bytes_be(&b))) {
                return v;
            }
        }
    }

    pub fn random_fq_nonzero(&mut self) -> Fq {
        loop {
            let v = self.random_fq();
            if !bool::from(v.is_zero()) {
                return v;
            }
        }
    }

    /// Uniform integer in `[0, q)`.
    pub fn random_scalar(&mut self) -> Scalar {
        loop {
            let mut b = [0u8; 32];
            self.fill_bytes(&mut b);
            b[0] &= 0x7f;
            let s = Scalar::from_bytes_be(&b).expect("masked to 255 bits");
            if s.reduce_mod_q() == s {
                return s;
            }
        }
    }

    /// Uniform integer in `[1, q)`.
    pub fn random_scalar_nonzero(&mut self) -> Scalar {
        loop {
            let s = self.random_scalar();
            if s != Scalar::ZERO {
                return s;
            }
        }
    }
}

impl std::fmt::Debug for Csprng {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Csprng").field("seed", &self.seed_hex()).field("counter", &self.counter).finish()
    }
}
