//! Curve parameters and the Montgomery word-size cost model.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::error::Error;

/// Magnitude of the BLS parameter `u = -0xd201000000010000`.
pub const U_ABS: u64 = 0xd201_0000_0001_0000;
/// The BLS parameter is negative.
pub const U_IS_NEGATIVE: bool = true;

/// Base field modulus, big-endian hex.
pub const P_HEX: &str = "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab";
/// Group order (scalar field modulus), big-endian hex.
pub const Q_HEX: &str = "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001";

/// Word size of an executable Montgomery multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WordSize {
    W16,
    W32,
    W64,
}

impl WordSize {
    pub const ALL: [WordSize; 3] = [WordSize::W16, WordSize::W32, WordSize::W64];

    pub fn bits(self) -> u32 {
        match self {
            WordSize::W16 => 16,
            WordSize::W32 => 32,
            WordSize::W64 => 64,
        }
    }

    pub fn from_bits(bits: u32) -> Result<Self, Error> {
        match bits {
            16 => Ok(WordSize::W16),
            32 => Ok(WordSize::W32),
            64 => Ok(WordSize::W64),
            other => Err(Error::UnsupportedWordSize(other)),
        }
    }
}

/// Word sizes accepted by the analytic cost model.
pub const MODEL_WORD_SIZES: [u32; 6] = [16, 24, 32, 48, 64, 96];

/// Word-level work of one CIOS Montgomery product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CiosCost {
    pub word_size: u32,
    pub words: u32,
    pub word_muls: u64,
    pub word_adds: u64,
}

impl CiosCost {
    /// Cost of one product over an operand of `operand_bits` (zero-padded)
    /// split into `w`-bit words: `s(2s+1)` multiplications and
    /// `2(2s^2+2s+1)` additions with `s = ceil(operand_bits / w)`.
    pub fn for_operand(operand_bits: u32, w: u32) -> Result<Self, Error> {
        if !MODEL_WORD_SIZES.contains(&w) {
            return Err(Error::UnsupportedWordSize(w));
        }
        let s = operand_bits.div_ceil(w) as u64;
        Ok(CiosCost {
            word_size: w,
            words: s as u32,
            word_muls: s * (2 * s + 1),
            word_adds: 2 * (2 * s * s + 2 * s + 1),
        })
    }
}

/// Per-multiplication cost of the 384-bit (zero-padded Fp) datapath.
pub fn cios_cost_model(w: u32) -> Result<CiosCost, Error> {
    CiosCost::for_operand(384, w)
}

/// Integer parameters of BLS12-381 together with the Montgomery constants
/// used by the field layer.
#[derive(Clone, Debug)]
pub struct SystemParams {
    pub p: BigUint,
    pub q: BigUint,
    pub u: BigInt,
    pub mont_r_p: BigUint,
    pub mont_r2_p: BigUint,
    pub mont_rinv_p: BigUint,
    pub mont_r_q: BigUint,
    pub mont_r2_q: BigUint,
    /// `-p^-1 mod 2^w` for w = 16, 32, 64.
    pub p_prime_w: [u64; 3],
    /// `-q^-1 mod 2^w` for w = 16, 32, 64.
    pub q_prime_w: [u64; 3],
    pub u_sq_mod_q: BigUint,
}

fn neg_inv_mod_pow2(m: &BigUint, bits: u32) -> u64 {
    let modulus = BigUint::from(1u8) << bits;
    let inv = m.modinv(&modulus).expect("odd modulus");
    let v = (&modulus - inv) % &modulus;
    v.iter_u64_digits().next().unwrap_or(0)
}

impl SystemParams {
    pub fn get() -> &'static SystemParams {
        static PARAMS: OnceLock<SystemParams> = OnceLock::new();
        PARAMS.get_or_init(SystemParams::derive)
    }

    fn derive() -> SystemParams {
        let p = BigUint::parse_bytes(P_HEX.as_bytes(), 16).unwrap();
        let q = BigUint::parse_bytes(Q_HEX.as_bytes(), 16).unwrap();
        let u = -BigInt::from(U_ABS);
        let r_p = BigUint::from(1u8) << 384;
        let r_q = BigUint::from(1u8) << 256;
        let sizes = [16, 32, 64];
        let u_sq = BigUint::from(U_ABS) * BigUint::from(U_ABS);
        SystemParams {
            mont_r_p: &r_p % &p,
            mont_r2_p: (&r_p * &r_p) % &p,
            mont_rinv_p: BigUint::modinv(&(&r_p % &p), &p).unwrap(),
            mont_r_q: &r_q % &q,
            mont_r2_q: (&r_q * &r_q) % &q,
            p_prime_w: sizes.map(|w| neg_inv_mod_pow2(&p, w)),
            q_prime_w: sizes.map(|w| neg_inv_mod_pow2(&q, w)),
            u_sq_mod_q: u_sq % &q,
            p,
            q,
            u,
        }
    }

    /// Checks the structural invariants of the parameter set.
    pub fn validate(&self) -> Result<(), String> {
        if self.p.bits() != 381 {
            return Err(format!("p has {} bits", self.p.bits()));
        }
        if self.q.bits() != 255 {
            return Err(format!("q has {} bits", self.q.bits()));
        }
        let u2 = &self.u * &self.u;
        let q_from_u = &u2 * &u2 - &u2 + BigInt::from(1);
        if q_from_u != BigInt::from(self.q.clone()) {
            return Err("q != u^4 - u^2 + 1".into());
        }
        // #E(Fp) = p + 1 - t with trace t = u + 1.
        let order = BigInt::from(self.p.clone()) + 1 - (&self.u + 1);
        if order % BigInt::from(self.q.clone()) != BigInt::from(0) {
            return Err("q does not divide #E(Fp)".into());
        }
        if (BigInt::from(self.p.clone()) - &self.u) % BigInt::from(self.q.clone()) != BigInt::from(0) {
            return Err("p != u mod q".into());
        }
        Ok(())
    }
}
