use core::fmt;

use num_bigint::BigUint;
use subtle::{Choice, ConditionallySelectable, ConstantTimeEq};

use crate::error::{Error, Result};
use crate::field::{sbb, Fq};
use crate::params::U_ABS;

/// Non-negative integer below `2^255`, processed bit by bit over a fixed
/// length by every scalar multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Scalar(pub(crate) [u64; 4]);

/// Bit length processed by plain scalar multiplications.
pub const SCALAR_BITS: usize = 255;

/// Bit length of each half produced by [`Scalar::split`].
pub const HALF_BITS: usize = 128;

impl Scalar {
    pub const ZERO: Scalar = Scalar([0; 4]);
    pub const ONE: Scalar = Scalar([1, 0, 0, 0]);
    /// The group order `q`.
    pub const Q: Scalar = Scalar(Fq::MODULUS);
    /// Order of the prime subgroup of Jubjub.
    pub const JUBJUB_ORDER: Scalar = Scalar([
        0xd097_0e5e_d6f7_2cb7,
        0xa668_2093_ccc8_1082,
        0x0667_3b01_0134_3b00,
        0x0e7d_b4ea_6533_afa9,
    ]);

    pub const fn from_u64(v: u64) -> Self {
        Scalar([v, 0, 0, 0])
    }

    /// From little-endian limbs; rejects values of `2^255` or more.
    pub fn from_limbs(limbs: [u64; 4]) -> Result<Self> {
        if limbs[3] >> 63 != 0 {
            return Err(Error::OutOfRange);
        }
        Ok(Scalar(limbs))
    }

    pub fn limbs(&self) -> [u64; 4] {
        self.0
    }

    pub fn from_biguint(v: &BigUint) -> Result<Self> {
        if v.bits() > SCALAR_BITS as u64 {
            return Err(Error::OutOfRange);
        }
        let mut limbs = [0u64; 4];
        for (l, d) in limbs.iter_mut().zip(v.iter_u64_digits()) {
            *l = d;
        }
        Ok(Scalar(limbs))
    }

    pub fn to_biguint(&self) -> BigUint {
        BigUint::from_bytes_be(&self.to_bytes_be())
    }

    pub fn from_bytes_be(bytes: &[u8; 32]) -> Result<Self> {
        let mut limbs = [0u64; 4];
        for (i, l) in limbs.iter_mut().enumerate() {
            let end = 32 - 8 * i;
            *l = u64::from_be_bytes(bytes[end - 8..end].try_into().unwrap());
        }
        Self::from_limbs(limbs)
    }

    pub fn to_bytes_be(&self) -> [u8; 32] {
        let mut out = [0u8; 32];
        for (i, l) in self.0.iter().enumerate() {
            let end = 32 - 8 * i;
            out[end - 8..end].copy_from_slice(&l.to_be_bytes());
        }
        out
    }

    /// Canonical integer value of an `Fq` element.
    pub fn from_fq(v: &Fq) -> Self {
        Scalar(v.to_canonical())
    }

    /// This value as an `Fq` element (reduced mod q first).
    pub fn to_fq(&self) -> Fq {
        Fq::from_canonical(&self.reduce_mod_q().0).unwrap()
    }

    /// `self mod q`. Any value below `2^255 < 2q` needs at most one
    /// subtraction, done by mask.
    pub fn reduce_mod_q(&self) -> Scalar {
        let mut d = [0u64; 4];
        let mut borrow = 0;
        for (i, di) in d.iter_mut().enumerate() {
            (*di, borrow) = sbb(self.0[i], Fq::MODULUS[i], borrow);
        }
        let keep = Choice::from((borrow >> 63) as u8);
        Scalar::conditional_select(&Scalar(d), self, keep)
    }

    /// Bit `i` (little-endian) as a choice.
    #[inline]
    pub fn bit(&self, i: usize) -> Choice {
        Choice::from(((self.0[i / 64] >> (i % 64)) & 1) as u8)
    }

    /// `k = k1 + k2 * u^2` with `k1 = k mod u^2` and `k2 = floor(k / u^2)`,
    /// both below `2^128`. Fixed-length shift-and-subtract division with
    /// masked updates.
    pub fn split(&self) -> (Scalar, Scalar) {
        let d = (U_ABS as u128) * (U_ABS as u128);
        let mut r: u128 = 0;
        let mut quo = [0u64; 4];
        for i in (0..SCALAR_BITS).rev() {
            let top = (r >> 127) as u64;
            r = (r << 1) | ((self.0[i / 64] >> (i % 64)) & 1) as u128;
            let (diff, borrow) = r.overflowing_sub(d);
            let ge = top | (!borrow as u64);
            let mask = 0u128.wrapping_sub(ge as u128);
            r = (diff & mask) | (r & !mask);
            quo[i / 64] |= ge << (i % 64);
        }
        (Scalar([r as u64, (r >> 64) as u64, 0, 0]), Scalar(quo))
    }
}

impl ConstantTimeEq for Scalar {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.0[..].ct_eq(&other.0[..])
    }
}

impl ConditionallySelectable for Scalar {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        let mut out = [0u64; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = u64::conditional_select(&a.0[i], &b.0[i], choice);
        }
        Scalar(out)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{}", hex::encode(self.to_bytes_be()))
    }
}

impl From<u64> for Scalar {
    fn from(v: u64) -> Self {
        Scalar::from_u64(v)
    }
}
