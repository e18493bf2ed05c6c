//! `G1`: the order-q subgroup of `E(Fp): y^2 = x^3 + 4`.

use std::sync::OnceLock;

use subtle::{Choice, ConditionallySelectable};

use super::weierstrass::{Affine, Projective};
use crate::error::{Error, Result};
use crate::field::Fp;

pub type G1Affine = Affine<Fp>;
pub type G1Projective = Projective<Fp>;

const GX: &str = "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb";
const GY: &str = "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa232946c5e7e1";

pub(crate) fn generator_xy() -> (Fp, Fp) {
    static G: OnceLock<(Fp, Fp)> = OnceLock::new();
    *G.get_or_init(|| (Fp::from_hex(GX), Fp::from_hex(GY)))
}

pub(crate) const FLAG_COMPRESSED: u8 = 0x80;
pub(crate) const FLAG_INFINITY: u8 = 0x40;
pub(crate) const FLAG_SIGN: u8 = 0x20;
pub(crate) const FLAG_MASK: u8 = 0xe0;

fn fp_from(bytes: &[u8]) -> Result<Fp> {
    let arr: &[u8; 48] = bytes.try_into().map_err(|_| Error::Malformed("bad coordinate length"))?;
    Option::from(Fp::from_bytes_be(arr)).ok_or(Error::Malformed("coordinate not below p"))
}

/// Splits flags from the first byte and checks the identity encoding.
/// Returns `(is_infinity, sign)`.
pub(crate) fn read_flags(bytes: &mut [u8], compressed: bool) -> Result<(bool, bool)> {
    let flags = bytes[0] & FLAG_MASK;
    bytes[0] &= !FLAG_MASK;
    if (flags & FLAG_COMPRESSED != 0) != compressed {
        return Err(Error::Malformed("compression flag does not match length"));
    }
    let inf = flags & FLAG_INFINITY != 0;
    let sign = flags & FLAG_SIGN != 0;
    if inf && (sign || bytes.iter().any(|&b| b != 0)) {
        return Err(Error::Malformed("non-canonical identity encoding"));
    }
    if !compressed && sign {
        return Err(Error::Malformed("sign flag on uncompressed encoding"));
    }
    Ok((inf, sign))
}

impl Affine<Fp> {
    /// 48 bytes: `x` big-endian with flags in the top three bits.
    pub fn to_compressed(&self) -> [u8; 48] {
        crate::counter::uncounted(|| {
            let mut out = Fp::conditional_select(&self.x, &Fp::zero(), self.infinity).to_bytes_be();
            out[0] |= FLAG_COMPRESSED;
            if bool::from(self.infinity) {
                out[0] |= FLAG_INFINITY;
            } else if bool::from(self.y.lexicographically_largest()) {
                out[0] |= FLAG_SIGN;
            }
            out
        })
    }

    /// 96 bytes: `x || y`.
    pub fn to_uncompressed(&self) -> [u8; 96] {
        crate::counter::uncounted(|| {
            let mut out = [0u8; 96];
            if bool::from(self.infinity) {
                out[0] = FLAG_INFINITY;
            } else {
                out[..48].copy_from_slice(&self.x.to_bytes_be());
                out[48..].copy_from_slice(&self.y.to_bytes_be());
            }
            out
        })
    }

    /// Decodes and validates (canonical form, on-curve, subgroup).
    pub fn from_compressed(bytes: &[u8; 48]) -> Result<Self> {
        let mut b = *bytes;
        let (inf, sign) = read_flags(&mut b, true)?;
        if inf {
            return Ok(Self::identity());
        }
        let x = fp_from(&b)?;
        let y2 = x.square() * x + Fp::from_u64(4);
        let y: Fp = Option::from(y2.sqrt()).ok_or(Error::NotOnCurve)?;
        let flip = Choice::from((bool::from(y.lexicographically_largest()) != sign) as u8);
        let y = Fp::conditional_select(&y, &-y, flip);
        Self::checked(x, y)
    }

    pub fn from_uncompressed(bytes: &[u8; 96]) -> Result<Self> {
        let mut b = *bytes;
        let (inf, _) = read_flags(&mut b, false)?;
        if inf {
            return Ok(Self::identity());
        }
        Self::checked(fp_from(&b[..48])?, fp_from(&b[48..])?)
    }

    fn checked(x: Fp, y: Fp) -> Result<Self> {
        let p = Self::from_xy(x, y)?;
        if bool::from(p.is_torsion_free()) {
            Ok(p)
        } else {
            Err(Error::NotInSubgroup)
        }
    }
}
