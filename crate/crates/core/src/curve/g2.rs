//! `G2`: the order-q subgroup of the twist `E'(Fp2): y^2 = x^3 + 4(1+a)`,
//! with the skew Frobenius endomorphism and scalar splitting.

use std::sync::OnceLock;

use subtle::{Choice, ConditionallySelectable};

use super::g1::{read_flags, FLAG_COMPRESSED, FLAG_INFINITY, FLAG_SIGN};
use super::scalar::{Scalar, HALF_BITS};
use super::weierstrass::{multi_exp_bits, Affine, Projective};
use crate::counter;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::params::SystemParams;
use crate::tower::{exp_limbs, Fp2};

pub type G2Affine = Affine<Fp2>;
pub type G2Projective = Projective<Fp2>;

const GX0: &str = "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8";
const GX1: &str = "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e";
const GY0: &str = "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e193548608b82801";
const GY1: &str = "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be";

pub(crate) fn generator_xy() -> (Fp2, Fp2) {
    static G: OnceLock<(Fp2, Fp2)> = OnceLock::new();
    *G.get_or_init(|| {
        (
            Fp2::new(Fp::from_hex(GX0), Fp::from_hex(GX1)),
            Fp2::new(Fp::from_hex(GY0), Fp::from_hex(GY1)),
        )
    })
}

/// `(1/(1+a)^((p-1)/3), 1/(1+a)^((p-1)/2))`.
fn psi_coefficients() -> (Fp2, Fp2) {
    static C: OnceLock<(Fp2, Fp2)> = OnceLock::new();
    *C.get_or_init(|| {
        counter::uncounted(|| {
            let p = &SystemParams::get().p;
            let xi = Fp2::new(Fp::one(), Fp::one());
            let cx = xi.pow_vartime(&exp_limbs(&((p - 1u8) / 3u8)));
            let cy = xi.pow_vartime(&exp_limbs(&((p - 1u8) / 2u8)));
            (cx.invert().unwrap(), cy.invert().unwrap())
        })
    })
}

impl Projective<Fp2> {
    /// Skew Frobenius map `psi(P) = p * P` on G2: coordinate conjugation
    /// and two constant multiplications.
    pub fn skew_frobenius(&self) -> Self {
        let (cx, cy) = psi_coefficients();
        Projective {
            x: self.x.conjugate().mul(&cx),
            y: self.y.conjugate().mul(&cy),
            z: self.z.conjugate(),
        }
    }
}

/// `k * P` as `k1 * P + k2 * psi^2(P)` with `k = k1 + k2 u^2`: a 128-bit
/// shared-doubling multi-exponentiation. `lambda` blinds the table.
pub(crate) fn ecsm_split_projective(k: &Scalar, p: &G2Affine, lambda: Option<&Fp2>) -> G2Projective {
    let (k1, k2) = k.split();
    let p1 = p.to_projective();
    let p2 = p1.skew_frobenius().skew_frobenius();
    multi_exp_bits(&k1, &p1, &k2, &p2, HALF_BITS, lambda)
}

/// Split-scalar G2 multiplication, returned in affine form.
pub fn ecsm_split(k: &Scalar, p: &G2Affine) -> G2Affine {
    ecsm_split_projective(k, p, None).to_affine()
}

fn fp_pair_from(bytes: &[u8]) -> Result<Fp2> {
    let get = |b: &[u8]| -> Result<Fp> {
        let arr: &[u8; 48] = b.try_into().unwrap();
        Option::from(Fp::from_bytes_be(arr)).ok_or(Error::Malformed("coordinate not below p"))
    };
    // c1 first
    Ok(Fp2::new(get(&bytes[48..96])?, get(&bytes[..48])?))
}

fn write_fp2(out: &mut [u8], v: &Fp2) {
    out[..48].copy_from_slice(&v.c1.to_bytes_be());
    out[48..96].copy_from_slice(&v.c0.to_bytes_be());
}

impl Affine<Fp2> {
    /// 96 bytes: `x.c1 || x.c0` with flags in the top three bits.
    pub fn to_compressed(&self) -> [u8; 96] {
        counter::uncounted(|| {
            let mut out = [0u8; 96];
            if bool::from(self.infinity) {
                out[0] = FLAG_COMPRESSED | FLAG_INFINITY;
                return out;
            }
            write_fp2(&mut out, &self.x);
            out[0] |= FLAG_COMPRESSED;
            if bool::from(self.y.lexicographically_largest()) {
                out[0] |= FLAG_SIGN;
            }
            out
        })
    }

    /// 192 bytes: `x.c1 || x.c0 || y.c1 || y.c0`.
    pub fn to_uncompressed(&self) -> [u8; 192] {
        counter::uncounted(|| {
            let mut out = [0u8; 192];
            if bool::from(self.infinity) {
                out[0] = FLAG_INFINITY;
                return out;
            }
            write_fp2(&mut out[..96], &self.x);
            write_fp2(&mut out[96..], &self.y);
            out
        })
    }

    pub fn from_compressed(bytes: &[u8; 96]) -> Result<Self> {
        let mut b = *bytes;
        let (inf, sign) = read_flags(&mut b, true)?;
        if inf {
            return Ok(Self::identity());
        }
        let x = fp_pair_from(&b)?;
        let b_const = Fp2::new(Fp::from_u64(4), Fp::from_u64(4));
        let y2 = x.square() * x + b_const;
        let y: Fp2 = Option::from(y2.sqrt()).ok_or(Error::NotOnCurve)?;
        let flip = Choice::from((bool::from(y.lexicographically_largest()) != sign) as u8);
        let y = Fp2::conditional_select(&y, &-y, flip);
        Self::checked(x, y)
    }

    pub fn from_uncompressed(bytes: &[u8; 192]) -> Result<Self> {
        let mut b = *bytes;
        let (inf, _) = read_flags(&mut b, false)?;
        if inf {
            return Ok(Self::identity());
        }
        Self::checked(fp_pair_from(&b[..96])?, fp_pair_from(&b[96..])?)
    }

    fn checked(x: Fp2, y: Fp2) -> Result<Self> {
        let p = Self::from_xy(x, y)?;
        if bool::from(p.is_torsion_free()) {
            Ok(p)
        } else {
            Err(Error::NotInSubgroup)
        }
    }
}
