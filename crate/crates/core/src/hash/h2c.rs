//! Hash to G1 following the `BLS12381G1_XMD:SHA-256_SSWU_RO_` suite:
//! `expand_message_xmd`, two field elements, simplified SWU onto an
//! 11-isogenous curve, the isogeny back to `E`, and clearing the cofactor
//! with `h_eff = 1 - u`.

use std::sync::OnceLock;

use subtle::{Choice, ConditionallySelectable, ConstantTimeEq};

use super::iso_consts::*;
use super::Sha256;
use crate::counter;
use crate::curve::{G1Affine, G1Projective, Projective};
use crate::field::Fp;

/// Domain separation tag of the BLS signature suite used by this crate.
pub const DST_G1_RO: &[u8] = b"BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_NUL_";

const SSWU_A: &str = "144698a3b8e9433d693a02c96d4982b0ea985383ee66a8d8e8981aefd881ac98936f8da0e0f97f5cf428082d584c1d";
const SSWU_B: &str = "12e2908d11688030018b12e8753eee3b2016c1f0f24f4070a0b9c14fcef35ef55a23215a316ceaa5d1cc48e98e172be0";
const SSWU_Z: u64 = 11;
const H_EFF: u64 = 0xd201_0000_0001_0001;

struct Consts {
    a: Fp,
    b: Fp,
    z: Fp,
    sqrt_minus_z: Fp,
    two_256: Fp,
    xnum: Vec<Fp>,
    xden: Vec<Fp>,
    ynum: Vec<Fp>,
    yden: Vec<Fp>,
}

fn consts() -> &'static Consts {
    static C: OnceLock<Consts> = OnceLock::new();
    C.get_or_init(|| {
        counter::uncounted(|| {
            let z = Fp::from_u64(SSWU_Z);
            let v = |s: &[&str]| s.iter().map(|h| Fp::from_hex(h)).collect::<Vec<_>>();
            let mut two_256 = [0u8; 48];
            two_256[48 - 33] = 1;
            Consts {
                a: Fp::from_hex(SSWU_A),
                b: Fp::from_hex(SSWU_B),
                z,
                sqrt_minus_z: (-z).sqrt().unwrap(),
                two_256: Fp::from_bytes_be(&two_256).unwrap(),
                xnum: v(&ISO11_XNUM),
                xden: v(&ISO11_XDEN),
                ynum: v(&ISO11_YNUM),
                yden: v(&ISO11_YDEN),
            }
        })
    })
}

/// `expand_message_xmd` with SHA-256. Tags longer than 255 bytes are
/// first hashed as the standard prescribes.
pub fn expand_message_xmd(msg: &[u8], dst: &[u8], len: usize) -> Vec<u8> {
    let dst_owned;
    let dst = if dst.len() > 255 {
        let mut h = Sha256::new();
        h.update(b"H2C-OVERSIZE-DST-").update(dst);
        dst_owned = h.finalize();
        &dst_owned[..]
    } else {
        dst
    };
    let ell = len.div_ceil(32);
    assert!(ell <= 255 && len <= 0xffff, "requested output too long");
    let dst_len = [dst.len() as u8];

    let mut h = Sha256::new();
    h.update(&[0u8; 64])
        .update(msg)
        .update(&(len as u16).to_be_bytes())
        .update(&[0])
        .update(dst)
        .update(&dst_len);
    let b0 = h.finalize();

    let mut out = Vec::with_capacity(ell * 32);
    let mut prev = [0u8; 32];
    for i in 1..=ell {
        let mut x = [0u8; 32];
        for (j, v) in x.iter_mut().enumerate() {
            *v = b0[j] ^ prev[j];
        }
        let mut h = Sha256::new();
        h.update(if i == 1 { &b0 } else { &x }).update(&[i as u8]).update(dst).update(&dst_len);
        prev = h.finalize();
        out.extend_from_slice(&prev);
    }
    out.truncate(len);
    out
}

/// Two uniform `Fp` elements from 64-byte chunks, each reduced as
/// `hi * 2^256 + lo`.
pub fn hash_to_field(msg: &[u8], dst: &[u8]) -> [Fp; 2] {
    let bytes = expand_message_xmd(msg, dst, 128);
    let c = consts();
    let elem = |chunk: &[u8]| {
        let limb = |half: &[u8]| {
            let mut b = [0u8; 48];
            b[16..].copy_from_slice(half);
            Fp::from_bytes_be(&b).unwrap()
        };
        limb(&chunk[..32]) * c.two_256 + limb(&chunk[32..])
    };
    [elem(&bytes[..64]), elem(&bytes[64..])]
}

/// `sqrt(u / v)` when it exists, else `sqrt(Z u / v)`, for `p = 3 mod 4`.
fn sqrt_ratio(u: &Fp, v: &Fp) -> (Choice, Fp) {
    let c = consts();
    let tv1 = v.square();
    let tv2 = *u * *v;
    let tv1 = tv1 * tv2;
    let y1 = tv1.pow_p_minus_3_div_4() * tv2;
    let y2 = y1 * c.sqrt_minus_z;
    let tv3 = y1.square() * *v;
    let is_qr = tv3.ct_eq(u);
    (is_qr, Fp::conditional_select(&y2, &y1, is_qr))
}

/// Simplified SWU onto the isogenous curve, straight-line form. Returns
/// `(xn, xd, y)` with affine `x = xn / xd`.
fn sswu(u: &Fp) -> (Fp, Fp, Fp) {
    let c = consts();
    let tv1 = c.z * u.square();
    let tv2 = tv1.square() + tv1;
    let tv3 = c.b * (tv2 + Fp::one());
    let tv4 = c.a * Fp::conditional_select(&c.z, &-tv2, !tv2.is_zero());
    let tv6 = tv4.square();
    let gx_num = (tv3.square() + c.a * tv6) * tv3 + c.b * (tv6 * tv4);
    let tv6 = tv6 * tv4;
    let x = tv1 * tv3;
    let (is_gx1_square, y1) = sqrt_ratio(&gx_num, &tv6);
    let y = tv1 * *u * y1;
    let xn = Fp::conditional_select(&x, &tv3, is_gx1_square);
    let y = Fp::conditional_select(&y, &y1, is_gx1_square);
    let flip = !u.sgn0().ct_eq(&y.sgn0());
    let y = Fp::conditional_select(&y, &-y, flip);
    (xn, tv4, y)
}

/// `sum k_i xn^i xd^(d-i)`: the polynomial in `x = xn/xd`, scaled by `xd^d`.
fn eval_homogeneous(k: &[Fp], xn: &Fp, xd_pows: &[Fp]) -> Fp {
    let d = k.len() - 1;
    let mut acc = k[d];
    for i in (0..d).rev() {
        acc = acc * *xn + k[i] * xd_pows[d - i];
    }
    acc
}

/// SSWU followed by the 11-isogeny, as a projective point on `E`; no
/// inversion.
pub fn map_to_curve(u: &Fp) -> G1Projective {
    let c = consts();
    let (xn, xd, y) = sswu(u);
    let mut pows = vec![Fp::one(), xd];
    for i in 2..=15 {
        pows.push(pows[i - 1] * xd);
    }
    let x_num = eval_homogeneous(&c.xnum, &xn, &pows);
    let x_den = eval_homogeneous(&c.xden, &xn, &pows);
    let y_num = eval_homogeneous(&c.ynum, &xn, &pows);
    let y_den = eval_homogeneous(&c.yden, &xn, &pows);
    let xd_xden = xd * x_den;
    Projective {
        x: x_num * y_den,
        y: y * y_num * xd_xden,
        z: xd_xden * y_den,
    }
}

fn clear_cofactor(p: &G1Projective) -> G1Projective {
    let mut acc = *p;
    for i in (0..63).rev() {
        acc = acc.double();
        if (H_EFF >> i) & 1 == 1 {
            acc = acc.add(p);
        }
    }
    acc
}

/// Deterministic map from `(msg, dst)` to a point of G1.
pub fn hash_to_g1(msg: &[u8], dst: &[u8]) -> G1Affine {
    let [u0, u1] = hash_to_field(msg, dst);
    let q = map_to_curve(&u0).add(&map_to_curve(&u1));
    clear_cofactor(&q).to_affine()
}
