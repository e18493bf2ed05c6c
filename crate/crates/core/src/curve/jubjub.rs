//! Jubjub: the twisted Edwards curve `-x^2 + y^2 = 1 + d x^2 y^2` over `Fq`
//! with `d = -10240/10241`, in extended coordinates `(X : Y : Z : T)`,
//! `T = XY/Z`. Unified addition (Hisil et al., `a = -1`) is complete on
//! this curve because `d` is a non-square.

use core::fmt;
use std::sync::OnceLock;

use subtle::{Choice, ConditionallySelectable, ConstantTimeEq};

use super::scalar::{Scalar, SCALAR_BITS};
use crate::counter;
use crate::error::{Error, Result};
use crate::field::Fq;

const GX: &str = "3fd2814c43ac65a6f1fbf02d0fd6cce62e3ebb21fd6c54ed4df7b7ffec7beaca";
const GY: &str = "0000000000000000000000000000000000000000000000000000000000000012";

struct Consts {
    d: Fq,
    d2: Fq,
    gx: Fq,
    gy: Fq,
}

fn consts() -> &'static Consts {
    static C: OnceLock<Consts> = OnceLock::new();
    C.get_or_init(|| {
        counter::uncounted(|| {
            let d = -Fq::from_u64(10240) * Fq::from_u64(10241).invert().unwrap();
            Consts { d, d2: d.double(), gx: Fq::from_hex(GX), gy: Fq::from_hex(GY) }
        })
    })
}

/// The curve constant `d`.
pub fn jubjub_d() -> Fq {
    consts().d
}

/// Affine Jubjub point; the identity is `(0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct JubjubAffine {
    x: Fq,
    y: Fq,
}

/// Extended twisted Edwards point.
#[derive(Clone, Copy)]
pub struct JubjubExtended {
    x: Fq,
    y: Fq,
    z: Fq,
    t: Fq,
}

impl JubjubAffine {
    pub fn identity() -> Self {
        JubjubAffine { x: Fq::zero(), y: Fq::one() }
    }

    pub fn generator() -> Self {
        let c = consts();
        JubjubAffine { x: c.gx, y: c.gy }
    }

    /// Validated construction.
    pub fn from_xy(x: Fq, y: Fq) -> Result<Self> {
        let p = JubjubAffine { x, y };
        if bool::from(p.is_on_curve()) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn x(&self) -> Fq {
        self.x
    }

    pub fn y(&self) -> Fq {
        self.y
    }

    pub fn is_on_curve(&self) -> Choice {
        let x2 = self.x.square();
        let y2 = self.y.square();
        let lhs = y2 - x2;
        let rhs = Fq::one() + jubjub_d() * x2 * y2;
        lhs.ct_eq(&rhs)
    }

    pub fn is_identity(&self) -> Choice {
        self.x.is_zero() & self.y.ct_eq(&Fq::one())
    }

    pub fn neg(&self) -> Self {
        JubjubAffine { x: -self.x, y: self.y }
    }

    /// Extended coordinates; costs one multiplication (`T = xy`).
    pub fn to_extended(&self) -> JubjubExtended {
        JubjubExtended { x: self.x, y: self.y, z: Fq::one(), t: self.x * self.y }
    }

    /// 32 bytes: `y` big-endian with the sign of `x` in the top bit.
    pub fn to_bytes(&self) -> [u8; 32] {
        counter::uncounted(|| {
            let mut out = self.y.to_bytes_be();
            out[0] |= (self.x.sgn0().unwrap_u8()) << 7;
            out
        })
    }
}

impl JubjubExtended {
    pub fn identity() -> Self {
        JubjubExtended { x: Fq::zero(), y: Fq::one(), z: Fq::one(), t: Fq::zero() }
    }

    pub fn is_identity(&self) -> Choice {
        self.x.is_zero() & self.y.ct_eq(&self.z)
    }

    /// Unified addition (add-2008-hwcd-3): 9 multiplications.
    pub fn add(&self, rhs: &Self) -> Self {
        let a = self.y.sub(&self.x).mul(&rhs.y.sub(&rhs.x));
        let b = self.y.add(&self.x).mul(&rhs.y.add(&rhs.x));
        let c = self.t.mul(&consts().d2).mul(&rhs.t);
        let d = self.z.mul(&rhs.z).double();
        let e = b.sub(&a);
        let f = d.sub(&c);
        let g = d.add(&c);
        let h = b.add(&a);
        JubjubExtended { x: e.mul(&f), y: g.mul(&h), t: e.mul(&h), z: f.mul(&g) }
    }

    /// Dedicated doubling (dbl-2008-hwcd): 4 multiplications, 4 squarings.
    pub fn double(&self) -> Self {
        let a = self.x.square();
        let b = self.y.square();
        let c = self.z.square().double();
        let d = a.neg();
        let e = self.x.add(&self.y).square().sub(&a).sub(&b);
        let g = d.add(&b);
        let f = g.sub(&c);
        let h = d.sub(&b);
        JubjubExtended { x: e.mul(&f), y: g.mul(&h), t: e.mul(&h), z: f.mul(&g) }
    }

    /// One inversion and two multiplications.
    pub fn to_affine(&self) -> JubjubAffine {
        let zinv = self.z.invert().unwrap_or(Fq::zero());
        JubjubAffine { x: self.x.mul(&zinv), y: self.y.mul(&zinv) }
    }
}

/// Constant-time `k * P` over exactly 255 bits with unified formulas.
pub fn jubjub_ecsm(k: &Scalar, p: &JubjubAffine) -> JubjubAffine {
    let base = p.to_extended();
    let mut acc = JubjubExtended::identity();
    for i in (0..SCALAR_BITS).rev() {
        acc = acc.double();
        let sum = acc.add(&base);
        acc = JubjubExtended::conditional_select(&acc, &sum, k.bit(i));
    }
    acc.to_affine()
}

impl ConditionallySelectable for JubjubExtended {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        JubjubExtended {
            x: Fq::conditional_select(&a.x, &b.x, choice),
            y: Fq::conditional_select(&a.y, &b.y, choice),
            z: Fq::conditional_select(&a.z, &b.z, choice),
            t: Fq::conditional_select(&a.t, &b.t, choice),
        }
    }
}

impl PartialEq for JubjubExtended {
    fn eq(&self, other: &Self) -> bool {
        counter::uncounted(|| {
            self.x * other.z == other.x * self.z && self.y * other.z == other.y * self.z
        })
    }
}

impl Eq for JubjubExtended {}

impl fmt::Debug for JubjubAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JubjubAffine").field("x", &self.x).field("y", &self.y).finish()
    }
}

impl fmt::Debug for JubjubExtended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = counter::uncounted(|| self.to_affine());
        write!(f, "JubjubExtended({a:?})")
    }
}
