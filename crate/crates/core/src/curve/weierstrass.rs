//! Short Weierstrass curves `y^2 = x^3 + b` in homogeneous projective
//! coordinates, with the complete `a = 0` formulas of Renes, Costello and
//! Batina (full addition, mixed addition, doubling).

use core::fmt;

use subtle::{Choice, ConditionallySelectable, ConstantTimeEq, CtOption};

use super::scalar::{Scalar, SCALAR_BITS};
use crate::counter;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::tower::Fp2;

/// Coordinate field of one of the two pairing groups, carrying its curve
/// constant and generator.
pub trait CurveField:
    Copy + Default + PartialEq + Eq + fmt::Debug + ConditionallySelectable + ConstantTimeEq
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> Choice;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn square(&self) -> Self;
    fn neg(&self) -> Self;
    fn invert(&self) -> CtOption<Self>;
    /// The curve constant `b`.
    fn b() -> Self;
    /// `3b * self`, by additions only.
    fn mul_by_3b(&self) -> Self;
    /// Affine coordinates of the standard generator.
    fn generator() -> (Self, Self);
}

impl CurveField for Fp {
    fn zero() -> Self {
        Fp::zero()
    }
    fn one() -> Self {
        Fp::one()
    }
    fn is_zero(&self) -> Choice {
        Fp::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp::mul(self, rhs)
    }
    fn square(&self) -> Self {
        Fp::square(self)
    }
    fn neg(&self) -> Self {
        Fp::neg(self)
    }
    fn invert(&self) -> CtOption<Self> {
        Fp::invert(self)
    }
    fn b() -> Self {
        counter::uncounted(|| Fp::from_u64(4))
    }
    fn mul_by_3b(&self) -> Self {
        self.mul_small(12)
    }
    fn generator() -> (Self, Self) {
        super::g1::generator_xy()
    }
}

impl CurveField for Fp2 {
    fn zero() -> Self {
        Fp2::zero()
    }
    fn one() -> Self {
        Fp2::one()
    }
    fn is_zero(&self) -> Choice {
        Fp2::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp2::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp2::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp2::mul(self, rhs)
    }
    fn square(&self) -> Self {
        Fp2::square(self)
    }
    fn neg(&self) -> Self {
        Fp2::neg(self)
    }
    fn invert(&self) -> CtOption<Self> {
        Fp2::invert(self)
    }
    fn b() -> Self {
        counter::uncounted(|| Fp2::new(Fp::from_u64(4), Fp::from_u64(4)))
    }
    fn mul_by_3b(&self) -> Self {
        self.mul_by_nonresidue().mul_small(12)
    }
    fn generator() -> (Self, Self) {
        super::g2::generator_xy()
    }
}

/// Affine point; the identity is flagged rather than encoded.
#[derive(Clone, Copy)]
pub struct Affine<F: CurveField> {
    pub(crate) x: F,
    pub(crate) y: F,
    pub(crate) infinity: Choice,
}

/// Homogeneous projective point `(X : Y : Z)`; the identity is `(0 : 1 : 0)`.
#[derive(Clone, Copy)]
pub struct Projective<F: CurveField> {
    pub(crate) x: F,
    pub(crate) y: F,
    pub(crate) z: F,
}

impl<F: CurveField> Affine<F> {
    pub fn identity() -> Self {
        Affine { x: F::zero(), y: F::one(), infinity: Choice::from(1) }
    }

    pub fn generator() -> Self {
        let (x, y) = F::generator();
        Affine { x, y, infinity: Choice::from(0) }
    }

    /// Validated construction: rejects points off the curve. Subgroup
    /// membership is checked separately.
    pub fn from_xy(x: F, y: F) -> Result<Self> {
        let p = Affine { x, y, infinity: Choice::from(0) };
        if bool::from(p.is_on_curve()) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn x(&self) -> F {
        self.x
    }

    pub fn y(&self) -> F {
        self.y
    }

    pub fn is_identity(&self) -> Choice {
        self.infinity
    }

    pub fn is_on_curve(&self) -> Choice {
        let lhs = self.y.square();
        let rhs = self.x.square().mul(&self.x).add(&F::b());
        lhs.ct_eq(&rhs) | self.infinity
    }

    pub fn neg(&self) -> Self {
        let y = F::conditional_select(&self.y.neg(), &F::one(), self.infinity);
        Affine { x: self.x, y, infinity: self.infinity }
    }

    pub fn to_projective(&self) -> Projective<F> {
        Projective {
            x: self.x,
            y: self.y,
            z: F::conditional_select(&F::one(), &F::zero(), self.infinity),
        }
    }

    /// `q * self == identity`.
    pub fn is_torsion_free(&self) -> Choice {
        ecsm(&Scalar::Q, self).is_identity()
    }
}

impl<F: CurveField> Projective<F> {
    pub fn identity() -> Self {
        Projective { x: F::zero(), y: F::one(), z: F::zero() }
    }

    pub fn generator() -> Self {
        Affine::generator().to_projective()
    }

    /// The identity with `Y = lambda`, a blinded starting accumulator.
    pub fn identity_scaled(lambda: &F) -> Self {
        Projective { x: F::zero(), y: *lambda, z: F::zero() }
    }

    pub fn x(&self) -> F {
        self.x
    }

    pub fn y(&self) -> F {
        self.y
    }

    pub fn z(&self) -> F {
        self.z
    }

    pub fn is_identity(&self) -> Choice {
        self.z.is_zero()
    }

    pub fn is_on_curve(&self) -> Choice {
        // Y^2 Z = X^3 + b Z^3
        let lhs = self.y.square().mul(&self.z);
        let z3 = self.z.square().mul(&self.z);
        let rhs = self.x.square().mul(&self.x).add(&F::b().mul(&z3));
        lhs.ct_eq(&rhs) & !(self.is_identity() & self.y.is_zero())
    }

    pub fn neg(&self) -> Self {
        Projective { x: self.x, y: self.y.neg(), z: self.z }
    }

    /// `(lX : lY : lZ)`, the same point.
    pub fn scale(&self, lambda: &F) -> Self {
        Projective { x: self.x.mul(lambda), y: self.y.mul(lambda), z: self.z.mul(lambda) }
    }

    /// Complete addition, 12M + 2 m3b + 19A.
    pub fn add(&self, rhs: &Self) -> Self {
        let (x1, y1, z1) = (&self.x, &self.y, &self.z);
        let (x2, y2, z2) = (&rhs.x, &rhs.y, &rhs.z);
        let t0 = x1.mul(x2);
        let t1 = y1.mul(y2);
        let t2 = z1.mul(z2);
        let t3 = x1.add(y1).mul(&x2.add(y2)).sub(&t0.add(&t1));
        let t4 = y1.add(z1).mul(&y2.add(z2)).sub(&t1.add(&t2));
        let y3 = x1.add(z1).mul(&x2.add(z2));
        let y3 = y3.sub(&t0.add(&t2));
        let x3 = t0.add(&t0);
        let t0 = x3.add(&t0);
        let t2 = t2.mul_by_3b();
        let z3 = t1.add(&t2);
        let t1 = t1.sub(&t2);
        let y3 = y3.mul_by_3b();
        let x3 = t4.mul(&y3);
        let t2 = t3.mul(&t1);
        let x3 = t2.sub(&x3);
        let y3 = y3.mul(&t0);
        let t1 = t1.mul(&z3);
        let y3 = t1.add(&y3);
        let t0 = t0.mul(&t3);
        let z3 = z3.mul(&t4);
        let z3 = z3.add(&t0);
        Projective { x: x3, y: y3, z: z3 }
    }

    /// Mixed addition with an affine non-identity point, 11M + 2 m3b + 13A.
    pub(crate) fn add_mixed_raw(&self, rhs: &Affine<F>) -> Self {
        let (x1, y1, z1) = (&self.x, &self.y, &self.z);
        let (x2, y2) = (&rhs.x, &rhs.y);
        let t0 = x1.mul(x2);
        let t1 = y1.mul(y2);
        let t3 = x2.add(y2).mul(&x1.add(y1));
        let t4 = t0.add(&t1);
        let t3 = t3.sub(&t4);
        let t4 = y2.mul(z1).add(y1);
        let y3 = x2.mul(z1).add(x1);
        let x3 = t0.add(&t0);
        let t0 = x3.add(&t0);
        let t2 = z1.mul_by_3b();
        let z3 = t1.add(&t2);
        let t1 = t1.sub(&t2);
        let y3 = y3.mul_by_3b();
        let x3 = t4.mul(&y3);
        let t2 = t3.mul(&t1);
        let x3 = t2.sub(&x3);
        let y3 = y3.mul(&t0);
        let t1 = t1.mul(&z3);
        let y3 = t1.add(&y3);
        let t0 = t0.mul(&t3);
        let z3 = z3.mul(&t4);
        let z3 = z3.add(&t0);
        Projective { x: x3, y: y3, z: z3 }
    }

    /// `self + rhs` for any affine `rhs`, identity included.
    pub fn add_affine(&self, rhs: &Affine<F>) -> Self {
        let sum = self.add_mixed_raw(&Affine::conditional_select(rhs, &Affine::generator(), rhs.infinity));
        Self::conditional_select(&sum, self, rhs.infinity)
    }

    /// Exception-free doubling, 6M + 2S + 1 m3b + 9A.
    pub fn double(&self) -> Self {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let t0 = y.square();
        let z3 = t0.add(&t0);
        let z3 = z3.add(&z3);
        let z3 = z3.add(&z3);
        let t1 = y.mul(z);
        let t2 = z.square();
        let t2 = t2.mul_by_3b();
        let x3 = t2.mul(&z3);
        let y3 = t0.add(&t2);
        let z3 = t1.mul(&z3);
        let t1 = t2.add(&t2);
        let t2 = t1.add(&t2);
        let t0 = t0.sub(&t2);
        let y3 = t0.mul(&y3);
        let y3 = x3.add(&y3);
        let t1 = x.mul(y);
        let x3 = t0.mul(&t1);
        let x3 = x3.add(&x3);
        Projective { x: x3, y: y3, z: z3 }
    }

    /// One inversion and two multiplications.
    pub fn to_affine(&self) -> Affine<F> {
        let zinv = self.z.invert().unwrap_or(F::zero());
        let x = self.x.mul(&zinv);
        let y = self.y.mul(&zinv);
        let infinity = self.is_identity();
        Affine {
            x: F::conditional_select(&x, &F::zero(), infinity),
            y: F::conditional_select(&y, &F::one(), infinity),
            infinity,
        }
    }
}

/// Double-and-add-always over exactly 255 bits starting from `start`
/// (an encoding of the identity). The add result is kept or discarded by
/// mask, so the operation sequence never depends on `k`. An identity base
/// is swapped for the generator and the result masked back.
pub(crate) fn ecsm_projective<F: CurveField>(
    k: &Scalar,
    base: &Affine<F>,
    start: Projective<F>,
) -> Projective<F> {
    let b = Affine::conditional_select(base, &Affine::generator(), base.infinity);
    let mut acc = start;
    for i in (0..SCALAR_BITS).rev() {
        acc = acc.double();
        let sum = acc.add_mixed_raw(&b);
        acc = Projective::conditional_select(&acc, &sum, k.bit(i));
    }
    Projective::conditional_select(&acc, &Projective::identity(), base.infinity)
}

/// Constant-time `k * P`, returned in affine form.
pub fn ecsm<F: CurveField>(k: &Scalar, p: &Affine<F>) -> Affine<F> {
    ecsm_projective(k, p, Projective::identity()).to_affine()
}

/// Shamir-Straus `k1 * P1 + k2 * P2` over the low `bits` bits of both
/// scalars: one doubling and one complete addition of a masked table
/// lookup per bit.
pub(crate) fn multi_exp_bits<F: CurveField>(
    k1: &Scalar,
    p1: &Projective<F>,
    k2: &Scalar,
    p2: &Projective<F>,
    bits: usize,
    lambda: Option<&F>,
) -> Projective<F> {
    let mut table = [Projective::identity(), *p1, *p2, p1.add(p2)];
    if let Some(l) = lambda {
        for t in table.iter_mut().skip(1) {
            *t = t.scale(l);
        }
    }
    let mut acc = table[0];
    for i in (0..bits).rev() {
        acc = acc.double();
        let idx = k1.bit(i).unwrap_u8() as u32 | ((k2.bit(i).unwrap_u8() as u32) << 1);
        let mut entry = table[0];
        for (j, t) in table.iter().enumerate().skip(1) {
            entry = Projective::conditional_select(&entry, t, (j as u32).ct_eq(&idx));
        }
        acc = acc.add(&entry);
    }
    acc
}

/// `k1 * P1 + k2 * P2` over the full 255-bit scalar length.
pub fn multi_exp<F: CurveField>(
    k1: &Scalar,
    p1: &Projective<F>,
    k2: &Scalar,
    p2: &Projective<F>,
) -> Projective<F> {
    multi_exp_bits(k1, p1, k2, p2, SCALAR_BITS, None)
}

impl<F: CurveField> ConditionallySelectable for Affine<F> {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        Affine {
            x: F::conditional_select(&a.x, &b.x, choice),
            y: F::conditional_select(&a.y, &b.y, choice),
            infinity: Choice::conditional_select(&a.infinity, &b.infinity, choice),
        }
    }
}

impl<F: CurveField> ConditionallySelectable for Projective<F> {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        Projective {
            x: F::conditional_select(&a.x, &b.x, choice),
            y: F::conditional_select(&a.y, &b.y, choice),
            z: F::conditional_select(&a.z, &b.z, choice),
        }
    }
}

impl<F: CurveField> ConstantTimeEq for Affine<F> {
    fn ct_eq(&self, other: &Self) -> Choice {
        (self.infinity & other.infinity)
            | (!self.infinity & !other.infinity & self.x.ct_eq(&other.x) & self.y.ct_eq(&other.y))
    }
}

impl<F: CurveField> ConstantTimeEq for Projective<F> {
    fn ct_eq(&self, other: &Self) -> Choice {
        counter::uncounted(|| {
            let x1 = self.x.mul(&other.z);
            let x2 = other.x.mul(&self.z);
            let y1 = self.y.mul(&other.z);
            let y2 = other.y.mul(&self.z);
            let a = self.is_identity();
            let b = other.is_identity();
            (a & b) | (!a & !b & x1.ct_eq(&x2) & y1.ct_eq(&y2))
        })
    }
}

impl<F: CurveField> PartialEq for Affine<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ct_eq(other).into()
    }
}

impl<F: CurveField> Eq for Affine<F> {}

impl<F: CurveField> PartialEq for Projective<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ct_eq(other).into()
    }
}

impl<F: CurveField> Eq for Projective<F> {}

impl<F: CurveField> fmt::Debug for Affine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if bool::from(self.infinity) {
            write!(f, "Affine(identity)")
        } else {
            f.debug_struct("Affine").field("x", &self.x).field("y", &self.y).finish()
        }
    }
}

impl<F: CurveField> fmt::Debug for Projective<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = counter::uncounted(|| self.to_affine());
        write!(f, "Projective({a:?})")
    }
}

impl<F: CurveField> Default for Affine<F> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<F: CurveField> Default for Projective<F> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<F: CurveField> From<Affine<F>> for Projective<F> {
    fn from(a: Affine<F>) -> Self {
        a.to_projective()
    }
}

impl<F: CurveField> From<Projective<F>> for Affine<F> {
    fn from(p: Projective<F>) -> Self {
        p.to_affine()
    }
}

impl<F: CurveField> core::ops::Add for Projective<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Projective::add(&self, &rhs)
    }
}

impl<F: CurveField> core::ops::Sub for Projective<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Projective::add(&self, &rhs.neg())
    }
}

impl<F: CurveField> core::ops::Neg for Projective<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Projective::neg(&self)
    }
}

impl<F: CurveField> core::iter::Sum for Projective<F> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::identity(), |a, b| a.add(&b))
    }
}
