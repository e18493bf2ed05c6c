use subtle::{Choice, ConditionallySelectable, ConstantTimeEq, CtOption};

use super::{forward_ops, Fp2};

/// `c0 + c1*b + c2*b^2` with `b^3 = 1 + a`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Fp6 {
    pub c0: Fp2,
    pub c1: Fp2,
    pub c2: Fp2,
}

impl Fp6 {
    pub const fn new(c0: Fp2, c1: Fp2, c2: Fp2) -> Self {
        Fp6 { c0, c1, c2 }
    }

    pub const fn zero() -> Self {
        Fp6 { c0: Fp2::zero(), c1: Fp2::zero(), c2: Fp2::zero() }
    }

    pub const fn one() -> Self {
        Fp6 { c0: Fp2::one(), c1: Fp2::zero(), c2: Fp2::zero() }
    }

    pub fn from_fp2(c0: Fp2) -> Self {
        Fp6 { c0, c1: Fp2::zero(), c2: Fp2::zero() }
    }

    pub fn is_zero(&self) -> Choice {
        self.c0.is_zero() & self.c1.is_zero() & self.c2.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Fp6 { c0: self.c0.add(&rhs.c0), c1: self.c1.add(&rhs.c1), c2: self.c2.add(&rhs.c2) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Fp6 { c0: self.c0.sub(&rhs.c0), c1: self.c1.sub(&rhs.c1), c2: self.c2.sub(&rhs.c2) }
    }

    pub fn double(&self) -> Self {
        self.add(self)
    }

    pub fn neg(&self) -> Self {
        Fp6 { c0: self.c0.neg(), c1: self.c1.neg(), c2: self.c2.neg() }
    }

    /// Multiplication by `b`.
    pub fn mul_by_nonresidue(&self) -> Self {
        Fp6 { c0: self.c2.mul_by_nonresidue(), c1: self.c0, c2: self.c1 }
    }

    /// Karatsuba over three coefficients: six `Fp2` products.
    pub fn mul(&self, rhs: &Self) -> Self {
        let v0 = self.c0.mul(&rhs.c0);
        let v1 = self.c1.mul(&rhs.c1);
        let v2 = self.c2.mul(&rhs.c2);
        let t12 = self.c1.add(&self.c2).mul(&rhs.c1.add(&rhs.c2));
        let t01 = self.c0.add(&self.c1).mul(&rhs.c0.add(&rhs.c1));
        let t02 = self.c0.add(&self.c2).mul(&rhs.c0.add(&rhs.c2));
        Fp6 {
            c0: v0.add(&t12.sub(&v1).sub(&v2).mul_by_nonresidue()),
            c1: t01.sub(&v0).sub(&v1).add(&v2.mul_by_nonresidue()),
            c2: t02.sub(&v0).sub(&v2).add(&v1),
        }
    }

    /// Chung-Hasan SQR2: two products and three squarings in `Fp2`.
    pub fn square(&self) -> Self {
        let s0 = self.c0.square();
        let s1 = self.c0.mul(&self.c1).double();
        let s2 = self.c0.sub(&self.c1).add(&self.c2).square();
        let s3 = self.c1.mul(&self.c2).double();
        let s4 = self.c2.square();
        Fp6 {
            c0: s0.add(&s3.mul_by_nonresidue()),
            c1: s1.add(&s4.mul_by_nonresidue()),
            c2: s1.add(&s2).add(&s3).sub(&s0).sub(&s4),
        }
    }

    /// Product with `b1*b`: three `Fp2` products.
    pub fn mul_by_1(&self, b1: &Fp2) -> Self {
        Fp6 {
            c0: self.c2.mul(b1).mul_by_nonresidue(),
            c1: self.c0.mul(b1),
            c2: self.c1.mul(b1),
        }
    }

    /// Product with `b0 + b1*b`: five `Fp2` products.
    pub fn mul_by_01(&self, b0: &Fp2, b1: &Fp2) -> Self {
        let v0 = self.c0.mul(b0);
        let v1 = self.c1.mul(b1);
        let c0 = self.c2.mul(b1).mul_by_nonresidue().add(&v0);
        let c1 = b0.add(b1).mul(&self.c0.add(&self.c1)).sub(&v0).sub(&v1);
        let c2 = self.c2.mul(b0).add(&v1);
        Fp6 { c0, c1, c2 }
    }

    /// Inverse via the adjugate; one `Fp2` inversion.
    pub fn invert(&self) -> CtOption<Self> {
        let t0 = self.c0.square().sub(&self.c1.mul(&self.c2).mul_by_nonresidue());
        let t1 = self.c2.square().mul_by_nonresidue().sub(&self.c0.mul(&self.c1));
        let t2 = self.c1.square().sub(&self.c0.mul(&self.c2));
        let det = self
            .c0
            .mul(&t0)
            .add(&self.c2.mul(&t1).add(&self.c1.mul(&t2)).mul_by_nonresidue());
        det.invert().map(|d| Fp6 { c0: t0.mul(&d), c1: t1.mul(&d), c2: t2.mul(&d) })
    }
}

impl ConstantTimeEq for Fp6 {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.c0.ct_eq(&other.c0) & self.c1.ct_eq(&other.c1) & self.c2.ct_eq(&other.c2)
    }
}

impl ConditionallySelectable for Fp6 {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        Fp6 {
            c0: Fp2::conditional_select(&a.c0, &b.c0, choice),
            c1: Fp2::conditional_select(&a.c1, &b.c1, choice),
            c2: Fp2::conditional_select(&a.c2, &b.c2, choice),
        }
    }
}

forward_ops!(Fp6);
