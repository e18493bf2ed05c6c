use std::sync::OnceLock;

use num_bigint::BigUint;
use subtle::{Choice, ConditionallySelectable, ConstantTimeEq, CtOption};

use super::{exp_limbs, forward_ops};
use crate::counter::{self, OpKind};
use crate::field::Fp;
use crate::params::SystemParams;

/// `c0 + c1*a` with `a^2 = -1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Fp2 {
    pub c0: Fp,
    pub c1: Fp,
}

impl Fp2 {
    pub const fn new(c0: Fp, c1: Fp) -> Self {
        Fp2 { c0, c1 }
    }

    pub const fn zero() -> Self {
        Fp2 { c0: Fp::zero(), c1: Fp::zero() }
    }

    pub const fn one() -> Self {
        Fp2 { c0: Fp::one(), c1: Fp::zero() }
    }

    /// The adjoined root `a`.
    pub const fn alpha() -> Self {
        Fp2 { c0: Fp::zero(), c1: Fp::one() }
    }

    pub fn from_fp(c0: Fp) -> Self {
        Fp2 { c0, c1: Fp::zero() }
    }

    pub fn is_zero(&self) -> Choice {
        self.c0.is_zero() & self.c1.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        counter::record(OpKind::Fp2Add);
        Fp2 { c0: self.c0.add(&rhs.c0), c1: self.c1.add(&rhs.c1) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        counter::record(OpKind::Fp2Add);
        Fp2 { c0: self.c0.sub(&rhs.c0), c1: self.c1.sub(&rhs.c1) }
    }

    pub fn double(&self) -> Self {
        self.add(self)
    }

    pub fn neg(&self) -> Self {
        counter::record(OpKind::Fp2Add);
        Fp2 { c0: self.c0.neg(), c1: self.c1.neg() }
    }

    pub fn conjugate(&self) -> Self {
        Fp2 { c0: self.c0, c1: self.c1.neg() }
    }

    /// Karatsuba: three `Fp` products.
    pub fn mul(&self, rhs: &Self) -> Self {
        counter::record(OpKind::Fp2Mul);
        let v0 = self.c0.mul(&rhs.c0);
        let v1 = self.c1.mul(&rhs.c1);
        let s = self.c0.add(&self.c1).mul(&rhs.c0.add(&rhs.c1));
        Fp2 { c0: v0.sub(&v1), c1: s.sub(&v0).sub(&v1) }
    }

    /// Complex method: two `Fp` products.
    pub fn square(&self) -> Self {
        counter::record(OpKind::Fp2Sqr);
        let c0 = self.c0.add(&self.c1).mul(&self.c0.sub(&self.c1));
        let c1 = self.c0.mul(&self.c1).double();
        Fp2 { c0, c1 }
    }

    pub fn mul_by_fp(&self, k: &Fp) -> Self {
        Fp2 { c0: self.c0.mul(k), c1: self.c1.mul(k) }
    }

    /// Multiplication by the sextic non-residue `1 + a`.
    pub fn mul_by_nonresidue(&self) -> Self {
        Fp2 { c0: self.c0.sub(&self.c1), c1: self.c0.add(&self.c1) }
    }

    /// `k * self` by repeated addition.
    pub fn mul_small(&self, k: u32) -> Self {
        debug_assert!(k >= 1);
        let mut acc = *self;
        for _ in 1..k {
            acc = acc.add(self);
        }
        acc
    }

    /// Norm-map inverse: `(c0 - c1 a) / (c0^2 + c1^2)`, costing
    /// 4 M1 + 2 A1 + I1.
    pub fn invert(&self) -> CtOption<Self> {
        counter::record(OpKind::Fp2Inv);
        let t = self.c0.square().add(&self.c1.square());
        t.invert().map(|ti| Fp2 { c0: self.c0.mul(&ti), c1: self.c1.mul(&ti).neg() })
    }

    pub fn mont_inv(&self) -> crate::Result<Self> {
        Option::from(self.invert()).ok_or(crate::Error::ZeroInverse)
    }

    /// `self^p`.
    pub fn frobenius_map(&self) -> Self {
        self.conjugate()
    }

    /// `self^e` for a public little-endian exponent.
    pub fn pow_vartime(&self, e: &[u64]) -> Self {
        let mut acc = Self::one();
        let mut started = false;
        for limb in e.iter().rev() {
            for i in (0..64).rev() {
                if started {
                    acc = acc.square();
                }
                if (limb >> i) & 1 == 1 {
                    acc = if started { acc.mul(self) } else { *self };
                    started = true;
                }
            }
        }
        acc
    }

    /// Square root for `p = 3 mod 4` (Adj and Rodriguez-Henriquez, alg. 9).
    pub fn sqrt(&self) -> CtOption<Self> {
        let (e1, e2) = sqrt_exponents();
        let a1 = self.pow_vartime(e1);
        let alpha = a1.square().mul(self);
        let x0 = a1.mul(self);
        let minus_one = alpha.ct_eq(&Self::one().neg());
        let sub_root = Fp2 { c0: x0.c1.neg(), c1: x0.c0 };
        let gen_root = alpha.add(&Self::one()).pow_vartime(e2).mul(&x0);
        let root = Self::conditional_select(&gen_root, &sub_root, minus_one);
        let root = Self::conditional_select(&root, &Self::zero(), self.is_zero());
        CtOption::new(root, root.square().ct_eq(self))
    }

    /// `sgn0` for a degree-2 extension.
    pub fn sgn0(&self) -> Choice {
        self.c0.sgn0() | (self.c0.is_zero() & self.c1.sgn0())
    }

    /// `self > -self`, comparing `c1` first.
    pub fn lexicographically_largest(&self) -> Choice {
        self.c1.lexicographically_largest()
            | (self.c1.is_zero() & self.c0.lexicographically_largest())
    }
}

/// `((p-3)/4, (p-1)/2)` as limbs.
fn sqrt_exponents() -> (&'static [u64], &'static [u64]) {
    static E: OnceLock<(Vec<u64>, Vec<u64>)> = OnceLock::new();
    let e = E.get_or_init(|| {
        let p: &BigUint = &SystemParams::get().p;
        (exp_limbs(&((p - 3u8) >> 2)), exp_limbs(&((p - 1u8) >> 1)))
    });
    (&e.0, &e.1)
}

impl ConstantTimeEq for Fp2 {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.c0.ct_eq(&other.c0) & self.c1.ct_eq(&other.c1)
    }
}

impl ConditionallySelectable for Fp2 {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        Fp2 {
            c0: Fp::conditional_select(&a.c0, &b.c0, choice),
            c1: Fp::conditional_select(&a.c1, &b.c1, choice),
        }
    }
}

impl From<Fp> for Fp2 {
    fn from(c0: Fp) -> Self {
        Fp2::from_fp(c0)
    }
}

forward_ops!(Fp2);
