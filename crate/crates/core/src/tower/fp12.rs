use subtle::{Choice, ConditionallySelectable, ConstantTimeEq, CtOption};

use super::{forward_ops, frobenius, Fp2, Fp6};
use crate::error::{Error, Result};
use crate::field::Fp;

/// `c0 + c1*g` with `g^2 = b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Fp12 {
    pub c0: Fp6,
    pub c1: Fp6,
}

impl Fp12 {
    pub const BYTES: usize = 12 * Fp::BYTES;

    pub const fn new(c0: Fp6, c1: Fp6) -> Self {
        Fp12 { c0, c1 }
    }

    pub const fn zero() -> Self {
        Fp12 { c0: Fp6::zero(), c1: Fp6::zero() }
    }

    pub const fn one() -> Self {
        Fp12 { c0: Fp6::one(), c1: Fp6::zero() }
    }

    pub fn from_fp6(c0: Fp6) -> Self {
        Fp12 { c0, c1: Fp6::zero() }
    }

    pub fn is_zero(&self) -> Choice {
        self.c0.is_zero() & self.c1.is_zero()
    }

    pub fn is_one(&self) -> Choice {
        self.ct_eq(&Self::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Fp12 { c0: self.c0.add(&rhs.c0), c1: self.c1.add(&rhs.c1) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Fp12 { c0: self.c0.sub(&rhs.c0), c1: self.c1.sub(&rhs.c1) }
    }

    pub fn neg(&self) -> Self {
        Fp12 { c0: self.c0.neg(), c1: self.c1.neg() }
    }

    /// `self^(p^6)`; the inverse on the cyclotomic subgroup.
    pub fn conjugate(&self) -> Self {
        Fp12 { c0: self.c0, c1: self.c1.neg() }
    }

    /// Karatsuba: three `Fp6` products (18 in `Fp2`).
    pub fn mul(&self, rhs: &Self) -> Self {
        let aa = self.c0.mul(&rhs.c0);
        let bb = self.c1.mul(&rhs.c1);
        let c1 = self.c0.add(&self.c1).mul(&rhs.c0.add(&rhs.c1)).sub(&aa).sub(&bb);
        Fp12 { c0: aa.add(&bb.mul_by_nonresidue()), c1 }
    }

    /// Complex method: two `Fp6` products.
    pub fn square(&self) -> Self {
        let ab = self.c0.mul(&self.c1);
        let c0 = self
            .c0
            .add(&self.c1)
            .mul(&self.c0.add(&self.c1.mul_by_nonresidue()))
            .sub(&ab)
            .sub(&ab.mul_by_nonresidue());
        Fp12 { c0, c1: ab.double() }
    }

    /// Product with the sparse element `(c0 + c1 b) + (c4 b) g`, the shape
    /// of a line evaluated at a G1 point: 13 `Fp2` products.
    pub fn mul_by_014(&self, c0: &Fp2, c1: &Fp2, c4: &Fp2) -> Self {
        let aa = self.c0.mul_by_01(c0, c1);
        let bb = self.c1.mul_by_1(c4);
        let o = c1.add(c4);
        let t = self.c1.add(&self.c0).mul_by_01(c0, &o).sub(&aa).sub(&bb);
        Fp12 { c0: bb.mul_by_nonresidue().add(&aa), c1: t }
    }

    pub fn invert(&self) -> CtOption<Self> {
        let t = self.c0.square().sub(&self.c1.square().mul_by_nonresidue());
        t.invert().map(|t| Fp12 { c0: self.c0.mul(&t), c1: self.c1.mul(&t).neg() })
    }

    pub fn mont_inv(&self) -> Result<Self> {
        Option::from(self.invert()).ok_or(Error::ZeroInverse)
    }

    /// Granger-Scott squaring, valid on the cyclotomic subgroup: nine `Fp2`
    /// squarings.
    pub fn cyclotomic_square(&self) -> Self {
        fn fp4_square(a: &Fp2, b: &Fp2) -> (Fp2, Fp2) {
            let t0 = a.square();
            let t1 = b.square();
            let c0 = t1.mul_by_nonresidue().add(&t0);
            let c1 = a.add(b).square().sub(&t0).sub(&t1);
            (c0, c1)
        }
        // out = 3t -+ 2z, written as 2(t -+ z) + t
        fn minus(t: &Fp2, z: &Fp2) -> Fp2 {
            t.sub(z).double().add(t)
        }
        fn plus(t: &Fp2, z: &Fp2) -> Fp2 {
            t.add(z).double().add(t)
        }

        let (z0, z4, z3) = (self.c0.c0, self.c0.c1, self.c0.c2);
        let (z2, z1, z5) = (self.c1.c0, self.c1.c1, self.c1.c2);

        let (a0, a1) = fp4_square(&z0, &z1);
        let (b0, b1) = fp4_square(&z2, &z3);
        let (c0, c1) = fp4_square(&z4, &z5);

        Fp12 {
            c0: Fp6::new(minus(&a0, &z0), minus(&b0, &z4), minus(&c0, &z3)),
            c1: Fp6::new(plus(&c1.mul_by_nonresidue(), &z2), plus(&a1, &z1), plus(&b1, &z5)),
        }
    }

    /// `self^(p^k)` for `k` in 1..=3.
    pub(crate) fn frobenius_map(&self, k: usize) -> Self {
        let c = |e: usize, x: &Fp2| {
            let x = if k % 2 == 1 { x.conjugate() } else { *x };
            if e == 0 {
                x
            } else {
                x.mul(&frobenius::coefficient(k, e))
            }
        };
        Fp12 {
            c0: Fp6::new(c(0, &self.c0.c0), c(2, &self.c0.c1), c(4, &self.c0.c2)),
            c1: Fp6::new(c(1, &self.c1.c0), c(3, &self.c1.c1), c(5, &self.c1.c2)),
        }
    }

    /// `self^(p^power)` for power 1, 2, 3 or 6.
    pub fn frobenius(&self, power: u32) -> Result<Self> {
        match power {
            1..=3 => Ok(self.frobenius_map(power as usize)),
            6 => Ok(self.conjugate()),
            other => Err(Error::UnsupportedFrobeniusPower(other)),
        }
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

    /// The twelve `Fp` coefficients, `c0.c0.c0` first.
    pub fn to_fp_coeffs(&self) -> [Fp; 12] {
        let mut out = [Fp::zero(); 12];
        for (i, f6) in [self.c0, self.c1].iter().enumerate() {
            for (j, f2) in [f6.c0, f6.c1, f6.c2].iter().enumerate() {
                out[6 * i + 2 * j] = f2.c0;
                out[6 * i + 2 * j + 1] = f2.c1;
            }
        }
        out
    }

    pub fn from_fp_coeffs(c: &[Fp; 12]) -> Self {
        let f2 = |i: usize| Fp2::new(c[i], c[i + 1]);
        Fp12 {
            c0: Fp6::new(f2(0), f2(2), f2(4)),
            c1: Fp6::new(f2(6), f2(8), f2(10)),
        }
    }

    /// Twelve big-endian 48-byte coefficients, `c0.c0.c0` first.
    pub fn to_bytes(&self) -> Vec<u8> {
        crate::counter::uncounted(|| {
            self.to_fp_coeffs().iter().flat_map(|f| f.to_bytes_be()).collect()
        })
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() != Self::BYTES {
            return Err(Error::Malformed("Fp12 encoding must be 576 bytes"));
        }
        crate::counter::uncounted(|| {
            let mut c = [Fp::zero(); 12];
            for (v, chunk) in c.iter_mut().zip(bytes.chunks_exact(Fp::BYTES)) {
                let arr: &[u8; 48] = chunk.try_into().unwrap();
                *v = Option::from(Fp::from_bytes_be(arr))
                    .ok_or(Error::Malformed("Fp12 coefficient out of range"))?;
            }
            Ok(Self::from_fp_coeffs(&c))
        })
    }
}

impl ConstantTimeEq for Fp12 {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.c0.ct_eq(&other.c0) & self.c1.ct_eq(&other.c1)
    }
}

impl ConditionallySelectable for Fp12 {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        Fp12 {
            c0: Fp6::conditional_select(&a.c0, &b.c0, choice),
            c1: Fp6::conditional_select(&a.c1, &b.c1, choice),
        }
    }
}

forward_ops!(Fp12);
