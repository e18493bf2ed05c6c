//! Extension tower `Fp2 = Fp[a]/(a^2+1)`, `Fp6 = Fp2[b]/(b^3-(1+a))`,
//! `Fp12 = Fp6[g]/(g^2-b)`.
//!
//! Every product descends Karatsuba-style to `Fp`, with no lazy reduction,
//! so the ledger sees exactly the `Fp` work performed.

mod fp12;
mod fp2;
mod fp6;
pub mod frobenius;

pub use fp12::Fp12;
pub use fp2::Fp2;
pub use fp6::Fp6;

/// Forwards the arithmetic operator traits to inherent by-reference methods.
macro_rules! forward_ops {
    ($t:ident) => {
        impl core::ops::Add for $t {
            type Output = $t;
            #[inline]
            fn add(self, rhs: $t) -> $t {
                $t::add(&self, &rhs)
            }
        }
        impl core::ops::Sub for $t {
            type Output = $t;
            #[inline]
            fn sub(self, rhs: $t) -> $t {
                $t::sub(&self, &rhs)
            }
        }
        impl core::ops::Mul for $t {
            type Output = $t;
            #[inline]
            fn mul(self, rhs: $t) -> $t {
                $t::mul(&self, &rhs)
            }
        }
        impl core::ops::Neg for $t {
            type Output = $t;
            #[inline]
            fn neg(self) -> $t {
                $t::neg(&self)
            }
        }
        impl core::ops::AddAssign for $t {
            #[inline]
            fn add_assign(&mut self, rhs: $t) {
                *self = $t::add(self, &rhs);
            }
        }
        impl core::ops::SubAssign for $t {
            #[inline]
            fn sub_assign(&mut self, rhs: $t) {
                *self = $t::sub(self, &rhs);
            }
        }
        impl core::ops::MulAssign for $t {
            #[inline]
            fn mul_assign(&mut self, rhs: $t) {
                *self = $t::mul(self, &rhs);
            }
        }
    };
}

pub(crate) use forward_ops;

/// Little-endian limbs of a non-negative big integer (public exponents).
pub(crate) fn exp_limbs(e: &num_bigint::BigUint) -> Vec<u64> {
    e.iter_u64_digits().collect()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::counter;
    use crate::error::Error;
    use crate::field::Fp;
    use crate::params::SystemParams;

    fn rfp(rng: &mut StdRng) -> Fp {
        let bytes: Vec<u8> = (0..64).map(|_| rng.gen()).collect();
        Fp::from_biguint(&(BigUint::from_bytes_le(&bytes) % &SystemParams::get().p)).unwrap()
    }

    fn rfp2(rng: &mut StdRng) -> Fp2 {
        Fp2::new(rfp(rng), rfp(rng))
    }

    fn rfp6(rng: &mut StdRng) -> Fp6 {
        Fp6::new(rfp2(rng), rfp2(rng), rfp2(rng))
    }

    fn rfp12(rng: &mut StdRng) -> Fp12 {
        Fp12::new(rfp6(rng), rfp6(rng))
    }

    /// `f^((p^6 - 1)(p^2 + 1))`, which lies in the cyclotomic subgroup.
    fn easy_part(f: &Fp12) -> Fp12 {
        let t = f.conjugate() * f.invert().unwrap();
        t.frobenius_map(2) * t
    }

    #[test]
    fn defining_relations() {
        let a = Fp2::alpha();
        assert_eq!(a * a, -Fp2::one());
        let one_plus_a = Fp2::one() + a;
        assert_eq!(one_plus_a.square(), a.double());
        let b = Fp6::new(Fp2::zero(), Fp2::one(), Fp2::zero());
        assert_eq!(b * b * b, Fp6::from_fp2(one_plus_a));
        let g = Fp12::new(Fp6::zero(), Fp6::one());
        assert_eq!(g * g, Fp12::from_fp6(b));
    }

    #[test]
    fn exact_fp2_costs() {
        let mut rng = StdRng::seed_from_u64(10);
        let (x, y) = (rfp2(&mut rng), rfp2(&mut rng));
        let (_, d) = counter::measure(|| x * y);
        assert_eq!((d.m2, d.m1, d.s1), (1, 3, 0));
        let (_, d) = counter::measure(|| x.square());
        assert_eq!((d.s2, d.m1, d.s1), (1, 2, 0));
        let (_, d) = counter::measure(|| x.invert());
        assert_eq!((d.fp_muls(), d.a1, d.i1, d.i2), (4, 2, 1, 1));
        let (_, d) = counter::measure(|| rfp6(&mut rng) * rfp6(&mut rng));
        assert_eq!(d.m2, 6);
        let (a, b) = (rfp12(&mut rng), rfp12(&mut rng));
        let (_, d) = counter::measure(|| a * b);
        assert_eq!(d.m2, 18);
        let (_, d) = counter::measure(|| a.mul_by_014(&x, &y, &x));
        assert_eq!(d.fp_muls(), 39);
    }

    #[test]
    fn field_laws_each_level() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..30 {
            let (a, b, c) = (rfp2(&mut rng), rfp2(&mut rng), rfp2(&mut rng));
            assert_eq!(a * (b + c), a * b + a * c);
            assert_eq!(a.square(), a * a);
            assert_eq!(a * a.invert().unwrap(), Fp2::one());
            let (a, b, c) = (rfp6(&mut rng), rfp6(&mut rng), rfp6(&mut rng));
            assert_eq!((a * b) * c, a * (b * c));
            assert_eq!(a.square(), a * a);
            assert_eq!(a * a.invert().unwrap(), Fp6::one());
            let (a, b, c) = (rfp12(&mut rng), rfp12(&mut rng), rfp12(&mut rng));
            assert_eq!((a * b) * c, a * (b * c));
            assert_eq!(a * (b - c), a * b - a * c);
            assert_eq!(a.square(), a * a);
            assert_eq!(a * a.invert().unwrap(), Fp12::one());
            assert_eq!(a * Fp12::one(), a);
        }
        assert!(bool::from(Fp12::zero().invert().is_none()));
        assert_eq!(Fp2::zero().mont_inv(), Err(Error::ZeroInverse));
        assert_eq!(Fp12::one().invert().unwrap(), Fp12::one());
    }

    #[test]
    fn embedding_commutes() {
        let mut rng = StdRng::seed_from_u64(12);
        let (x, y) = (rfp(&mut rng), rfp(&mut rng));
        let lift = |v: Fp| Fp12::from_fp6(Fp6::from_fp2(Fp2::from_fp(v)));
        assert_eq!(lift(x) * lift(y), lift(x * y));
        assert_eq!(lift(x) + lift(y), lift(x + y));
        assert_eq!(lift(x).invert().unwrap(), lift(x.invert().unwrap()));
    }

    #[test]
    fn sparse_product_matches_dense() {
        let mut rng = StdRng::seed_from_u64(13);
        let f = rfp12(&mut rng);
        let (c0, c1, c4) = (rfp2(&mut rng), rfp2(&mut rng), rfp2(&mut rng));
        let dense = Fp12::new(
            Fp6::new(c0, c1, Fp2::zero()),
            Fp6::new(Fp2::zero(), c4, Fp2::zero()),
        );
        assert_eq!(f.mul_by_014(&c0, &c1, &c4), f * dense);
    }

    #[test]
    fn frobenius_maps() {
        let mut rng = StdRng::seed_from_u64(14);
        let a = rfp12(&mut rng);
        let mut x = a;
        for _ in 0..12 {
            x = x.frobenius(1).unwrap();
        }
        assert_eq!(x, a);
        let f1 = a.frobenius(1).unwrap();
        assert_eq!(a.frobenius(2).unwrap(), f1.frobenius(1).unwrap());
        assert_eq!(a.frobenius(3).unwrap(), a.frobenius(2).unwrap().frobenius(1).unwrap());
        assert_eq!(a.frobenius(6).unwrap(), a.frobenius(3).unwrap().frobenius(3).unwrap());
        let fixed = Fp12::from_fp6(Fp6::from_fp2(Fp2::from_fp(rfp(&mut rng))));
        assert_eq!(fixed.frobenius(1).unwrap(), fixed);
        assert_eq!(a.frobenius(4), Err(Error::UnsupportedFrobeniusPower(4)));
        // multiplicative
        let b = rfp12(&mut rng);
        assert_eq!((a * b).frobenius(1).unwrap(), f1 * b.frobenius(1).unwrap());
        assert!(frobenius::self_check());
    }

    #[test]
    fn cyclotomic_square_agrees_and_is_cheaper() {
        let mut rng = StdRng::seed_from_u64(15);
        for _ in 0..50 {
            let c = easy_part(&rfp12(&mut rng));
            assert_eq!(c.cyclotomic_square(), c.square());
            assert_eq!(c.conjugate() * c, Fp12::one());
        }
        assert_eq!(Fp12::one().cyclotomic_square(), Fp12::one());
        let c = easy_part(&rfp12(&mut rng));
        let (_, cyc) = counter::measure(|| c.cyclotomic_square());
        let (_, gen) = counter::measure(|| c.square());
        assert!(cyc.fp_muls() < gen.fp_muls());
        assert_eq!(cyc.fp_muls(), 18);
        assert_eq!(gen.fp_muls(), 36);
    }

    #[test]
    fn fp2_sqrt() {
        let mut rng = StdRng::seed_from_u64(16);
        for _ in 0..20 {
            let x = rfp2(&mut rng);
            let s = x.square();
            let r = s.sqrt().unwrap();
            assert!(r == x || r == -x);
        }
        assert_eq!(Fp2::zero().sqrt().unwrap(), Fp2::zero());
        // a non-residue in Fp2: the sextic non-residue 1 + a
        assert!(bool::from(Fp2::new(Fp::one(), Fp::one()).sqrt().is_none()));
    }

    #[test]
    fn fp12_bytes_roundtrip() {
        let mut rng = StdRng::seed_from_u64(17);
        let a = rfp12(&mut rng);
        let b = a.to_bytes();
        assert_eq!(b.len(), 576);
        assert_eq!(&b[..48], &a.c0.c0.c0.to_bytes_be());
        assert_eq!(&b[48..96], &a.c0.c0.c1.to_bytes_be());
        assert_eq!(Fp12::from_bytes(&b).unwrap(), a);
        assert!(Fp12::from_bytes(&b[1..]).is_err());
    }
}
