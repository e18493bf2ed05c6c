//! Prime-field arithmetic for the 381-bit base field `Fp` and the 255-bit
//! scalar field `Fq`.
//!
//! Values live in Montgomery form over fixed little-endian 64-bit limbs.
//! Addition and subtraction compute both the raw and the corrected result
//! and pick one by mask; multiplication is CIOS (see [`cios`]); inversion is
//! a fixed square-and-multiply over `m - 2`.

pub(crate) mod cios;
mod fp;
mod fq;

pub use fp::Fp;
pub use fq::Fq;

#[inline(always)]
pub(crate) const fn adc(a: u64, b: u64, carry: u64) -> (u64, u64) {
    let ret = (a as u128) + (b as u128) + (carry as u128);
    (ret as u64, (ret >> 64) as u64)
}

#[inline(always)]
pub(crate) const fn sbb(a: u64, b: u64, borrow: u64) -> (u64, u64) {
    let ret = (a as u128).wrapping_sub((b as u128) + ((borrow >> 63) as u128));
    (ret as u64, (ret >> 64) as u64)
}

/// Generates a Montgomery-form prime field type over `$n` limbs.
macro_rules! prime_field {
    (
        $name:ident, $n:expr, $bytes:expr, scalar_field: $scalar:expr,
        modulus: $modulus:expr, r: $r:expr, r2: $r2:expr, inv: $inv:expr,
        ops: ($mul:ident, $sqr:ident, $add:ident, $sub:ident, $invk:ident)
    ) => {
        #[derive(Clone, Copy, PartialEq, Eq, Hash)]
        pub struct $name(pub(crate) [u64; $n]);

        impl $name {
            pub const MODULUS: [u64; $n] = $modulus;
            const R: [u64; $n] = $r;
            const R2: [u64; $n] = $r2;
            const INV: u64 = $inv;
            /// Canonical big-endian encoding length.
            pub const BYTES: usize = $bytes;

            #[inline]
            pub const fn zero() -> Self {
                $name([0; $n])
            }

            #[inline]
            pub const fn one() -> Self {
                $name(Self::R)
            }

            /// Wraps Montgomery-form limbs without checking them.
            #[doc(hidden)]
            pub const fn from_mont_unchecked(limbs: [u64; $n]) -> Self {
                $name(limbs)
            }

            /// Montgomery-form limbs.
            pub fn mont_limbs(&self) -> [u64; $n] {
                self.0
            }

            pub fn is_zero(&self) -> subtle::Choice {
                subtle::ConstantTimeEq::ct_eq(self, &Self::zero())
            }

            #[inline]
            fn add_raw(&self, rhs: &Self) -> Self {
                let mut sum = [0u64; $n];
                let mut carry = 0;
                for i in 0..$n {
                    (sum[i], carry) = $crate::field::adc(self.0[i], rhs.0[i], carry);
                }
                // Moduli leave at least one spare top bit, so `carry` is 0.
                let mut red = [0u64; $n];
                let mut borrow = 0;
                for i in 0..$n {
                    (red[i], borrow) = $crate::field::sbb(sum[i], Self::MODULUS[i], borrow);
                }
                // borrow is all-ones when sum < modulus
                let mut out = [0u64; $n];
                for i in 0..$n {
                    out[i] = (sum[i] & borrow) | (red[i] & !borrow);
                }
                $name(out)
            }

            #[inline]
            fn sub_raw(&self, rhs: &Self) -> Self {
                let mut d = [0u64; $n];
                let mut borrow = 0;
                for i in 0..$n {
                    (d[i], borrow) = $crate::field::sbb(self.0[i], rhs.0[i], borrow);
                }
                let mut fixed = [0u64; $n];
                let mut carry = 0;
                for i in 0..$n {
                    (fixed[i], carry) = $crate::field::adc(d[i], Self::MODULUS[i], carry);
                }
                let _ = carry;
                let mut out = [0u64; $n];
                for i in 0..$n {
                    out[i] = (fixed[i] & borrow) | (d[i] & !borrow);
                }
                $name(out)
            }

            #[inline]
            pub(crate) fn mul_raw(&self, rhs: &Self) -> Self {
                $name($crate::field::cios::mont_mul(
                    &self.0,
                    &rhs.0,
                    &Self::MODULUS,
                    Self::INV,
                    $scalar,
                ))
            }

            /// Modular addition.
            #[inline]
            pub fn add(&self, rhs: &Self) -> Self {
                $crate::counter::record($crate::counter::OpKind::$add);
                self.add_raw(rhs)
            }

            /// Modular subtraction.
            #[inline]
            pub fn sub(&self, rhs: &Self) -> Self {
                $crate::counter::record($crate::counter::OpKind::$sub);
                self.sub_raw(rhs)
            }

            /// Montgomery product `self * rhs * R^-1`.
            #[inline]
            pub fn mul(&self, rhs: &Self) -> Self {
                $crate::counter::record($crate::counter::OpKind::$mul);
                self.mul_raw(rhs)
            }

            #[inline]
            pub fn square(&self) -> Self {
                $crate::counter::record($crate::counter::OpKind::$sqr);
                self.mul_raw(self)
            }

            #[inline]
            pub fn double(&self) -> Self {
                self.add(self)
            }

            #[inline]
            pub fn neg(&self) -> Self {
                $crate::counter::record($crate::counter::OpKind::$sub);
                Self::zero().sub_raw(self)
            }

            /// `k * self` as `k - 1` chained modular additions.
            pub fn mul_small(&self, k: u32) -> Self {
                debug_assert!(k >= 1);
                let mut acc = *self;
                for _ in 1..k {
                    acc = acc.add(self);
                }
                acc
            }

            /// Inverse by Fermat's little theorem: plain MSB-first
            /// square-and-multiply over `modulus - 2`. The chain depends
            /// only on the modulus; zero maps to zero (flagged by the
            /// returned choice).
            pub fn invert(&self) -> subtle::CtOption<Self> {
                $crate::counter::record($crate::counter::OpKind::$invk);
                let mut e = Self::MODULUS;
                e[0] -= 2;
                let top = 64 * $n - 1 - (e[$n - 1].leading_zeros() as usize);
                let mut acc = *self;
                for i in (0..top).rev() {
                    acc = acc.mul_raw(&acc);
                    if (e[i / 64] >> (i % 64)) & 1 == 1 {
                        acc = acc.mul_raw(self);
                    }
                }
                subtle::CtOption::new(acc, !self.is_zero())
            }

            /// Inverse, rejecting zero.
            pub fn mont_inv(&self) -> $crate::error::Result<Self> {
                Option::from(self.invert()).ok_or($crate::error::Error::ZeroInverse)
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

            /// Converts canonical little-endian limbs into Montgomery form.
            pub fn from_canonical(limbs: &[u64; $n]) -> subtle::CtOption<Self> {
                let mut borrow = 0;
                for i in 0..$n {
                    (_, borrow) = $crate::field::sbb(limbs[i], Self::MODULUS[i], borrow);
                }
                let in_range = subtle::Choice::from((borrow >> 63) as u8);
                subtle::CtOption::new($name(*limbs).mul(&$name(Self::R2)), in_range)
            }

            /// Canonical little-endian limbs (leaves Montgomery form).
            pub fn to_canonical(&self) -> [u64; $n] {
                let mut one = [0u64; $n];
                one[0] = 1;
                self.mul(&$name(one)).0
            }

            pub fn from_u64(v: u64) -> Self {
                let mut limbs = [0u64; $n];
                limbs[0] = v;
                Self::from_canonical(&limbs).unwrap()
            }

            /// Montgomery-domain entry point for an integer `0 <= n < modulus`.
            pub fn from_biguint(v: &num_bigint::BigUint) -> $crate::error::Result<Self> {
                let digits = v.to_u64_digits();
                if digits.len() > $n {
                    return Err($crate::error::Error::OutOfRange);
                }
                let mut limbs = [0u64; $n];
                limbs[..digits.len()].copy_from_slice(&digits);
                Option::from(Self::from_canonical(&limbs)).ok_or($crate::error::Error::OutOfRange)
            }

            /// Montgomery-domain exit point.
            pub fn to_biguint(&self) -> num_bigint::BigUint {
                let limbs = self.to_canonical();
                let mut bytes = Vec::with_capacity(8 * $n);
                for l in limbs.iter() {
                    bytes.extend_from_slice(&l.to_le_bytes());
                }
                num_bigint::BigUint::from_bytes_le(&bytes)
            }

            /// Parses a big-endian hex integer (setup constants).
            pub(crate) fn from_hex(hex: &str) -> Self {
                let v = num_bigint::BigUint::parse_bytes(hex.as_bytes(), 16).expect("hex constant");
                $crate::counter::uncounted(|| Self::from_biguint(&v)).expect("constant in range")
            }

            /// Canonical big-endian bytes.
            pub fn to_bytes_be(&self) -> [u8; $bytes] {
                let limbs = self.to_canonical();
                let mut out = [0u8; $bytes];
                for (i, l) in limbs.iter().enumerate() {
                    let be = l.to_be_bytes();
                    let end = $bytes - 8 * i;
                    let start = end.saturating_sub(8);
                    out[start..end].copy_from_slice(&be[8 - (end - start)..]);
                }
                out
            }

            /// Parses canonical big-endian bytes; rejects values `>= modulus`.
            pub fn from_bytes_be(bytes: &[u8; $bytes]) -> subtle::CtOption<Self> {
                let mut limbs = [0u64; $n];
                for (i, limb) in limbs.iter_mut().enumerate() {
                    let end = $bytes - 8 * i;
                    let start = end.saturating_sub(8);
                    let mut buf = [0u8; 8];
                    buf[8 - (end - start)..].copy_from_slice(&bytes[start..end]);
                    *limb = u64::from_be_bytes(buf);
                }
                Self::from_canonical(&limbs)
            }

            /// Parity of the canonical value (`sgn0` for prime fields).
            pub fn sgn0(&self) -> subtle::Choice {
                subtle::Choice::from((self.to_canonical()[0] & 1) as u8)
            }

            /// Lexicographic comparison of canonical values: `self > -self`.
            pub fn lexicographically_largest(&self) -> subtle::Choice {
                // v > (m-1)/2  <=>  2v > m - 1 for canonical v.
                let v = self.to_canonical();
                let mut half = Self::MODULUS;
                // (m - 1) / 2
                half[0] -= 1;
                let mut carry = 0u64;
                for i in (0..$n).rev() {
                    let next = half[i] & 1;
                    half[i] = (half[i] >> 1) | (carry << 63);
                    carry = next;
                }
                // v - half - 1 does not borrow  <=>  v > half
                let mut borrow = 0;
                for i in 0..$n {
                    (_, borrow) = $crate::field::sbb(v[i], half[i], borrow);
                }
                let gt_or_eq = !subtle::Choice::from((borrow >> 63) as u8);
                let eq = subtle::ConstantTimeEq::ct_eq(&v[..], &half[..]);
                gt_or_eq & !eq
            }
        }

        impl Default for $name {
            fn default() -> Self {
                Self::zero()
            }
        }

        impl core::fmt::Debug for $name {
            fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
                let bytes = $crate::counter::uncounted(|| self.to_bytes_be());
                write!(f, "0x{}", hex::encode(bytes))
            }
        }

        impl subtle::ConstantTimeEq for $name {
            fn ct_eq(&self, other: &Self) -> subtle::Choice {
                subtle::ConstantTimeEq::ct_eq(&self.0[..], &other.0[..])
            }
        }

        impl subtle::ConditionallySelectable for $name {
            fn conditional_select(a: &Self, b: &Self, choice: subtle::Choice) -> Self {
                let mut out = [0u64; $n];
                for i in 0..$n {
                    out[i] = u64::conditional_select(&a.0[i], &b.0[i], choice);
                }
                $name(out)
            }
        }

        impl core::ops::Add for $name {
            type Output = $name;
            #[inline]
            fn add(self, rhs: $name) -> $name {
                $name::add(&self, &rhs)
            }
        }

        impl core::ops::Sub for $name {
            type Output = $name;
            #[inline]
            fn sub(self, rhs: $name) -> $name {
                $name::sub(&self, &rhs)
            }
        }

        impl core::ops::Mul for $name {
            type Output = $name;
            #[inline]
            fn mul(self, rhs: $name) -> $name {
                $name::mul(&self, &rhs)
            }
        }

        impl core::ops::Neg for $name {
            type Output = $name;
            #[inline]
            fn neg(self) -> $name {
                $name::neg(&self)
            }
        }

        impl core::ops::AddAssign for $name {
            #[inline]
            fn add_assign(&mut self, rhs: $name) {
                *self = $name::add(self, &rhs);
            }
        }

        impl core::ops::SubAssign for $name {
            #[inline]
            fn sub_assign(&mut self, rhs: $name) {
                *self = $name::sub(self, &rhs);
            }
        }

        impl core::ops::MulAssign for $name {
            #[inline]
            fn mul_assign(&mut self, rhs: $name) {
                *self = $name::mul(self, &rhs);
            }
        }
    };
}

pub(crate) use prime_field;

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::counter;
    use crate::error::Error;
    use crate::params::{cios_cost_model, CiosCost, WordSize, P_HEX, Q_HEX};

    fn p() -> BigUint {
        BigUint::parse_bytes(P_HEX.as_bytes(), 16).unwrap()
    }

    fn q() -> BigUint {
        BigUint::parse_bytes(Q_HEX.as_bytes(), 16).unwrap()
    }

    fn rand_below(rng: &mut StdRng, m: &BigUint) -> BigUint {
        let bytes: Vec<u8> = (0..64).map(|_| rng.gen()).collect();
        BigUint::from_bytes_le(&bytes) % m
    }

    fn limbs6(v: &BigUint) -> [u64; 6] {
        let mut out = [0u64; 6];
        for (o, d) in out.iter_mut().zip(v.iter_u64_digits()) {
            *o = d;
        }
        out
    }

    fn to_big(limbs: &[u64]) -> BigUint {
        let bytes: Vec<u8> = limbs.iter().flat_map(|l| l.to_le_bytes()).collect();
        BigUint::from_bytes_le(&bytes)
    }

    #[test]
    fn add_sub_edges() {
        let pm1 = Fp::from_biguint(&(p() - 1u8)).unwrap();
        assert_eq!(pm1 + Fp::one(), Fp::zero());
        assert_eq!(Fp::zero() - Fp::one(), pm1);
        let x = Fp::from_u64(123456789);
        assert_eq!(x + Fp::zero(), x);
        assert_eq!(x - x, Fp::zero());
        assert_eq!(-Fp::zero(), Fp::zero());
    }

    #[test]
    fn add_sub_match_oracle() {
        let mut rng = StdRng::seed_from_u64(1);
        let m = p();
        for _ in 0..1000 {
            let a = rand_below(&mut rng, &m);
            let b = rand_below(&mut rng, &m);
            let fa = Fp::from_biguint(&a).unwrap();
            let fb = Fp::from_biguint(&b).unwrap();
            assert_eq!((fa + fb).to_biguint(), (&a + &b) % &m);
            assert_eq!((fa - fb).to_biguint(), (&a + &m - &b) % &m);
        }
    }

    #[test]
    fn mont_mul_matches_oracle_on_raw_limbs() {
        let mut rng = StdRng::seed_from_u64(2);
        let m = p();
        let rinv = BigUint::modinv(&((BigUint::from(1u8) << 384) % &m), &m).unwrap();
        let mut inputs: Vec<BigUint> = vec![
            BigUint::from(0u8),
            (BigUint::from(1u8) << 384) % &m,
            ((&m - 1u8) << 384) % &m,
        ];
        inputs.extend((0..200).map(|_| rand_below(&mut rng, &m)));
        for a in &inputs {
            for b in inputs.iter().take(50) {
                let z = Fp::from_mont_unchecked(limbs6(a)) * Fp::from_mont_unchecked(limbs6(b));
                assert_eq!(to_big(&z.0), a * b * &rinv % &m);
            }
        }
    }

    #[test]
    fn montgomery_identities() {
        let r = Fp::one();
        assert_eq!(r * r, r);
        let x = Fp::from_u64(77);
        assert_eq!(x * Fp::zero(), Fp::zero());
        assert_eq!(Fp::from_u64(0).0, [0; 6]);
        assert_eq!(to_big(&Fp::from_u64(1).0), (BigUint::from(1u8) << 384) % p());
        assert_eq!(to_big(&Fq::from_u64(1).0), (BigUint::from(1u8) << 256) % q());
    }

    #[test]
    fn domain_roundtrip_and_range() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..1000 {
            let n = rand_below(&mut rng, &p());
            assert_eq!(Fp::from_biguint(&n).unwrap().to_biguint(), n);
            let k = rand_below(&mut rng, &q());
            assert_eq!(Fq::from_biguint(&k).unwrap().to_biguint(), k);
        }
        assert_eq!(Fp::from_biguint(&p()), Err(Error::OutOfRange));
        assert_eq!(Fq::from_biguint(&(q() + 5u8)), Err(Error::OutOfRange));
    }

    #[test]
    fn bytes_roundtrip() {
        let x = Fp::from_biguint(&(p() - 2u8)).unwrap();
        let b = x.to_bytes_be();
        assert_eq!(b[0], 0x1a);
        assert_eq!(Fp::from_bytes_be(&b).unwrap(), x);
        let mut over = [0xffu8; 48];
        over[0] = 0x1a;
        assert!(bool::from(Fp::from_bytes_be(&over).is_none()));
        let y = Fq::from_u64(0x0102);
        assert_eq!(&y.to_bytes_be()[30..], &[1, 2]);
    }

    #[test]
    fn inversion() {
        assert_eq!(Fp::one().invert().unwrap(), Fp::one());
        assert_eq!(Fp::zero().mont_inv(), Err(Error::ZeroInverse));
        assert_eq!(Fq::zero().mont_inv(), Err(Error::ZeroInverse));
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..50 {
            let x = Fp::from_biguint(&rand_below(&mut rng, &p())).unwrap();
            assert_eq!(x * x.mont_inv().unwrap(), Fp::one());
            let k = Fq::from_biguint(&rand_below(&mut rng, &q())).unwrap();
            assert_eq!(k * k.mont_inv().unwrap(), Fq::one());
        }
    }

    #[test]
    fn inversion_counts_are_exact_and_data_independent() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..5 {
            let x = Fp::from_biguint(&rand_below(&mut rng, &p())).unwrap();
            let (_, d) = counter::measure(|| x.invert());
            assert_eq!(d.cios_p, 608);
            assert_eq!((d.i1, d.m1, d.s1), (1, 0, 0));
            let k = Fq::from_biguint(&rand_below(&mut rng, &q())).unwrap();
            let (_, d) = counter::measure(|| k.invert());
            assert_eq!(d.cios_q, 417);
            assert_eq!(d.iq, 1);
        }
    }

    #[test]
    fn cios_word_counts_follow_the_model() {
        let x = Fp::from_u64(3);
        let y = Fp::from_u64(5);
        for w in WordSize::ALL {
            let (_, d) = counter::with_word_size(w, || counter::measure(|| x * y));
            let model = cios_cost_model(w.bits()).unwrap();
            assert_eq!(d.word_mul, model.word_muls, "{w:?}");
            assert_eq!(d.word_add, model.word_adds, "{w:?}");
            let k = Fq::from_u64(3);
            let (_, d) = counter::with_word_size(w, || counter::measure(|| k * k));
            let model = CiosCost::for_operand(256, w.bits()).unwrap();
            assert_eq!(d.word_mul, model.word_muls, "{w:?}");
        }
        let (_, d) = counter::with_word_size(WordSize::W16, || counter::measure(|| x * y));
        assert_eq!(d.word_mul, 1176);
    }

    #[test]
    fn results_do_not_depend_on_word_size() {
        let mut rng = StdRng::seed_from_u64(6);
        for _ in 0..100 {
            let a = Fp::from_biguint(&rand_below(&mut rng, &p())).unwrap();
            let b = Fp::from_biguint(&rand_below(&mut rng, &p())).unwrap();
            let base = a * b;
            for w in WordSize::ALL {
                assert_eq!(counter::with_word_size(w, || a * b), base);
            }
        }
    }

    #[test]
    fn op_counts_do_not_depend_on_values() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut seen = None;
        for _ in 0..20 {
            let a = Fp::from_biguint(&rand_below(&mut rng, &p())).unwrap();
            let b = Fp::from_biguint(&rand_below(&mut rng, &p())).unwrap();
            let (_, d) = counter::measure(|| {
                let _ = a + b;
                let _ = a - b;
                let _ = a * b;
                let _ = a.invert();
            });
            assert_eq!(*seen.get_or_insert(d), d);
        }
    }

    #[test]
    fn sqrt_and_sign() {
        let four = Fp::from_u64(4);
        let r = four.sqrt().unwrap();
        assert!(r == Fp::from_u64(2) || r == -Fp::from_u64(2));
        // -1 is a non-residue for p = 3 mod 4
        assert!(bool::from((-Fp::one()).sqrt().is_none()));
        assert!(bool::from(Fp::one().sgn0()));
        assert!(!bool::from(Fp::from_u64(2).sgn0()));
        let big = -Fp::one();
        assert!(bool::from(big.lexicographically_largest()));
        assert!(!bool::from(Fp::one().lexicographically_largest()));
    }

    fn arb_fp() -> impl Strategy<Value = Fp> {
        prop::array::uniform6(any::<u64>()).prop_map(|mut l| {
            l[5] &= 0x0fff_ffff_ffff_ffff;
            Fp::from_canonical(&l).unwrap()
        })
    }

    fn arb_fq() -> impl Strategy<Value = Fq> {
        prop::array::uniform4(any::<u64>()).prop_map(|mut l| {
            l[3] &= 0x3fff_ffff_ffff_ffff;
            Fq::from_canonical(&l).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn fp_field_laws(a in arb_fp(), b in arb_fp(), c in arb_fp()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a.square(), a * a);
            prop_assert_eq!(a.mul_small(12), a * Fp::from_u64(12));
        }

        #[test]
        fn fq_field_laws(a in arb_fq(), b in arb_fq(), c in arb_fq()) {
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b - c), a * b - a * c);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn inverse_law(a in arb_fp(), k in arb_fq()) {
            prop_assume!(!bool::from(a.is_zero()) && !bool::from(k.is_zero()));
            prop_assert_eq!(a * a.invert().unwrap(), Fp::one());
            prop_assert_eq!(k * k.invert().unwrap(), Fq::one());
        }
    }
}
