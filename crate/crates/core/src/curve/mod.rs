//! Pairing groups G1 and G2, and the Jubjub curve over the scalar field.
//!
//! All scalar multiplications are double-and-add-always over a fixed bit
//! length with masked selection, so the recorded operation sequence does
//! not depend on the scalar.

mod g1;
mod g2;
mod jubjub;
mod scalar;
mod weierstrass;

pub use g1::{G1Affine, G1Projective};
pub use g2::{ecsm_split, G2Affine, G2Projective};
pub use jubjub::{jubjub_d, jubjub_ecsm, JubjubAffine, JubjubExtended};
pub use scalar::{Scalar, HALF_BITS, SCALAR_BITS};
pub use weierstrass::{ecsm, multi_exp, Affine, CurveField, Projective};

pub(crate) use weierstrass::{ecsm_projective, multi_exp_bits};

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::counter;
    use crate::error::Error;
    use crate::field::{Fp, Fq};
    use crate::params::{SystemParams, U_ABS};

    fn rscalar(rng: &mut StdRng) -> Scalar {
        let bytes: Vec<u8> = (0..48).map(|_| rng.gen()).collect();
        Scalar::from_biguint(&(BigUint::from_bytes_le(&bytes) % &SystemParams::get().q)).unwrap()
    }

    fn g1(rng: &mut StdRng) -> G1Affine {
        ecsm(&rscalar(rng), &G1Affine::generator())
    }

    fn g2(rng: &mut StdRng) -> G2Affine {
        ecsm(&rscalar(rng), &G2Affine::generator())
    }

    fn sc(v: &BigUint) -> Scalar {
        Scalar::from_biguint(v).unwrap()
    }

    #[test]
    fn generators_are_valid() {
        let g = G1Affine::generator();
        assert!(bool::from(g.is_on_curve() & g.is_torsion_free()));
        let h = G2Affine::generator();
        assert!(bool::from(h.is_on_curve() & h.is_torsion_free()));
        let j = JubjubAffine::generator();
        assert!(bool::from(j.is_on_curve()));
        assert!(bool::from(jubjub_ecsm(&Scalar::JUBJUB_ORDER, &j).is_identity()));
    }

    #[test]
    fn group_laws_g1() {
        let mut rng = StdRng::seed_from_u64(20);
        let (p, q, r) = (g1(&mut rng).to_projective(), g1(&mut rng).to_projective(), g1(&mut rng).to_projective());
        let o = G1Projective::identity();
        assert_eq!(p + o, p);
        assert!(bool::from((p - p).is_identity()));
        assert_eq!(p + q, q + p);
        assert_eq!((p + q) + r, p + (q + r));
        assert_eq!(p + p, p.double());
        assert!(bool::from(o.double().is_identity()));
        assert!(bool::from((p + q).is_on_curve()));
        assert_eq!(p.double() + p, p + p + p);
        assert_eq!(p.add_affine(&G1Affine::identity()), p);
    }

    #[test]
    fn group_laws_g2() {
        let mut rng = StdRng::seed_from_u64(21);
        let (p, q) = (g2(&mut rng).to_projective(), g2(&mut rng).to_projective());
        assert_eq!(p + q, q + p);
        assert_eq!(p + p, p.double());
        assert!(bool::from((p + p.neg()).is_identity()));
        assert!(bool::from(p.double().is_on_curve()));
    }

    #[test]
    fn doubling_matches_affine_oracle() {
        let mut rng = StdRng::seed_from_u64(22);
        let pm = &SystemParams::get().p;
        for _ in 0..5 {
            let p = g1(&mut rng);
            let (x, y) = (p.x().to_biguint(), p.y().to_biguint());
            // lambda = 3x^2 / 2y
            let num = BigUint::from(3u8) * &x * &x % pm;
            let den = (BigUint::from(2u8) * &y).modinv(pm).unwrap();
            let l = num * den % pm;
            let x3 = (&l * &l + pm * 2u8 - &x * 2u8) % pm;
            let y3 = (&l * ((&x + pm - &x3) % pm) + pm - &y) % pm;
            let d = p.to_projective().double().to_affine();
            assert_eq!(d.x().to_biguint(), x3);
            assert_eq!(d.y().to_biguint(), y3);
        }
    }

    #[test]
    fn ecsm_basics_and_linearity() {
        let mut rng = StdRng::seed_from_u64(23);
        let g = G1Affine::generator();
        assert!(bool::from(ecsm(&Scalar::ZERO, &g).is_identity()));
        assert_eq!(ecsm(&Scalar::ONE, &g), g);
        assert!(bool::from(ecsm(&Scalar::Q, &g).is_identity()));
        assert!(bool::from(ecsm(&rscalar(&mut rng), &G1Affine::identity()).is_identity()));
        let qm = &SystemParams::get().q;
        let (a, b) = (rscalar(&mut rng), rscalar(&mut rng));
        let sum = sc(&((a.to_biguint() + b.to_biguint()) % qm));
        let prod = sc(&(a.to_biguint() * b.to_biguint() % qm));
        assert_eq!(
            ecsm(&sum, &g).to_projective(),
            ecsm(&a, &g).to_projective() + ecsm(&b, &g).to_projective()
        );
        assert_eq!(ecsm(&prod, &g), ecsm(&a, &ecsm(&b, &g)));
        let h = G2Affine::generator();
        assert_eq!(ecsm(&prod, &h), ecsm(&a, &ecsm(&b, &h)));
    }

    #[test]
    fn ecsm_costs_are_exact() {
        let mut rng = StdRng::seed_from_u64(24);
        let p = g1(&mut rng);
        let k = rscalar(&mut rng);
        let (_, d) = counter::measure(|| ecsm(&k, &p));
        assert_eq!((d.fp_muls(), d.a1, d.i1), (4847, 14025, 1));
        let h = g2(&mut rng);
        let (_, d) = counter::measure(|| ecsm(&k, &h));
        assert_eq!((d.m2, d.s2, d.i2), (4337, 510, 1));
        let j = JubjubAffine::generator();
        let (_, d) = counter::measure(|| jubjub_ecsm(&k, &j));
        assert_eq!((d.fq_muls(), d.iq, d.cios_q), (4338, 1, 4755));
    }

    #[test]
    fn ecsm_trace_is_scalar_independent() {
        let mut rng = StdRng::seed_from_u64(25);
        let p = g1(&mut rng);
        let (_, t0) = counter::trace(|| ecsm(&Scalar::ZERO, &p));
        for _ in 0..3 {
            let (_, t) = counter::trace(|| ecsm(&rscalar(&mut rng), &p));
            assert_eq!(t, t0);
        }
        let (_, t1) = counter::trace(|| ecsm(&Scalar::ONE, &G1Affine::identity()));
        assert_eq!(t1, t0);
    }

    #[test]
    fn skew_frobenius_is_p_times() {
        let mut rng = StdRng::seed_from_u64(26);
        let sp = SystemParams::get();
        let p_mod_q = sc(&(&sp.p % &sp.q));
        let u2 = sc(&sp.u_sq_mod_q);
        let (a, b) = (g2(&mut rng), g2(&mut rng));
        let pa = a.to_projective();
        assert_eq!(pa.skew_frobenius(), ecsm(&p_mod_q, &a).to_projective());
        assert_eq!(pa.skew_frobenius().skew_frobenius(), ecsm(&u2, &a).to_projective());
        let pb = b.to_projective();
        assert_eq!((pa + pb).skew_frobenius(), pa.skew_frobenius() + pb.skew_frobenius());
        assert!(bool::from(G2Projective::identity().skew_frobenius().is_identity()));
    }

    #[test]
    fn scalar_split() {
        let mut rng = StdRng::seed_from_u64(27);
        let u2 = BigUint::from(U_ABS) * BigUint::from(U_ABS);
        assert_eq!(Scalar::ZERO.split(), (Scalar::ZERO, Scalar::ZERO));
        assert_eq!(sc(&u2).split(), (Scalar::ZERO, Scalar::ONE));
        for _ in 0..1000 {
            let k = rscalar(&mut rng);
            let (k1, k2) = k.split();
            assert!(k1.to_biguint().bits() <= 128 && k2.to_biguint().bits() <= 128);
            assert_eq!(k1.to_biguint() + k2.to_biguint() * &u2, k.to_biguint());
        }
    }

    #[test]
    fn multi_exp_and_split_agree_with_ecsm() {
        let mut rng = StdRng::seed_from_u64(28);
        let (p, q) = (g2(&mut rng), g2(&mut rng));
        let (a, b) = (rscalar(&mut rng), rscalar(&mut rng));
        let me = multi_exp(&a, &p.to_projective(), &b, &q.to_projective());
        assert_eq!(me, ecsm(&a, &p).to_projective() + ecsm(&b, &q).to_projective());
        assert_eq!(multi_exp(&Scalar::ONE, &p.to_projective(), &Scalar::ZERO, &q.to_projective()), p.to_projective());
        for _ in 0..5 {
            let k = rscalar(&mut rng);
            assert_eq!(ecsm_split(&k, &p), ecsm(&k, &p));
        }
        let g = g1(&mut rng).to_projective();
        let h = g1(&mut rng).to_projective();
        assert_eq!(multi_exp(&a, &g, &b, &h), ecsm(&a, &g.to_affine()).to_projective() + ecsm(&b, &h.to_affine()).to_projective());
    }

    #[test]
    fn split_speedup() {
        let mut rng = StdRng::seed_from_u64(29);
        let (p, k) = (g2(&mut rng), rscalar(&mut rng));
        let (_, plain) = counter::measure(|| ecsm(&k, &p));
        let (_, split) = counter::measure(|| ecsm_split(&k, &p));
        let ratio = plain.m1_equivalent() as f64 / split.m1_equivalent() as f64;
        assert!(ratio >= 1.7, "ratio {ratio}");
    }

    #[test]
    fn jubjub() {
        let mut rng = StdRng::seed_from_u64(30);
        let g = JubjubAffine::generator();
        assert_eq!(jubjub_ecsm(&Scalar::ONE, &g), g);
        assert!(bool::from(jubjub_ecsm(&Scalar::ZERO, &g).is_identity()));
        let (a, b) = (rscalar(&mut rng), rscalar(&mut rng));
        let ea = jubjub_ecsm(&a, &g).to_extended();
        let eb = jubjub_ecsm(&b, &g).to_extended();
        let r = &Scalar::JUBJUB_ORDER.to_biguint();
        let s = sc(&((a.to_biguint() + b.to_biguint()) % r));
        assert_eq!(ea.add(&eb), jubjub_ecsm(&s, &g).to_extended());
        assert_eq!(ea.add(&ea), ea.double());
        assert!(bool::from(jubjub_ecsm(&a, &g).is_on_curve()));
        assert_eq!(JubjubAffine::from_xy(Fq::one(), Fq::one()), Err(Error::NotOnCurve));
        let gd = consts_check();
        assert!(gd);
    }

    fn consts_check() -> bool {
        // d * 10241 = -10240
        jubjub_d() * Fq::from_u64(10241) == -Fq::from_u64(10240)
    }

    #[test]
    fn encodings_g1() {
        let mut rng = StdRng::seed_from_u64(31);
        let p = g1(&mut rng);
        assert_eq!(G1Affine::from_compressed(&p.to_compressed()).unwrap(), p);
        assert_eq!(G1Affine::from_uncompressed(&p.to_uncompressed()).unwrap(), p);
        let n = p.neg();
        assert_ne!(n.to_compressed(), p.to_compressed());
        assert_eq!(G1Affine::from_compressed(&n.to_compressed()).unwrap(), n);
        let id = G1Affine::identity().to_compressed();
        assert_eq!(id[0], 0xc0);
        assert!(bool::from(G1Affine::from_compressed(&id).unwrap().is_identity()));
        let g = G1Affine::generator().to_compressed();
        assert_eq!(hex::encode(&g[..4]), "97f1d3a7");
        let mut bad = p.to_compressed();
        bad[0] &= 0x7f;
        assert!(matches!(G1Affine::from_compressed(&bad), Err(Error::Malformed(_))));
        let mut bad = p.to_uncompressed();
        bad[95] ^= 1;
        assert_eq!(G1Affine::from_uncompressed(&bad), Err(Error::NotOnCurve));
    }

    #[test]
    fn g1_off_subgroup_rejected() {
        // find a curve point outside G1 (the cofactor is large)
        let mut x = Fp::from_u64(1);
        loop {
            let y2 = x.square() * x + Fp::from_u64(4);
            if let Some(y) = Option::<Fp>::from(y2.sqrt()) {
                let p = G1Affine::from_xy(x, y).unwrap();
                assert_eq!(G1Affine::from_uncompressed(&p.to_uncompressed()), Err(Error::NotInSubgroup));
                break;
            }
            x += Fp::one();
        }
    }

    #[test]
    fn encodings_g2() {
        let mut rng = StdRng::seed_from_u64(32);
        let p = g2(&mut rng);
        assert_eq!(G2Affine::from_compressed(&p.to_compressed()).unwrap(), p);
        assert_eq!(G2Affine::from_uncompressed(&p.to_uncompressed()).unwrap(), p);
        assert_eq!(G2Affine::from_compressed(&p.neg().to_compressed()).unwrap(), p.neg());
        let g = G2Affine::generator().to_compressed();
        assert_eq!(hex::encode(&g[..4]), "93e02b60");
        let id = G2Affine::identity().to_uncompressed();
        assert!(bool::from(G2Affine::from_uncompressed(&id).unwrap().is_identity()));
    }
}
