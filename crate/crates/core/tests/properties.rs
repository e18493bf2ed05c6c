use proptest::prelude::*;

use bls381_pbc::curve::{ecsm, ecsm_split, multi_exp, G1Affine, G1Projective, G2Affine, JubjubAffine, Scalar};
use bls381_pbc::field::{Fp, Fq};
use bls381_pbc::hash::{hash_to_g1, Csprng, DST_G1_RO};
use bls381_pbc::pairing::{pairing, Gt};
use bls381_pbc::protocol::{hardened_ecsm, sign, verify, CountermeasureConfig, SecretKey};
use bls381_pbc::tower::Fp12;

fn scalar() -> impl Strategy<Value = Scalar> {
    any::<[u8; 32]>().prop_map(|b| Csprng::from_seed(b).random_scalar())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn g1_linearity(a in scalar(), b in scalar()) {
        let g = G1Affine::generator();
        let sum = Scalar::from_fq(&(a.to_fq() + b.to_fq()));
        let lhs = ecsm(&sum, &g);
        let rhs = (G1Projective::from(ecsm(&a, &g)) + G1Projective::from(ecsm(&b, &g))).to_affine();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multi_exp_matches_two_ecsms(a in scalar(), b in scalar()) {
        let g = G1Affine::generator();
        let h = ecsm(&Scalar::from_u64(7), &g);
        let me = multi_exp(&a, &g.to_projective(), &b, &h.to_projective()).to_affine();
        let sep = (G1Projective::from(ecsm(&a, &g)) + G1Projective::from(ecsm(&b, &h))).to_affine();
        prop_assert_eq!(me, sep);
    }

    #[test]
    fn encodings_roundtrip(k in scalar()) {
        let p = ecsm(&k, &G1Affine::generator());
        prop_assert_eq!(G1Affine::from_compressed(&p.to_compressed()).unwrap(), p);
        prop_assert_eq!(G1Affine::from_uncompressed(&p.to_uncompressed()).unwrap(), p);
        let q = ecsm_split(&k, &G2Affine::generator());
        prop_assert_eq!(G2Affine::from_compressed(&q.to_compressed()).unwrap(), q);
        prop_assert_eq!(G2Affine::from_uncompressed(&q.to_uncompressed()).unwrap(), q);
        prop_assert_eq!(Scalar::from_bytes_be(&k.to_bytes_be()).unwrap(), k);
    }

    #[test]
    fn blinding_never_changes_the_result(k in scalar(), seed in any::<[u8; 32]>()) {
        let mut cfg = CountermeasureConfig::all(Csprng::from_seed(seed));
        let g = G2Affine::generator();
        prop_assert_eq!(hardened_ecsm(&k, &g, &mut cfg), ecsm(&k, &g));
    }

    #[test]
    fn field_bytes_roundtrip(seed in any::<[u8; 32]>()) {
        let mut rng = Csprng::from_seed(seed);
        let (a, b) = (rng.random_fp(), rng.random_fq());
        prop_assert_eq!(Fp::from_bytes_be(&a.to_bytes_be()).unwrap(), a);
        prop_assert_eq!(Fq::from_bytes_be(&b.to_bytes_be()).unwrap(), b);
    }

    #[test]
    fn jubjub_scalar_multiplication_is_additive(a in any::<u32>(), b in any::<u32>()) {
        let g = JubjubAffine::generator();
        let sum = bls381_pbc::curve::jubjub_ecsm(&Scalar::from_u64(a as u64 + b as u64), &g);
        let pa = bls381_pbc::curve::jubjub_ecsm(&Scalar::from_u64(a as u64), &g).to_extended();
        let pb = bls381_pbc::curve::jubjub_ecsm(&Scalar::from_u64(b as u64), &g).to_extended();
        prop_assert_eq!(pa.add(&pb).to_affine(), sum);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn signatures_over_arbitrary_messages(seed in any::<[u8; 32]>(), msg in proptest::collection::vec(any::<u8>(), 0..200)) {
        let sk = SecretKey::generate(&mut Csprng::from_seed(seed));
        let sig = sign(&sk, &msg);
        prop_assert!(verify(&sk.public_key(), &msg, &sig));
        let mut other = msg.clone();
        other.push(0);
        prop_assert!(!verify(&sk.public_key(), &other, &sig));
    }

    #[test]
    fn gt_encoding_roundtrip(k in scalar()) {
        let e = pairing(&ecsm(&k, &G1Affine::generator()), &G2Affine::generator());
        prop_assert_eq!(Gt::from_bytes(&e.to_bytes()).unwrap(), e);
        prop_assert_eq!(Fp12::from_bytes(&e.to_bytes()).unwrap(), *e.inner());
    }

    #[test]
    fn hash_outputs_are_in_g1(msg in proptest::collection::vec(any::<u8>(), 0..100)) {
        let p = hash_to_g1(&msg, DST_G1_RO);
        prop_assert!(bool::from(p.is_on_curve() & p.is_torsion_free()));
    }
}
