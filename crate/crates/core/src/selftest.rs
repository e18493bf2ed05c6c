//! Invariant suites run by `pbc selftest`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigUint;
use serde::Serialize;

use crate::counter;
use crate::curve::{ecsm, ecsm_split, jubjub_ecsm, G1Affine, G1Projective, G2Affine, JubjubAffine, Scalar};
use crate::field::{Fp, Fq};
use crate::hash::{hash_to_g1, Csprng};
use crate::pairing::{multi_pairing, pairing, Gt, MultiPairingMode};
use crate::params::{cios_cost_model, CiosCost, SystemParams, WordSize};
use crate::protocol::{aggregate, aggregate_verify, hardened_ecsm, sign, verify, CountermeasureConfig, SecretKey};
use crate::tower::{frobenius, Fp12, Fp2, Fp6};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn params() -> Check {
    SystemParams::get().validate()?;
    Ok("p: 381 bits, q: 255 bits, q = u^4 - u^2 + 1".into())
}

/// Square-and-multiply over `m - 2`: `bits - 1` squarings plus
/// `popcount - 1` multiplications.
fn chain_length(m: &BigUint) -> u64 {
    let e = m - 2u8;
    e.bits() - 1 + e.count_ones() - 1
}

fn inversion_counts() -> Check {
    let sp = SystemParams::get();
    let (fp_chain, fq_chain) = (chain_length(&sp.p), chain_length(&sp.q));
    let x = Fp::from_u64(3);
    let y = Fq::from_u64(3);
    let (_, cp) = counter::measure(|| x.invert());
    let (_, cq) = counter::measure(|| y.invert());
    ensure(cp.cios_p == 608 && fp_chain == 608, format!("Fp inversion: {} (chain {fp_chain})", cp.cios_p))?;
    ensure(cq.cios_q == 417 && fq_chain == 417, format!("Fq inversion: {} (chain {fq_chain})", cq.cios_q))?;
    Ok(format!("Fp inversion: {} multiplications; Fq inversion: {} multiplications", cp.cios_p, cq.cios_q))
}

fn oracle() -> Check {
    let sp = SystemParams::get();
    let mut rng = Csprng::from_seed([0x5e; 32]);
    for _ in 0..500 {
        let (a, b) = (rng.random_fp(), rng.random_fp());
        let want = (a.to_biguint() * b.to_biguint()) % &sp.p;
        ensure((a * b).to_biguint() == want, "Fp product differs from oracle")?;
        let (c, d) = (rng.random_fq(), rng.random_fq());
        let want = (c.to_biguint() * d.to_biguint()) % &sp.q;
        ensure((c * d).to_biguint() == want, "Fq product differs from oracle")?;
    }
    for _ in 0..50 {
        let a = rng.random_fp_nonzero();
        let inv = BigUint::modinv(&a.to_biguint(), &sp.p).unwrap();
        ensure(a.invert().unwrap().to_biguint() == inv, "Fp inverse differs from oracle")?;
    }
    Ok("500 Fp and Fq products, 50 inversions".into())
}

fn cios_law() -> Check {
    let a = Fp::from_u64(5);
    let b = Fq::from_u64(5);
    let mut rows = Vec::new();
    for ws in WordSize::ALL {
        let w = ws.bits();
        let (_, cp) = counter::with_word_size(ws, || counter::measure(|| a * a));
        let (_, cq) = counter::with_word_size(ws, || counter::measure(|| b * b));
        let mp = cios_cost_model(w).map_err(|e| e.to_string())?;
        let mq = CiosCost::for_operand(256, w).map_err(|e| e.to_string())?;
        ensure(cp.word_mul == mp.word_muls && cp.word_add == mp.word_adds, format!("Fp at w={w}"))?;
        ensure(cq.word_mul == mq.word_muls && cq.word_add == mq.word_adds, format!("Fq at w={w}"))?;
        let r = counter::with_word_size(ws, || (a * Fp::from_u64(7)).to_biguint());
        ensure(r == BigUint::from(35u8), format!("wrong product at w={w}"))?;
        rows.push(format!("w={w}: {} mul/{} add", mp.word_muls, mp.word_adds));
    }
    Ok(rows.join(", "))
}

fn tower() -> Check {
    let mut rng = Csprng::from_seed([0x70; 32]);
    let mut f2 = || Fp2::new(rng.random_fp(), rng.random_fp());
    let a = Fp12::new(Fp6::new(f2(), f2(), f2()), Fp6::new(f2(), f2(), f2()));
    let b = Fp12::new(Fp6::new(f2(), f2(), f2()), Fp6::new(f2(), f2(), f2()));
    ensure(a.mul(&a.invert().unwrap()) == Fp12::one(), "Fp12 inverse")?;
    ensure(a.square() == a.mul(&a), "Fp12 squaring")?;
    ensure(a.mul(&b) == b.mul(&a), "Fp12 commutativity")?;
    ensure(frobenius::self_check(), "Frobenius coefficients")?;
    ensure(a.frobenius(6).unwrap() == a.conjugate(), "Frobenius p^6")?;
    Ok("Fp2/Fp6/Fp12 inverse, square, Frobenius".into())
}

fn group_laws() -> Check {
    let mut rng = Csprng::from_seed([0x61; 32]);
    let (a, b) = (rng.random_scalar(), rng.random_scalar());
    let sum = Scalar::from_fq(&(a.to_fq() + b.to_fq()));
    let g1 = G1Affine::generator();
    let lhs = ecsm(&sum, &g1);
    let rhs = (G1Projective::from(ecsm(&a, &g1)) + G1Projective::from(ecsm(&b, &g1))).to_affine();
    ensure(lhs == rhs, "G1 linearity")?;
    ensure(bool::from(ecsm(&Scalar::Q, &g1).is_identity()), "q * G1 != O")?;
    let g2 = G2Affine::generator();
    ensure(bool::from(ecsm(&Scalar::Q, &g2).is_identity()), "q * G2 != O")?;
    ensure(ecsm_split(&a, &g2) == ecsm(&a, &g2), "split G2 multiplication")?;
    let j = JubjubAffine::generator();
    ensure(bool::from(jubjub_ecsm(&Scalar::JUBJUB_ORDER, &j).is_identity()), "Jubjub order")?;
    Ok("linearity, subgroup orders, split multiplication".into())
}

fn bilinearity() -> Check {
    let mut rng = Csprng::from_seed([0x62; 32]);
    let (a, b) = (rng.random_scalar(), rng.random_scalar());
    let e = Gt::generator();
    ensure(!bool::from(e.is_identity()), "degenerate pairing")?;
    ensure(bool::from(e.is_in_subgroup()), "e^q != 1")?;
    let ab = Scalar::from_fq(&(a.to_fq() * b.to_fq()));
    let lhs = pairing(&ecsm(&a, &G1Affine::generator()), &ecsm(&b, &G2Affine::generator()));
    ensure(lhs == e.pow(&ab), "e(aP, bQ) != e(P, Q)^ab")?;
    Ok("e(aP, bQ) = e(P, Q)^ab, non-degenerate, order q".into())
}

fn multi_pairing_modes() -> Check {
    let mut rng = Csprng::from_seed([0x63; 32]);
    let pairs: Vec<_> = (0..3)
        .map(|_| {
            (
                ecsm(&rng.random_scalar(), &G1Affine::generator()),
                ecsm(&rng.random_scalar(), &G2Affine::generator()),
            )
        })
        .collect();
    let v: Vec<_> = MultiPairingMode::ALL
        .iter()
        .map(|&m| multi_pairing(&pairs, m).map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    ensure(v[0] == v[1] && v[1] == v[2], "multi-pairing modes disagree")?;
    Ok("naive = sharedfe = sharedmlfe".into())
}

fn exact_counts() -> Check {
    let k = Scalar::from_u64(0x1234_5678_9abc_def0);
    let (_, c1) = counter::measure(|| ecsm(&k, &G1Affine::generator()));
    ensure(c1.fp_muls() == 4847 && c1.a1 == 14025 && c1.i1 == 1, format!("G1 ECSM {c1:?}"))?;
    let (_, c2) = counter::measure(|| ecsm(&k, &G2Affine::generator()));
    ensure(c2.m2 == 4337 && c2.s2 == 510 && c2.i2 == 1, format!("G2 ECSM {c2:?}"))?;
    let (_, cj) = counter::measure(|| jubjub_ecsm(&k, &JubjubAffine::generator()));
    ensure(cj.fq_equivalent() == 4755, format!("Jubjub ECSM {cj:?}"))?;
    let (_, cp) = counter::measure(|| pairing(&G1Affine::generator(), &G2Affine::generator()));
    let dev = cp.m1_equivalent() as f64 / 15389.0 - 1.0;
    ensure(dev.abs() <= 0.05, format!("pairing {}", cp.m1_equivalent()))?;
    Ok(format!(
        "G1 {} M1 + {} A1 + 1 I1, G2 {} M2 + {} S2 + 1 I2, Jubjub {} Fq, pairing {} M1",
        c1.fp_muls(),
        c1.a1,
        c2.m2,
        c2.s2,
        cj.fq_equivalent(),
        cp.m1_equivalent()
    ))
}

fn hash() -> Check {
    let p = hash_to_g1(b"abc", b"QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_");
    ensure(
        hex::encode(&p.to_uncompressed()[..48])
            == "03567bc5ef9c690c2ab2ecdf6a96ef1c139cc0b2f284dca0a9a7943388a49a3aee664ba5379a7655d3c68900be2f6903",
        "hash-to-G1 vector",
    )?;
    ensure(bool::from(p.is_torsion_free()), "hash output outside G1")?;
    Ok("suite vector for \"abc\"".into())
}

fn signatures() -> Check {
    let mut rng = Csprng::from_seed([0x64; 32]);
    let sks: Vec<_> = (0..3).map(|_| SecretKey::generate(&mut rng)).collect();
    let pks: Vec<_> = sks.iter().map(|s| s.public_key()).collect();
    let msgs: [&[u8]; 3] = [b"a", b"b", b"c"];
    let sigs: Vec<_> = sks.iter().zip(msgs).map(|(s, m)| sign(s, m)).collect();
    ensure(verify(&pks[0], msgs[0], &sigs[0]), "honest signature rejected")?;
    ensure(!verify(&pks[0], msgs[1], &sigs[0]), "wrong message accepted")?;
    let agg = aggregate(&sigs).map_err(|e| e.to_string())?;
    ensure(aggregate_verify(&pks, &msgs, &agg) == Ok(true), "aggregate rejected")?;
    ensure(aggregate_verify(&pks, &[b"a", b"b", b"d"], &agg) == Ok(false), "bad aggregate accepted")?;
    Ok("sign, verify, 3-way aggregate".into())
}

fn countermeasures() -> Check {
    let mut rng = Csprng::from_seed([0x65; 32]);
    let mut cfg = CountermeasureConfig::all(rng.fork(b"cm"));
    for _ in 0..3 {
        let k = rng.random_scalar();
        ensure(
            hardened_ecsm(&k, &G1Affine::generator(), &mut cfg) == ecsm(&k, &G1Affine::generator()),
            "blinded ECSM differs",
        )?;
    }
    Ok("blinded ECSM equals plain ECSM".into())
}

const SUITES: &[(&str, fn() -> Check)] = &[
    ("params", params),
    ("inversion-counts", inversion_counts),
    ("bigint-oracle", oracle),
    ("cios-word-law", cios_law),
    ("tower", tower),
    ("group-laws", group_laws),
    ("bilinearity", bilinearity),
    ("multi-pairing-modes", multi_pairing_modes),
    ("exact-counts", exact_counts),
    ("hash-to-g1", hash),
    ("signatures", signatures),
    ("countermeasures", countermeasures),
];

/// Runs every suite; a panic inside a suite counts as its failure.
pub fn run_selftest() -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|&(suite, f)| {
            let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| p.downcast_ref::<String>().cloned())
                    .unwrap_or_default();
                Err(format!("panicked: {}", msg.lines().next().unwrap_or("")))
            });
            SuiteResult {
                suite,
                passed: r.is_ok(),
                detail: r.unwrap_or_else(|e| e),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for r in run_selftest() {
            assert!(r.passed, "{}: {}", r.suite, r.detail);
        }
    }

    #[test]
    fn inversion_chain_lengths() {
        let sp = SystemParams::get();
        assert_eq!(chain_length(&sp.p), 608);
        assert_eq!(chain_length(&sp.q), 417);
    }
}
