//! Power-analysis countermeasures around ECSM and the pairing.
//!
//! - randomized projective coordinates: the accumulator starts at
//!   `(0 : lambda : 0)` (or the multi-exponentiation table is scaled by
//!   `lambda`), so every intermediate carries a random `Z`;
//! - scalar splitting: `kP = rP + (k - r)P` through one shared-doubling
//!   multi-exponentiation over the table `[O, P, P, 2P]`;
//! - randomized pairing: `e(aP, bQ)` with `b = a^-1 mod q`.
//!
//! Splitting reduces `k` modulo `q`, so it agrees with plain ECSM on points
//! of the order-q subgroup only.

use crate::counter;
use crate::curve::{ecsm_projective, multi_exp_bits, Affine, CurveField, G1Affine, G2Affine, Projective, Scalar};
use crate::field::Fp;
use crate::hash::Csprng;
use crate::pairing::{pairing, Gt};
use crate::tower::Fp2;

/// Field that can draw a uniform nonzero blinding factor.
pub trait RandomField: CurveField {
    fn random_nonzero(rng: &mut Csprng) -> Self;
    fn to_hex(&self) -> String;
}

impl RandomField for Fp {
    fn random_nonzero(rng: &mut Csprng) -> Self {
        rng.random_fp_nonzero()
    }

    fn to_hex(&self) -> String {
        counter::uncounted(|| hex::encode(self.to_bytes_be()))
    }
}

impl RandomField for Fp2 {
    fn random_nonzero(rng: &mut Csprng) -> Self {
        rng.random_fp2_nonzero()
    }

    fn to_hex(&self) -> String {
        format!("{}{}", self.c1.to_hex(), self.c0.to_hex())
    }
}

/// One logged random value.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Draw {
    pub label: &'static str,
    pub value: String,
}

/// Which countermeasures are active, plus their randomness source.
#[derive(Clone, Debug)]
pub struct CountermeasureConfig {
    pub randomized_projective: bool,
    pub scalar_splitting: bool,
    pub randomized_pairing: bool,
    pub rng: Csprng,
    /// Every value drawn so far, for replay.
    pub transcript: Vec<Draw>,
}

impl CountermeasureConfig {
    pub fn new(randomized_projective: bool, scalar_splitting: bool, randomized_pairing: bool, rng: Csprng) -> Self {
        CountermeasureConfig {
            randomized_projective,
            scalar_splitting,
            randomized_pairing,
            rng,
            transcript: Vec::new(),
        }
    }

    pub fn off(rng: Csprng) -> Self {
        Self::new(false, false, false, rng)
    }

    pub fn all(rng: Csprng) -> Self {
        Self::new(true, true, true, rng)
    }

    fn log(&mut self, label: &'static str, value: String) {
        self.transcript.push(Draw { label, value });
    }
}

/// `k * P` under the configured countermeasures. Equal to `ecsm(k, P)` for
/// every draw when `P` lies in the order-q subgroup.
pub fn hardened_ecsm<F: RandomField>(k: &Scalar, p: &Affine<F>, cfg: &mut CountermeasureConfig) -> Affine<F> {
    let lambda = if cfg.randomized_projective {
        let l = F::random_nonzero(&mut cfg.rng);
        cfg.log("lambda", l.to_hex());
        Some(l)
    } else {
        None
    };
    let out = if cfg.scalar_splitting {
        let r = cfg.rng.random_scalar();
        cfg.log("r", hex::encode(r.to_bytes_be()));
        let rest = Scalar::from_fq(&(k.to_fq() - r.to_fq()));
        let base = p.to_projective();
        multi_exp_bits(&r, &base, &rest, &base, crate::curve::SCALAR_BITS, lambda.as_ref())
    } else {
        let start = lambda.as_ref().map_or_else(Projective::identity, Projective::identity_scaled);
        ecsm_projective(k, p, start)
    };
    out.to_affine()
}

/// `e(P, Q)`; with pairing randomization on, computed as `e(aP, bQ)`.
pub fn hardened_pairing(p: &G1Affine, q: &G2Affine, cfg: &mut CountermeasureConfig) -> Gt {
    if !cfg.randomized_pairing {
        return pairing(p, q);
    }
    let a = cfg.rng.random_fq_nonzero();
    let b = a.invert().unwrap();
    let (a, b) = (Scalar::from_fq(&a), Scalar::from_fq(&b));
    cfg.log("a", hex::encode(a.to_bytes_be()));
    let ap = hardened_ecsm(&a, p, cfg);
    let bq = hardened_ecsm(&b, q, cfg);
    pairing(&ap, &bq)
}
