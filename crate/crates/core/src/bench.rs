//! One instrumented run of a named operation, reported as JSON.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::counter::{self, OpCounts};
use crate::curve::{ecsm, ecsm_split, jubjub_ecsm, G1Affine, G2Affine, JubjubAffine, Scalar};
use crate::error::{Error, Result};
use crate::hash::{hash_to_g1, Csprng, DST_G1_RO};
use crate::pairing::{final_exp, miller_loop, multi_pairing, pairing, MultiPairingMode};
use crate::params::WordSize;
use crate::protocol::{hardened_ecsm, hardened_pairing, ipe_encrypt, CountermeasureConfig, IpeMode};

/// How `m1_equivalent` is formed.
pub const CONVENTION: &str = "m1_equivalent = m1 + s1 + 608*i1 over inclusive tallies (m1/s1 already hold \
    the Fp work of every Fp2 operation: M2 = 3 M1, S2 = 2 M1, I2 = 4 M1 + I1), which equals \
    m1 + s1 + 3*m2 + 2*s2 + 608*i1 + (4+608)*i2 over exclusive tallies";

/// Accepted operation names.
pub const BENCH_OPS: &[&str] = &[
    "pairing",
    "miller",
    "finalexp",
    "ecsm-g1",
    "ecsm-g2",
    "ecsm-g2-split",
    "ecsm-jubjub",
    "hash-g1",
    "multipairing:<n>:<naive|sharedfe|sharedmlfe>",
    "hardened-ecsm-g1",
    "hardened-ecsm-g2",
    "hardened-pairing",
    "ipe:<n>",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchOp {
    Pairing,
    Miller,
    FinalExp,
    EcsmG1,
    EcsmG2,
    EcsmG2Split,
    EcsmJubjub,
    HashG1,
    MultiPairing(usize, MultiPairingMode),
    HardenedEcsmG1,
    HardenedEcsmG2,
    HardenedPairing,
    Ipe(usize),
}

impl FromStr for BenchOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownOp(s.to_string());
        let count = |n: &str| match n.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(unknown()),
        };
        Ok(match s {
            "pairing" => BenchOp::Pairing,
            "miller" => BenchOp::Miller,
            "finalexp" => BenchOp::FinalExp,
            "ecsm-g1" => BenchOp::EcsmG1,
            "ecsm-g2" => BenchOp::EcsmG2,
            "ecsm-g2-split" => BenchOp::EcsmG2Split,
            "ecsm-jubjub" => BenchOp::EcsmJubjub,
            "hash-g1" => BenchOp::HashG1,
            "hardened-ecsm-g1" => BenchOp::HardenedEcsmG1,
            "hardened-ecsm-g2" => BenchOp::HardenedEcsmG2,
            "hardened-pairing" => BenchOp::HardenedPairing,
            _ => match s.split(':').collect::<Vec<_>>()[..] {
                ["multipairing", n, mode] => {
                    BenchOp::MultiPairing(count(n)?, mode.parse().map_err(|_| unknown())?)
                }
                ["ipe", n] => BenchOp::Ipe(count(n)?),
                _ => return Err(unknown()),
            },
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub op: String,
    pub mode: Option<String>,
    pub word_size: u32,
    pub seed: String,
    #[serde(flatten)]
    pub counts: OpCounts,
    pub m1_equivalent: u64,
    pub modmul_total: u64,
    /// `modmul_total` of the comparison run, when the op has one.
    pub baseline: Option<u64>,
    /// `modmul_total / baseline`.
    pub ratio: Option<f64>,
    pub wall_time_us: u64,
    pub convention: &'static str,
}

fn random_g1(rng: &mut Csprng) -> G1Affine {
    let k = rng.random_scalar_nonzero();
    counter::uncounted(|| ecsm(&k, &G1Affine::generator()))
}

fn random_g2(rng: &mut Csprng) -> G2Affine {
    let k = rng.random_scalar_nonzero();
    counter::uncounted(|| ecsm(&k, &G2Affine::generator()))
}

fn timed(f: impl FnOnce()) -> (OpCounts, u64) {
    let t = Instant::now();
    let ((), c) = counter::measure(f);
    (c, t.elapsed().as_micros() as u64)
}

/// Runs `op` once at word size `ws` with inputs drawn from `rng`.
pub fn run_bench(op: &str, ws: WordSize, rng: &mut Csprng) -> Result<BenchReport> {
    let parsed: BenchOp = op.parse()?;
    let seed = rng.seed_hex();
    counter::with_word_size(ws, || {
        let mut mode = None;
        let mut baseline = None;
        let (counts, wall) = match parsed {
            BenchOp::Pairing | BenchOp::Miller | BenchOp::FinalExp => {
                let (p, q) = (random_g1(rng), random_g2(rng));
                match parsed {
                    BenchOp::Pairing => timed(|| {
                        pairing(&p, &q);
                    }),
                    BenchOp::Miller => timed(|| {
                        miller_loop(&p, &q);
                    }),
                    _ => {
                        let f = counter::uncounted(|| miller_loop(&p, &q));
                        timed(|| {
                            final_exp(&f).unwrap();
                        })
                    }
                }
            }
            BenchOp::EcsmG1 => {
                let (k, p) = (rng.random_scalar(), random_g1(rng));
                timed(|| {
                    ecsm(&k, &p);
                })
            }
            BenchOp::EcsmG2 | BenchOp::EcsmG2Split => {
                let (k, q) = (rng.random_scalar(), random_g2(rng));
                if parsed == BenchOp::EcsmG2 {
                    timed(|| {
                        ecsm(&k, &q);
                    })
                } else {
                    let (base, _) = timed(|| {
                        ecsm(&k, &q);
                    });
                    baseline = Some(base.modmul_total());
                    timed(|| {
                        ecsm_split(&k, &q);
                    })
                }
            }
            BenchOp::EcsmJubjub => {
                let k = rng.random_scalar();
                let g = JubjubAffine::generator();
                timed(|| {
                    jubjub_ecsm(&k, &g);
                })
            }
            BenchOp::HashG1 => {
                let mut msg = [0u8; 32];
                rng.fill_bytes(&mut msg);
                timed(|| {
                    hash_to_g1(&msg, DST_G1_RO);
                })
            }
            BenchOp::MultiPairing(n, m) => {
                mode = Some(m.name().to_string());
                let pairs: Vec<_> = (0..n).map(|_| (random_g1(rng), random_g2(rng))).collect();
                let (naive, _) = timed(|| {
                    multi_pairing(&pairs, MultiPairingMode::Naive).unwrap();
                });
                baseline = Some(naive.modmul_total());
                timed(|| {
                    multi_pairing(&pairs, m).unwrap();
                })
            }
            BenchOp::HardenedEcsmG1 | BenchOp::HardenedEcsmG2 => {
                mode = Some("randomized_projective+scalar_splitting".into());
                let k = rng.random_scalar();
                let mut cfg = CountermeasureConfig::new(true, true, false, rng.fork(b"countermeasures"));
                if parsed == BenchOp::HardenedEcsmG1 {
                    let p = random_g1(rng);
                    baseline = Some(timed(|| { ecsm(&k, &p); }).0.modmul_total());
                    timed(|| {
                        hardened_ecsm(&k, &p, &mut cfg);
                    })
                } else {
                    let q = random_g2(rng);
                    baseline = Some(timed(|| { ecsm(&k, &q); }).0.modmul_total());
                    timed(|| {
                        hardened_ecsm(&k, &q, &mut cfg);
                    })
                }
            }
            BenchOp::HardenedPairing => {
                mode = Some("randomized_pairing".into());
                let (p, q) = (random_g1(rng), random_g2(rng));
                let mut cfg = CountermeasureConfig::new(false, false, true, rng.fork(b"countermeasures"));
                baseline = Some(timed(|| { pairing(&p, &q); }).0.modmul_total());
                timed(|| {
                    hardened_pairing(&p, &q, &mut cfg);
                })
            }
            BenchOp::Ipe(n) => {
                mode = Some("split_scalar".into());
                let xs: Vec<Scalar> = (0..n).map(|_| rng.random_scalar()).collect();
                let b = random_g2(rng);
                baseline = Some(timed(|| { ipe_encrypt(&xs, &b, IpeMode::Plain).unwrap(); }).0.modmul_total());
                timed(|| {
                    ipe_encrypt(&xs, &b, IpeMode::SplitScalar).unwrap();
                })
            }
        };
        Ok(BenchReport {
            op: op.to_string(),
            mode,
            word_size: ws.bits(),
            seed,
            counts,
            m1_equivalent: counts.m1_equivalent(),
            modmul_total: counts.modmul_total(),
            ratio: baseline.map(|b| counts.modmul_total() as f64 / b as f64),
            baseline,
            wall_time_us: wall,
            convention: CONVENTION,
        })
    })
}
