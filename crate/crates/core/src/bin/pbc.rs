//! `pbc`: self-tests, instrumented benchmarks, word-size sweeps and BLS
//! signature workflows.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal invariant failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use bls381_pbc::bench::{run_bench, BENCH_OPS};
use bls381_pbc::counter;
use bls381_pbc::curve::{G1Affine, G2Affine};
use bls381_pbc::hash::{hash_to_g1, Csprng, DST_G1_RO};
use bls381_pbc::pairing::pairing;
use bls381_pbc::params::{WordSize, MODEL_WORD_SIZES};
use bls381_pbc::protocol::{aggregate, aggregate_verify, sign, verify, PublicKey, SecretKey, Signature};
use bls381_pbc::selftest::run_selftest;
use bls381_pbc::sweep::sweep;
use bls381_pbc::Error;

#[derive(Parser)]
#[command(name = "pbc", version, about = "Operation-counted BLS12-381 pairing engine")]
struct Cli {
    /// Montgomery multiplier word size.
    #[arg(long, global = true, default_value = "64", value_parser = ["16", "32", "64"])]
    word_size: String,
    /// 32-byte seed as 64 hex characters; drawn from the OS when absent.
    #[arg(long, global = true)]
    seed: Option<String>,
    /// Emit JSON lines instead of text (bench and sweep always emit JSON).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the invariant suites.
    Selftest {
        /// Corrupt the Montgomery constant first (exercises the failure path).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Count the field operations of one run of OP.
    Bench {
        /// Operation name; `multipairing` and `ipe` take --n (and --mode).
        op: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Word-level Montgomery cost per word size.
    Sweep {
        #[arg(long = "word-sizes", value_delimiter = ',', default_value = "16,24,32,48,64,96")]
        word_sizes: Vec<u32>,
        /// Print an aligned table.
        #[arg(long)]
        table: bool,
    },
    /// Write a secret key (32 bytes) and public key (96 bytes).
    Keygen {
        #[arg(long)]
        sk: PathBuf,
        #[arg(long)]
        pk: PathBuf,
    },
    /// Sign a message.
    Sign {
        #[arg(long)]
        sk: PathBuf,
        #[command(flatten)]
        msg: Messages,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a signature, or an aggregate when several keys are given.
    Verify {
        #[arg(long = "pk", required = true)]
        pks: Vec<PathBuf>,
        #[command(flatten)]
        msg: Messages,
        #[arg(long)]
        sig: PathBuf,
    },
    /// Sum signatures into one.
    Aggregate {
        #[arg(long = "sig", required = true)]
        sigs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print reference values as JSON lines.
    Vectors,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Messages {
    /// Message text (repeatable).
    #[arg(long = "msg")]
    text: Vec<String>,
    /// Message file (repeatable).
    #[arg(long = "msg-file")]
    files: Vec<PathBuf>,
}

impl Messages {
    fn load(&self) -> Result<Vec<Vec<u8>>, Failure> {
        if !self.text.is_empty() {
            return Ok(self.text.iter().map(|t| t.as_bytes().to_vec()).collect());
        }
        self.files.iter().map(|p| read(p)).collect()
    }
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }

    fn rejected(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownOp(op) => Failure::usage(format!("unknown operation `{op}`; expected one of: {}", BENCH_OPS.join(", "))),
            other => Failure::usage(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn rng(seed: &Option<String>) -> Result<Csprng, Failure> {
    match seed {
        Some(s) => Ok(Csprng::from_hex(s)?),
        None => Ok(Csprng::from_entropy()),
    }
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let ws = WordSize::from_bits(cli.word_size.parse().unwrap())?;
    counter::set_word_size(ws);
    match cli.cmd {
        Cmd::Selftest { inject_fault } => {
            counter::inject_montgomery_fault(inject_fault);
            // suites report their own panics
            std::panic::set_hook(Box::new(|_| {}));
            let results = run_selftest();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                emit(cli.json, json!(r), format!("{status} {:<20} {}", r.suite, r.detail));
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(Failure { code: 3, msg: format!("{failed} suite(s) failed") });
            }
        }
        Cmd::Bench { op, n, mode } => {
            let name = match (op.as_str(), n, mode) {
                ("multipairing", n, m) => format!("multipairing:{}:{}", n.unwrap_or(8), m.as_deref().unwrap_or("sharedmlfe")),
                ("ipe", n, None) => format!("ipe:{}", n.unwrap_or(8)),
                (_, None, None) => op.clone(),
                _ => return Err(Failure::usage("--n and --mode apply to multipairing and ipe only")),
            };
            let report = run_bench(&name, ws, &mut rng(&cli.seed)?)?;
            println!("{}", serde_json::to_string(&report).unwrap());
        }
        Cmd::Sweep { word_sizes, table } => {
            let rows = sweep(&word_sizes).map_err(|e| match e {
                Error::UnsupportedWordSize(w) => {
                    Failure::usage(format!("unsupported word size {w}; expected a subset of {MODEL_WORD_SIZES:?}"))
                }
                e => e.into(),
            })?;
            if table {
                println!("{:>4} {:>6} {:>10} {:>10} {:>14} {:>14}", "w", "words", "word_mul", "word_add", "pairing_mul", "measured");
                for r in &rows {
                    let m = r.measured_pairing_word_mul.map_or("-".to_string(), |v| v.to_string());
                    println!(
                        "{:>4} {:>6} {:>10} {:>10} {:>14} {:>14}",
                        r.word_size, r.fp_words, r.fp_word_mul, r.fp_word_add, r.pairing_word_mul, m
                    );
                }
            } else {
                for r in &rows {
                    println!("{}", serde_json::to_string(r).unwrap());
                }
            }
        }
        Cmd::Keygen { sk, pk } => {
            let mut rng = rng(&cli.seed)?;
            let key = SecretKey::generate(&mut rng);
            let public = key.public_key();
            write(&sk, &key.to_bytes())?;
            write(&pk, &public.to_bytes())?;
            let pk_hex = hex::encode(public.to_bytes());
            emit(
                cli.json,
                json!({"op": "keygen", "seed": rng.seed_hex(), "pk": pk_hex}),
                format!("seed {}\npk {pk_hex}", rng.seed_hex()),
            );
        }
        Cmd::Sign { sk, msg, out } => {
            let key = SecretKey::from_bytes(&read(&sk)?).map_err(|e| Failure::usage(format!("{}: {e}", sk.display())))?;
            let msgs = msg.load()?;
            if msgs.len() != 1 {
                return Err(Failure::usage("sign takes exactly one message"));
            }
            let sig = sign(&key, &msgs[0]);
            write(&out, &sig.to_bytes())?;
            let hex = hex::encode(sig.to_bytes());
            emit(cli.json, json!({"op": "sign", "sig": hex}), format!("sig {hex}"));
        }
        Cmd::Verify { pks, msg, sig } => {
            let msgs = msg.load()?;
            if msgs.len() != pks.len() {
                return Err(Error::LengthMismatch(pks.len(), msgs.len()).into());
            }
            let keys = pks
                .iter()
                .map(|p| {
                    let bytes = read(p)?;
                    PublicKey::from_bytes(&bytes).map_err(|e| Failure::rejected(format!("{}: {e}", p.display())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let signature = Signature::from_bytes(&read(&sig)?)
                .map_err(|e| Failure::rejected(format!("{}: {e}", sig.display())))?;
            let ok = if keys.len() == 1 {
                verify(&keys[0], &msgs[0], &signature)
            } else {
                let refs: Vec<&[u8]> = msgs.iter().map(|m| m.as_slice()).collect();
                aggregate_verify(&keys, &refs, &signature)?
            };
            emit(cli.json, json!({"op": "verify", "valid": ok}), if ok { "valid" } else { "invalid" }.into());
            if !ok {
                return Ok(1);
            }
        }
        Cmd::Aggregate { sigs, out } => {
            let parsed = sigs
                .iter()
                .map(|p| Signature::from_bytes(&read(p)?).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))))
                .collect::<Result<Vec<_>, _>>()?;
            let agg = aggregate(&parsed)?;
            write(&out, &agg.to_bytes())?;
            let hex = hex::encode(agg.to_bytes());
            emit(cli.json, json!({"op": "aggregate", "count": parsed.len(), "sig": hex}), format!("sig {hex}"));
        }
        Cmd::Vectors => vectors(&cli.seed)?,
    }
    Ok(0)
}

fn vectors(seed: &Option<String>) -> Result<(), Failure> {
    let (x, y) = (bls381_pbc::field::Fp::from_u64(2), bls381_pbc::field::Fq::from_u64(2));
    let (_, inv_p) = counter::measure(|| x.invert());
    let (_, inv_q) = counter::measure(|| y.invert());
    println!("{}", json!({"vector": "inversion", "fp_modmuls": inv_p.cios_p, "fq_modmuls": inv_q.cios_q}));
    println!(
        "{}",
        json!({
            "vector": "generators",
            "g1": hex::encode(G1Affine::generator().to_compressed()),
            "g2": hex::encode(G2Affine::generator().to_compressed()),
        })
    );
    let gt = pairing(&G1Affine::generator(), &G2Affine::generator());
    println!("{}", json!({"vector": "pairing", "sha256_of_gt": hex::encode(bls381_pbc::hash::sha256(&gt.to_bytes()))}));
    for msg in ["", "abc"] {
        let p = hash_to_g1(msg.as_bytes(), DST_G1_RO);
        println!(
            "{}",
            json!({"vector": "hash_to_g1", "dst": String::from_utf8_lossy(DST_G1_RO), "msg": msg, "point": hex::encode(p.to_compressed())})
        );
    }
    let mut rng = match seed {
        Some(_) => rng(seed)?,
        None => Csprng::from_seed([0; 32]),
    };
    let sk = SecretKey::generate(&mut rng);
    let sig = sign(&sk, b"abc");
    println!(
        "{}",
        json!({
            "vector": "bls",
            "seed": rng.seed_hex(),
            "sk": hex::encode(sk.to_bytes()),
            "pk": hex::encode(sk.public_key().to_bytes()),
            "msg": "abc",
            "sig": hex::encode(sig.to_bytes()),
        })
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("pbc: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
