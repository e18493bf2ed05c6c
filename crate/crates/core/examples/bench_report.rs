//! The JSON report behind `pbc bench`.

use bls381_pbc::bench::{run_bench, BENCH_OPS};
use bls381_pbc::hash::Csprng;
use bls381_pbc::params::WordSize;

fn main() {
    let op = std::env::args().nth(1).unwrap_or_else(|| "pairing".into());
    match run_bench(&op, WordSize::W64, &mut Csprng::from_seed([7; 32])) {
        Ok(r) => println!("{}", serde_json::to_string_pretty(&r).unwrap()),
        Err(e) => eprintln!("{e}; known ops: {}", BENCH_OPS.join(", ")),
    }
}
