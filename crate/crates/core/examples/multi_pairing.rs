//! Products of pairings with shared final exponentiation and shared
//! Miller-loop squarings.

use bls381_pbc::counter;
use bls381_pbc::curve::{ecsm, G1Affine, G2Affine};
use bls381_pbc::hash::Csprng;
use bls381_pbc::pairing::{multi_pairing, MultiPairingMode};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let mut rng = Csprng::from_seed([3; 32]);
    let pairs: Vec<_> = (0..n)
        .map(|_| {
            (
                ecsm(&rng.random_scalar(), &G1Affine::generator()),
                ecsm(&rng.random_scalar(), &G2Affine::generator()),
            )
        })
        .collect();
    let mut values = Vec::new();
    for mode in MultiPairingMode::ALL {
        let (v, c) = counter::measure(|| multi_pairing(&pairs, mode).unwrap());
        println!("{:<11} n={n}: {} M1", mode.name(), c.m1_equivalent());
        values.push(v);
    }
    println!("all modes agree: {}", values.windows(2).all(|w| w[0] == w[1]));
}
