//! Randomized projective coordinates, scalar splitting and pairing
//! randomization, with their cost overheads.

use bls381_pbc::counter;
use bls381_pbc::curve::{ecsm, G1Affine, G2Affine};
use bls381_pbc::hash::Csprng;
use bls381_pbc::pairing::pairing;
use bls381_pbc::protocol::{hardened_ecsm, hardened_pairing, CountermeasureConfig};

fn main() {
    let mut rng = Csprng::from_seed([5; 32]);
    let k = rng.random_scalar();
    let p = G1Affine::generator();

    let (plain, base) = counter::measure(|| ecsm(&k, &p));
    for (rp, ss) in [(true, false), (false, true), (true, true)] {
        let mut cfg = CountermeasureConfig::new(rp, ss, false, rng.fork(b"ecsm"));
        let (v, c) = counter::measure(|| hardened_ecsm(&k, &p, &mut cfg));
        assert_eq!(v, plain);
        println!(
            "projective={rp:<5} splitting={ss:<5} overhead {:.3}x  draws {:?}",
            c.modmul_total() as f64 / base.modmul_total() as f64,
            cfg.transcript.iter().map(|d| d.label).collect::<Vec<_>>()
        );
    }

    let q = G2Affine::generator();
    let mut cfg = CountermeasureConfig::new(false, false, true, rng.fork(b"pairing"));
    let (e, plain) = counter::measure(|| pairing(&p, &q));
    let (h, hard) = counter::measure(|| hardened_pairing(&p, &q, &mut cfg));
    assert_eq!(e, h);
    println!("randomized pairing: {:.3}x", hard.modmul_total() as f64 / plain.modmul_total() as f64);
}
