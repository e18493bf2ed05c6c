//! Twisted Edwards arithmetic on Jubjub over the scalar field.

use bls381_pbc::counter;
use bls381_pbc::curve::{jubjub_ecsm, JubjubAffine, Scalar};

fn main() {
    let g = JubjubAffine::generator();
    let k = Scalar::from_u64(0x0123_4567_89ab_cdef);
    let (p, c) = counter::measure(|| jubjub_ecsm(&k, &g));
    println!("k*G = {}", hex::encode(p.to_bytes()));
    println!("cost: {} Fq multiplications ({} including the inversion)", c.fq_muls(), c.fq_equivalent());
    let order = jubjub_ecsm(&Scalar::JUBJUB_ORDER, &g);
    println!("subgroup order annihilates G: {}", bool::from(order.is_identity()));
}
