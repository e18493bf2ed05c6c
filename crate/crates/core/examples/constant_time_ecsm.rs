//! Double-and-add-always scalar multiplication on G1 and G2: fixed cost
//! and a scalar-independent operation trace.

use bls381_pbc::counter;
use bls381_pbc::curve::{ecsm, G1Affine, G2Affine, Scalar};

fn main() {
    let k1 = Scalar::from_u64(1);
    let k2 = Scalar::from_fq(&-bls381_pbc::field::Fq::one());

    let (_, c) = counter::measure(|| ecsm(&k1, &G1Affine::generator()));
    println!("G1: {} M1 + {} A1 + {} I1", c.fp_muls(), c.a1, c.i1);
    let (_, c) = counter::measure(|| ecsm(&k1, &G2Affine::generator()));
    println!("G2: {} M2 + {} S2 + {} A2 + {} I2", c.m2, c.s2, c.a2, c.i2);

    let (_, t1) = counter::trace(|| ecsm(&k1, &G1Affine::generator()));
    let (_, t2) = counter::trace(|| ecsm(&k2, &G1Affine::generator()));
    println!("traces for k = 1 and k = q - 1: {} ops each, identical: {}", t1.len(), t1 == t2);
}
