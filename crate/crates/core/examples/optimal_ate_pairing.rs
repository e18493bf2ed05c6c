//! Optimal ate pairing: cost split and bilinearity.

use bls381_pbc::counter;
use bls381_pbc::curve::{ecsm, G1Affine, G2Affine, Scalar};
use bls381_pbc::pairing::{final_exp, miller_loop, pairing};

fn main() {
    let (p, q) = (G1Affine::generator(), G2Affine::generator());
    let (f, ml) = counter::measure(|| miller_loop(&p, &q));
    let (e, fe) = counter::measure(|| final_exp(&f).unwrap());
    println!("Miller loop:          {} M1", ml.m1_equivalent());
    println!("final exponentiation: {} M1", fe.m1_equivalent());
    println!("total:                {} M1", ml.m1_equivalent() + fe.m1_equivalent());

    let (a, b) = (Scalar::from_u64(6), Scalar::from_u64(7));
    let lhs = pairing(&ecsm(&a, &p), &ecsm(&b, &q));
    println!("e(6P, 7Q) = e(P, Q)^42: {}", lhs == e.pow(&Scalar::from_u64(42)));
}
