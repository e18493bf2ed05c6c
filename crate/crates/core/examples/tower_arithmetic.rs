//! The Fp2 / Fp6 / Fp12 tower and its operation counts.

use bls381_pbc::counter;
use bls381_pbc::field::Fp;
use bls381_pbc::hash::Csprng;
use bls381_pbc::tower::{Fp12, Fp2};

fn main() {
    let mut rng = Csprng::from_seed([1; 32]);
    let x = Fp2::new(rng.random_fp(), rng.random_fp());
    let y = Fp2::new(rng.random_fp(), rng.random_fp());
    let (_, c) = counter::measure(|| x * y);
    println!("Fp2 multiply: {} Fp multiplications", c.fp_muls());
    let (_, c) = counter::measure(|| x.square());
    println!("Fp2 square:   {} Fp multiplications", c.fp_muls());

    let mut coeffs = [Fp::zero(); 12];
    coeffs.iter_mut().for_each(|c| *c = rng.random_fp());
    let f = Fp12::from_fp_coeffs(&coeffs);
    let (_, c) = counter::measure(|| f.mul(&f));
    println!("Fp12 multiply: {} Fp2 multiplications, {} Fp", c.m2, c.fp_muls());
    let (_, c) = counter::measure(|| f.square());
    println!("Fp12 square:   {} Fp multiplications", c.fp_muls());

    let inv = f.invert().unwrap();
    assert_eq!(f.mul(&inv), Fp12::one());
    assert_eq!(f.frobenius(6).unwrap(), f.conjugate());
    println!("f * f^-1 = 1 and f^(p^6) = conj(f)");
}
