//! G2 multiplication through the skew Frobenius map: `k = k1 + k2 u^2`
//! halves the doublings.

use bls381_pbc::counter;
use bls381_pbc::curve::{ecsm, ecsm_split, G2Affine};
use bls381_pbc::hash::Csprng;

fn main() {
    let mut rng = Csprng::from_seed([2; 32]);
    let k = rng.random_scalar();
    let (k1, k2) = k.split();
    println!("k1 = {}\nk2 = {}", k1.to_biguint(), k2.to_biguint());

    let g = G2Affine::generator();
    let (a, plain) = counter::measure(|| ecsm(&k, &g));
    let (b, split) = counter::measure(|| ecsm_split(&k, &g));
    assert_eq!(a, b);
    println!(
        "plain {} M1, split {} M1, speedup {:.2}x",
        plain.m1_equivalent(),
        split.m1_equivalent(),
        plain.m1_equivalent() as f64 / split.m1_equivalent() as f64
    );
}
