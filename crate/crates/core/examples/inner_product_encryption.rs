//! Encryption hot loop of inner-product encryption: one G2 multiplication
//! per coordinate, plain versus split scalar.

use bls381_pbc::hash::Csprng;
use bls381_pbc::protocol::ipe_encrypt_benchmark;

fn main() {
    let mut rng = Csprng::from_seed([6; 32]);
    for n in [1, 4, 16] {
        let r = ipe_encrypt_benchmark(n, &mut rng).unwrap();
        println!(
            "n={n:>2}: plain {:.0} M1/elem, split {:.0} M1/elem, ratio {:.2}, agree {}",
            r.plain_per_element, r.split_per_element, r.ratio, r.values_agree
        );
    }
}
