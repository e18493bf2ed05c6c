//! Complete projective formulas: one code path for P + Q, P + P, P + O
//! and P + (-P).

use bls381_pbc::counter;
use bls381_pbc::curve::{G1Affine, G1Projective};

fn main() {
    let g = G1Projective::generator();
    let cases = [
        ("P + Q", g, g.double()),
        ("P + P", g, g),
        ("P + O", g, G1Projective::identity()),
        ("P + -P", g, g.neg()),
    ];
    for (name, a, b) in cases {
        let (sum, c) = counter::measure(|| a.add(&b));
        println!(
            "{name:<7} {} M1, {} A1, identity: {}",
            c.fp_muls(),
            c.a1,
            bool::from(sum.is_identity())
        );
    }
    let (_, c) = counter::measure(|| g.add_affine(&G1Affine::generator()));
    println!("mixed   {} M1", c.fp_muls());
    let (_, c) = counter::measure(|| g.double());
    println!("double  {} M1", c.fp_muls());
}
