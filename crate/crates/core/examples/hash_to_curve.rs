//! Hashing messages to G1.

use bls381_pbc::counter;
use bls381_pbc::hash::{hash_to_g1, DST_G1_RO};

fn main() {
    for msg in ["", "abc", "hello world"] {
        let (p, c) = counter::measure(|| hash_to_g1(msg.as_bytes(), DST_G1_RO));
        println!("{msg:?} -> {} ({} M1)", hex::encode(p.to_compressed()), c.m1_equivalent());
    }
    let a = hash_to_g1(b"abc", b"APP-A");
    let b = hash_to_g1(b"abc", b"APP-B");
    println!("distinct tags give distinct points: {}", a != b);
}
