//! BLS signatures: sign, verify and aggregate five signers.

use bls381_pbc::counter;
use bls381_pbc::hash::Csprng;
use bls381_pbc::protocol::{aggregate, aggregate_verify, sign, verify, SecretKey};

fn main() {
    let mut rng = Csprng::from_seed([4; 32]);
    let sks: Vec<_> = (0..5).map(|_| SecretKey::generate(&mut rng)).collect();
    let pks: Vec<_> = sks.iter().map(|s| s.public_key()).collect();
    let msgs: Vec<String> = (0..5).map(|i| format!("block {i}")).collect();
    let sigs: Vec<_> = sks.iter().zip(&msgs).map(|(s, m)| sign(s, m.as_bytes())).collect();

    let (ok, one) = counter::measure(|| verify(&pks[0], msgs[0].as_bytes(), &sigs[0]));
    println!("single verify: {ok} ({} M1)", one.m1_equivalent());

    let agg = aggregate(&sigs).unwrap();
    let refs: Vec<&[u8]> = msgs.iter().map(|m| m.as_bytes()).collect();
    let (ok, all) = counter::measure(|| aggregate_verify(&pks, &refs, &agg).unwrap());
    println!("aggregate of 5: {ok} ({} M1, vs {} for 5 separate verifies)", all.m1_equivalent(), 5 * one.m1_equivalent());
    println!("aggregate signature: {}", hex::encode(agg.to_bytes()));

    let mut wrong = refs.clone();
    wrong.swap(0, 1);
    println!("swapped messages: {}", aggregate_verify(&pks, &wrong, &agg).unwrap());
}
