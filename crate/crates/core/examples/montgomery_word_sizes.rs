//! Montgomery multiplication at each supported word size: identical
//! results, different word-level work.

use bls381_pbc::counter;
use bls381_pbc::field::{Fp, Fq};
use bls381_pbc::params::{cios_cost_model, WordSize};

fn main() {
    let a = Fp::from_u64(0xdead_beef);
    let b = Fp::from_u64(0x1234_5678_9abc);
    for ws in WordSize::ALL {
        let (c, counts) = counter::with_word_size(ws, || counter::measure(|| a * b));
        let model = cios_cost_model(ws.bits()).unwrap();
        println!(
            "w={:>2}: product {}  word muls {} (model {}), word adds {} (model {})",
            ws.bits(),
            c.to_biguint(),
            counts.word_mul,
            model.word_muls,
            counts.word_add,
            model.word_adds
        );
    }

    let (_, inv_p) = counter::measure(|| a.invert());
    let x = Fq::from_u64(3);
    let (_, inv_q) = counter::measure(|| x.invert());
    println!("Fp inversion: {} multiplications", inv_p.cios_p);
    println!("Fq inversion: {} multiplications", inv_q.cios_q);
}
