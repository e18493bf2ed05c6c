//! Word-level cost of a pairing as the multiplier word size varies.

use bls381_pbc::params::MODEL_WORD_SIZES;
use bls381_pbc::sweep::sweep;

fn main() {
    println!("{:>3} {:>6} {:>9} {:>13} {:>13}", "w", "words", "word_mul", "pairing", "measured");
    for r in sweep(&MODEL_WORD_SIZES).unwrap() {
        println!(
            "{:>3} {:>6} {:>9} {:>13} {:>13}",
            r.word_size,
            r.fp_words,
            r.fp_word_mul,
            r.pairing_word_mul,
            r.measured_pairing_word_mul.map_or("-".into(), |v| v.to_string())
        );
    }
}
