//! Word-size sweep of the Montgomery multiplier: word-level work per
//! modular multiplication and extrapolated per-pairing totals.

use serde::Serialize;

use crate::counter;
use crate::curve::{G1Affine, G2Affine};
use crate::error::{Error, Result};
use crate::field::{Fp, Fq};
use crate::pairing::pairing;
use crate::params::{CiosCost, WordSize, MODEL_WORD_SIZES};

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub word_size: u32,
    /// Whether the multiplier can run at this size (otherwise analytic only).
    pub executable: bool,
    pub fp_words: u32,
    pub fp_word_mul: u64,
    pub fp_word_add: u64,
    pub fq_words: u32,
    pub fq_word_mul: u64,
    pub fq_word_add: u64,
    pub measured_fp_word_mul: Option<u64>,
    pub measured_fp_word_add: Option<u64>,
    pub measured_fq_word_mul: Option<u64>,
    pub measured_fq_word_add: Option<u64>,
    /// Modular multiplications in one pairing.
    pub pairing_modmuls: u64,
    /// `pairing_modmuls * fp_word_mul`.
    pub pairing_word_mul: u64,
    pub measured_pairing_word_mul: Option<u64>,
}

/// Rows for each requested word size, in the order given.
pub fn sweep(word_sizes: &[u32]) -> Result<Vec<SweepRow>> {
    if word_sizes.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(&w) = word_sizes.iter().find(|w| !MODEL_WORD_SIZES.contains(w)) {
        return Err(Error::UnsupportedWordSize(w));
    }
    let (g1, g2) = (G1Affine::generator(), G2Affine::generator());
    let pairing_modmuls = counter::measure(|| pairing(&g1, &g2)).1.modmul_total();
    let a = counter::uncounted(|| Fp::from_u64(0x1234_5678));
    let b = counter::uncounted(|| Fq::from_u64(0x9abc_def0));

    word_sizes
        .iter()
        .map(|&w| {
            let fp = CiosCost::for_operand(384, w)?;
            let fq = CiosCost::for_operand(256, w)?;
            let exec = WordSize::from_bits(w).ok();
            let measured = exec.map(|ws| {
                counter::with_word_size(ws, || {
                    let (_, cp) = counter::measure(|| a * a);
                    let (_, cq) = counter::measure(|| b * b);
                    let (_, pc) = counter::measure(|| pairing(&g1, &g2));
                    (cp, cq, pc.word_mul)
                })
            });
            Ok(SweepRow {
                word_size: w,
                executable: exec.is_some(),
                fp_words: fp.words,
                fp_word_mul: fp.word_muls,
                fp_word_add: fp.word_adds,
                fq_words: fq.words,
                fq_word_mul: fq.word_muls,
                fq_word_add: fq.word_adds,
                measured_fp_word_mul: measured.map(|m| m.0.word_mul),
                measured_fp_word_add: measured.map(|m| m.0.word_add),
                measured_fq_word_mul: measured.map(|m| m.1.word_mul),
                measured_fq_word_add: measured.map(|m| m.1.word_add),
                pairing_modmuls,
                pairing_word_mul: pairing_modmuls * fp.word_muls,
                measured_pairing_word_mul: measured.map(|m| m.2),
            })
        })
        .collect()
}
