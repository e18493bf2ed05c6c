//! Coarsely integrated operand scanning (CIOS) Montgomery multiplication at
//! a selectable word size.
//!
//! Operands are stored as little-endian 64-bit limbs. At word sizes below
//! 64 they are re-sliced into `w`-bit words before the loop runs, so the
//! same Montgomery radix `R = 2^(64N)` (`2^384` for Fp, `2^256` for Fq)
//! applies at every word size and results are bit-identical.

use crate::counter;

/// Largest word count we need: 384 bits in 16-bit words.
const MAX_WORDS: usize = 24;

#[inline(always)]
fn split<const N: usize>(limbs: &[u64; N], bits: u32, out: &mut [u64; MAX_WORDS]) -> usize {
    if bits == 64 {
        out[..N].copy_from_slice(limbs);
        return N;
    }
    let per = (64 / bits) as usize;
    let mask = (1u64 << bits) - 1;
    for (k, o) in out.iter_mut().take(N * per).enumerate() {
        *o = (limbs[k / per] >> ((k % per) as u32 * bits)) & mask;
    }
    N * per
}

#[inline(always)]
fn merge<const N: usize>(words: &[u64], bits: u32) -> [u64; N] {
    let mut out = [0u64; N];
    if bits == 64 {
        out.copy_from_slice(&words[..N]);
        return out;
    }
    let per = (64 / bits) as usize;
    for (k, w) in words.iter().take(N * per).enumerate() {
        out[k / per] |= w << ((k % per) as u32 * bits);
    }
    out
}

/// Returns `a * b * R^-1 mod n` for canonical `a, b < n`.
///
/// `n_prime` is `-n^-1 mod 2^64`; its low `w` bits serve every word size.
/// Charges one product plus its word-level operations to the ledger.
pub(crate) fn mont_mul<const N: usize>(
    a: &[u64; N],
    b: &[u64; N],
    n: &[u64; N],
    n_prime: u64,
    scalar_field: bool,
) -> [u64; N] {
    let (ws, fault) = counter::multiplier_config();
    let bits = ws.bits();
    let mask: u128 = (1u128 << bits) - 1;

    let mut aw = [0u64; MAX_WORDS];
    let mut bw = [0u64; MAX_WORDS];
    let mut nw = [0u64; MAX_WORDS];
    let s = split(a, bits, &mut aw);
    split(b, bits, &mut bw);
    split(n, bits, &mut nw);

    let mut np = n_prime & (mask as u64);
    if fault {
        np ^= 2;
    }

    let mut muls = 0u64;
    let mut adds = 0u64;
    let mut t = [0u64; MAX_WORDS + 2];

    for i in 0..s {
        let mut c: u128 = 0;
        for j in 0..s {
            let x = t[j] as u128 + (aw[j] as u128) * (bw[i] as u128) + c;
            t[j] = (x & mask) as u64;
            c = x >> bits;
            muls += 1;
            adds += 2;
        }
        let x = t[s] as u128 + c;
        t[s] = (x & mask) as u64;
        t[s + 1] = (x >> bits) as u64;
        adds += 1;

        let m = ((t[0] as u128 * np as u128) & mask) as u128;
        muls += 1;
        let x = t[0] as u128 + m * (nw[0] as u128);
        let mut c = x >> bits;
        muls += 1;
        adds += 1;
        for j in 1..s {
            let x = t[j] as u128 + m * (nw[j] as u128) + c;
            t[j - 1] = (x & mask) as u64;
            c = x >> bits;
            muls += 1;
            adds += 2;
        }
        let x = t[s] as u128 + c;
        t[s - 1] = (x & mask) as u64;
        c = x >> bits;
        adds += 1;
        t[s] = t[s + 1] + c as u64;
        adds += 1;
    }

    // t < 2n: subtract n over s+1 words and keep whichever is canonical.
    let mut r = [0u64; MAX_WORDS];
    let mut borrow: u128 = 0;
    for j in 0..s {
        let x = (t[j] as u128).wrapping_sub(nw[j] as u128 + borrow);
        r[j] = (x & mask) as u64;
        borrow = (x >> 127) & 1;
        adds += 2;
    }
    let top = (t[s] as u128).wrapping_sub(borrow);
    borrow = (top >> 127) & 1;
    adds += 2;

    // borrow == 1 means t < n: keep t.
    let keep_t = 0u64.wrapping_sub(borrow as u64);
    for j in 0..s {
        r[j] = (t[j] & keep_t) | (r[j] & !keep_t);
    }

    counter::record_cios(scalar_field, muls, adds);
    merge::<N>(&r[..s], bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::WordSize;

    #[test]
    fn split_merge_roundtrip() {
        let v = [0x0123_4567_89ab_cdef, 0xfedc_ba98_7654_3210, 7, 0];
        for bits in [16, 32, 64] {
            let mut w = [0u64; MAX_WORDS];
            let s = split(&v, bits, &mut w);
            assert_eq!(s, 4 * (64 / bits as usize));
            assert_eq!(merge::<4>(&w[..s], bits), v);
        }
    }

    #[test]
    fn word_sizes_agree() {
        // small modulus embedded in four limbs
        let n = [0xffff_ffff_0000_0001, 0x53bd_a402_fffe_5bfe, 0x3339_d808_09a1_d805, 0x73ed_a753_299d_7d48];
        let np = 0xffff_fffe_ffff_ffff;
        let a = [5, 6, 7, 8];
        let b = [11, 0, 3, 1];
        let base = mont_mul(&a, &b, &n, np, true);
        for w in WordSize::ALL {
            let r = counter::with_word_size(w, || mont_mul(&a, &b, &n, np, true));
            assert_eq!(r, base, "word size {w:?}");
        }
    }
}
