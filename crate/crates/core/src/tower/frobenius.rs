//! Frobenius constants `xi^(e (p^k - 1) / 6)` for `xi = 1 + a`,
//! `e = 0..5`, `k = 1, 2, 3`.
//!
//! Derived once from the modulus by exponentiation (uncounted), never
//! transcribed.

use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{exp_limbs, Fp12, Fp2};
use crate::counter;
use crate::field::Fp;
use crate::params::SystemParams;

type Table = [[Fp2; 6]; 3];

fn table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| counter::uncounted(derive))
}

fn derive() -> Table {
    let p = &SystemParams::get().p;
    let xi = Fp2::new(Fp::one(), Fp::one());
    let mut out = [[Fp2::one(); 6]; 3];
    for (k, row) in out.iter_mut().enumerate() {
        let pk: BigUint = p.pow(k as u32 + 1);
        let base = (pk - 1u8) / 6u8;
        for (e, c) in row.iter_mut().enumerate() {
            *c = xi.pow_vartime(&exp_limbs(&(&base * e)));
        }
    }
    out
}

/// Constant multiplying the coefficient of `g^e` under `x -> x^(p^k)`.
pub fn coefficient(k: usize, e: usize) -> Fp2 {
    table()[k - 1][e]
}

/// Checks `frobenius(x, k) = x^(p^k)` by direct exponentiation on a fixed
/// element. Slow; meant for self-tests.
pub fn self_check() -> bool {
    counter::uncounted(|| {
        let x = sample();
        let p = &SystemParams::get().p;
        (1..=3u32).all(|k| {
            let direct = x.pow_vartime(&exp_limbs(&p.pow(k)));
            x.frobenius(k).map(|f| f == direct).unwrap_or(false)
        })
    })
}

fn sample() -> Fp12 {
    let mut c = [Fp::zero(); 12];
    for (i, v) in c.iter_mut().enumerate() {
        *v = Fp::from_u64(0x9e37_79b9 * (i as u64 + 3) + 1);
    }
    Fp12::from_fp_coeffs(&c)
}
