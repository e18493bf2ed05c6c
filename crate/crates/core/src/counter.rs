//! Operation counters.
//!
//! Every arithmetic layer reports what it does to a per-thread ledger: field
//! multiplications, squarings, additions and inversions for `Fp`, `Fp2` and
//! `Fq`, plus the word-level multiply/add tallies of each Montgomery product.
//! Each thread owns its own ledger, so concurrent measurements never mix.
//!
//! Tallies are inclusive. An `Fp2` multiplication bumps `m2` once and `m1`
//! three times, because it really performs three `Fp` multiplications.
//! Multiplications executed inside an inversion are charged to `i1`/`iq`
//! and to the raw Montgomery tallies only, never to `m1`/`s1`.

use std::cell::RefCell;
use std::ops::Sub;

use serde::Serialize;

use crate::params::WordSize;

/// Fp multiplications charged per Fp inversion (the fixed exponent chain).
pub const FP_INV_MULS: u64 = 608;
/// Fq multiplications charged per Fq inversion.
pub const FQ_INV_MULS: u64 = 417;

/// Kind of a recorded field operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OpKind {
    FpMul,
    FpSqr,
    FpAdd,
    FpSub,
    FpInv,
    Fp2Mul,
    Fp2Sqr,
    Fp2Add,
    Fp2Inv,
    FqMul,
    FqSqr,
    FqAdd,
    FqSub,
    FqInv,
}

/// A snapshot (or a delta) of the operation tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCounts {
    pub m1: u64,
    pub s1: u64,
    pub a1: u64,
    pub i1: u64,
    pub m2: u64,
    pub s2: u64,
    pub a2: u64,
    pub i2: u64,
    pub mq: u64,
    pub sq: u64,
    pub aq: u64,
    pub iq: u64,
    /// Raw Montgomery products over Fp, including those inside inversions.
    pub cios_p: u64,
    /// Raw Montgomery products over Fq, including those inside inversions.
    pub cios_q: u64,
    pub word_mul: u64,
    pub word_add: u64,
}

impl OpCounts {
    /// Fp multiplications counted as `M1` (squarings included).
    pub fn fp_muls(&self) -> u64 {
        self.m1 + self.s1
    }

    /// Fp2 multiplications and squarings.
    pub fn fp2_muls(&self) -> u64 {
        self.m2 + self.s2
    }

    /// Fq multiplications and squarings, inversions excluded.
    pub fn fq_muls(&self) -> u64 {
        self.mq + self.sq
    }

    /// Equivalent number of Fp multiplications, inversions weighted at 608.
    ///
    /// With inclusive tallies this is `m1 + s1 + 608 i1`, and it always
    /// equals `cios_p`.
    pub fn m1_equivalent(&self) -> u64 {
        self.m1 + self.s1 + FP_INV_MULS * self.i1
    }

    /// Equivalent number of Fq multiplications, inversions weighted at 417.
    pub fn fq_equivalent(&self) -> u64 {
        self.mq + self.sq + FQ_INV_MULS * self.iq
    }

    /// Every modular multiplication issued to the shared multiplier,
    /// whichever prime it was configured for.
    pub fn modmul_total(&self) -> u64 {
        self.m1_equivalent() + self.fq_equivalent()
    }

    fn bump(&mut self, kind: OpKind) {
        match kind {
            OpKind::FpMul => self.m1 += 1,
            OpKind::FpSqr => self.s1 += 1,
            OpKind::FpAdd | OpKind::FpSub => self.a1 += 1,
            OpKind::FpInv => self.i1 += 1,
            OpKind::Fp2Mul => self.m2 += 1,
            OpKind::Fp2Sqr => self.s2 += 1,
            OpKind::Fp2Add => self.a2 += 1,
            OpKind::Fp2Inv => self.i2 += 1,
            OpKind::FqMul => self.mq += 1,
            OpKind::FqSqr => self.sq += 1,
            OpKind::FqAdd | OpKind::FqSub => self.aq += 1,
            OpKind::FqInv => self.iq += 1,
        }
    }
}

impl Sub for OpCounts {
    type Output = OpCounts;

    fn sub(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            m1: self.m1 - rhs.m1,
            s1: self.s1 - rhs.s1,
            a1: self.a1 - rhs.a1,
            i1: self.i1 - rhs.i1,
            m2: self.m2 - rhs.m2,
            s2: self.s2 - rhs.s2,
            a2: self.a2 - rhs.a2,
            i2: self.i2 - rhs.i2,
            mq: self.mq - rhs.mq,
            sq: self.sq - rhs.sq,
            aq: self.aq - rhs.aq,
            iq: self.iq - rhs.iq,
            cios_p: self.cios_p - rhs.cios_p,
            cios_q: self.cios_q - rhs.cios_q,
            word_mul: self.word_mul - rhs.word_mul,
            word_add: self.word_add - rhs.word_add,
        }
    }
}

struct Ledger {
    counts: OpCounts,
    trace: Option<Vec<OpKind>>,
    paused: u32,
    word_size: WordSize,
    fault: bool,
}

thread_local! {
    static LEDGER: RefCell<Ledger> = const {
        RefCell::new(Ledger {
            counts: OpCounts {
                m1: 0, s1: 0, a1: 0, i1: 0,
                m2: 0, s2: 0, a2: 0, i2: 0,
                mq: 0, sq: 0, aq: 0, iq: 0,
                cios_p: 0, cios_q: 0,
                word_mul: 0, word_add: 0,
            },
            trace: None,
            paused: 0,
            word_size: WordSize::W64,
            fault: false,
        })
    };
}

#[inline]
pub(crate) fn record(kind: OpKind) {
    LEDGER.with(|l| {
        let mut l = l.borrow_mut();
        if l.paused > 0 {
            return;
        }
        l.counts.bump(kind);
        if let Some(t) = l.trace.as_mut() {
            t.push(kind);
        }
    });
}

/// Charges one Montgomery product and its word-level work.
#[inline]
pub(crate) fn record_cios(scalar_field: bool, word_mul: u64, word_add: u64) {
    LEDGER.with(|l| {
        let mut l = l.borrow_mut();
        if l.paused > 0 {
            return;
        }
        if scalar_field {
            l.counts.cios_q += 1;
        } else {
            l.counts.cios_p += 1;
        }
        l.counts.word_mul += word_mul;
        l.counts.word_add += word_add;
    });
}

/// Current cumulative tallies of this thread.
pub fn snapshot() -> OpCounts {
    LEDGER.with(|l| l.borrow().counts)
}

/// Zeroes this thread's tallies.
pub fn reset() {
    LEDGER.with(|l| l.borrow_mut().counts = OpCounts::default());
}

/// Runs `f` and returns its result with the tallies it produced.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, OpCounts) {
    let before = snapshot();
    let out = f();
    (out, snapshot() - before)
}

/// Runs `f` and returns the ordered sequence of field-operation kinds it
/// executed. Nested traces are not supported; the inner one wins.
pub fn trace<R>(f: impl FnOnce() -> R) -> (R, Vec<OpKind>) {
    let saved = LEDGER.with(|l| l.borrow_mut().trace.replace(Vec::new()));
    let out = f();
    let recorded = LEDGER.with(|l| {
        let mut l = l.borrow_mut();
        let t = l.trace.take().unwrap_or_default();
        l.trace = saved;
        t
    });
    (out, recorded)
}

/// Runs `f` without charging anything to the ledger. Used for one-time
/// constant derivation so it never leaks into a measurement.
pub fn uncounted<R>(f: impl FnOnce() -> R) -> R {
    struct Resume;
    impl Drop for Resume {
        fn drop(&mut self) {
            LEDGER.with(|l| l.borrow_mut().paused -= 1);
        }
    }
    LEDGER.with(|l| l.borrow_mut().paused += 1);
    let _resume = Resume;
    f()
}

/// Word size used by this thread's Montgomery multiplier.
pub fn word_size() -> WordSize {
    LEDGER.with(|l| l.borrow().word_size)
}

/// Sets the word size of this thread's Montgomery multiplier. Results are
/// identical at every size; only the word-level tallies change.
pub fn set_word_size(w: WordSize) {
    LEDGER.with(|l| l.borrow_mut().word_size = w);
}

/// Runs `f` with a temporary word size.
pub fn with_word_size<R>(w: WordSize, f: impl FnOnce() -> R) -> R {
    struct Restore(WordSize);
    impl Drop for Restore {
        fn drop(&mut self) {
            set_word_size(self.0);
        }
    }
    let _restore = Restore(word_size());
    set_word_size(w);
    f()
}

/// Test hook: corrupts the Montgomery constant `-m^-1 mod 2^w` used by this
/// thread's multiplier. Only for exercising the self-test's failure path.
#[doc(hidden)]
pub fn inject_montgomery_fault(on: bool) {
    LEDGER.with(|l| l.borrow_mut().fault = on);
}

#[inline]
pub(crate) fn multiplier_config() -> (WordSize, bool) {
    LEDGER.with(|l| {
        let l = l.borrow();
        (l.word_size, l.fault)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_reports_only_the_closure() {
        record(OpKind::FpMul);
        let (_, d) = measure(|| {
            record(OpKind::FpMul);
            record(OpKind::Fp2Inv);
        });
        assert_eq!(d.m1, 1);
        assert_eq!(d.i2, 1);
        assert_eq!(d.a1, 0);
    }

    #[test]
    fn uncounted_is_invisible() {
        let (_, d) = measure(|| uncounted(|| record(OpKind::FqAdd)));
        assert_eq!(d, OpCounts::default());
    }

    #[test]
    fn guards_survive_panics() {
        let _ = std::panic::catch_unwind(|| uncounted(|| panic!("inside")));
        let _ = std::panic::catch_unwind(|| with_word_size(WordSize::W16, || panic!("inside")));
        let (_, d) = measure(|| record(OpKind::FpMul));
        assert_eq!(d.m1, 1);
        assert_eq!(word_size(), WordSize::W64);
    }

    #[test]
    fn trace_records_in_order() {
        let (_, t) = trace(|| {
            record(OpKind::FpAdd);
            record(OpKind::FpSqr);
        });
        assert_eq!(t, vec![OpKind::FpAdd, OpKind::FpSqr]);
    }

    #[test]
    fn equivalents() {
        let c = OpCounts { m1: 10, s1: 5, i1: 2, mq: 3, iq: 1, ..Default::default() };
        assert_eq!(c.m1_equivalent(), 15 + 1216);
        assert_eq!(c.fq_equivalent(), 420);
        assert_eq!(c.modmul_total(), 1231 + 420);
    }
}
