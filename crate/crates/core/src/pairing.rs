//! Optimal ate pairing on BLS12-381.
//!
//! The Miller loop walks the bits of `|u|` with homogeneous projective line
//! functions on the M-type twist, multiplying each line into the
//! accumulator as a sparse `Fp12` element. The final exponentiation is the
//! usual easy part followed by the `u`-chain hard part with cyclotomic
//! squarings. That chain raises to `3 (p^4 - p^2 + 1) / q`, so outputs are
//! the cubes of the textbook reduced pairing; the map is still bilinear
//! and non-degenerate, with values of order `q`.

use core::fmt;
use std::sync::OnceLock;

use subtle::{Choice, ConditionallySelectable, ConstantTimeEq};

use crate::counter;
use crate::curve::{G1Affine, G2Affine, G2Projective, Scalar, SCALAR_BITS};
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::params::U_ABS;
use crate::tower::{Fp12, Fp2};

/// Element of the order-q target group.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Gt(pub(crate) Fp12);

/// One line evaluated at a G1 point: the coefficients of `g^0`, `g^2` and
/// `g^3` in the tower basis (positions 0, 1 and 4 of the `Fp2` vector).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineCoefficients {
    pub c0: Fp2,
    pub c1: Fp2,
    pub c4: Fp2,
}

/// How a product of pairings is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum MultiPairingMode {
    /// Independent pairings multiplied together.
    Naive,
    /// Independent Miller loops, one shared final exponentiation.
    SharedFE,
    /// One accumulator for all Miller loops, one final exponentiation.
    SharedMLFE,
}

impl MultiPairingMode {
    pub const ALL: [MultiPairingMode; 3] =
        [MultiPairingMode::Naive, MultiPairingMode::SharedFE, MultiPairingMode::SharedMLFE];

    pub fn name(&self) -> &'static str {
        match self {
            MultiPairingMode::Naive => "naive",
            MultiPairingMode::SharedFE => "sharedfe",
            MultiPairingMode::SharedMLFE => "sharedmlfe",
        }
    }
}

impl core::str::FromStr for MultiPairingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(MultiPairingMode::Naive),
            "sharedfe" => Ok(MultiPairingMode::SharedFE),
            "sharedmlfe" => Ok(MultiPairingMode::SharedMLFE),
            other => Err(Error::UnknownOp(other.to_string())),
        }
    }
}

fn two_inv() -> Fp {
    static T: OnceLock<Fp> = OnceLock::new();
    *T.get_or_init(|| counter::uncounted(|| Fp::from_u64(2).invert().unwrap()))
}

/// `R <- 2R`, returning the unevaluated tangent line.
fn doubling_step(r: &mut G2Projective) -> (Fp2, Fp2, Fp2) {
    let h2 = two_inv();
    let a = r.x.mul(&r.y).mul_by_fp(&h2);
    let b = r.y.square();
    let c = r.z.square();
    let e = c.mul_by_nonresidue().mul_small(12);
    let f = e.double().add(&e);
    let g = b.add(&f).mul_by_fp(&h2);
    let h = r.y.add(&r.z).square().sub(&b.add(&c));
    let i = e.sub(&b);
    let j = r.x.square();
    let e_sq = e.square();
    r.x = a.mul(&b.sub(&f));
    r.y = g.square().sub(&e_sq.double().add(&e_sq));
    r.z = b.mul(&h);
    (i, j.double().add(&j), h.neg())
}

/// `R <- R + Q`, returning the unevaluated chord.
fn addition_step(r: &mut G2Projective, q: &G2Affine) -> (Fp2, Fp2, Fp2) {
    let theta = r.y.sub(&q.y().mul(&r.z));
    let lambda = r.x.sub(&q.x().mul(&r.z));
    let c = theta.square();
    let d = lambda.square();
    let e = lambda.mul(&d);
    let f = r.z.mul(&c);
    let g = r.x.mul(&d);
    let h = e.add(&f).sub(&g.double());
    r.x = lambda.mul(&h);
    r.y = theta.mul(&g.sub(&h)).sub(&e.mul(&r.y));
    r.z = r.z.mul(&e);
    let j = theta.mul(&q.x()).sub(&lambda.mul(&q.y()));
    (j, theta.neg(), lambda)
}

/// Evaluates a line at `P`; a degenerate pair yields the constant line 1.
fn evaluate(line: (Fp2, Fp2, Fp2), p: &G1Affine, degenerate: Choice) -> LineCoefficients {
    let l = LineCoefficients { c0: line.0, c1: line.1.mul_by_fp(&p.x()), c4: line.2.mul_by_fp(&p.y()) };
    let one = LineCoefficients { c0: Fp2::one(), c1: Fp2::zero(), c4: Fp2::zero() };
    LineCoefficients::conditional_select(&l, &one, degenerate)
}

/// A pair with identities replaced by generators, and the flag saying so.
struct Prepared {
    p: G1Affine,
    q: G2Affine,
    r: G2Projective,
    degenerate: Choice,
}

fn prepare(p: &G1Affine, q: &G2Affine) -> Prepared {
    let degenerate = p.is_identity() | q.is_identity();
    let p = G1Affine::conditional_select(p, &G1Affine::generator(), p.is_identity());
    let q = G2Affine::conditional_select(q, &G2Affine::generator(), q.is_identity());
    Prepared { p, q, r: q.to_projective(), degenerate }
}

/// Miller loop over any number of pairs sharing one accumulator: one
/// `Fp12` squaring per bit of `|u|`, then every pair's line products.
fn miller_loop_shared(pairs: &[(G1Affine, G2Affine)]) -> Fp12 {
    let mut prep: Vec<Prepared> = pairs.iter().map(|(p, q)| prepare(p, q)).collect();
    let mut f = Fp12::one();
    for i in (0..63).rev() {
        f = f.square();
        for pr in prep.iter_mut() {
            let l = evaluate(doubling_step(&mut pr.r), &pr.p, pr.degenerate);
            f = f.mul_by_014(&l.c0, &l.c1, &l.c4);
        }
        if (U_ABS >> i) & 1 == 1 {
            for pr in prep.iter_mut() {
                let l = evaluate(addition_step(&mut pr.r, &pr.q), &pr.p, pr.degenerate);
                f = f.mul_by_014(&l.c0, &l.c1, &l.c4);
            }
        }
    }
    // u < 0
    f.conjugate()
}

/// Miller function `f_{|u|,Q}(P)`, conjugated for the negative parameter.
/// A pair containing an identity gives 1.
pub fn miller_loop(p: &G1Affine, q: &G2Affine) -> Fp12 {
    miller_loop_shared(&[(*p, *q)])
}

/// Line coefficients of the full loop, in order (doublings and additions
/// interleaved), evaluated at `P`.
pub fn line_coefficients(p: &G1Affine, q: &G2Affine) -> Vec<LineCoefficients> {
    let mut pr = prepare(p, q);
    let mut out = Vec::with_capacity(68);
    for i in (0..63).rev() {
        out.push(evaluate(doubling_step(&mut pr.r), &pr.p, pr.degenerate));
        if (U_ABS >> i) & 1 == 1 {
            out.push(evaluate(addition_step(&mut pr.r, &pr.q), &pr.p, pr.degenerate));
        }
    }
    out
}

/// `f^|u|` on the cyclotomic subgroup, then conjugated: `f^u`.
fn cyclotomic_exp(f: &Fp12) -> Fp12 {
    let mut acc = *f;
    for i in (0..63).rev() {
        acc = acc.cyclotomic_square();
        if (U_ABS >> i) & 1 == 1 {
            acc = acc.mul(f);
        }
    }
    acc.conjugate()
}

fn final_exp_inner(f: &Fp12, f_inv: &Fp12) -> Fp12 {
    // easy part: f^((p^6 - 1)(p^2 + 1))
    let t = f.conjugate().mul(f_inv);
    let t2 = t.frobenius_map(2).mul(&t);

    // hard part
    let t1 = t2.cyclotomic_square().conjugate();
    let t3 = cyclotomic_exp(&t2);
    let t4 = t3.cyclotomic_square();
    let t5 = t1.mul(&t3);
    let t1 = cyclotomic_exp(&t5);
    let t0 = cyclotomic_exp(&t1);
    let t6 = cyclotomic_exp(&t0).mul(&t4);
    let t4 = cyclotomic_exp(&t6);
    let t5 = t5.conjugate();
    let t4 = t4.mul(&t5.mul(&t2));
    let t5 = t2.conjugate();
    let t1 = t1.mul(&t2).frobenius_map(3);
    let t6 = t6.mul(&t5).frobenius_map(1);
    let t3 = t3.mul(&t0).frobenius_map(2).mul(&t1).mul(&t6);
    t3.mul(&t4)
}

/// Final exponentiation of a Miller-loop output. Rejects zero.
pub fn final_exp(f: &Fp12) -> Result<Gt> {
    let inv = f.invert();
    let ok = inv.is_some();
    let out = final_exp_inner(f, &inv.unwrap_or(Fp12::one()));
    if bool::from(ok) {
        Ok(Gt(out))
    } else {
        Err(Error::ZeroInverse)
    }
}

/// `e(P, Q)`.
pub fn pairing(p: &G1Affine, q: &G2Affine) -> Gt {
    final_exp(&miller_loop(p, q)).expect("Miller loop output is non-zero")
}

/// `prod_j e(P_j, Q_j)`; all modes return the same value.
pub fn multi_pairing(pairs: &[(G1Affine, G2Affine)], mode: MultiPairingMode) -> Result<Gt> {
    if pairs.is_empty() {
        return Err(Error::Empty);
    }
    match mode {
        MultiPairingMode::Naive => Ok(pairs
            .iter()
            .map(|(p, q)| pairing(p, q))
            .reduce(|a, b| a * b)
            .unwrap()),
        MultiPairingMode::SharedFE => {
            let f = pairs
                .iter()
                .map(|(p, q)| miller_loop(p, q))
                .reduce(|a, b| a.mul(&b))
                .unwrap();
            final_exp(&f)
        }
        MultiPairingMode::SharedMLFE => final_exp(&miller_loop_shared(pairs)),
    }
}

impl Gt {
    pub fn identity() -> Self {
        Gt(Fp12::one())
    }

    /// `e(G1, G2)`.
    pub fn generator() -> Self {
        static G: OnceLock<Gt> = OnceLock::new();
        *G.get_or_init(|| counter::uncounted(|| pairing(&G1Affine::generator(), &G2Affine::generator())))
    }

    pub fn is_identity(&self) -> Choice {
        self.0.is_one()
    }

    pub fn inner(&self) -> &Fp12 {
        &self.0
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Gt(self.0.mul(&rhs.0))
    }

    /// Inverse by conjugation (unitary element).
    pub fn invert(&self) -> Self {
        Gt(self.0.conjugate())
    }

    /// `self^k` over a fixed 255 bits with masked multiplication.
    pub fn pow(&self, k: &Scalar) -> Self {
        let mut acc = Fp12::one();
        for i in (0..SCALAR_BITS).rev() {
            acc = acc.cyclotomic_square();
            let prod = acc.mul(&self.0);
            acc = Fp12::conditional_select(&acc, &prod, k.bit(i));
        }
        Gt(acc)
    }

    /// `self^q == 1`.
    pub fn is_in_subgroup(&self) -> Choice {
        self.pow(&Scalar::Q).is_identity()
    }

    /// The 576-byte `Fp12` encoding.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.to_bytes()
    }

    /// Decodes and checks membership in the order-q subgroup.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let g = Gt(Fp12::from_bytes(bytes)?);
        if bool::from(counter::uncounted(|| g.is_in_subgroup())) {
            Ok(g)
        } else {
            Err(Error::NotInSubgroup)
        }
    }
}

impl ConditionallySelectable for LineCoefficients {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        LineCoefficients {
            c0: Fp2::conditional_select(&a.c0, &b.c0, choice),
            c1: Fp2::conditional_select(&a.c1, &b.c1, choice),
            c4: Fp2::conditional_select(&a.c4, &b.c4, choice),
        }
    }
}

impl ConstantTimeEq for Gt {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.0.ct_eq(&other.0)
    }
}

impl core::ops::Mul for Gt {
    type Output = Gt;
    fn mul(self, rhs: Gt) -> Gt {
        Gt::mul(&self, &rhs)
    }
}

impl fmt::Debug for Gt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gt(0x{}..)", hex::encode(&self.0.to_bytes()[..8]))
    }
}
