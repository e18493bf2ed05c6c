//! The encryption hot loop of function-hiding inner-product encryption:
//! one G2 scalar multiplication per vector coordinate.

use serde::Serialize;

use crate::counter;
use crate::curve::{ecsm, ecsm_split, G2Affine, Scalar};
use crate::error::{Error, Result};
use crate::hash::Csprng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IpeMode {
    Plain,
    SplitScalar,
}

impl std::str::FromStr for IpeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(IpeMode::Plain),
            "split" | "splitscalar" => Ok(IpeMode::SplitScalar),
            _ => Err(Error::UnknownOp(s.to_string())),
        }
    }
}

/// `x_i * B` for every coordinate.
pub fn ipe_encrypt(xs: &[Scalar], base: &G2Affine, mode: IpeMode) -> Result<Vec<G2Affine>> {
    if xs.is_empty() {
        return Err(Error::Empty);
    }
    Ok(xs
        .iter()
        .map(|x| match mode {
            IpeMode::Plain => ecsm(x, base),
            IpeMode::SplitScalar => ecsm_split(x, base),
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct IpeReport {
    pub vector_len: usize,
    pub plain_m1_equivalent: u64,
    pub split_m1_equivalent: u64,
    pub plain_per_element: f64,
    pub split_per_element: f64,
    /// Plain over split.
    pub ratio: f64,
    pub values_agree: bool,
}

/// Encrypts one random vector in both modes and compares their cost.
pub fn ipe_encrypt_benchmark(vector_len: usize, rng: &mut Csprng) -> Result<IpeReport> {
    if vector_len == 0 {
        return Err(Error::Empty);
    }
    let xs: Vec<Scalar> = (0..vector_len).map(|_| rng.random_scalar()).collect();
    let base = G2Affine::generator();
    let (plain, cp) = counter::measure(|| ipe_encrypt(&xs, &base, IpeMode::Plain));
    let (split, cs) = counter::measure(|| ipe_encrypt(&xs, &base, IpeMode::SplitScalar));
    let (p, s) = (cp.m1_equivalent(), cs.m1_equivalent());
    Ok(IpeReport {
        vector_len,
        plain_m1_equivalent: p,
        split_m1_equivalent: s,
        plain_per_element: p as f64 / vector_len as f64,
        split_per_element: s as f64 / vector_len as f64,
        ratio: p as f64 / s as f64,
        values_agree: plain? == split?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_split_is_cheaper() {
        let r = ipe_encrypt_benchmark(3, &mut Csprng::from_seed([31; 32])).unwrap();
        assert!(r.values_agree);
        assert!(r.ratio >= 1.7, "{}", r.ratio);
    }

    #[test]
    fn empty_vector_is_a_usage_error() {
        let e = ipe_encrypt_benchmark(0, &mut Csprng::from_seed([0; 32])).unwrap_err();
        assert!(e.is_usage());
    }
}
