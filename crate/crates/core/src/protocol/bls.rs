//! Minimal-signature BLS: public keys in G2, signatures in G1.

use std::collections::HashSet;

use crate::curve::{ecsm, G1Affine, G2Affine, Scalar};
use crate::error::{Error, Result};
use crate::hash::{hash_to_g1, Csprng, DST_G1_RO};
use crate::pairing::{multi_pairing, pairing, MultiPairingMode};

/// Secret key in `[1, q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SecretKey(Scalar);

/// `sk * G2`. Always a non-identity point of the order-q subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PublicKey(G2Affine);

/// `sk * H(msg)`, in the order-q subgroup of G1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature(G1Affine);

impl SecretKey {
    pub const BYTES: usize = 32;

    pub fn generate(rng: &mut Csprng) -> Self {
        SecretKey(rng.random_scalar_nonzero())
    }

    pub fn from_scalar(s: Scalar) -> Result<Self> {
        if s == Scalar::ZERO || s.reduce_mod_q() != s {
            return Err(Error::Malformed("secret key must lie in [1, q)"));
        }
        Ok(SecretKey(s))
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: &[u8; 32] = bytes.try_into().map_err(|_| Error::Malformed("secret key must be 32 bytes"))?;
        Self::from_scalar(Scalar::from_bytes_be(arr).map_err(|_| Error::Malformed("secret key must lie in [1, q)"))?)
    }

    pub fn to_bytes(&self) -> [u8; 32] {
        self.0.to_bytes_be()
    }

    pub fn scalar(&self) -> &Scalar {
        &self.0
    }

    pub fn public_key(&self) -> PublicKey {
        PublicKey(ecsm(&self.0, &G2Affine::generator()))
    }
}

impl std::fmt::Debug for SecretKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("SecretKey(..)")
    }
}

impl PublicKey {
    pub const BYTES: usize = 96;

    pub fn from_point(p: G2Affine) -> Result<Self> {
        if !bool::from(p.is_on_curve()) {
            return Err(Error::NotOnCurve);
        }
        if !bool::from(p.is_torsion_free()) {
            return Err(Error::NotInSubgroup);
        }
        if bool::from(p.is_identity()) {
            return Err(Error::Malformed("public key is the identity"));
        }
        Ok(PublicKey(p))
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: &[u8; 96] = bytes.try_into().map_err(|_| Error::Malformed("public key must be 96 bytes"))?;
        Self::from_point(G2Affine::from_compressed(arr)?)
    }

    pub fn to_bytes(&self) -> [u8; 96] {
        self.0.to_compressed()
    }

    pub fn point(&self) -> &G2Affine {
        &self.0
    }
}

impl Signature {
    pub const BYTES: usize = 48;

    pub fn from_point(p: G1Affine) -> Result<Self> {
        if !bool::from(p.is_on_curve()) {
            return Err(Error::NotOnCurve);
        }
        if !bool::from(p.is_torsion_free()) {
            return Err(Error::NotInSubgroup);
        }
        Ok(Signature(p))
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: &[u8; 48] = bytes.try_into().map_err(|_| Error::Malformed("signature must be 48 bytes"))?;
        Self::from_point(G1Affine::from_compressed(arr)?)
    }

    pub fn to_bytes(&self) -> [u8; 48] {
        self.0.to_compressed()
    }

    pub fn point(&self) -> &G1Affine {
        &self.0
    }
}

pub fn sign(sk: &SecretKey, msg: &[u8]) -> Signature {
    Signature(ecsm(&sk.0, &hash_to_g1(msg, DST_G1_RO)))
}

/// `e(H(m), pk) * e(-sig, G2) == 1`, one shared Miller loop and one final
/// exponentiation.
pub fn verify(pk: &PublicKey, msg: &[u8], sig: &Signature) -> bool {
    let pairs = [(hash_to_g1(msg, DST_G1_RO), pk.0), (sig.0.neg(), G2Affine::generator())];
    multi_pairing(&pairs, MultiPairingMode::SharedMLFE)
        .map(|g| bool::from(g.is_identity()))
        .unwrap_or(false)
}

/// Reference check with two independent pairings.
pub fn verify_naive(pk: &PublicKey, msg: &[u8], sig: &Signature) -> bool {
    pairing(&hash_to_g1(msg, DST_G1_RO), &pk.0) == pairing(&sig.0, &G2Affine::generator())
}

pub fn aggregate(sigs: &[Signature]) -> Result<Signature> {
    if sigs.is_empty() {
        return Err(Error::Empty);
    }
    let sum = sigs.iter().fold(crate::curve::G1Projective::identity(), |acc, s| acc.add_affine(&s.0));
    Ok(Signature(sum.to_affine()))
}

/// Verifies an aggregate over distinct messages with an `(n+1)`-way
/// multi-pairing.
pub fn aggregate_verify(pks: &[PublicKey], msgs: &[&[u8]], agg: &Signature) -> Result<bool> {
    if pks.len() != msgs.len() {
        return Err(Error::LengthMismatch(pks.len(), msgs.len()));
    }
    if pks.is_empty() {
        return Err(Error::Empty);
    }
    let mut seen = HashSet::new();
    if !msgs.iter().all(|m| seen.insert(*m)) {
        return Err(Error::DuplicateMessage);
    }
    let mut pairs: Vec<(G1Affine, G2Affine)> = msgs
        .iter()
        .zip(pks)
        .map(|(m, pk)| (hash_to_g1(m, DST_G1_RO), pk.0))
        .collect();
    pairs.push((agg.0.neg(), G2Affine::generator()));
    Ok(bool::from(multi_pairing(&pairs, MultiPairingMode::SharedMLFE)?.is_identity()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_verify_roundtrip() {
        let mut rng = Csprng::from_seed([11; 32]);
        let sk = SecretKey::generate(&mut rng);
        let pk = sk.public_key();
        let sig = sign(&sk, b"hello");
        assert!(verify(&pk, b"hello", &sig));
        assert!(verify_naive(&pk, b"hello", &sig));
        assert!(!verify(&pk, b"hellp", &sig));
        assert!(!verify_naive(&pk, b"hellp", &sig));
        let other = SecretKey::generate(&mut rng).public_key();
        assert!(!verify(&other, b"hello", &sig));
    }

    #[test]
    fn encodings_roundtrip() {
        let mut rng = Csprng::from_seed([12; 32]);
        let sk = SecretKey::generate(&mut rng);
        let pk = sk.public_key();
        let sig = sign(&sk, b"m");
        assert_eq!(SecretKey::from_bytes(&sk.to_bytes()).unwrap(), sk);
        assert_eq!(PublicKey::from_bytes(&pk.to_bytes()).unwrap(), pk);
        assert_eq!(Signature::from_bytes(&sig.to_bytes()).unwrap(), sig);
        assert!(SecretKey::from_bytes(&[0; 32]).is_err());
        assert!(SecretKey::from_bytes(&Scalar::Q.to_bytes_be()).is_err());
        assert!(PublicKey::from_bytes(&G2Affine::identity().to_compressed()).is_err());
        assert!(Signature::from_bytes(&[1; 47]).is_err());
    }

    #[test]
    fn aggregate_of_five() {
        let mut rng = Csprng::from_seed([13; 32]);
        let sks: Vec<_> = (0..5).map(|_| SecretKey::generate(&mut rng)).collect();
        let pks: Vec<_> = sks.iter().map(|s| s.public_key()).collect();
        let msgs: Vec<Vec<u8>> = (0..5u8).map(|i| vec![b'm', i]).collect();
        let refs: Vec<&[u8]> = msgs.iter().map(|m| m.as_slice()).collect();
        let sigs: Vec<_> = sks.iter().zip(&refs).map(|(s, m)| sign(s, m)).collect();
        let agg = aggregate(&sigs).unwrap();
        assert!(aggregate_verify(&pks, &refs, &agg).unwrap());

        let mut bad = sigs.clone();
        bad[2] = sign(&sks[2], b"other");
        assert!(!aggregate_verify(&pks, &refs, &aggregate(&bad).unwrap()).unwrap());

        assert_eq!(aggregate_verify(&pks[..4], &refs, &agg), Err(Error::LengthMismatch(4, 5)));
        let dup: Vec<&[u8]> = vec![refs[0], refs[0]];
        assert_eq!(aggregate_verify(&pks[..2], &dup, &agg), Err(Error::DuplicateMessage));
        assert_eq!(aggregate(&[]), Err(Error::Empty));

        let one = aggregate(&sigs[..1]).unwrap();
        assert_eq!(aggregate_verify(&pks[..1], &refs[..1], &one).unwrap(), verify(&pks[0], refs[0], &sigs[0]));
    }
}
