pub mod bench;
pub mod counter;
pub mod curve;
pub mod error;
pub mod field;
pub mod hash;
pub mod pairing;
pub mod params;
pub mod protocol;
pub mod selftest;
pub mod sweep;
pub mod tower;

pub use error::{Error, Result};
