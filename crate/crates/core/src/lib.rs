//! Presentations of the equivariant and ordinary cohomology rings of regular
//! nilpotent Hessenberg varieties in type A, built over exact rationals and
//! checked with an in-crate Gröbner-basis engine.

pub mod error;
pub mod generators;
pub mod groebner;
pub mod hessenberg;
pub mod polyring;
pub mod verify;

pub use error::{Error, HessenbergError, Result};
