//! Finite generalized matrix rings built from Γ_I-systems.
//!
//! The crate is organised bottom-up:
//!
//! * [`abelian`]: finite abelian groups in invariant-factor coordinates and
//!   subgroup closure.
//! * [`gamma`]: Γ_I-systems (families `A_ij` with products
//!   `A_ij × A_jk → A_ik`) and their constructors.
//! * [`ring`]: the assembled generalized matrix ring, g.m. ideals, quotients,
//!   homomorphisms and the isomorphism-theorem certificates.
//! * [`radical`]: the Baer radical by m-nilpotency, prime-ideal
//!   intersection, nilpotent-ideal sums and the maximal r_b-g.m.-ideal.
//!
//! Everything is `no_std` compatible (with `alloc`); the `std` feature only
//! adds `std::error::Error` plumbing through `core::error::Error`.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod abelian;
mod bitset;
pub mod error;
pub mod gamma;
pub mod limits;
pub mod radical;
pub mod ring;
pub mod verdict;

pub use abelian::{FinAbGroup, GroupElement, Subgroup};
pub use error::{Error, Result};
pub use gamma::{AxiomReport, AxiomViolation, GammaSystem, PathAlgebraSpec};
pub use limits::Limits;
pub use radical::{MStepGraph, Method, RadicalResult};
pub use ring::{Flavor, GMElement, GMHom, GMIdeal, GMRing};


