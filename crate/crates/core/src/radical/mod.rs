//! The Baer radical of a finite g.m. ring, computed several independent ways.
//!
//! * m-nilpotency: `W(A)`, the elements all of whose m-sequences
//!   `a_{n+1} = a_n u_n a_n` reach zero, via the [`MStepGraph`].
//! * prime intersection, over g.m. ideals or over ring ideals.
//! * the sum of all nilpotent ideals (a finite-ring oracle).
//! * the maximal g.m. ideal `N` with `r_b(N) = N`.
//!
//! The per-component radicals of the `A_ji`-rings `A_ij` come from the same
//! graph machinery with `A_ji` as multiplier set.

mod engines;
mod graph;
mod theorems;

use alloc::string::String;
use alloc::vec::Vec;

use crate::abelian::Subgroup;
use crate::ring::{Flavor, GMIdeal};

pub use engines::{
    gamma_baer_radical, gm_maximal_rb_ideal, ideal_primality, is_m_nilpotent, is_rb_ideal, largest_nilpotent_ideal,
    m_step_graph, radical, radical_via_primes, w_set, Primality, PrimalityReport,
};
pub use graph::{Certificate, MStepGraph, MultiplierSet, Step};
pub use theorems::{
    gamma_prime_witness, gamma_principal_ideal, gamma_semiprime_witness, verify_radical_theorems, ComponentRow,
    RadicalReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    MNilpotent,
    PrimesGm,
    PrimesRing,
    NilpotentIdeal,
    GmMaximal,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::MNilpotent,
        Method::PrimesGm,
        Method::PrimesRing,
        Method::NilpotentIdeal,
        Method::GmMaximal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::MNilpotent => "m_nilpotent",
            Method::PrimesGm => "primes_gm",
            Method::PrimesRing => "primes_ring",
            Method::NilpotentIdeal => "nilpotent_ideal",
            Method::GmMaximal => "gm_maximal",
        }
    }

    /// Flavor of ideal the method's output is guaranteed to be.
    pub fn flavor(self) -> Flavor {
        match self {
            Method::PrimesGm | Method::GmMaximal => Flavor::Gm,
            _ => Flavor::Ring,
        }
    }
}

/// Method-specific evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalWitness {
    MNilpotent {
        persistent: usize,
        edges: usize,
        /// Whether the set is a g.m. ideal; `None` for component carriers.
        componentwise: Option<bool>,
        /// Cycle certificate for the least non-nilpotent element.
        sample: Option<String>,
    },
    Primes {
        primes: Vec<Vec<usize>>,
    },
    Nilpotent {
        exponent: usize,
        nilpotent_ideals: usize,
    },
    GmMaximal {
        candidates: usize,
    },
}

#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub method: Method,
    pub carrier: String,
    /// Sorted members inside the carrier's additive group.
    pub members: Subgroup,
    pub witness: RadicalWitness,
}

impl RadicalResult {
    pub fn members(&self) -> &[usize] {
        self.members.members()
    }

    /// The result as an ideal of the ring it was computed on.
    pub fn ideal(&self) -> GMIdeal {
        GMIdeal::new(self.members.clone(), self.method.flavor())
    }
}

#[cfg(test)]
mod tests;
