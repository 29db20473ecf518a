//! The independent Baer-radical engines.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{Certificate, MStepGraph, MultiplierSet};
use super::{Method, RadicalResult, RadicalWitness};
use crate::abelian::Subgroup;
use crate::error::{Error, Result};
use crate::gamma::GammaSystem;
use crate::limits::Limits;
use crate::ring::{combine_ideals, enumerate_ideals, ideal_power_exponent, is_gm_ideal, is_ring_ideal};
use crate::ring::{Combine, Flavor, GMIdeal, GMRing};

pub fn m_step_graph(set: MultiplierSet, limits: &Limits) -> Result<MStepGraph> {
    MStepGraph::build(set, limits)
}

/// Decision plus certificate for one carrier element.
pub fn is_m_nilpotent(graph: &MStepGraph, x: usize) -> Result<(bool, Certificate)> {
    graph.certify(x)
}

fn nilpotent_subgroup(graph: &MStepGraph, what: &str) -> Result<Subgroup> {
    let members = graph.nilpotent_elements();
    Subgroup::from_members(graph.multiplier_set().carrier_group(), &members)
        .map_err(|_| Error::Violation(format!("{what}: m-nilpotent elements are not additively closed")))
}

fn sample_certificate(graph: &MStepGraph) -> Result<Option<String>> {
    let first = graph.nodes().iter().copied().filter(|&x| !graph.is_nilpotent(x).unwrap_or(true)).min();
    match first {
        Some(x) => {
            let (_, cert) = graph.certify(x)?;
            Ok(Some(graph.format_certificate(&cert)))
        }
        None => Ok(None),
    }
}

/// `W(A)`: the m-nilpotent elements with the whole ring as multiplier set.
pub fn w_set(ring: &GMRing, limits: &Limits) -> Result<RadicalResult> {
    let graph = MStepGraph::build(MultiplierSet::WholeRing(ring.clone()), limits)?;
    let members = nilpotent_subgroup(&graph, "W(A)")?;
    if let Some(w) = is_ring_ideal(ring, &members) {
        return Err(Error::Violation(format!("W(A) is not an ideal: {}", w.describe(ring))));
    }
    let ideal = GMIdeal::new(members.clone(), Flavor::Ring);
    let componentwise = ideal.is_componentwise(ring) && is_gm_ideal(ring, &ideal.components(ring))?.is_none();
    Ok(RadicalResult {
        method: Method::MNilpotent,
        carrier: String::from("A"),
        members,
        witness: RadicalWitness::MNilpotent {
            persistent: graph.persistent_count(),
            edges: graph.edge_count(),
            componentwise: Some(componentwise),
            sample: sample_certificate(&graph)?,
        },
    })
}

/// Baer radical of the `A_ji`-ring `A_ij`: `a ↦ a·u·a` with `u ∈ A_ji`.
pub fn gamma_baer_radical(system: &GammaSystem, i: usize, j: usize, limits: &Limits) -> Result<RadicalResult> {
    let n = system.size();
    if i >= n || j >= n {
        return Err(Error::invalid(format!("component ({i},{j}) is out of range")));
    }
    let graph = MStepGraph::build(MultiplierSet::Component(system.clone(), i, j), limits)?;
    let l = system.labels();
    let members = nilpotent_subgroup(&graph, "component radical")?;
    Ok(RadicalResult {
        method: Method::MNilpotent,
        carrier: format!("A_({},{})", l[i], l[j]),
        members,
        witness: RadicalWitness::MNilpotent {
            persistent: graph.persistent_count(),
            edges: graph.edge_count(),
            componentwise: None,
            sample: sample_certificate(&graph)?,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primality {
    Prime,
    SemiprimeOnly,
    Neither,
}

impl Primality {
    pub fn name(self) -> &'static str {
        match self {
            Primality::Prime => "prime",
            Primality::SemiprimeOnly => "semiprime_only",
            Primality::Neither => "neither",
        }
    }
}

/// Classification plus the pair `(x, y)` with `xAy ⊆ B` when not prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalityReport {
    pub primality: Primality,
    pub witness: Option<(usize, usize)>,
}

/// Prime and semiprime tests by exhaustion over nonzero cosets of `B`.
///
/// `a ↦ xay` is additive, so `xAy ⊆ B` is checked on the basis; the
/// condition depends only on the cosets of `x` and `y`.
pub fn ideal_primality(ring: &GMRing, b: &GMIdeal) -> Result<PrimalityReport> {
    if b.subgroup().parent() != ring.group() {
        return Err(Error::invalid("ideal belongs to a different ring"));
    }
    if b.is_whole() {
        return Err(Error::invalid("primality is undefined for the whole ring"));
    }
    let flavor_ok = match b.flavor() {
        Flavor::Ring => is_ring_ideal(ring, b.subgroup()).is_none(),
        Flavor::Gm => b.is_componentwise(ring) && is_gm_ideal(ring, &b.components(ring))?.is_none(),
    };
    if !flavor_ok {
        return Err(Error::invalid(format!("not a {} ideal", b.flavor().name())));
    }
    let g = ring.group();
    let mut covered = vec![false; ring.order()];
    let mut reps = Vec::new();
    for x in 0..ring.order() {
        if covered[x] {
            continue;
        }
        for &m in b.members() {
            covered[g.add(x, m)] = true;
        }
        if !b.contains(x) {
            reps.push(x);
        }
    }
    let kills = |x: usize, y: usize| ring.basis().iter().all(|&e| b.contains(ring.mul(ring.mul(x, e), y)));
    if let Some(&x) = reps.iter().find(|&&x| kills(x, x)) {
        return Ok(PrimalityReport {
            primality: Primality::Neither,
            witness: Some((x, x)),
        });
    }
    for &x in &reps {
        if let Some(&y) = reps.iter().find(|&&y| kills(x, y)) {
            return Ok(PrimalityReport {
                primality: Primality::SemiprimeOnly,
                witness: Some((x, y)),
            });
        }
    }
    Ok(PrimalityReport {
        primality: Primality::Prime,
        witness: None,
    })
}

/// Intersection of every proper prime ideal of the given flavor.
pub fn radical_via_primes(ring: &GMRing, flavor: Flavor, limits: &Limits) -> Result<RadicalResult> {
    let ideals = enumerate_ideals(ring, flavor, limits)?;
    let mut primes = Vec::new();
    for ideal in ideals.into_iter().filter(|i| !i.is_whole()) {
        if ideal_primality(ring, &ideal)?.primality == Primality::Prime {
            primes.push(ideal);
        }
    }
    let meet = combine_ideals(ring, &primes, Combine::Intersection)?;
    let witness = RadicalWitness::Primes {
        primes: primes.iter().map(|p| p.members().to_vec()).collect(),
    };
    Ok(RadicalResult {
        method: match flavor {
            Flavor::Gm => Method::PrimesGm,
            Flavor::Ring => Method::PrimesRing,
        },
        carrier: String::from("A"),
        members: meet.subgroup().clone(),
        witness,
    })
}

/// Sum of all nilpotent ring ideals; the sum is re-checked for nilpotency.
pub fn largest_nilpotent_ideal(ring: &GMRing, limits: &Limits) -> Result<RadicalResult> {
    let ideals = enumerate_ideals(ring, Flavor::Ring, limits)?;
    let nilpotent: Vec<GMIdeal> =
        ideals.into_iter().filter(|i| ideal_power_exponent(ring, i).is_some()).collect();
    let sum = combine_ideals(ring, &nilpotent, Combine::Sum)?;
    let exponent = ideal_power_exponent(ring, &sum)
        .ok_or_else(|| Error::Violation(String::from("the sum of nilpotent ideals is not nilpotent")))?;
    Ok(RadicalResult {
        method: Method::NilpotentIdeal,
        carrier: String::from("A"),
        members: sum.subgroup().clone(),
        witness: RadicalWitness::Nilpotent {
            exponent,
            nilpotent_ideals: nilpotent.len(),
        },
    })
}

/// Does every element of `N` die under m-sequences drawn from `N`?
pub fn is_rb_ideal(ring: &GMRing, n: &GMIdeal, limits: &Limits) -> Result<bool> {
    let graph = MStepGraph::build(MultiplierSet::Ideal(ring.clone(), n.clone()), limits)?;
    Ok(graph.nilpotent_elements().len() == n.order())
}

/// The unique maximal g.m. ideal `N` with `r_b(N) = N`.
///
/// Several incomparable maxima would contradict the theory, so they are
/// reported as a violation carrying both candidates.
pub fn gm_maximal_rb_ideal(ring: &GMRing, limits: &Limits) -> Result<RadicalResult> {
    let ideals = enumerate_ideals(ring, Flavor::Gm, limits)?;
    let mut candidates = Vec::new();
    for ideal in ideals {
        if is_rb_ideal(ring, &ideal, limits)? {
            candidates.push(ideal);
        }
    }
    let maxima: Vec<&GMIdeal> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d.order() > c.order() && c.is_subset_of(d)))
        .collect();
    if maxima.len() != 1 {
        let show: Vec<String> = maxima
            .iter()
            .take(2)
            .map(|m| {
                let els: Vec<String> = m.members().iter().map(|&x| ring.format_element(x)).collect();
                format!("{{{}}}", els.join("; "))
            })
            .collect();
        return Err(Error::Violation(format!(
            "uniqueness-violation: {} maximal r_b-g.m.-ideals, e.g. {}",
            maxima.len(),
            show.join(" and ")
        )));
    }
    let top = maxima[0].clone();
    Ok(RadicalResult {
        method: Method::GmMaximal,
        carrier: String::from("A"),
        members: top.subgroup().clone(),
        witness: RadicalWitness::GmMaximal {
            candidates: candidates.len(),
        },
    })
}

/// Runs one engine by method.
pub fn radical(ring: &GMRing, method: Method, limits: &Limits) -> Result<RadicalResult> {
    match method {
        Method::MNilpotent => w_set(ring, limits),
        Method::PrimesGm => radical_via_primes(ring, Flavor::Gm, limits),
        Method::PrimesRing => radical_via_primes(ring, Flavor::Ring, limits),
        Method::NilpotentIdeal => largest_nilpotent_ideal(ring, limits),
        Method::GmMaximal => gm_maximal_rb_ideal(ring, limits),
    }
}
