use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::error::Error;
use crate::gamma::GammaSystem;
use crate::limits::Limits;
use crate::ring::fixtures::*;
use crate::ring::{enumerate_ideals, quotient, GMRing};
use crate::verdict::Status;

fn lim() -> Limits {
    Limits::default()
}

/// Non-nilpotent elements by exhaustive m-sequence search to depth `|A|+1`:
/// `S_0` = nonzero elements, `S_{d+1}` = nonzero `x` with some `xux ∈ S_d`.
fn depth_oracle(ring: &GMRing) -> Vec<bool> {
    let n = ring.order();
    let mut alive: Vec<bool> = (0..n).map(|x| x != 0).collect();
    for _ in 0..=n {
        alive = (0..n)
            .map(|x| x != 0 && (0..n).any(|u| alive[ring.mul(ring.mul(x, u), x)]))
            .collect();
    }
    alive
}

/// Nilpotent elements `x` (some power is zero).
fn nilpotent_elements(ring: &GMRing) -> Vec<usize> {
    (0..ring.order())
        .filter(|&x| {
            let mut p = x;
            for _ in 0..=ring.order() {
                if p == 0 {
                    return true;
                }
                p = ring.mul(p, x);
            }
            false
        })
        .collect()
}

fn small_rings() -> Vec<GMRing> {
    vec![
        zn(2),
        zn(4),
        zn(6),
        zn(8),
        zn(9),
        zn(12),
        zero_ring(&[2, 2]),
        full2(),
        upper2(),
        matrix(&[("1", 2)], 2, &[]),
        path(&["1", "2"], &[("1", "2")], 1),
        path(&["1", "2"], &[("1", "2"), ("2", "1")], 1),
        path(&["1", "2"], &[("1", "2"), ("2", "1")], 2),
        path(&["1", "2", "3"], &[("1", "2"), ("2", "3")], 2),
        path(&["1"], &[("1", "1")], 2),
        split_zero(),
        field_times_zero(),
    ]
}

#[test]
fn w_set_examples() {
    assert_eq!(w_set(&zn(4), &lim()).unwrap().members(), &[0, 2]);
    assert_eq!(w_set(&full2(), &lim()).unwrap().members(), &[0]);
    assert_eq!(w_set(&zero_ring(&[2, 3]), &lim()).unwrap().members(), &[0, 1, 2, 3, 4, 5]);
}

#[test]
fn commutative_radicals_are_nilpotent_elements() {
    for n in [2, 4, 8, 12, 18, 36] {
        let r = zn(n);
        assert_eq!(w_set(&r, &lim()).unwrap().members(), nilpotent_elements(&r).as_slice(), "Z_{n}");
    }
    assert_eq!(nilpotent_elements(&zn(12)), vec![0, 6]);
}

#[test]
fn scc_decision_matches_depth_search() {
    for r in small_rings() {
        assert!(r.order() <= 64);
        let g = MStepGraph::build(MultiplierSet::WholeRing(r.clone()), &lim()).unwrap();
        let oracle = depth_oracle(&r);
        for x in 0..r.order() {
            assert_eq!(g.is_nilpotent(x).unwrap(), !oracle[x], "element {}", r.format_element(x));
        }
    }
}

#[test]
fn successors_match_direct_enumeration() {
    for r in small_rings() {
        let g = MStepGraph::build(MultiplierSet::WholeRing(r.clone()), &lim()).unwrap();
        for x in 0..r.order() {
            let mut direct: Vec<usize> = (0..r.order()).map(|u| r.mul(r.mul(x, u), x)).collect();
            direct.sort_unstable();
            direct.dedup();
            assert_eq!(g.successors(x), direct);
        }
    }
}

#[test]
fn component_radical_examples() {
    let up = upper2();
    let s = up.system();
    // A_21 = 0, so every m-sequence in A_12 dies at once
    assert_eq!(gamma_baer_radical(s, 0, 1, &lim()).unwrap().members.order(), 2);
    assert_eq!(gamma_baer_radical(s, 0, 0, &lim()).unwrap().members(), &[0]);

    let z4 = zn(4);
    let g = gamma_baer_radical(z4.system(), 0, 0, &lim()).unwrap();
    assert_eq!(g.members(), &[0, 2]);
    assert_eq!(g.members(), w_set(&z4, &lim()).unwrap().members());

    assert_eq!(gamma_baer_radical(full2().system(), 0, 1, &lim()).unwrap().members(), &[0]);
    assert!(matches!(gamma_baer_radical(s, 0, 2, &lim()), Err(Error::InvalidInput(_))));
}

#[test]
fn primality_examples() {
    let z4 = zn(4);
    let ideals = enumerate_ideals(&z4, Flavor::Ring, &lim()).unwrap();
    let two = ideals.iter().find(|i| i.order() == 2).unwrap();
    assert_eq!(ideal_primality(&z4, two).unwrap().primality, Primality::Prime);
    let zero = GMIdeal::zero(&z4, Flavor::Ring);
    let rep = ideal_primality(&z4, &zero).unwrap();
    assert_eq!(rep.primality, Primality::Neither);
    assert_eq!(rep.witness, Some((2, 2)));
    let f = full2();
    assert_eq!(ideal_primality(&f, &GMIdeal::zero(&f, Flavor::Gm)).unwrap().primality, Primality::Prime);
    assert!(matches!(
        ideal_primality(&z4, &GMIdeal::whole(&z4, Flavor::Ring)),
        Err(Error::InvalidInput(_))
    ));
    // Z_2 x Z_2 has x = (1,0), y = (0,1) with xAy = 0 but no square-zero element
    let r = zn(6);
    let rep = ideal_primality(&r, &GMIdeal::zero(&r, Flavor::Ring)).unwrap();
    assert_eq!(rep.primality, Primality::SemiprimeOnly);
    let (x, y) = rep.witness.unwrap();
    assert!((0..6).all(|a| r.mul(r.mul(x, a), y) == 0));
}

#[test]
fn prime_intersections() {
    let z4 = zn(4);
    assert_eq!(radical_via_primes(&z4, Flavor::Gm, &lim()).unwrap().members(), &[0, 2]);
    assert_eq!(radical_via_primes(&z4, Flavor::Ring, &lim()).unwrap().members(), &[0, 2]);
    assert_eq!(radical_via_primes(&full2(), Flavor::Gm, &lim()).unwrap().members(), &[0]);
    let up = upper2();
    let strict = vec![0, up.embed(0, 1, 1)];
    assert_eq!(radical_via_primes(&up, Flavor::Gm, &lim()).unwrap().members(), strict.as_slice());
    let trivial = zero_ring(&[1]);
    let r = radical_via_primes(&trivial, Flavor::Gm, &lim()).unwrap();
    assert_eq!(r.members(), &[0]);
    assert_eq!(r.witness, RadicalWitness::Primes { primes: vec![] });
}

#[test]
fn nilpotent_ideal_oracle() {
    assert_eq!(largest_nilpotent_ideal(&zn(2), &lim()).unwrap().members(), &[0]);
    let r = largest_nilpotent_ideal(&zn(4), &lim()).unwrap();
    assert_eq!(r.members(), &[0, 2]);
    assert!(matches!(r.witness, RadicalWitness::Nilpotent { exponent: 2, .. }));
    let up = upper2();
    let r = largest_nilpotent_ideal(&up, &lim()).unwrap();
    assert_eq!(r.members(), &[0, up.embed(0, 1, 1)]);
    assert!(matches!(r.witness, RadicalWitness::Nilpotent { exponent: 2, .. }));
    assert_eq!(largest_nilpotent_ideal(&zn(12), &lim()).unwrap().members(), &[0, 6]);
}

#[test]
fn gm_maximal_examples() {
    assert_eq!(gm_maximal_rb_ideal(&zero_ring(&[2]), &lim()).unwrap().members(), &[0, 1]);
    assert_eq!(gm_maximal_rb_ideal(&zn(4), &lim()).unwrap().members(), &[0, 2]);
    assert_eq!(gm_maximal_rb_ideal(&full2(), &lim()).unwrap().members(), &[0]);
    assert!(!is_rb_ideal(&full2(), &GMIdeal::whole(&full2(), Flavor::Gm), &lim()).unwrap());
}

#[test]
fn engines_agree_on_small_rings() {
    for r in small_rings() {
        let w = w_set(&r, &lim()).unwrap();
        for m in Method::ALL {
            let other = radical(&r, m, &lim()).unwrap();
            assert_eq!(other.members(), w.members(), "{} on ring of order {}", m.name(), r.order());
        }
    }
}

#[test]
fn radical_image_lies_in_radical_of_quotient() {
    for r in small_rings() {
        let w = w_set(&r, &lim()).unwrap();
        for b in enumerate_ideals(&r, Flavor::Gm, &lim()).unwrap() {
            let q = quotient(&r, &b, &lim()).unwrap();
            let wq = w_set(q.ring(), &lim()).unwrap();
            for &x in w.members() {
                assert!(wq.members.contains(q.projection.apply(x)));
            }
        }
    }
}

fn statuses(rep: &RadicalReport) -> Vec<(&str, Status)> {
    rep.verdicts.iter().map(|v| (v.claim.as_str(), v.status)).collect()
}

#[test]
fn theorem_report_upper_triangular() {
    let up = upper2();
    let rep = verify_radical_theorems(up.system(), &lim()).unwrap();
    assert!(rep.passed(), "{:?}", statuses(&rep));
    let orders: Vec<usize> = rep.components.iter().map(|c| c.gamma.order()).collect();
    // A_11, A_12 (whole), A_21 (trivial), A_22
    assert_eq!(orders, vec![1, 2, 1, 1]);
    assert!(rep.radicals.iter().all(|r| r.members() == [0, up.embed(0, 1, 1)]));
}

#[test]
fn theorem_report_full_matrix() {
    let rep = verify_radical_theorems(full2().system(), &lim()).unwrap();
    assert!(rep.passed(), "{:?}", statuses(&rep));
    let prop = |c: &str| rep.verdicts.iter().find(|v| v.claim == c).unwrap().status;
    assert_eq!(prop("semiprime ring has semiprime components"), Status::Pass);
    assert_eq!(prop("prime ring has prime components"), Status::Pass);
    assert!(rep.radicals.iter().all(|r| r.members() == [0]));
}

#[test]
fn theorem_report_zero_ring() {
    let z = zero_ring(&[2]);
    let rep = verify_radical_theorems(z.system(), &lim()).unwrap();
    assert!(rep.passed(), "{:?}", statuses(&rep));
    assert!(rep.radicals.iter().all(|r| r.members() == [0, 1]));
}

#[test]
fn theorem_reports_pass_on_small_rings() {
    for r in small_rings() {
        let rep = verify_radical_theorems(r.system(), &lim()).unwrap();
        assert!(rep.passed(), "order {}: {:?}", r.order(), statuses(&rep));
    }
}

#[test]
fn gamma_checks_find_degenerate_components() {
    // a zero product on Z_2 is neither semiprime nor prime as a Γ-ring
    let s: &GammaSystem = &zero_ring(&[2]).system().clone();
    assert_eq!(gamma_semiprime_witness(s, 0, 0, &lim()).unwrap(), Some(1));
    assert_eq!(gamma_prime_witness(s, 0, 0, &lim()).unwrap(), Some((1, 1)));
    let f = full2();
    assert_eq!(gamma_semiprime_witness(f.system(), 0, 1, &lim()).unwrap(), None);
    assert_eq!(gamma_principal_ideal(f.system(), 0, 1, 1).order(), 2);
}

#[test]
fn lattice_cap_blocks_theorem_report() {
    let tight = Limits {
        max_lattice: 8,
        ..Limits::default()
    };
    assert!(matches!(
        verify_radical_theorems(full2().system(), &tight),
        Err(Error::ResourceLimit { .. })
    ));
}
