//! Constructive certificates for the isomorphism theorems and the ideal
//! correspondence. Each canonical map is built explicitly and checked to be
//! a well-defined, bijective g.m. homomorphism.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::hom::GMHom;
use super::ideal::{combine_ideals, enumerate_ideals, is_gm_ideal, Combine, GMIdeal};
use super::quotient::{quotient, Quotient, Subquotient};
use super::{Flavor, GMRing};
use crate::abelian::Subgroup;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::verdict::Verdict;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoReport {
    pub verdicts: Vec<Verdict>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        !self.verdicts.iter().any(Verdict::failed)
    }
}

fn build_map<F>(source: &GMRing, target: &GMRing, f: F) -> Result<GMHom>
where
    F: Fn(usize, usize, usize) -> usize,
{
    let n = source.size();
    let maps = (0..n * n)
        .map(|c| (0..source.component(c / n, c % n).order()).map(|a| f(c / n, c % n, a)).collect())
        .collect();
    GMHom::new(source, target, maps)
}

/// Well-definedness plus bijective-homomorphism check for a canonical map.
fn certify(claim: &str, map: &GMHom, well_defined: Option<String>) -> Verdict {
    if let Some(w) = well_defined {
        return Verdict::new(claim, false, format!("canonical map not well defined: {w}"));
    }
    let check = map.verify();
    if !check.holds {
        return Verdict::new(claim, false, check.witness.unwrap_or_default());
    }
    if !map.is_bijective() {
        return Verdict::new(claim, false, "canonical map is not bijective");
    }
    Verdict::new(
        claim,
        true,
        format!("bijective g.m. homomorphism of order {}", map.source().order()),
    )
}

fn require_gm(ring: &GMRing, ideal: &GMIdeal, name: &str) -> Result<Vec<Subgroup>> {
    if ideal.subgroup().parent() != ring.group() {
        return Err(Error::invalid(format!("hypothesis broken: {name} belongs to a different ring")));
    }
    if !ideal.is_componentwise(ring) {
        return Err(Error::invalid(format!("hypothesis broken: {name} is not componentwise")));
    }
    let comps = ideal.components(ring);
    if let Some(w) = is_gm_ideal(ring, &comps)? {
        return Err(Error::invalid(format!(
            "hypothesis broken: {name} is not a g.m. ideal ({})",
            w.describe(ring)
        )));
    }
    Ok(comps)
}

fn quotient_verdict(claim: &str, r: Result<Quotient>) -> Result<(Verdict, Option<Quotient>)> {
    match r {
        Ok(q) => Ok((
            Verdict::new(claim, true, format!("quotient of order {}, coset product well defined", q.ring().order())),
            Some(q),
        )),
        Err(Error::Violation(m)) => Ok((Verdict::new(claim, false, m), None)),
        Err(Error::InvalidInput(m)) if m.contains("well defined") => Ok((Verdict::new(claim, false, m), None)),
        Err(e) => Err(e),
    }
}

/// Certifies, for g.m. ideals `B`, `C` and a surjective g.m. homomorphism
/// `ψ` (defaulting to the projection `A → A//B`):
///
/// * the coset products of `A//B` and `A//C` are well defined;
/// * `A//ker ψ ≅ ψ(A)` via `x + ker ψ ↦ ψ(x)`;
/// * `(B+C)//C ≅ B//(B∩C)` via `b + B∩C ↦ b + C`;
/// * `A//B ≅ (A//C)//(B//C)` when `C ⊆ B` (skipped otherwise);
/// * `D ↦ ψ(D)` is a bijection from g.m. ideals containing `ker ψ` onto the
///   g.m. ideals of the target.
pub fn verify_iso_theorems(
    ring: &GMRing,
    b: &GMIdeal,
    c: &GMIdeal,
    psi: Option<&GMHom>,
    limits: &Limits,
) -> Result<IsoReport> {
    let bc = require_gm(ring, b, "B")?;
    let cc = require_gm(ring, c, "C")?;
    let n = ring.size();
    let mut verdicts = Vec::new();

    let (v, q_b) = quotient_verdict("quotient A//B well defined", quotient(ring, b, limits))?;
    verdicts.push(v);
    let (v, q_c) = quotient_verdict("quotient A//C well defined", quotient(ring, c, limits))?;
    verdicts.push(v);

    let default_psi;
    let psi = match psi {
        Some(p) => {
            if p.source() != ring {
                return Err(Error::invalid("hypothesis broken: psi does not start at the ring"));
            }
            let check = p.verify();
            if !check.holds {
                return Err(Error::invalid(format!(
                    "hypothesis broken: psi is not a g.m. homomorphism ({})",
                    check.witness.unwrap_or_default()
                )));
            }
            if !p.is_surjective() {
                return Err(Error::invalid("hypothesis broken: psi is not surjective"));
            }
            Some(p)
        }
        None => {
            default_psi = q_b.as_ref().map(|q| q.projection.clone());
            default_psi.as_ref()
        }
    };

    // first isomorphism theorem
    let claim = "A//ker(psi) ~ psi(A)";
    if let Some(psi) = psi {
        let kernel = psi.verify().kernel.expect("verified hom has a kernel");
        let qk = quotient(ring, &kernel, limits)?;
        let sq = &qk.subquotient;
        let map = build_map(sq.ring(), psi.target(), |i, j, y| psi.component_map(i, j)[sq.rep_of_local(i, j, y)])?;
        let mut bad = None;
        'outer: for i in 0..n {
            for j in 0..n {
                for a in 0..ring.component(i, j).order() {
                    let cl = sq.class_of_local(i, j, a).unwrap();
                    if map.component_map(i, j)[cl] != psi.component_map(i, j)[a] {
                        bad = Some(ring.format_element(ring.embed(i, j, a)));
                        break 'outer;
                    }
                }
            }
        }
        verdicts.push(certify(claim, &map, bad));
    } else {
        verdicts.push(Verdict::new(claim, false, "no homomorphism available"));
    }

    // second isomorphism theorem
    let claim = "(B+C)//C ~ B//(B cap C)";
    let sum = combine_ideals(ring, &[b.clone(), c.clone()], Combine::Sum)?;
    let meet = combine_ideals(ring, &[b.clone(), c.clone()], Combine::Intersection)?;
    let x = Subquotient::build(ring, &sum.components(ring), &cc, limits)?;
    let y = Subquotient::build(ring, &bc, &meet.components(ring), limits)?;
    let map = build_map(y.ring(), x.ring(), |i, j, v| {
        x.class_of_local(i, j, y.rep_of_local(i, j, v)).expect("B lies in B+C")
    })?;
    let mut bad = None;
    'outer2: for cidx in 0..n * n {
        let (i, j) = (cidx / n, cidx % n);
        for &a in bc[cidx].members() {
            if x.class_of_local(i, j, a) != Some(map.component_map(i, j)[y.class_of_local(i, j, a).unwrap()]) {
                bad = Some(ring.format_element(ring.embed(i, j, a)));
                break 'outer2;
            }
        }
    }
    verdicts.push(certify(claim, &map, bad));

    // third isomorphism theorem
    let claim = "A//B ~ (A//C)//(B//C)";
    if !c.is_subset_of(b) {
        verdicts.push(Verdict::skipped(claim, "C is not contained in B"));
    } else if let (Some(qb), Some(qc)) = (&q_b, &q_c) {
        let q1 = &qc.subquotient;
        let b_over_c = GMIdeal::from_components(q1.ring(), &q1.image_components(&bc))?;
        let q2 = quotient(q1.ring(), &b_over_c, limits)?;
        let q2s = &q2.subquotient;
        let qbs = &qb.subquotient;
        let through = |i: usize, j: usize, a: usize| {
            q2s.class_of_local(i, j, q1.class_of_local(i, j, a).unwrap()).unwrap()
        };
        let map = build_map(qbs.ring(), q2s.ring(), |i, j, v| through(i, j, qbs.rep_of_local(i, j, v)))?;
        let mut bad = None;
        'outer3: for i in 0..n {
            for j in 0..n {
                for a in 0..ring.component(i, j).order() {
                    if through(i, j, a) != map.component_map(i, j)[qbs.class_of_local(i, j, a).unwrap()] {
                        bad = Some(ring.format_element(ring.embed(i, j, a)));
                        break 'outer3;
                    }
                }
            }
        }
        verdicts.push(certify(claim, &map, bad));
    } else {
        verdicts.push(Verdict::new(claim, false, "a quotient failed to build"));
    }

    // ideal correspondence
    let claim = "ideal correspondence D -> psi(D) is a bijection";
    if let Some(psi) = psi {
        let kernel = psi.verify().kernel.expect("verified hom has a kernel");
        let above: Vec<GMIdeal> = enumerate_ideals(ring, Flavor::Gm, limits)?
            .into_iter()
            .filter(|d| kernel.is_subset_of(d))
            .collect();
        let target = psi.target();
        let below = enumerate_ideals(target, Flavor::Gm, limits)?;
        let mut images = Vec::with_capacity(above.len());
        let mut problem = None;
        for d in &above {
            let comps: Vec<Subgroup> = (0..n * n)
                .map(|cidx| {
                    let (i, j) = (cidx / n, cidx % n);
                    let m = psi.component_map(i, j);
                    Subgroup::generated(target.component(i, j), d.component(ring, i, j).members().iter().map(|&a| m[a]))
                })
                .collect();
            match GMIdeal::from_components(target, &comps) {
                Ok(img) => images.push(img),
                Err(e) => {
                    problem = Some(format!("image of an ideal is not a g.m. ideal: {e}"));
                    break;
                }
            }
        }
        let verdict = match problem {
            Some(p) => Verdict::new(claim, false, p),
            None => {
                let mut sorted = images.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != images.len() {
                    Verdict::new(claim, false, "two ideals above the kernel have the same image")
                } else if sorted != below {
                    Verdict::new(claim, false, "image does not cover every ideal of the target")
                } else {
                    Verdict::new(claim, true, format!("{} ideals matched", below.len()))
                }
            }
        };
        verdicts.push(verdict);
    } else {
        verdicts.push(Verdict::new(claim, false, "no homomorphism available"));
    }

    Ok(IsoReport { verdicts })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::ideal::gm_ideal_closure;
    use super::*;
    use crate::verdict::Status;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn z8_third_isomorphism() {
        let r = zn(8);
        let b = gm_ideal_closure(&r, &[2], Flavor::Gm).unwrap();
        let c = gm_ideal_closure(&r, &[4], Flavor::Gm).unwrap();
        let rep = verify_iso_theorems(&r, &b, &c, None, &lim()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let third = rep.verdicts.iter().find(|v| v.claim.starts_with("A//B ~")).unwrap();
        assert_eq!(third.status, Status::Pass);
        assert!(third.detail.contains("order 2"));
    }

    #[test]
    fn degenerate_cases() {
        let r = upper2();
        let s = gm_ideal_closure(&r, &[r.parse_element("1,2:(1)").unwrap()], Flavor::Gm).unwrap();
        let rep = verify_iso_theorems(&r, &s, &s, None, &lim()).unwrap();
        assert!(rep.passed());
        let z = GMIdeal::zero(&r, Flavor::Gm);
        let rep = verify_iso_theorems(&r, &s, &z, None, &lim()).unwrap();
        assert!(rep.passed());
        // C not inside B: third theorem is skipped, not failed
        let rep = verify_iso_theorems(&r, &z, &s, None, &lim()).unwrap();
        assert!(rep.passed());
        assert!(rep.verdicts.iter().any(|v| v.status == Status::Skipped));
    }

    #[test]
    fn explicit_hom_and_bad_hypotheses() {
        let (z4, z2) = (zn(4), zn(2));
        let psi = GMHom::new(&z4, &z2, alloc::vec![alloc::vec![0, 1, 0, 1]]).unwrap();
        let b = gm_ideal_closure(&z4, &[2], Flavor::Gm).unwrap();
        let z = GMIdeal::zero(&z4, Flavor::Gm);
        assert!(verify_iso_theorems(&z4, &b, &z, Some(&psi), &lim()).unwrap().passed());
        let not_onto = GMHom::new(&z4, &z2, alloc::vec![alloc::vec![0, 0, 0, 0]]).unwrap();
        assert!(matches!(
            verify_iso_theorems(&z4, &b, &z, Some(&not_onto), &lim()),
            Err(Error::InvalidInput(m)) if m.contains("surjective")
        ));
        let sz = split_zero();
        let diag = gm_ideal_closure(&sz, &[sz.parse_element("1,1:(1) + 2,2:(1)").unwrap()], Flavor::Ring).unwrap();
        let zz = GMIdeal::zero(&sz, Flavor::Gm);
        assert!(matches!(
            verify_iso_theorems(&sz, &diag, &zz, None, &lim()),
            Err(Error::InvalidInput(m)) if m.contains("B")
        ));
    }

    #[test]
    fn all_pairs_on_small_rings() {
        for r in [zn(12), upper2(), full2(), path(&["1", "2"], &[("1", "2")], 1)] {
            let ideals = enumerate_ideals(&r, Flavor::Gm, &lim()).unwrap();
            for b in &ideals {
                for c in &ideals {
                    let rep = verify_iso_theorems(&r, b, c, None, &lim()).unwrap();
                    assert!(rep.passed(), "{rep:?}");
                }
            }
        }
    }
}
