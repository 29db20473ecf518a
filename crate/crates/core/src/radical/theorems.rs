//! Cross-checks between the radical engines and the componentwise
//! Γ-ring radicals of a system.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::engines::{
    gamma_baer_radical, ideal_primality, largest_nilpotent_ideal, w_set, Primality,
};
use super::{Method, RadicalResult};
use crate::abelian::{SpanBuilder, Subgroup};
use crate::error::{Error, Result};
use crate::gamma::GammaSystem;
use crate::limits::Limits;
use crate::ring::{quotient, Flavor, GMIdeal, GMRing};
use crate::verdict::Verdict;

/// Principal ideal of the `A_ts`-ring `A_st` generated by `seed`:
/// closed under `x ↦ x·u·a` and `x ↦ a·u·x` for `u ∈ A_ts`, `a ∈ A_st`.
pub fn gamma_principal_ideal(system: &GammaSystem, s: usize, t: usize, seed: usize) -> Subgroup {
    let g = system.component(s, t);
    let us = system.component(t, s).generators();
    let as_ = g.generators();
    let mut b = SpanBuilder::new(g);
    b.close([seed], |x, out| {
        for &u in &us {
            let xu = system.mul(s, t, s, x, u);
            let mut ux = Vec::with_capacity(as_.len());
            for &a in &as_ {
                out.push(system.mul(s, s, t, xu, a));
                ux.push(system.mul(s, s, t, system.mul(s, t, s, a, u), x));
            }
            out.extend(ux);
        }
    });
    b.finish()
}

fn gamma_product_vanishes(system: &GammaSystem, s: usize, t: usize, p: &Subgroup, q: &Subgroup) -> bool {
    let us = system.component(t, s).generators();
    p.generators().iter().all(|&x| {
        us.iter().all(|&u| {
            let xu = system.mul(s, t, s, x, u);
            q.generators().iter().all(|&y| system.mul(s, s, t, xu, y) == 0)
        })
    })
}

/// A nonzero `b ∈ A_st` whose Γ-ideal `B` has `B·A_ts·B = 0`, if any.
///
/// Any such ideal contains the principal ideal of each of its elements,
/// so searching principal ideals covers every Γ-ideal.
pub fn gamma_semiprime_witness(system: &GammaSystem, s: usize, t: usize, limits: &Limits) -> Result<Option<usize>> {
    let g = system.component(s, t);
    Error::check_cap("component order", g.order(), limits.max_radical)?;
    for b in 1..g.order() {
        let p = gamma_principal_ideal(system, s, t, b);
        if gamma_product_vanishes(system, s, t, &p, &p) {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// Nonzero `(b, c)` with `<b>·A_ts·<c> = 0`, if any.
pub fn gamma_prime_witness(
    system: &GammaSystem,
    s: usize,
    t: usize,
    limits: &Limits,
) -> Result<Option<(usize, usize)>> {
    let g = system.component(s, t);
    Error::check_cap("component order", g.order(), limits.max_radical)?;
    let mut principals: Vec<(usize, Subgroup)> = Vec::new();
    for b in 1..g.order() {
        let p = gamma_principal_ideal(system, s, t, b);
        if !principals.iter().any(|(_, q)| *q == p) {
            principals.push((b, p));
        }
    }
    for (b, p) in &principals {
        for (c, q) in &principals {
            if gamma_product_vanishes(system, s, t, p, q) {
                return Ok(Some((*b, *c)));
            }
        }
    }
    Ok(None)
}

/// One row of the componentwise decomposition table.
#[derive(Clone, Debug)]
pub struct ComponentRow {
    pub i: usize,
    pub j: usize,
    /// Radical of the `A_ji`-ring `A_ij`.
    pub gamma: Subgroup,
    /// The `(i,j)` component of `W(A)`.
    pub from_w: Subgroup,
}

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub ring: GMRing,
    pub verdicts: Vec<Verdict>,
    pub radicals: Vec<RadicalResult>,
    pub components: Vec<ComponentRow>,
}

impl RadicalReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| !v.failed())
    }
}

fn run(
    ring: &GMRing,
    method: Method,
    limits: &Limits,
    verdicts: &mut Vec<Verdict>,
) -> Result<Option<RadicalResult>> {
    match super::engines::radical(ring, method, limits) {
        Ok(r) => Ok(Some(r)),
        Err(Error::Violation(msg)) => {
            verdicts.push(Verdict::new(format!("engine {} succeeds", method.name()), false, msg));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn show(ring: &GMRing, h: &Subgroup) -> String {
    let els: Vec<String> = h.members().iter().map(|&x| ring.format_element(x)).collect();
    format!("{{{}}}", els.join("; "))
}

/// Runs every radical engine on the assembled ring and checks the claims
/// relating them, the componentwise radicals and the Γ-ring propagation
/// of (semi)primeness.
pub fn verify_radical_theorems(system: &GammaSystem, limits: &Limits) -> Result<RadicalReport> {
    let ring = GMRing::assemble(system.clone(), limits)?;
    Error::check_cap("ring order (ideal lattice)", ring.order(), limits.max_lattice)?;
    let mut verdicts = Vec::new();
    let mut radicals = Vec::new();
    for m in Method::ALL {
        if let Some(r) = run(&ring, m, limits, &mut verdicts)? {
            radicals.push(r);
        }
    }
    let get = |m: Method| radicals.iter().find(|r| r.method == m).map(|r| &r.members);
    let w = get(Method::MNilpotent);

    if let (Some(gm), Some(pr), Some(pg)) = (get(Method::GmMaximal), get(Method::PrimesRing), get(Method::PrimesGm)) {
        let ok = gm.is_subgroup_of(pr) && pr.is_subgroup_of(pg);
        verdicts.push(Verdict::new(
            "chain gm_maximal <= primes_ring <= primes_gm",
            ok,
            format!("orders {} <= {} <= {}", gm.order(), pr.order(), pg.order()),
        ));
    }
    let agree = radicals.len() == Method::ALL.len() && radicals.windows(2).all(|p| p[0].members == p[1].members);
    let detail = radicals
        .iter()
        .map(|r| format!("{}={}", r.method.name(), r.members.order()))
        .collect::<Vec<_>>()
        .join(" ");
    verdicts.push(Verdict::new("five radical engines agree", agree, detail));

    // componentwise radicals
    let n = system.size();
    let mut components = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let gamma = gamma_baer_radical(system, i, j, limits)?.members;
            let from_w = match w {
                Some(w) => GMIdeal::new(w.clone(), Flavor::Ring).component(&ring, i, j),
                None => Subgroup::zero(system.component(i, j)),
            };
            components.push(ComponentRow { i, j, gamma, from_w });
        }
    }
    let embed = |row: &ComponentRow| -> Vec<usize> {
        row.gamma.generators().iter().map(|&a| ring.embed(row.i, row.j, a)).collect()
    };
    let sum = Subgroup::generated(ring.group(), components.iter().flat_map(embed));
    if let Some(w) = w {
        let labels = ring.labels();
        let bad = components.iter().find(|r| r.gamma != r.from_w);
        verdicts.push(Verdict::new(
            "W(A) contains the sum of component radicals",
            sum.is_subgroup_of(w),
            format!("sum order {}, W order {}", sum.order(), w.order()),
        ));
        verdicts.push(Verdict::new(
            "W(A) is contained in the sum of component radicals",
            w.is_subgroup_of(&sum),
            format!("sum order {}, W order {}", sum.order(), w.order()),
        ));
        verdicts.push(Verdict::new(
            "each component of W(A) is the component radical",
            bad.is_none(),
            match bad {
                Some(r) => format!(
                    "at ({},{}): W gives {} elements, component radical {}",
                    labels[r.i], labels[r.j], r.from_w.order(), r.gamma.order()
                ),
                None => format!("{} components match", components.len()),
            },
        ));
    }
    if let Some(pg) = get(Method::PrimesGm) {
        verdicts.push(Verdict::new(
            "primes_gm contains the sum of component radicals",
            sum.is_subgroup_of(pg),
            format!("sum order {}, primes_gm order {}", sum.order(), pg.order()),
        ));
    }
    if let Some(gm) = get(Method::GmMaximal) {
        verdicts.push(Verdict::new(
            "gm_maximal is contained in the sum of component radicals",
            gm.is_subgroup_of(&sum),
            format!("sum order {}, gm_maximal order {}", sum.order(), gm.order()),
        ));
    }

    // corner rings A_ii
    for i in 0..n {
        let corner = GammaSystem::from_parts(
            vec![system.labels()[i].clone()],
            vec![system.component(i, i).clone()],
            vec![system.table(i, i, i).to_vec()],
        );
        let cring = GMRing::assemble(corner, limits)?;
        let inner = w_set(&cring, limits)?.members;
        let comp = &components[i * n + i].gamma;
        let oracle = largest_nilpotent_ideal(&cring, limits)?.members;
        let ok = inner.members() == comp.members() && oracle.members() == comp.members();
        verdicts.push(Verdict::new(
            format!("corner ring A_({l},{l}) radical matches component radical", l = system.labels()[i]),
            ok,
            format!("W={} nilpotent={} component={}", inner.order(), oracle.order(), comp.order()),
        ));
    }

    // (semi)prime propagation to components
    let semiprime = w.map(Subgroup::is_zero);
    match semiprime {
        Some(true) => {
            let mut bad = None;
            'outer: for s in 0..n {
                for t in 0..n {
                    if let Some(b) = gamma_semiprime_witness(system, s, t, limits)? {
                        bad = Some((s, t, b));
                        break 'outer;
                    }
                }
            }
            verdicts.push(Verdict::new(
                "semiprime ring has semiprime components",
                bad.is_none(),
                match bad {
                    Some((s, t, b)) => format!(
                        "A_({},{}) has <{}> with B*A*B = 0",
                        system.labels()[s],
                        system.labels()[t],
                        system.component(s, t).element(b)
                    ),
                    None => format!("{} components checked", n * n),
                },
            ));
        }
        _ => verdicts.push(Verdict::skipped("semiprime ring has semiprime components", "ring is not semiprime")),
    }
    let prime = ring.order() > 1
        && ideal_primality(&ring, &GMIdeal::zero(&ring, Flavor::Ring))?.primality == Primality::Prime;
    if prime {
        let mut bad = None;
        'outer2: for s in 0..n {
            for t in 0..n {
                if let Some(bc) = gamma_prime_witness(system, s, t, limits)? {
                    bad = Some((s, t, bc));
                    break 'outer2;
                }
            }
        }
        verdicts.push(Verdict::new(
            "prime ring has prime components",
            bad.is_none(),
            match bad {
                Some((s, t, (b, c))) => {
                    let g = system.component(s, t);
                    format!(
                        "A_({},{}) has <{}>*A*<{}> = 0",
                        system.labels()[s],
                        system.labels()[t],
                        g.element(b),
                        g.element(c)
                    )
                }
                None => format!("{} components checked", n * n),
            },
        ));
    } else {
        verdicts.push(Verdict::skipped("prime ring has prime components", "ring is not prime"));
    }

    // quotient by the radical is semiprime
    if let Some(w) = w {
        let ideal = GMIdeal::new(w.clone(), Flavor::Gm);
        let claim = "A // W(A) has zero radical";
        match quotient(&ring, &ideal, limits) {
            Ok(q) => {
                let inner = w_set(q.ring(), limits)?.members;
                verdicts.push(Verdict::new(
                    claim,
                    inner.is_zero(),
                    format!("quotient order {}, radical {}", q.ring().order(), show(q.ring(), &inner)),
                ));
            }
            Err(Error::InvalidInput(msg)) | Err(Error::Violation(msg)) => {
                verdicts.push(Verdict::new(claim, false, msg));
            }
            Err(e) => return Err(e),
        }
    }

    Ok(RadicalReport {
        ring,
        verdicts,
        radicals,
        components,
    })
}
