//! Subquotients `H // K` of an assembled ring, for componentwise subgroups
//! `K_ij ⊆ H_ij` with `H` closed under products and `K` an ideal of `H`.
//!
//! The quotient ring `A // B` is the case `H = A`; a g.m. ideal viewed as a
//! ring in its own right is the case `K = 0`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::hom::GMHom;
use super::ideal::{is_gm_ideal, GMIdeal};
use super::GMRing;
use crate::abelian::{present, Subgroup};
use crate::error::{Error, Result};
use crate::gamma::GammaSystem;
use crate::limits::Limits;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Classes {
    /// source local index → class (new local index), `NONE` outside `H`
    class: Vec<usize>,
    /// class → canonical (minimum) representative
    rep: Vec<usize>,
}

/// `H // K` as a g.m. ring, with the class map from the source ring.
#[derive(Clone, Debug)]
pub struct Subquotient {
    source: GMRing,
    ring: GMRing,
    comps: Vec<Classes>,
}

impl Subquotient {
    pub fn build(source: &GMRing, h: &[Subgroup], k: &[Subgroup], limits: &Limits) -> Result<Self> {
        let n = source.size();
        if h.len() != n * n || k.len() != n * n {
            return Err(Error::invalid("one subgroup per component is required"));
        }
        let mut comps = Vec::with_capacity(n * n);
        let mut groups = Vec::with_capacity(n * n);
        for c in 0..n * n {
            let g = source.component(c / n, c % n);
            if !k[c].is_subgroup_of(&h[c]) {
                return Err(Error::invalid("denominator is not contained in numerator"));
            }
            let mut class = vec![NONE; g.order()];
            let mut reps = Vec::new();
            for &x in h[c].members() {
                if class[x] != NONE {
                    continue;
                }
                for &y in k[c].members() {
                    class[g.add(x, y)] = reps.len();
                }
                reps.push(x);
            }
            let p = present(reps.len(), |a, b| class[g.add(reps[a], reps[b])]);
            let class = class
                .into_iter()
                .map(|cl| if cl == NONE { NONE } else { p.to_group[cl] })
                .collect();
            let rep = p.from_group.iter().map(|&a| reps[a]).collect();
            comps.push(Classes { class, rep });
            groups.push(p.group);
        }
        let sys = source.system();
        let mut tables = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let (cij, cjl, cil) = (&comps[i * n + j], &comps[j * n + l], &comps[i * n + l]);
                    let len = cij.rep.len() * cjl.rep.len();
                    Error::check_cap("product table", len, limits.max_table)?;
                    let mut t = Vec::with_capacity(len);
                    for &x in &cij.rep {
                        for &z in &cjl.rep {
                            let p = cil.class[sys.mul(i, j, l, x, z)];
                            if p == NONE {
                                return Err(Error::invalid(format!(
                                    "numerator is not closed under products at ({},{},{})",
                                    source.labels()[i],
                                    source.labels()[j],
                                    source.labels()[l]
                                )));
                            }
                            t.push(p as u32);
                        }
                    }
                    tables.push(t);
                }
            }
        }
        let system = GammaSystem::from_parts(source.labels().to_vec(), groups, tables);
        let sq = Subquotient {
            source: source.clone(),
            ring: GMRing::assemble(system, limits)?,
            comps,
        };
        if let Some(msg) = sq.well_defined_witness(h) {
            return Err(Error::invalid(format!("coset product is not well defined: {msg}")));
        }
        Ok(sq)
    }

    /// Checks that the product of classes does not depend on representatives:
    /// `class(xz) = class(x)·class(z)` for every `x ∈ H_ij`, `z ∈ H_jk`.
    fn well_defined_witness(&self, h: &[Subgroup]) -> Option<alloc::string::String> {
        let n = self.source.size();
        let (ss, qs) = (self.source.system(), self.ring.system());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (cij, cjk, cik) = (&self.comps[i * n + j], &self.comps[j * n + k], &self.comps[i * n + k]);
                    for &x in h[i * n + j].members() {
                        for &z in h[j * n + k].members() {
                            let direct = cik.class[ss.mul(i, j, k, x, z)];
                            if direct != qs.mul(i, j, k, cij.class[x], cjk.class[z]) {
                                return Some(format!(
                                    "{} * {}",
                                    self.source.format_element(self.source.embed(i, j, x)),
                                    self.source.format_element(self.source.embed(j, k, z))
                                ));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn ring(&self) -> &GMRing {
        &self.ring
    }

    pub fn source(&self) -> &GMRing {
        &self.source
    }

    /// Class of a source element lying in `H`, as an element of the new ring.
    pub fn project(&self, x: usize) -> Option<usize> {
        let mut out = 0;
        for (i, j, a) in self.source.components_of(x) {
            let cl = self.comps[i * self.source.size() + j].class[a];
            if cl == NONE {
                return None;
            }
            out = self.ring.add(out, self.ring.embed(i, j, cl));
        }
        Some(out)
    }

    /// Canonical representative (componentwise minimum) of a class.
    pub fn lift(&self, y: usize) -> usize {
        let mut out = 0;
        for (i, j, b) in self.ring.components_of(y) {
            let a = self.comps[i * self.source.size() + j].rep[b];
            out = self.source.add(out, self.source.embed(i, j, a));
        }
        out
    }

    pub fn class_of_local(&self, i: usize, j: usize, a: usize) -> Option<usize> {
        let c = self.comps[i * self.source.size() + j].class[a];
        (c != NONE).then_some(c)
    }

    pub fn rep_of_local(&self, i: usize, j: usize, b: usize) -> usize {
        self.comps[i * self.source.size() + j].rep[b]
    }

    /// Image of a componentwise subgroup family of the source, as subgroups
    /// of the new ring's components.
    pub fn image_components(&self, comps: &[Subgroup]) -> Vec<Subgroup> {
        let n = self.source.size();
        (0..n * n)
            .map(|c| {
                let (i, j) = (c / n, c % n);
                let gens = comps[c].generators().iter().filter_map(|&a| self.class_of_local(i, j, a));
                Subgroup::generated(self.ring.component(i, j), gens)
            })
            .collect()
    }
}

/// `A // B` together with its verified projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub subquotient: Subquotient,
    pub projection: GMHom,
}

impl Quotient {
    pub fn ring(&self) -> &GMRing {
        self.subquotient.ring()
    }
}

/// Quotient by a g.m. ideal. The coset product is checked to be well
/// defined and the projection is checked to be a g.m. homomorphism whose
/// kernel is exactly `B`.
pub fn quotient(ring: &GMRing, b: &GMIdeal, limits: &Limits) -> Result<Quotient> {
    if b.subgroup().parent() != ring.group() {
        return Err(Error::invalid("ideal belongs to a different ring"));
    }
    if !b.is_componentwise(ring) {
        return Err(Error::invalid("ideal does not decompose componentwise"));
    }
    let bc = b.components(ring);
    if let Some(w) = is_gm_ideal(ring, &bc)? {
        return Err(Error::invalid(format!("not a g.m. ideal: {}", w.describe(ring))));
    }
    let n = ring.size();
    let whole: Vec<Subgroup> = (0..n * n).map(|c| Subgroup::whole(ring.component(c / n, c % n))).collect();
    let sq = Subquotient::build(ring, &whole, &bc, limits)?;
    let maps = (0..n * n)
        .map(|c| {
            (0..ring.component(c / n, c % n).order())
                .map(|a| sq.class_of_local(c / n, c % n, a).unwrap())
                .collect()
        })
        .collect();
    let projection = GMHom::new(ring, sq.ring(), maps)?;
    let check = projection.verify();
    if !check.holds {
        return Err(Error::Violation(format!(
            "projection is not a g.m. homomorphism: {}",
            check.witness.unwrap_or_default()
        )));
    }
    if check.kernel.as_ref().map(GMIdeal::members) != Some(b.members()) {
        return Err(Error::Violation(alloc::string::String::from("projection kernel differs from the ideal")));
    }
    Ok(Quotient {
        subquotient: sq,
        projection,
    })
}
