use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ideal::audit;
use super::{GMIdeal, GMRing};
use crate::abelian::Subgroup;
use crate::error::{Error, Result};

/// A componentwise map `A_ij → B_ij` between g.m. rings on the same index
/// set, given by lookup tables over local element indices.
#[derive(Clone, Debug)]
pub struct GMHom {
    source: GMRing,
    target: GMRing,
    maps: Vec<Vec<usize>>,
}

/// Outcome of [`GMHom::verify`]. Kernel and image are only computed for
/// genuine homomorphisms.
#[derive(Clone, Debug)]
pub struct HomCheck {
    pub holds: bool,
    pub witness: Option<String>,
    pub kernel: Option<GMIdeal>,
    /// Image component subgroups (a g.m. subring of the target).
    pub image: Option<Vec<Subgroup>>,
}

impl GMHom {
    pub fn new(source: &GMRing, target: &GMRing, maps: Vec<Vec<usize>>) -> Result<Self> {
        let n = source.size();
        if target.size() != n {
            return Err(Error::invalid("homomorphism between different index sets"));
        }
        if maps.len() != n * n {
            return Err(Error::invalid("one component map per (i,j) is required"));
        }
        for (c, m) in maps.iter().enumerate() {
            let (a, b) = (source.component(c / n, c % n), target.component(c / n, c % n));
            if m.len() != a.order() || m.iter().any(|&v| v >= b.order()) {
                return Err(Error::invalid(format!("component map {c} is not total into its target")));
            }
        }
        Ok(GMHom {
            source: source.clone(),
            target: target.clone(),
            maps,
        })
    }

    pub fn identity(ring: &GMRing) -> Self {
        let n = ring.size();
        let maps = (0..n * n)
            .map(|c| (0..ring.component(c / n, c % n).order()).collect())
            .collect();
        GMHom {
            source: ring.clone(),
            target: ring.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &GMRing {
        &self.source
    }

    pub fn target(&self) -> &GMRing {
        &self.target
    }

    pub fn component_map(&self, i: usize, j: usize) -> &[usize] {
        &self.maps[i * self.source.size() + j]
    }

    /// Applies the map to a ring element.
    pub fn apply(&self, x: usize) -> usize {
        let mut out = 0;
        for (i, j, a) in self.source.components_of(x) {
            let b = self.component_map(i, j)[a];
            out = self.target.add(out, self.target.embed(i, j, b));
        }
        out
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.source.size();
        (0..n * n).all(|c| {
            let t = self.target.component(c / n, c % n);
            let mut hit = alloc::vec![false; t.order()];
            self.maps[c].iter().all(|&v| !core::mem::replace(&mut hit[v], true)) && self.maps[c].len() == t.order()
        })
    }

    pub fn is_surjective(&self) -> bool {
        let n = self.source.size();
        (0..n * n).all(|c| {
            let t = self.target.component(c / n, c % n);
            let mut hit = alloc::vec![false; t.order()];
            for &v in &self.maps[c] {
                hit[v] = true;
            }
            hit.into_iter().all(|h| h)
        })
    }

    /// Checks `ψ(x+y) = ψ(x)+ψ(y)` and `ψ(xz) = ψ(x)ψ(z)` on every
    /// composable pair. Additivity is tested against generators (equivalent
    /// to all pairs); multiplicativity on all element pairs.
    pub fn verify(&self) -> HomCheck {
        let (src, tgt) = (&self.source, &self.target);
        let n = src.size();
        let fail = |w: String| HomCheck {
            holds: false,
            witness: Some(w),
            kernel: None,
            image: None,
        };
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (src.component(i, j), tgt.component(i, j));
                let m = self.component_map(i, j);
                if m[0] != 0 {
                    return fail(format!("component ({},{}) does not fix zero", src.labels()[i], src.labels()[j]));
                }
                for x in 0..a.order() {
                    for g in a.generators() {
                        if m[a.add(x, g)] != b.add(m[x], m[g]) {
                            return fail(format!(
                                "not additive: psi({} + {}) != psi({}) + psi({})",
                                src.format_element(src.embed(i, j, x)),
                                src.format_element(src.embed(i, j, g)),
                                src.format_element(src.embed(i, j, x)),
                                src.format_element(src.embed(i, j, g)),
                            ));
                        }
                    }
                }
            }
        }
        let (ss, ts) = (src.system(), tgt.system());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (mij, mjk, mik) = (self.component_map(i, j), self.component_map(j, k), self.component_map(i, k));
                    for x in 0..src.component(i, j).order() {
                        for z in 0..src.component(j, k).order() {
                            let lhs = mik[ss.mul(i, j, k, x, z)];
                            let rhs = ts.mul(i, j, k, mij[x], mjk[z]);
                            if lhs != rhs {
                                return fail(format!(
                                    "not multiplicative: psi({} * {}) != psi({}) * psi({})",
                                    src.format_element(src.embed(i, j, x)),
                                    src.format_element(src.embed(j, k, z)),
                                    src.format_element(src.embed(i, j, x)),
                                    src.format_element(src.embed(j, k, z)),
                                ));
                            }
                        }
                    }
                }
            }
        }
        let kernel_comps: Vec<Subgroup> = (0..n * n)
            .map(|c| {
                let g = src.component(c / n, c % n);
                Subgroup::generated(g, (0..g.order()).filter(|&x| self.maps[c][x] == 0))
            })
            .collect();
        let kernel = GMIdeal::direct_sum(src, &kernel_comps);
        if let Err(e) = audit(src, &kernel) {
            return fail(format!("kernel is not a g.m. ideal: {e}"));
        }
        let image = (0..n * n)
            .map(|c| Subgroup::generated(tgt.component(c / n, c % n), self.maps[c].iter().copied()))
            .collect();
        HomCheck {
            holds: true,
            witness: None,
            kernel: Some(kernel),
            image: Some(image),
        }
    }
}
