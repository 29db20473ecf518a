//! The generalized matrix ring `A = Σ A_ij` assembled from a Γ_I-system.
//!
//! Ring elements are addressed by a single index into the additive group
//! `Π A_ij`, with components in row-major `(i, j)` order and the first
//! component most significant. This is the lexicographic order on the
//! concatenated coordinates, so member lists sorted by index are canonical.

mod hom;
mod ideal;
mod iso;
mod quotient;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{parse_coords, FinAbGroup, GroupElement};
use crate::error::{Error, Result};
use crate::gamma::GammaSystem;
use crate::limits::Limits;

pub use hom::{GMHom, HomCheck};
pub use ideal::{
    annihilator_star, combine_ideals, enumerate_ideals, gm_ideal_closure, ideal_power_exponent, ideal_product,
    is_gm_ideal, is_ring_ideal, relative_annihilator, seed_ideal_from_component, Combine, GMIdeal, IdealWitness,
};
pub use iso::{verify_iso_theorems, IsoReport};
pub use quotient::{quotient, Quotient, Subquotient};

/// Which closure conditions an ideal is asserted to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    /// Componentwise subgroups closed under outer products.
    Gm,
    /// Plain two-sided ideal of the assembled ring.
    Ring,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Gm => "gm",
            Flavor::Ring => "ring",
        }
    }
}

/// Rings up to this order keep a full product table.
const TABLE_CACHE: usize = 1024;

#[derive(Debug)]
struct Inner {
    system: GammaSystem,
    group: FinAbGroup,
    strides: Vec<usize>,
    basis: Vec<usize>,
    table: Option<Vec<u32>>,
}

/// Cheap-to-clone handle to an assembled ring.
#[derive(Clone, Debug)]
pub struct GMRing(Arc<Inner>);

impl PartialEq for GMRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.system == other.0.system
    }
}

impl Eq for GMRing {}

/// A generalized matrix: nonzero entries keyed by `(i, j)` label positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GMElement {
    pub entries: Vec<((usize, usize), GroupElement)>,
}

impl GMElement {
    pub fn zero() -> Self {
        GMElement { entries: Vec::new() }
    }

    /// `x E(i, j)`.
    pub fn single(i: usize, j: usize, x: GroupElement) -> Self {
        GMElement {
            entries: alloc::vec![((i, j), x)],
        }
    }
}

impl GMRing {
    /// Validates the system and assembles the ring.
    pub fn assemble(system: GammaSystem, limits: &Limits) -> Result<Self> {
        let order = system.total_order().ok_or(Error::ResourceLimit {
            what: "ring order",
            size: usize::MAX,
            cap: limits.max_order,
        })?;
        Error::check_cap("ring order", order, limits.max_order)?;
        let rep = system.check_axioms();
        if let Some(v) = rep.violations.first() {
            return Err(Error::invalid(format!(
                "not a Gamma_I-system ({} violations), first: {}",
                rep.total_violations,
                system.describe_violation(v)
            )));
        }
        Ok(Self::assemble_trusted(system))
    }

    pub(crate) fn assemble_trusted(system: GammaSystem) -> Self {
        let factors: Vec<u32> = system
            .components()
            .iter()
            .flat_map(|g| g.factors().iter().copied())
            .collect();
        let group = FinAbGroup::from_factors(factors);
        let comps = system.components();
        let mut strides = alloc::vec![1usize; comps.len()];
        let mut acc = 1usize;
        for c in (0..comps.len()).rev() {
            strides[c] = acc;
            acc *= comps[c].order();
        }
        let mut basis = Vec::new();
        for (c, g) in comps.iter().enumerate() {
            for e in g.generators() {
                basis.push(e * strides[c]);
            }
        }
        let mut ring = GMRing(Arc::new(Inner {
            system,
            group,
            strides,
            basis,
            table: None,
        }));
        let order = ring.order();
        if order <= TABLE_CACHE {
            let mut t = Vec::with_capacity(order * order);
            for x in 0..order {
                for y in 0..order {
                    t.push(ring.mul_direct(x, y) as u32);
                }
            }
            Arc::get_mut(&mut ring.0).unwrap().table = Some(t);
        }
        ring
    }

    pub fn system(&self) -> &GammaSystem {
        &self.0.system
    }

    /// Additive group of the ring.
    pub fn group(&self) -> &FinAbGroup {
        &self.0.group
    }

    pub fn order(&self) -> usize {
        self.0.group.order()
    }

    pub fn size(&self) -> usize {
        self.0.system.size()
    }

    pub fn labels(&self) -> &[String] {
        self.0.system.labels()
    }

    /// Single-entry additive generators `e E(i, j)`.
    pub fn basis(&self) -> &[usize] {
        &self.0.basis
    }

    pub fn component(&self, i: usize, j: usize) -> &FinAbGroup {
        self.0.system.component(i, j)
    }

    #[inline]
    pub fn local(&self, x: usize, i: usize, j: usize) -> usize {
        let c = i * self.size() + j;
        (x / self.0.strides[c]) % self.0.system.components()[c].order()
    }

    /// `a E(i, j)` for a local element `a ∈ A_ij`.
    #[inline]
    pub fn embed(&self, i: usize, j: usize, a: usize) -> usize {
        a * self.0.strides[i * self.size() + j]
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.0.group.add(x, y)
    }

    pub fn neg(&self, x: usize) -> usize {
        self.0.group.neg(x)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        match &self.0.table {
            Some(t) => t[x * self.order() + y] as usize,
            None => self.mul_direct(x, y),
        }
    }

    /// `(xy)_ij = Σ_k x_ik y_kj`.
    fn mul_direct(&self, x: usize, y: usize) -> usize {
        let n = self.size();
        let sys = &self.0.system;
        let xs: Vec<usize> = (0..n * n).map(|c| self.local(x, c / n, c % n)).collect();
        let ys: Vec<usize> = (0..n * n).map(|c| self.local(y, c / n, c % n)).collect();
        let mut out = 0;
        for i in 0..n {
            for j in 0..n {
                let g = sys.component(i, j);
                let mut acc = 0;
                for k in 0..n {
                    let (a, b) = (xs[i * n + k], ys[k * n + j]);
                    if a != 0 && b != 0 {
                        acc = g.add(acc, sys.mul(i, k, j, a, b));
                    }
                }
                out += acc * self.0.strides[i * n + j];
            }
        }
        out
    }

    pub fn element(&self, x: usize) -> GMElement {
        let n = self.size();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let a = self.local(x, i, j);
                if a != 0 {
                    entries.push(((i, j), self.component(i, j).element(a)));
                }
            }
        }
        GMElement { entries }
    }

    pub fn index_of(&self, e: &GMElement) -> Result<usize> {
        let n = self.size();
        let mut x = 0;
        for ((i, j), g) in &e.entries {
            if *i >= n || *j >= n {
                return Err(Error::invalid(format!("entry ({i},{j}) outside index set")));
            }
            let a = self.component(*i, *j).index_of(g)?;
            x = self.add(x, self.embed(*i, *j, a));
        }
        Ok(x)
    }

    /// `"0"` or a `+`-joined list of `i,j:(c1,…,cr)` terms.
    pub fn format_element(&self, x: usize) -> String {
        let e = self.element(x);
        if e.entries.is_empty() {
            return String::from("0");
        }
        let labels = self.labels();
        let parts: Vec<String> = e
            .entries
            .iter()
            .map(|((i, j), g)| format!("{},{}:{}", labels[*i], labels[*j], g))
            .collect();
        parts.join(" + ")
    }

    /// Inverse of [`GMRing::format_element`].
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        if t == "0" {
            return Ok(0);
        }
        let mut x = 0;
        for term in t.split('+') {
            let (pair, coords) = term
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::invalid(format!("element term {term:?} lacks ':'")))?;
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::invalid(format!("element term {term:?} lacks 'i,j'")))?;
            let sys = self.system();
            let i = sys
                .label_index(a.trim())
                .ok_or_else(|| Error::invalid(format!("undeclared label {a}")))?;
            let j = sys
                .label_index(b.trim())
                .ok_or_else(|| Error::invalid(format!("undeclared label {b}")))?;
            let g = parse_coords(coords)?;
            let local = self.component(i, j).index_of(&g)?;
            x = self.add(x, self.embed(i, j, local));
        }
        Ok(x)
    }

    /// Exhaustive ring-axiom audit (associativity, both distributive laws)
    /// for rings up to `limits.max_lattice` elements; larger rings are
    /// audited on additive generators, which is complete because the
    /// product is biadditive by construction.
    pub fn self_test(&self, limits: &Limits) -> Option<String> {
        let all: Vec<usize>;
        let (xs, ys): (&[usize], &[usize]) = if self.order() <= limits.max_lattice {
            all = (0..self.order()).collect();
            (&all, &all)
        } else {
            (self.basis(), self.basis())
        };
        for &x in xs {
            for &y in ys {
                let xy = self.mul(x, y);
                for &z in ys {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some(format!(
                            "associativity fails for x={} y={} z={}",
                            self.format_element(x),
                            self.format_element(y),
                            self.format_element(z)
                        ));
                    }
                    let yz = self.add(y, z);
                    if self.mul(x, yz) != self.add(xy, self.mul(x, z))
                        || self.mul(yz, x) != self.add(self.mul(y, x), self.mul(z, x))
                    {
                        return Some(format!(
                            "distributivity fails for x={} y={} z={}",
                            self.format_element(x),
                            self.format_element(y),
                            self.format_element(z)
                        ));
                    }
                }
            }
        }
        None
    }

    pub(crate) fn components_of<'a>(&'a self, x: usize) -> impl Iterator<Item = (usize, usize, usize)> + 'a {
        let n = self.size();
        (0..n * n).map(move |c| (c / n, c % n, self.local(x, c / n, c % n)))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::gamma::PathAlgebraSpec;
    use alloc::collections::BTreeMap;
    use alloc::string::ToString;
    use alloc::vec;

    pub fn zn(n: usize) -> GMRing {
        let g = FinAbGroup::make(&[n as i64]).unwrap();
        let t = (0..n * n).map(|e| (e / n) * (e % n) % n).collect();
        let s = GammaSystem::from_tables(
            vec!["1".to_string()],
            [((0, 0), g)].into_iter().collect(),
            [((0, 0, 0), t)].into_iter().collect(),
            &Limits::default(),
        )
        .unwrap();
        GMRing::assemble(s, &Limits::default()).unwrap()
    }

    pub fn zero_ring(factors: &[i64]) -> GMRing {
        let g = FinAbGroup::make(factors).unwrap();
        let t = vec![0; g.order() * g.order()];
        let s = GammaSystem::from_tables(
            vec!["1".to_string()],
            [((0, 0), g)].into_iter().collect(),
            [((0, 0, 0), t)].into_iter().collect(),
            &Limits::default(),
        )
        .unwrap();
        GMRing::assemble(s, &Limits::default()).unwrap()
    }

    pub fn matrix(dims: &[(&str, usize)], m: u32, zeros: &[(&str, &str)]) -> GMRing {
        let d: Vec<(String, usize)> = dims.iter().map(|&(l, d)| (l.to_string(), d)).collect();
        let z: Vec<(String, String)> = zeros.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect();
        let s = GammaSystem::from_matrix_homs(&d, m, &z, &Limits::default()).unwrap();
        GMRing::assemble(s, &Limits::default()).unwrap()
    }

    pub fn full2() -> GMRing {
        matrix(&[("1", 1), ("2", 1)], 2, &[])
    }

    pub fn upper2() -> GMRing {
        matrix(&[("1", 1), ("2", 1)], 2, &[("2", "1")])
    }

    pub fn path(vs: &[&str], es: &[(&str, &str)], l: usize) -> GMRing {
        let spec = PathAlgebraSpec {
            vertices: vs.iter().map(|s| s.to_string()).collect(),
            edges: es.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
            modulus: 2,
            truncation: l,
            include_trivial_paths: true,
        };
        GMRing::assemble(GammaSystem::from_digraph(&spec, &Limits::default()).unwrap(), &Limits::default()).unwrap()
    }

    /// Zero products on `Z_2` at both diagonal positions.
    pub fn split_zero() -> GMRing {
        let z2 = FinAbGroup::make(&[2]).unwrap();
        let comps = [((0, 0), z2.clone()), ((1, 1), z2)].into_iter().collect();
        let tables: BTreeMap<_, _> = [((0, 0, 0), vec![0; 4]), ((1, 1, 1), vec![0; 4])].into_iter().collect();
        let s = GammaSystem::from_tables(vec!["1".to_string(), "2".to_string()], comps, tables, &Limits::default())
            .unwrap();
        GMRing::assemble(s, &Limits::default()).unwrap()
    }

    /// `Z_2 × (zero ring on Z_2)` as a two-index system with no
    /// off-diagonal part.
    pub fn field_times_zero() -> GMRing {
        let z2 = FinAbGroup::make(&[2]).unwrap();
        let comps = [((0, 0), z2.clone()), ((1, 1), z2)].into_iter().collect();
        let tables: BTreeMap<_, _> = [((0, 0, 0), vec![0, 0, 0, 1]), ((1, 1, 1), vec![0, 0, 0, 0])]
            .into_iter()
            .collect();
        let s = GammaSystem::from_tables(
            vec!["1".to_string(), "2".to_string()],
            comps,
            tables,
            &Limits::default(),
        )
        .unwrap();
        GMRing::assemble(s, &Limits::default()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use alloc::vec;

    #[test]
    fn e12_times_e21_is_e11() {
        let r = full2();
        let x = r.parse_element("1,2:(1)").unwrap();
        let y = r.parse_element("2,1:(1)").unwrap();
        assert_eq!(r.mul(x, y), r.parse_element("1,1:(1)").unwrap());
        assert_eq!(r.mul(x, x), 0);
    }

    #[test]
    fn full2_matches_matrix_products() {
        let r = full2();
        assert_eq!(r.order(), 16);
        let mat = |x: usize| [r.local(x, 0, 0), r.local(x, 0, 1), r.local(x, 1, 0), r.local(x, 1, 1)];
        for x in 0..16 {
            for y in 0..16 {
                let (a, b) = (mat(x), mat(y));
                let p = [
                    (a[0] * b[0] + a[1] * b[2]) % 2,
                    (a[0] * b[1] + a[1] * b[3]) % 2,
                    (a[2] * b[0] + a[3] * b[2]) % 2,
                    (a[2] * b[1] + a[3] * b[3]) % 2,
                ];
                assert_eq!(mat(r.mul(x, y)), p);
            }
        }
    }

    #[test]
    fn single_index_ring_reproduces_table() {
        let r = zn(6);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(r.mul(x, y), x * y % 6);
            }
        }
    }

    #[test]
    fn self_test_passes_on_fixtures() {
        let l = Limits::default();
        for r in [zn(4), zn(12), full2(), upper2(), zero_ring(&[2, 2]), path(&["1", "2"], &[("1", "2"), ("2", "1")], 2)] {
            assert_eq!(r.self_test(&l), None);
        }
    }

    #[test]
    fn assemble_rejects_broken_system() {
        let s = zn(4).system().with_entry(0, 0, 0, 1, 1, 2).unwrap();
        assert!(matches!(GMRing::assemble(s, &Limits::default()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn element_text_roundtrip() {
        let r = path(&["1", "2"], &[("1", "2")], 1);
        for x in 0..r.order() {
            assert_eq!(r.parse_element(&r.format_element(x)).unwrap(), x);
            assert_eq!(r.index_of(&r.element(x)).unwrap(), x);
        }
        assert!(r.parse_element("1,3:(1)").is_err());
        assert!(r.parse_element("1,2:(2)").is_err());
        let e = GMElement::single(0, 1, GroupElement(vec![1]));
        assert_eq!(r.format_element(r.index_of(&e).unwrap()), "1,2:(1)");
    }

    #[test]
    fn large_rings_skip_table() {
        let r = matrix(&[("1", 1), ("2", 1)], 3, &[]);
        assert_eq!(r.order(), 81);
        let big = matrix(&[("1", 2), ("2", 1)], 2, &[]);
        assert_eq!(big.order(), 512);
        let l = Limits::default();
        assert_eq!(big.self_test(&l), None);
    }
}
