//! Γ_I-systems: an `I`-indexed family of abelian groups `A_ij` with products
//! `μ_ijk : A_ij × A_jk → A_ik` that are biadditive and associative across
//! indices.
//!
//! Products are stored as full tables over element indices so that
//! deliberately broken systems can be represented and diagnosed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::{FinAbGroup, GroupElement};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSystem {
    labels: Vec<String>,
    comps: Vec<FinAbGroup>,
    tables: Vec<Vec<u32>>,
}

/// Data for a truncated path algebra over `Z_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebraSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub modulus: u32,
    pub truncation: usize,
    pub include_trivial_paths: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `(x+y)z = xz + yz`
    LeftAdditive,
    /// `w(x+y) = wx + wy`
    RightAdditive,
    /// `w(xz) = (wx)z`
    Associative,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::LeftAdditive => "left-additive",
            Axiom::RightAdditive => "right-additive",
            Axiom::Associative => "associative",
        }
    }
}

/// One failing instance of an axiom. `indices` are label positions and
/// `elements` are element indices in the groups the axiom quantifies over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub elements: Vec<GroupElement>,
    pub lhs: GroupElement,
    pub rhs: GroupElement,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// First violations in canonical order, at most [`AxiomReport::MAX_WITNESSES`].
    pub violations: Vec<AxiomViolation>,
    /// Total number of violated instances found.
    pub total_violations: usize,
    pub instances_checked: u64,
}

impl AxiomReport {
    pub const MAX_WITNESSES: usize = 64;

    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    fn record(&mut self, v: AxiomViolation) {
        self.total_violations += 1;
        if self.violations.len() < Self::MAX_WITNESSES {
            self.violations.push(v);
        }
    }
}

impl GammaSystem {
    pub(crate) fn from_parts(labels: Vec<String>, comps: Vec<FinAbGroup>, tables: Vec<Vec<u32>>) -> Self {
        let n = labels.len();
        debug_assert_eq!(comps.len(), n * n);
        debug_assert_eq!(tables.len(), n * n * n);
        GammaSystem {
            labels,
            comps,
            tables,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn component(&self, i: usize, j: usize) -> &FinAbGroup {
        &self.comps[i * self.size() + j]
    }

    pub fn components(&self) -> &[FinAbGroup] {
        &self.comps
    }

    /// Product table for `A_ij × A_jk → A_ik`, row-major in the left factor.
    pub fn table(&self, i: usize, j: usize, k: usize) -> &[u32] {
        let n = self.size();
        &self.tables[(i * n + j) * n + k]
    }

    /// `μ_ijk(x, z)` on element indices.
    #[inline]
    pub fn mul(&self, i: usize, j: usize, k: usize, x: usize, z: usize) -> usize {
        let n = self.size();
        let cols = self.comps[j * n + k].order();
        self.tables[(i * n + j) * n + k][x * cols + z] as usize
    }

    /// Sum of component orders' logarithms is awkward; this is the order of
    /// the assembled ring, or `None` on overflow.
    pub fn total_order(&self) -> Option<usize> {
        self.comps
            .iter()
            .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
    }

    /// Explicit Γ_I-system. Missing components are trivial; a missing table is
    /// accepted only when it is forced to be zero. No axioms are checked.
    pub fn from_tables(
        index_set: Vec<String>,
        components: BTreeMap<(usize, usize), FinAbGroup>,
        tables: BTreeMap<(usize, usize, usize), Vec<usize>>,
        limits: &Limits,
    ) -> Result<Self> {
        let n = index_set.len();
        if n == 0 {
            return Err(Error::invalid("index set is empty"));
        }
        check_distinct(&index_set)?;
        let mut comps = vec![FinAbGroup::trivial(); n * n];
        for ((i, j), g) in components {
            if i >= n || j >= n {
                return Err(Error::invalid(format!("component ({i},{j}) outside index set")));
            }
            comps[i * n + j] = g;
        }
        let mut out = vec![Vec::new(); n * n * n];
        let mut given = tables;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (&comps[i * n + j], &comps[j * n + k], &comps[i * n + k]);
                    let len = a.order() * b.order();
                    Error::check_cap("product table", len, limits.max_table)?;
                    let t = match given.remove(&(i, j, k)) {
                        Some(t) => t,
                        None if a.is_trivial() || b.is_trivial() || c.is_trivial() => vec![0; len],
                        None => {
                            return Err(Error::invalid(format!(
                                "missing product table ({},{},{})",
                                index_set[i], index_set[j], index_set[k]
                            )))
                        }
                    };
                    if t.len() != len {
                        return Err(Error::invalid(format!(
                            "product table ({},{},{}) has {} entries, expected {len}",
                            index_set[i],
                            index_set[j],
                            index_set[k],
                            t.len()
                        )));
                    }
                    if let Some(&bad) = t.iter().find(|&&e| e >= c.order()) {
                        return Err(Error::invalid(format!(
                            "product table ({},{},{}) entry {bad} outside component of order {}",
                            index_set[i],
                            index_set[j],
                            index_set[k],
                            c.order()
                        )));
                    }
                    out[(i * n + j) * n + k] = t.into_iter().map(|e| e as u32).collect();
                }
            }
        }
        if let Some(&(i, j, k)) = given.keys().next() {
            return Err(Error::invalid(format!("product table ({i},{j},{k}) outside index set")));
        }
        Ok(GammaSystem::from_parts(index_set, comps, out))
    }

    /// Small additive category whose objects are free `Z_m`-modules of the
    /// given ranks: `A_ij` is the group of `d_i × d_j` matrices, the product is
    /// matrix multiplication, and blocks listed in `zero_blocks` are replaced
    /// by the trivial group.
    pub fn from_matrix_homs(
        dims: &[(String, usize)],
        modulus: u32,
        zero_blocks: &[(String, String)],
        limits: &Limits,
    ) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::invalid(format!("modulus {modulus} must be at least 2")));
        }
        if dims.is_empty() {
            return Err(Error::invalid("no objects given"));
        }
        let labels: Vec<String> = dims.iter().map(|(l, _)| l.clone()).collect();
        check_distinct(&labels)?;
        let n = labels.len();
        let d: Vec<usize> = dims.iter().map(|&(_, d)| d).collect();
        if let Some((l, _)) = dims.iter().find(|(_, d)| *d == 0) {
            return Err(Error::invalid(format!("object {l} has dimension 0")));
        }
        let mut zero = vec![false; n * n];
        for (a, b) in zero_blocks {
            let i = position(&labels, a)?;
            let j = position(&labels, b)?;
            zero[i * n + j] = true;
        }
        for i in 0..n {
            for k in 0..n {
                if !zero[i * n + k] {
                    continue;
                }
                if let Some(j) = (0..n).find(|&j| !zero[i * n + j] && !zero[j * n + k]) {
                    return Err(Error::invalid(format!(
                        "zero block mask breaks associativity at ({},{},{}): ({},{})·({},{}) lands in zeroed ({},{})",
                        labels[i], labels[j], labels[k], labels[i], labels[j], labels[j], labels[k], labels[i], labels[k]
                    )));
                }
            }
        }
        let mut comps = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if zero[i * n + j] {
                    comps.push(FinAbGroup::trivial());
                } else {
                    let f = vec![modulus as i64; d[i] * d[j]];
                    comps.push(FinAbGroup::with_cap(&f, limits.max_order)?);
                }
            }
        }
        let m = modulus as u64;
        let mut tables = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (&comps[i * n + j], &comps[j * n + k], &comps[i * n + k]);
                    let len = a.order() * b.order();
                    Error::check_cap("product table", len, limits.max_table)?;
                    if a.is_trivial() || b.is_trivial() {
                        tables.push(vec![0; len]);
                        continue;
                    }
                    let (di, dj, dk) = (d[i], d[j], d[k]);
                    let bs: Vec<Vec<u32>> = (0..b.order()).map(|z| b.coords(z)).collect();
                    let mut t = Vec::with_capacity(len);
                    let mut prod = vec![0u32; di * dk];
                    for x in 0..a.order() {
                        let xs = a.coords(x);
                        for zs in &bs {
                            for r in 0..di {
                                for s in 0..dk {
                                    let acc: u64 = (0..dj)
                                        .map(|q| xs[r * dj + q] as u64 * zs[q * dk + s] as u64)
                                        .sum();
                                    prod[r * dk + s] = (acc % m) as u32;
                                }
                            }
                            t.push(c.index(&prod).expect("matrix product in range") as u32);
                        }
                    }
                    tables.push(t);
                }
            }
        }
        Ok(GammaSystem::from_parts(labels, comps, tables))
    }

    /// Truncated path algebra of a simple digraph with coefficients in `Z_m`.
    ///
    /// `A_ij` is free on the walks from `i` to `j` with between 1 and `L`
    /// edges (plus the length-0 path at `i` when `i = j` and trivial paths
    /// are enabled). Basis order: trivial path first, then by length, then
    /// lexicographically by vertex sequence. Concatenations longer than `L`
    /// vanish.
    pub fn from_digraph(spec: &PathAlgebraSpec, limits: &Limits) -> Result<Self> {
        if spec.modulus < 2 {
            return Err(Error::invalid(format!("modulus {} must be at least 2", spec.modulus)));
        }
        if spec.truncation < 1 {
            return Err(Error::invalid("truncation length must be at least 1"));
        }
        if spec.vertices.is_empty() {
            return Err(Error::invalid("digraph has no vertices"));
        }
        check_distinct(&spec.vertices)?;
        let n = spec.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for (e, (a, b)) in spec.edges.iter().enumerate() {
            let i = spec
                .vertices
                .iter()
                .position(|v| v == a)
                .ok_or_else(|| Error::invalid(format!("edge {e} references undeclared vertex {a}")))?;
            let j = spec
                .vertices
                .iter()
                .position(|v| v == b)
                .ok_or_else(|| Error::invalid(format!("edge {e} references undeclared vertex {b}")))?;
            if adj[i].contains(&j) {
                return Err(Error::invalid(format!("edge {e} ({a},{b}) is a duplicate")));
            }
            adj[i].push(j);
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
        }

        let mut basis: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n * n];
        let mut walks: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        if spec.include_trivial_paths {
            for v in 0..n {
                basis[v * n + v].push(vec![v]);
            }
        }
        for _ in 0..spec.truncation {
            let mut next = Vec::new();
            for w in &walks {
                let last = *w.last().unwrap();
                for &t in &adj[last] {
                    let mut p = w.clone();
                    p.push(t);
                    next.push(p);
                }
            }
            next.sort();
            for p in &next {
                basis[p[0] * n + *p.last().unwrap()].push(p.clone());
            }
            walks = next;
            let total: usize = basis.iter().map(Vec::len).max().unwrap_or(0);
            // cheap early exit before the groups are built
            if total > 64 {
                return Err(Error::ResourceLimit {
                    what: "path component basis",
                    size: total,
                    cap: 64,
                });
            }
        }
        let mut lookup: BTreeMap<&[usize], usize> = BTreeMap::new();
        for comp in &basis {
            for (pos, p) in comp.iter().enumerate() {
                lookup.insert(p.as_slice(), pos);
            }
        }
        let m = spec.modulus;
        let mut comps = Vec::with_capacity(n * n);
        for b in &basis {
            let f = vec![m as i64; b.len()];
            comps.push(FinAbGroup::with_cap(&f, limits.max_order)?);
        }
        let mut tables = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (&comps[i * n + j], &comps[j * n + k], &comps[i * n + k]);
                    let len = a.order() * b.order();
                    Error::check_cap("product table", len, limits.max_table)?;
                    let (pa, pb) = (&basis[i * n + j], &basis[j * n + k]);
                    let prod: Vec<Vec<Option<usize>>> = pa
                        .iter()
                        .map(|p| {
                            pb.iter()
                                .map(|q| {
                                    let cat = concat_paths(p, q);
                                    if cat.len() - 1 > spec.truncation {
                                        None
                                    } else {
                                        lookup.get(cat.as_slice()).copied()
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    let bs: Vec<Vec<u32>> = (0..b.order()).map(|z| b.coords(z)).collect();
                    let mut t = Vec::with_capacity(len);
                    let mut acc = vec![0u32; pa.len().max(c.rank())];
                    for x in 0..a.order() {
                        let xs = a.coords(x);
                        for zs in &bs {
                            acc.iter_mut().for_each(|v| *v = 0);
                            for (s, &cs) in xs.iter().enumerate() {
                                if cs == 0 {
                                    continue;
                                }
                                for (u, &ct) in zs.iter().enumerate() {
                                    if let (true, Some(w)) = (ct != 0, prod[s][u]) {
                                        acc[w] = (acc[w] + cs * ct) % m;
                                    }
                                }
                            }
                            t.push(c.index(&acc[..c.rank()]).expect("path product in range") as u32);
                        }
                    }
                    tables.push(t);
                }
            }
        }
        Ok(GammaSystem::from_parts(spec.vertices.clone(), comps, tables))
    }

    /// Basis paths of a digraph-built component, in coordinate order.
    pub fn path_basis(spec: &PathAlgebraSpec, i: usize, j: usize) -> Vec<Vec<usize>> {
        // Rebuilt on demand for reporting; mirrors the enumeration above.
        let n = spec.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in &spec.edges {
            if let (Some(x), Some(y)) = (
                spec.vertices.iter().position(|v| v == a),
                spec.vertices.iter().position(|v| v == b),
            ) {
                adj[x].push(y);
            }
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
        }
        let mut out = Vec::new();
        if spec.include_trivial_paths && i == j {
            out.push(vec![i]);
        }
        let mut walks: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for _ in 0..spec.truncation {
            let mut next = Vec::new();
            for w in &walks {
                for &t in &adj[*w.last().unwrap()] {
                    let mut p = w.clone();
                    p.push(t);
                    next.push(p);
                }
            }
            next.sort();
            out.extend(next.iter().filter(|p| p[0] == i && *p.last().unwrap() == j).cloned());
            walks = next;
        }
        out
    }

    /// Decides both Γ_I-system axioms.
    ///
    /// Additivity in each argument is tested for every element pair against
    /// the group generators and zero, which is equivalent to full additivity.
    /// Associativity is tested on generator triples, which is complete for
    /// biadditive products, and additionally on every element triple when the
    /// triple count is at most 4096.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size();
        let mut rep = AxiomReport::default();
        let gens: Vec<Vec<usize>> = self
            .comps
            .iter()
            .map(|g| {
                let mut v = alloc::vec![0];
                v.extend(g.generators());
                v
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.component(i, j), self.component(j, k), self.component(i, k));
                    for x in 0..a.order() {
                        for &y in &gens[i * n + j] {
                            let xy = a.add(x, y);
                            for z in 0..b.order() {
                                rep.instances_checked += 1;
                                let lhs = self.mul(i, j, k, xy, z);
                                let rhs = c.add(self.mul(i, j, k, x, z), self.mul(i, j, k, y, z));
                                if lhs != rhs {
                                    rep.record(AxiomViolation {
                                        axiom: Axiom::LeftAdditive,
                                        indices: vec![i, j, k],
                                        elements: vec![a.element(x), a.element(y), b.element(z)],
                                        lhs: c.element(lhs),
                                        rhs: c.element(rhs),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        // w ∈ A_li, x, y ∈ A_ij
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let (w_g, a, c) = (self.component(l, i), self.component(i, j), self.component(l, j));
                    for w in 0..w_g.order() {
                        for x in 0..a.order() {
                            for &y in &gens[i * n + j] {
                                rep.instances_checked += 1;
                                let lhs = self.mul(l, i, j, w, a.add(x, y));
                                let rhs = c.add(self.mul(l, i, j, w, x), self.mul(l, i, j, w, y));
                                if lhs != rhs {
                                    rep.record(AxiomViolation {
                                        axiom: Axiom::RightAdditive,
                                        indices: vec![l, i, j],
                                        elements: vec![w_g.element(w), a.element(x), a.element(y)],
                                        lhs: c.element(lhs),
                                        rhs: c.element(rhs),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        // w ∈ A_li, x ∈ A_ij, z ∈ A_jk
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (gw, gx, gz) = (self.component(l, i), self.component(i, j), self.component(j, k));
                        let target = self.component(l, k);
                        let triples = gw.order() * gx.order() * gz.order();
                        let all = |g: &FinAbGroup| (0..g.order()).collect::<Vec<_>>();
                        let (ws, xs, zs) = if triples <= 4096 {
                            (all(gw), all(gx), all(gz))
                        } else {
                            (gw.generators(), gx.generators(), gz.generators())
                        };
                        for &w in &ws {
                            for &x in &xs {
                                for &z in &zs {
                                    rep.instances_checked += 1;
                                    let lhs = self.mul(l, i, k, w, self.mul(i, j, k, x, z));
                                    let rhs = self.mul(l, j, k, self.mul(l, i, j, w, x), z);
                                    if lhs != rhs {
                                        rep.record(AxiomViolation {
                                            axiom: Axiom::Associative,
                                            indices: vec![l, i, j, k],
                                            elements: vec![gw.element(w), gx.element(x), gz.element(z)],
                                            lhs: target.element(lhs),
                                            rhs: target.element(rhs),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    /// Returns a copy with one table entry replaced (for negative tests and
    /// corrupted-table fixtures).
    pub fn with_entry(&self, i: usize, j: usize, k: usize, x: usize, z: usize, value: usize) -> Result<Self> {
        let n = self.size();
        let cols = self.component(j, k).order();
        if x >= self.component(i, j).order() || z >= cols || value >= self.component(i, k).order() {
            return Err(Error::invalid("table coordinates out of range"));
        }
        let mut out = self.clone();
        out.tables[(i * n + j) * n + k][x * cols + z] = value as u32;
        Ok(out)
    }

    /// Reads a violation's index tuple back as labels.
    pub fn describe_violation(&self, v: &AxiomViolation) -> String {
        let idx: Vec<&str> = v.indices.iter().map(|&i| self.labels[i].as_str()).collect();
        let els: Vec<String> = v.elements.iter().map(|e| format!("{e}")).collect();
        format!(
            "{} at ({}): elements [{}]: lhs {} != rhs {}",
            v.axiom.name(),
            idx.join(","),
            els.join(", "),
            v.lhs,
            v.rhs
        )
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: ", self.axiom.name(), self.indices)?;
        for e in &self.elements {
            write!(f, "{e} ")?;
        }
        write!(f, "lhs {} rhs {}", self.lhs, self.rhs)
    }
}

fn concat_paths(p: &[usize], q: &[usize]) -> Vec<usize> {
    let mut out = p.to_vec();
    out.extend_from_slice(&q[1..]);
    out
}

fn check_distinct(labels: &[String]) -> Result<()> {
    for (k, l) in labels.iter().enumerate() {
        if labels[..k].contains(l) {
            return Err(Error::invalid(format!("duplicate label {l}")));
        }
        if l.is_empty() || l.contains([',', ':', '(', ')']) {
            return Err(Error::invalid(format!("label {l:?} must be nonempty and free of ',:()'")));
        }
    }
    Ok(())
}

fn position(labels: &[String], l: &str) -> Result<usize> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| Error::invalid(format!("undeclared label {l}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn dims(ds: &[(&str, usize)]) -> Vec<(String, usize)> {
        ds.iter().map(|&(l, d)| (l.to_string(), d)).collect()
    }

    pub(crate) fn zn_ring(n: usize) -> GammaSystem {
        let g = FinAbGroup::make(&[n as i64]).unwrap();
        let t = (0..n * n).map(|e| (e / n) * (e % n) % n).collect();
        GammaSystem::from_tables(
            labels(&["1"]),
            [((0, 0), g)].into_iter().collect(),
            [((0, 0, 0), t)].into_iter().collect(),
            &Limits::default(),
        )
        .unwrap()
    }

    #[test]
    fn full_two_by_two_mod_two_passes() {
        let s = GammaSystem::from_matrix_homs(&dims(&[("1", 1), ("2", 1)]), 2, &[], &Limits::default()).unwrap();
        assert!(s.components().iter().all(|g| g.order() == 2));
        assert!(s.check_axioms().passed());
    }

    #[test]
    fn modular_ring_passes() {
        assert!(zn_ring(4).check_axioms().passed());
    }

    #[test]
    fn perturbed_entry_is_located() {
        let s = zn_ring(4);
        // 1·1 = 1 becomes 2
        let bad = s.with_entry(0, 0, 0, 1, 1, 2).unwrap();
        let rep = bad.check_axioms();
        assert!(!rep.passed());
        assert!(rep.total_violations >= 1);
        let w = &rep.violations[0];
        assert_eq!(w.indices, vec![0, 0, 0]);
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn upper_triangular_mask() {
        let l = Limits::default();
        let s = GammaSystem::from_matrix_homs(
            &dims(&[("1", 1), ("2", 1)]),
            2,
            &[("2".into(), "1".into())],
            &l,
        )
        .unwrap();
        assert!(s.component(1, 0).is_trivial());
        assert!(s.check_axioms().passed());
        // the same system written out by hand
        let z2 = FinAbGroup::make(&[2]).unwrap();
        let comps = [((0, 0), z2.clone()), ((0, 1), z2.clone()), ((1, 1), z2.clone())]
            .into_iter()
            .collect();
        let and = alloc::vec![0, 0, 0, 1];
        let tables = [
            ((0, 0, 0), and.clone()),
            ((0, 0, 1), and.clone()),
            ((0, 1, 1), and.clone()),
            ((1, 1, 1), and.clone()),
        ]
        .into_iter()
        .collect();
        let t = GammaSystem::from_tables(labels(&["1", "2"]), comps, tables, &l).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn inconsistent_mask_rejected() {
        let err = GammaSystem::from_matrix_homs(
            &dims(&[("1", 1), ("2", 1)]),
            2,
            &[("1".into(), "1".into())],
            &Limits::default(),
        );
        assert!(matches!(err, Err(Error::InvalidInput(m)) if m.contains("(1,2,1)")));
    }

    #[test]
    fn one_object_is_zm() {
        let s = GammaSystem::from_matrix_homs(&dims(&[("1", 1)]), 5, &[], &Limits::default()).unwrap();
        assert_eq!(s.component(0, 0).factors(), &[5]);
        assert_eq!(s, zn_ring(5));
    }

    #[test]
    fn single_object_dim_d_is_full_matrix_ring() {
        let s = GammaSystem::from_matrix_homs(&dims(&[("1", 2)]), 2, &[], &Limits::default()).unwrap();
        let g = s.component(0, 0);
        assert_eq!(g.order(), 16);
        // compare against direct 2x2 products over Z_2
        for x in 0..16 {
            for z in 0..16 {
                let a = g.coords(x);
                let b = g.coords(z);
                let p = [
                    (a[0] * b[0] + a[1] * b[2]) % 2,
                    (a[0] * b[1] + a[1] * b[3]) % 2,
                    (a[2] * b[0] + a[3] * b[2]) % 2,
                    (a[2] * b[1] + a[3] * b[3]) % 2,
                ];
                assert_eq!(s.mul(0, 0, 0, x, z), g.index(&p).unwrap());
            }
        }
    }

    fn path_spec(vs: &[&str], es: &[(&str, &str)], l: usize, trivial: bool) -> PathAlgebraSpec {
        PathAlgebraSpec {
            vertices: labels(vs),
            edges: es.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
            modulus: 2,
            truncation: l,
            include_trivial_paths: trivial,
        }
    }

    #[test]
    fn path_concatenation() {
        let spec = path_spec(&["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("3", "4")], 2, true);
        let s = GammaSystem::from_digraph(&spec, &Limits::default()).unwrap();
        assert!(s.check_axioms().passed());
        let b12 = GammaSystem::path_basis(&spec, 0, 1);
        let b23 = GammaSystem::path_basis(&spec, 1, 2);
        let b13 = GammaSystem::path_basis(&spec, 0, 2);
        assert_eq!(b12, vec![vec![0, 1]]);
        assert_eq!(b13, vec![vec![0, 1, 2]]);
        let (x, z) = (s.component(0, 1).unit(0), s.component(1, 2).unit(0));
        assert_eq!(s.mul(0, 1, 2, x, z), s.component(0, 2).unit(0));
        assert_eq!(b23.len(), 1);
        // (1,2,3)·(3,4) has three edges > L = 2
        let (x, z) = (s.component(0, 2).unit(0), s.component(2, 3).unit(0));
        assert_eq!(s.mul(0, 2, 3, x, z), 0);
        // e_1·(1,2) = (1,2)
        let e1 = s.component(0, 0).unit(0);
        assert_eq!(GammaSystem::path_basis(&spec, 0, 0), vec![vec![0]]);
        let p12 = s.component(0, 1).unit(0);
        assert_eq!(s.mul(0, 0, 1, e1, p12), p12);
    }

    #[test]
    fn truncation_is_a_quotient() {
        // L' = 3 reduced mod paths longer than 2 agrees with L = 2 on
        // the shared basis paths
        let vs = ["1", "2", "3"];
        let es = [("1", "2"), ("2", "3"), ("3", "1"), ("1", "1")];
        let lo = path_spec(&vs, &es, 2, true);
        let hi = path_spec(&vs, &es, 3, true);
        let l = Limits::default();
        let s_lo = GammaSystem::from_digraph(&lo, &l).unwrap();
        let s_hi = GammaSystem::from_digraph(&hi, &l).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (bij, bjk, bik) = (
                        GammaSystem::path_basis(&lo, i, j),
                        GammaSystem::path_basis(&lo, j, k),
                        GammaSystem::path_basis(&lo, i, k),
                    );
                    let (hij, hjk, hik) = (
                        GammaSystem::path_basis(&hi, i, j),
                        GammaSystem::path_basis(&hi, j, k),
                        GammaSystem::path_basis(&hi, i, k),
                    );
                    for (s, p) in bij.iter().enumerate() {
                        for (t, q) in bjk.iter().enumerate() {
                            let x = s_lo.component(i, j).unit(s);
                            let z = s_lo.component(j, k).unit(t);
                            let got = s_lo.component(i, k).coords(s_lo.mul(i, j, k, x, z));
                            let hp = hij.iter().position(|h| h == p).unwrap();
                            let hq = hjk.iter().position(|h| h == q).unwrap();
                            let xh = s_hi.component(i, j).unit(hp);
                            let zh = s_hi.component(j, k).unit(hq);
                            let full = s_hi.component(i, k).coords(s_hi.mul(i, j, k, xh, zh));
                            let reduced: Vec<u32> = bik
                                .iter()
                                .map(|b| full[hik.iter().position(|h| h == b).unwrap()])
                                .collect();
                            assert_eq!(got, reduced);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn digraph_errors() {
        let l = Limits::default();
        let bad = path_spec(&["1", "2"], &[("1", "3")], 1, true);
        assert!(matches!(GammaSystem::from_digraph(&bad, &l), Err(Error::InvalidInput(m)) if m.contains("edge 0")));
        let dup = path_spec(&["1", "2"], &[("1", "2"), ("1", "2")], 1, true);
        assert!(GammaSystem::from_digraph(&dup, &l).is_err());
        let loops = path_spec(&["1"], &[("1", "1")], 2, false);
        let s = GammaSystem::from_digraph(&loops, &l).unwrap();
        assert_eq!(s.component(0, 0).order(), 4);
        assert!(s.check_axioms().passed());
    }

    #[test]
    fn table_validation() {
        let g = FinAbGroup::make(&[2]).unwrap();
        let err = GammaSystem::from_tables(
            labels(&["1"]),
            [((0, 0), g.clone())].into_iter().collect(),
            [((0, 0, 0), alloc::vec![0, 0, 0, 2])].into_iter().collect(),
            &Limits::default(),
        );
        assert!(matches!(err, Err(Error::InvalidInput(_))));
        let err = GammaSystem::from_tables(
            labels(&["1"]),
            [((0, 0), g)].into_iter().collect(),
            BTreeMap::new(),
            &Limits::default(),
        );
        assert!(matches!(err, Err(Error::InvalidInput(m)) if m.contains("missing")));
    }
}
