//! The m-step graph: `x → x·u·x` for multipliers `u`, and the
//! persistence analysis that decides m-nilpotency.
//!
//! On a finite carrier every m-sequence from `x` eventually hits zero iff no
//! walk from `x` through nonzero nodes reaches a cycle of nonzero nodes.
//! Nonzero nodes on such cycles (strongly connected components of size > 1,
//! or self-loops) are *persistent*.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{FinAbGroup, SpanBuilder};
use crate::error::{Error, Result};
use crate::gamma::GammaSystem;
use crate::limits::Limits;
use crate::ring::{GMIdeal, GMRing};

const NONE: u32 = u32::MAX;

/// Where m-sequences live and which multipliers they may use.
#[derive(Clone, Debug)]
pub enum MultiplierSet {
    /// Carrier and multipliers are the whole ring.
    WholeRing(GMRing),
    /// Carrier and multipliers are an ideal `N` (the ring `N` in its own right).
    Ideal(GMRing, GMIdeal),
    /// Carrier `A_ij`, multipliers `A_ji`, products through `μ_iji`, `μ_iij`.
    Component(GammaSystem, usize, usize),
}

impl MultiplierSet {
    pub fn carrier_group(&self) -> &FinAbGroup {
        match self {
            MultiplierSet::WholeRing(r) | MultiplierSet::Ideal(r, _) => r.group(),
            MultiplierSet::Component(s, i, j) => s.component(*i, *j),
        }
    }

    pub fn nodes(&self) -> Vec<usize> {
        match self {
            MultiplierSet::WholeRing(r) => (0..r.order()).collect(),
            MultiplierSet::Ideal(_, n) => n.members().to_vec(),
            MultiplierSet::Component(s, i, j) => (0..s.component(*i, *j).order()).collect(),
        }
    }

    pub fn multipliers(&self) -> Vec<usize> {
        match self {
            MultiplierSet::WholeRing(r) => (0..r.order()).collect(),
            MultiplierSet::Ideal(_, n) => n.members().to_vec(),
            MultiplierSet::Component(s, i, j) => (0..s.component(*j, *i).order()).collect(),
        }
    }

    fn multiplier_gens(&self) -> Vec<usize> {
        match self {
            MultiplierSet::WholeRing(r) => r.basis().to_vec(),
            MultiplierSet::Ideal(_, n) => n.subgroup().generators().to_vec(),
            MultiplierSet::Component(s, i, j) => s.component(*j, *i).generators(),
        }
    }

    /// `x·u·x`.
    #[inline]
    pub fn step(&self, x: usize, u: usize) -> usize {
        match self {
            MultiplierSet::WholeRing(r) | MultiplierSet::Ideal(r, _) => r.mul(r.mul(x, u), x),
            MultiplierSet::Component(s, i, j) => {
                let xu = s.mul(*i, *j, *i, x, u);
                s.mul(*i, *i, *j, xu, x)
            }
        }
    }

    pub fn format(&self, x: usize) -> String {
        match self {
            MultiplierSet::WholeRing(r) | MultiplierSet::Ideal(r, _) => r.format_element(x),
            MultiplierSet::Component(s, i, j) => format!("{}", s.component(*i, *j).element(x)),
        }
    }

    pub fn format_multiplier(&self, u: usize) -> String {
        match self {
            MultiplierSet::WholeRing(r) | MultiplierSet::Ideal(r, _) => r.format_element(u),
            MultiplierSet::Component(s, i, j) => format!("{}", s.component(*j, *i).element(u)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MultiplierSet::WholeRing(_) => String::from("A"),
            MultiplierSet::Ideal(_, n) => format!("ideal of order {}", n.order()),
            MultiplierSet::Component(s, i, j) => {
                let l = s.labels();
                format!("A_({},{}) over A_({},{})", l[*i], l[*j], l[*j], l[*i])
            }
        }
    }
}

/// One step of a certificate: `element` followed by multiplier `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub element: usize,
    pub multiplier: usize,
}

/// Why an element is or is not m-nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every walk dies: the set of nodes reachable through nonzero nodes.
    Exhausted { reachable: Vec<usize> },
    /// An eventually periodic m-sequence of nonzero elements.
    Cycle { prefix: Vec<Step>, cycle: Vec<Step> },
}

#[derive(Clone, Debug)]
pub struct MStepGraph {
    set: MultiplierSet,
    nodes: Vec<usize>,
    /// carrier element → node position
    position: Vec<u32>,
    succ: Vec<Vec<u32>>,
    persistent: Vec<bool>,
    /// Can reach a persistent node through nonzero nodes.
    doomed: Vec<bool>,
}

impl MStepGraph {
    /// Builds the graph and its persistence analysis.
    ///
    /// `u ↦ x·u·x` is additive, so the successor set of `x` is the subgroup
    /// spanned by the images of the multiplier generators.
    pub fn build(set: MultiplierSet, limits: &Limits) -> Result<Self> {
        let group = set.carrier_group().clone();
        let nodes = set.nodes();
        Error::check_cap("m-step graph carrier", nodes.len(), limits.max_radical)?;
        if let MultiplierSet::Component(s, i, j) = &set {
            Error::check_cap("m-step graph multipliers", s.component(*j, *i).order(), limits.max_radical)?;
        }
        let mut position = vec![NONE; group.order()];
        for (p, &x) in nodes.iter().enumerate() {
            position[x] = p as u32;
        }
        let gens = set.multiplier_gens();
        let mut succ = Vec::with_capacity(nodes.len());
        for &x in &nodes {
            let mut b = SpanBuilder::new(&group);
            for &g in &gens {
                b.add_generator(set.step(x, g));
            }
            let span = b.finish();
            let mut out = Vec::with_capacity(span.order());
            for &y in span.members() {
                let p = position[y];
                if p == NONE {
                    return Err(Error::Violation(format!(
                        "m-step {} -> {} leaves the carrier",
                        set.format(x),
                        set.format(y)
                    )));
                }
                out.push(p);
            }
            succ.push(out);
        }
        let zero = position[0] as usize;
        let persistent = persistent_nodes(&succ, zero);
        let doomed = reaches(&succ, zero, &persistent);
        Ok(MStepGraph {
            set,
            nodes,
            position,
            succ,
            persistent,
            doomed,
        })
    }

    pub fn multiplier_set(&self) -> &MultiplierSet {
        &self.set
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Successors of a carrier element, as carrier elements.
    pub fn successors(&self, x: usize) -> Vec<usize> {
        let p = self.position[x] as usize;
        self.succ[p].iter().map(|&q| self.nodes[q as usize]).collect()
    }

    pub fn persistent_count(&self) -> usize {
        self.persistent.iter().filter(|&&p| p).count()
    }

    pub fn is_persistent(&self, x: usize) -> bool {
        self.persistent[self.position[x] as usize]
    }

    /// m-nilpotent carrier elements, sorted.
    pub fn nilpotent_elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.nodes.len())
            .filter(|&p| !self.doomed[p])
            .map(|p| self.nodes[p])
            .collect();
        v.sort_unstable();
        v
    }

    pub fn is_nilpotent(&self, x: usize) -> Result<bool> {
        match self.position.get(x) {
            Some(&p) if p != NONE => Ok(!self.doomed[p as usize]),
            _ => Err(Error::invalid("element is not in the carrier")),
        }
    }

    fn multiplier_for(&self, x: usize, y: usize) -> usize {
        self.set
            .multipliers()
            .into_iter()
            .find(|&u| self.set.step(x, u) == y)
            .expect("every edge is realised by some multiplier")
    }

    /// Decision plus certificate.
    pub fn certify(&self, x: usize) -> Result<(bool, Certificate)> {
        let nil = self.is_nilpotent(x)?;
        let start = self.position[x] as usize;
        let zero = self.position[0] as usize;
        // BFS through nonzero nodes
        let mut parent = vec![NONE; self.nodes.len()];
        let mut seen = vec![false; self.nodes.len()];
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        let mut hit = None;
        while head < order.len() {
            let p = order[head];
            head += 1;
            if p == zero {
                continue;
            }
            if !nil && self.persistent[p] {
                hit = Some(p);
                break;
            }
            for &q in &self.succ[p] {
                let q = q as usize;
                if !seen[q] {
                    seen[q] = true;
                    parent[q] = p as u32;
                    order.push(q);
                }
            }
        }
        if nil {
            let mut reachable: Vec<usize> = order.iter().map(|&p| self.nodes[p]).collect();
            reachable.sort_unstable();
            return Ok((true, Certificate::Exhausted { reachable }));
        }
        let target = hit.expect("doomed nodes reach a persistent node");
        let mut path = vec![target];
        while path[path.len() - 1] != start {
            path.push(parent[*path.last().unwrap()] as usize);
        }
        path.reverse();
        let cycle = self.cycle_through(target, zero);
        let mut prefix = Vec::new();
        for w in path.windows(2) {
            let (a, b) = (self.nodes[w[0]], self.nodes[w[1]]);
            prefix.push(Step {
                element: a,
                multiplier: self.multiplier_for(a, b),
            });
        }
        let mut steps = Vec::new();
        for k in 0..cycle.len() {
            let (a, b) = (self.nodes[cycle[k]], self.nodes[cycle[(k + 1) % cycle.len()]]);
            steps.push(Step {
                element: a,
                multiplier: self.multiplier_for(a, b),
            });
        }
        Ok((false, Certificate::Cycle { prefix, cycle: steps }))
    }

    /// Shortest cycle of nonzero nodes through a persistent node.
    fn cycle_through(&self, p: usize, zero: usize) -> Vec<usize> {
        if self.succ[p].contains(&(p as u32)) {
            return vec![p];
        }
        let mut parent = vec![NONE; self.nodes.len()];
        let mut order = Vec::new();
        for &q in &self.succ[p] {
            let q = q as usize;
            if q != zero && parent[q] == NONE {
                parent[q] = p as u32;
                order.push(q);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let a = order[head];
            head += 1;
            for &b in &self.succ[a] {
                let b = b as usize;
                if b == p {
                    let mut cyc = vec![a];
                    while *cyc.last().unwrap() != p {
                        cyc.push(parent[*cyc.last().unwrap()] as usize);
                    }
                    cyc.reverse();
                    return cyc;
                }
                if b != zero && parent[b] == NONE {
                    parent[b] = a as u32;
                    order.push(b);
                }
            }
        }
        unreachable!("persistent node lies on a nonzero cycle")
    }

    pub fn format_certificate(&self, cert: &Certificate) -> String {
        match cert {
            Certificate::Exhausted { reachable } => {
                format!("all m-sequences vanish; {} reachable elements", reachable.len())
            }
            Certificate::Cycle { prefix, cycle } => {
                let show = |s: &Step| {
                    format!(
                        "{} --[u={}]-->",
                        self.set.format(s.element),
                        self.set.format_multiplier(s.multiplier)
                    )
                };
                let p: Vec<String> = prefix.iter().map(show).collect();
                let c: Vec<String> = cycle.iter().map(show).collect();
                format!(
                    "{}cycle [ {} ({}) ]",
                    if p.is_empty() { String::new() } else { format!("{} ", p.join(" ")) },
                    c.join(" "),
                    self.set.format(cycle[0].element)
                )
            }
        }
    }
}

/// Iterative Tarjan over the nonzero subgraph; marks nodes on nonzero cycles.
fn persistent_nodes(succ: &[Vec<u32>], zero: usize) -> Vec<bool> {
    let n = succ.len();
    let mut index = vec![NONE; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut persistent = vec![false; n];
    let mut counter = 0u32;
    // (node, next edge position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if root == zero || index[root] != NONE {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut e)) = call.last_mut() {
            if *e < succ[v].len() {
                let w = succ[v][*e] as usize;
                *e += 1;
                if w == zero {
                    continue;
                }
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    let cyclic = comp.len() > 1 || succ[v].contains(&(v as u32));
                    if cyclic {
                        for w in comp {
                            persistent[w] = true;
                        }
                    }
                }
            }
        }
    }
    persistent
}

/// Nonzero nodes from which a marked node is reachable through nonzero nodes.
fn reaches(succ: &[Vec<u32>], zero: usize, marked: &[bool]) -> Vec<bool> {
    let n = succ.len();
    let mut pred: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (v, out) in succ.iter().enumerate() {
        if v == zero {
            continue;
        }
        for &w in out {
            if w as usize != zero {
                pred[w as usize].push(v as u32);
            }
        }
    }
    let mut hit = marked.to_vec();
    let mut work: Vec<usize> = (0..n).filter(|&v| hit[v]).collect();
    while let Some(w) = work.pop() {
        for &v in &pred[w] {
            if !hit[v as usize] {
                hit[v as usize] = true;
                work.push(v as usize);
            }
        }
    }
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::fixtures::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn zero_ring_graph() {
        let g = MStepGraph::build(MultiplierSet::WholeRing(zero_ring(&[2, 2])), &lim()).unwrap();
        for x in 0..4 {
            assert_eq!(g.successors(x), alloc::vec![0]);
        }
        assert_eq!(g.nilpotent_elements(), alloc::vec![0, 1, 2, 3]);
    }

    #[test]
    fn z4_successors() {
        let g = MStepGraph::build(MultiplierSet::WholeRing(zn(4)), &lim()).unwrap();
        // 1·u·1 = u, 2·u·2 = 4u = 0
        assert_eq!(g.successors(1), alloc::vec![0, 1, 2, 3]);
        assert_eq!(g.successors(2), alloc::vec![0]);
        assert_eq!(g.nilpotent_elements(), alloc::vec![0, 2]);
        let (ok, cert) = g.certify(2).unwrap();
        assert!(ok);
        assert_eq!(cert, Certificate::Exhausted { reachable: alloc::vec![0, 2] });
        assert!(g.certify(0).unwrap().0);
    }

    #[test]
    fn field_self_loop_certificate() {
        let g = MStepGraph::build(MultiplierSet::WholeRing(zn(2)), &lim()).unwrap();
        let (ok, cert) = g.certify(1).unwrap();
        assert!(!ok);
        assert_eq!(
            cert,
            Certificate::Cycle {
                prefix: alloc::vec![],
                cycle: alloc::vec![Step { element: 1, multiplier: 1 }]
            }
        );
        assert!(g.is_persistent(1));
        assert!(g.format_certificate(&cert).contains("cycle"));
    }

    #[test]
    fn certificate_is_a_real_m_sequence() {
        let r = path(&["1", "2"], &[("1", "2"), ("2", "1")], 2);
        let set = MultiplierSet::WholeRing(r.clone());
        let g = MStepGraph::build(set.clone(), &lim()).unwrap();
        for x in 0..r.order() {
            if let (false, Certificate::Cycle { prefix, cycle }) = g.certify(x).unwrap() {
                let seq: Vec<&Step> = prefix.iter().chain(cycle.iter()).collect();
                assert_eq!(seq[0].element, x);
                for w in seq.windows(2) {
                    assert_eq!(set.step(w[0].element, w[0].multiplier), w[1].element);
                }
                let last = cycle.last().unwrap();
                assert_eq!(set.step(last.element, last.multiplier), cycle[0].element);
                assert!(seq.iter().all(|s| s.element != 0));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let tight = Limits { max_radical: 8, ..Limits::default() };
        assert!(matches!(
            MStepGraph::build(MultiplierSet::WholeRing(full2()), &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
