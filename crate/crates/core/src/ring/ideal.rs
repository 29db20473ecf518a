//! g.m. ideals and ring ideals of an assembled ring.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Flavor, GMRing};
use crate::abelian::{SpanBuilder, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An ideal, stored as its member set inside the ring's additive group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GMIdeal {
    members: Subgroup,
    flavor: Flavor,
}

/// Escaping product found while checking ideal closure. `side` is `"left"`
/// for `member · a` and `"right"` for `a · member`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness {
    pub side: &'static str,
    pub indices: Option<(usize, usize, usize)>,
    pub member: usize,
    pub multiplier: usize,
    pub product: usize,
}

impl IdealWitness {
    pub fn describe(&self, ring: &GMRing) -> String {
        let idx = match self.indices {
            Some((i, j, k)) => {
                let l = ring.labels();
                format!(" at ({},{},{})", l[i], l[j], l[k])
            }
            None => String::new(),
        };
        let (b, a) = (ring.format_element(self.member), ring.format_element(self.multiplier));
        let p = ring.format_element(self.product);
        match self.side {
            "left" => format!("{b} * {a} = {p} escapes{idx}"),
            _ => format!("{a} * {b} = {p} escapes{idx}"),
        }
    }
}

impl GMIdeal {
    pub(crate) fn new(members: Subgroup, flavor: Flavor) -> Self {
        GMIdeal { members, flavor }
    }

    pub fn zero(ring: &GMRing, flavor: Flavor) -> Self {
        GMIdeal::new(Subgroup::zero(ring.group()), flavor)
    }

    pub fn whole(ring: &GMRing, flavor: Flavor) -> Self {
        GMIdeal::new(Subgroup::whole(ring.group()), flavor)
    }

    /// Direct sum of componentwise subgroups, after the closure check.
    pub fn from_components(ring: &GMRing, comps: &[Subgroup]) -> Result<Self> {
        if let Some(w) = is_gm_ideal(ring, comps)? {
            return Err(Error::invalid(format!("not a g.m. ideal: {}", w.describe(ring))));
        }
        Ok(Self::direct_sum(ring, comps))
    }

    pub(crate) fn direct_sum(ring: &GMRing, comps: &[Subgroup]) -> Self {
        let n = ring.size();
        let gens = comps
            .iter()
            .enumerate()
            .flat_map(|(c, h)| h.generators().iter().map(move |&g| ring.embed(c / n, c % n, g)));
        GMIdeal::new(Subgroup::generated(ring.group(), gens), Flavor::Gm)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn members(&self) -> &[usize] {
        self.members.members()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.members.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_whole()
    }

    pub fn is_subset_of(&self, other: &GMIdeal) -> bool {
        self.members.is_subgroup_of(&other.members)
    }

    /// `{a ∈ A_ij : a E(i, j) ∈ self}`.
    pub fn component(&self, ring: &GMRing, i: usize, j: usize) -> Subgroup {
        let g = ring.component(i, j);
        let inside = (0..g.order()).filter(|&a| self.contains(ring.embed(i, j, a)));
        Subgroup::generated(g, inside)
    }

    pub fn components(&self, ring: &GMRing) -> Vec<Subgroup> {
        let n = ring.size();
        (0..n * n).map(|c| self.component(ring, c / n, c % n)).collect()
    }

    /// Whether the member set is the direct sum of its components.
    pub fn is_componentwise(&self, ring: &GMRing) -> bool {
        self.members.members().iter().all(|&x| {
            ring.components_of(x)
                .all(|(i, j, a)| self.contains(ring.embed(i, j, a)))
        })
    }

    /// The same member set viewed as a plain ring ideal.
    pub fn as_ring_ideal(&self) -> GMIdeal {
        GMIdeal::new(self.members.clone(), Flavor::Ring)
    }

    /// Reinterprets as a g.m. ideal; fails unless the set is componentwise
    /// and closed under outer products.
    pub fn as_gm_ideal(&self, ring: &GMRing) -> Result<GMIdeal> {
        if !self.is_componentwise(ring) {
            return Err(Error::invalid("member set does not decompose componentwise"));
        }
        GMIdeal::from_components(ring, &self.components(ring))
    }
}

/// Checks the g.m. ideal conditions `B_ij A_jk ⊆ B_ik`, `A_ij B_jk ⊆ B_ik`
/// for a candidate given as one subgroup per component (row-major).
/// Returns `Ok(None)` if they hold, `Ok(Some(witness))` otherwise.
pub fn is_gm_ideal(ring: &GMRing, comps: &[Subgroup]) -> Result<Option<IdealWitness>> {
    let n = ring.size();
    if comps.len() != n * n {
        return Err(Error::invalid(format!(
            "expected {} component subgroups, got {}",
            n * n,
            comps.len()
        )));
    }
    for (c, h) in comps.iter().enumerate() {
        if h.parent() != ring.component(c / n, c % n) {
            return Err(Error::invalid(format!(
                "subgroup {c} does not live in component ({},{})",
                ring.labels()[c / n],
                ring.labels()[c % n]
            )));
        }
    }
    let sys = ring.system();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let target = &comps[i * n + k];
                for &b in comps[i * n + j].generators() {
                    for a in ring.component(j, k).generators() {
                        let p = sys.mul(i, j, k, b, a);
                        if !target.contains(p) {
                            return Ok(Some(IdealWitness {
                                side: "left",
                                indices: Some((i, j, k)),
                                member: ring.embed(i, j, b),
                                multiplier: ring.embed(j, k, a),
                                product: ring.embed(i, k, p),
                            }));
                        }
                    }
                }
                for a in ring.component(i, j).generators() {
                    for &b in comps[j * n + k].generators() {
                        let p = sys.mul(i, j, k, a, b);
                        if !target.contains(p) {
                            return Ok(Some(IdealWitness {
                                side: "right",
                                indices: Some((i, j, k)),
                                member: ring.embed(j, k, b),
                                multiplier: ring.embed(i, j, a),
                                product: ring.embed(i, k, p),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Two-sided ideal test for an additive subgroup of the whole ring.
pub fn is_ring_ideal(ring: &GMRing, members: &Subgroup) -> Option<IdealWitness> {
    for &g in members.generators() {
        for &e in ring.basis() {
            let l = ring.mul(g, e);
            if !members.contains(l) {
                return Some(IdealWitness {
                    side: "left",
                    indices: None,
                    member: g,
                    multiplier: e,
                    product: l,
                });
            }
            let r = ring.mul(e, g);
            if !members.contains(r) {
                return Some(IdealWitness {
                    side: "right",
                    indices: None,
                    member: g,
                    multiplier: e,
                    product: r,
                });
            }
        }
    }
    None
}

/// Verifies `ideal` against the conditions of its flavor.
pub(crate) fn audit(ring: &GMRing, ideal: &GMIdeal) -> Result<()> {
    let witness = match ideal.flavor {
        Flavor::Gm => {
            if !ideal.is_componentwise(ring) {
                return Err(Error::Violation(String::from(
                    "g.m. ideal does not decompose componentwise",
                )));
            }
            is_gm_ideal(ring, &ideal.components(ring))?
        }
        Flavor::Ring => is_ring_ideal(ring, &ideal.members),
    };
    match witness {
        Some(w) => Err(Error::Violation(format!(
            "{} ideal check failed: {}",
            ideal.flavor.name(),
            w.describe(ring)
        ))),
        None => Ok(()),
    }
}

fn close_ideal(ring: &GMRing, builder: &mut SpanBuilder<'_>, seeds: impl IntoIterator<Item = usize>) {
    builder.close(seeds, |g, out| {
        for &e in ring.basis() {
            out.push(ring.mul(e, g));
            out.push(ring.mul(g, e));
        }
    });
}

/// Smallest ideal of the given flavor containing `seeds`.
///
/// For the g.m. flavor each seed is first scattered into its single-entry
/// components; the ring-ideal closure of single-entry elements stays
/// componentwise because single-entry elements multiply to single-entry
/// elements.
pub fn gm_ideal_closure(ring: &GMRing, seeds: &[usize], flavor: Flavor) -> Result<GMIdeal> {
    if let Some(&bad) = seeds.iter().find(|&&s| s >= ring.order()) {
        return Err(Error::invalid(format!("seed index {bad} outside ring")));
    }
    let mut b = SpanBuilder::new(ring.group());
    match flavor {
        Flavor::Ring => close_ideal(ring, &mut b, seeds.iter().copied()),
        Flavor::Gm => {
            let scattered: Vec<usize> = seeds
                .iter()
                .flat_map(|&x| ring.components_of(x).map(|(i, j, a)| ring.embed(i, j, a)))
                .filter(|&y| y != 0)
                .collect();
            close_ideal(ring, &mut b, scattered);
        }
    }
    Ok(GMIdeal::new(b.finish(), flavor))
}

/// `D_ij = A_is · B_st · A_tj` (additive closure). The result is checked to
/// be a g.m. ideal rather than assumed to be one.
pub fn seed_ideal_from_component(ring: &GMRing, s: usize, t: usize, b_st: &Subgroup) -> Result<GMIdeal> {
    let n = ring.size();
    if s >= n || t >= n {
        return Err(Error::invalid("seed indices outside index set"));
    }
    if b_st.parent() != ring.component(s, t) {
        return Err(Error::invalid("seed subgroup does not live in A_st"));
    }
    let sys = ring.system();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for a in ring.component(i, s).generators() {
                for &b in b_st.generators() {
                    let ab = sys.mul(i, s, t, a, b);
                    if ab == 0 {
                        continue;
                    }
                    for c in ring.component(t, j).generators() {
                        let p = sys.mul(i, t, j, ab, c);
                        if p != 0 {
                            gens.push(ring.embed(i, j, p));
                        }
                    }
                }
            }
        }
    }
    let d = GMIdeal::new(Subgroup::generated(ring.group(), gens), Flavor::Gm);
    audit(ring, &d)?;
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Intersection,
}

/// Sum or intersection of ideals sharing a parent ring and flavor.
pub fn combine_ideals(ring: &GMRing, ideals: &[GMIdeal], mode: Combine) -> Result<GMIdeal> {
    let flavor = ideals.first().map_or(Flavor::Gm, |i| i.flavor);
    for ideal in ideals {
        if ideal.members.parent() != ring.group() {
            return Err(Error::invalid("ideals belong to different rings"));
        }
        if ideal.flavor != flavor {
            return Err(Error::invalid("ideals have different flavors"));
        }
    }
    let out = match mode {
        Combine::Sum => ideals
            .iter()
            .fold(GMIdeal::zero(ring, flavor), |acc, i| GMIdeal::new(acc.members.join(&i.members), flavor)),
        Combine::Intersection => ideals
            .iter()
            .fold(GMIdeal::whole(ring, flavor), |acc, i| {
                GMIdeal::new(acc.members.intersect(&i.members), flavor)
            }),
    };
    audit(ring, &out)?;
    Ok(out)
}

/// `B* = {x ∈ A | xA = Ax = 0}`, the two-sided annihilator of the whole ring.
pub fn annihilator_star(ring: &GMRing, limits: &Limits) -> Result<GMIdeal> {
    Error::check_cap("ring order", ring.order(), limits.max_order)?;
    let members: Vec<usize> = (0..ring.order())
        .filter(|&x| ring.basis().iter().all(|&e| ring.mul(x, e) == 0 && ring.mul(e, x) == 0))
        .collect();
    let h = Subgroup::from_members(ring.group(), &members)
        .map_err(|_| Error::Violation(String::from("annihilator is not additively closed")))?;
    let out = GMIdeal::new(h, Flavor::Gm);
    audit(ring, &out)?;
    Ok(out)
}

/// `{x ∈ A | xB = Bx = 0}` for an ideal `B`.
pub fn relative_annihilator(ring: &GMRing, b: &GMIdeal, limits: &Limits) -> Result<GMIdeal> {
    Error::check_cap("ring order", ring.order(), limits.max_order)?;
    let gens = b.members.generators();
    let members: Vec<usize> = (0..ring.order())
        .filter(|&x| gens.iter().all(|&g| ring.mul(x, g) == 0 && ring.mul(g, x) == 0))
        .collect();
    let h = Subgroup::from_members(ring.group(), &members)
        .map_err(|_| Error::Violation(String::from("annihilator is not additively closed")))?;
    let out = GMIdeal::new(h, Flavor::Ring);
    audit(ring, &out)?;
    Ok(out)
}

/// Every ideal of the given flavor, sorted by (order, member list).
///
/// Each ideal is the sum of the principal ideals of its members, so the
/// join-closure of the principal ideals is the complete lattice.
pub fn enumerate_ideals(ring: &GMRing, flavor: Flavor, limits: &Limits) -> Result<Vec<GMIdeal>> {
    Error::check_cap("ring order (ideal lattice)", ring.order(), limits.max_lattice)?;
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();
    let mut principals: Vec<Subgroup> = Vec::new();
    for a in 0..ring.order() {
        let p = gm_ideal_closure(ring, &[a], flavor)?.members;
        if seen.insert(p.mask().clone()) {
            principals.push(p);
        }
    }
    let zero = Subgroup::zero(ring.group());
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();
    seen.insert(zero.mask().clone());
    let mut all = alloc::vec![zero];
    let mut next = 0;
    while next < all.len() {
        let cur = all[next].clone();
        next += 1;
        for p in &principals {
            if p.is_subgroup_of(&cur) {
                continue;
            }
            let j = cur.join(p);
            if seen.insert(j.mask().clone()) {
                all.push(j);
                Error::check_cap("ideal lattice", all.len(), limits.max_ideals())?;
            }
        }
    }
    all.sort();
    Ok(all.into_iter().map(|m| GMIdeal::new(m, flavor)).collect())
}

/// `IJ`, the additive span of products.
pub fn ideal_product(ring: &GMRing, a: &GMIdeal, b: &GMIdeal) -> GMIdeal {
    let gens = a
        .members
        .generators()
        .iter()
        .flat_map(|&x| b.members.generators().iter().map(move |&y| ring.mul(x, y)));
    GMIdeal::new(Subgroup::generated(ring.group(), gens), a.flavor)
}

/// Smallest `k` with `I^k = 0`, or `None` when the powers stall above zero.
pub fn ideal_power_exponent(ring: &GMRing, ideal: &GMIdeal) -> Option<usize> {
    let mut power = ideal.clone();
    let mut k = 1;
    loop {
        if power.is_zero() {
            return Some(k);
        }
        let next = ideal_product(ring, &power, ideal);
        if next == power {
            return None;
        }
        power = next;
        k += 1;
    }
}
