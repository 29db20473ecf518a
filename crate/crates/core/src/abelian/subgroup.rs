use alloc::vec::Vec;

use super::{FinAbGroup, GroupElement};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A subgroup, stored as its sorted member indices plus a membership mask.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: FinAbGroup,
    members: Vec<usize>,
    mask: BitSet,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then lexicographically by member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl core::hash::Hash for Subgroup {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// Incremental span: grows a subgroup one generator at a time.
pub(crate) struct SpanBuilder<'g> {
    group: &'g FinAbGroup,
    mask: BitSet,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> SpanBuilder<'g> {
    pub fn new(group: &'g FinAbGroup) -> Self {
        let mut mask = BitSet::new(group.order());
        mask.insert(0);
        SpanBuilder {
            group,
            mask,
            members: alloc::vec![0],
            gens: Vec::new(),
        }
    }

    pub fn from_subgroup(group: &'g FinAbGroup, h: &Subgroup) -> Self {
        SpanBuilder {
            group,
            mask: h.mask.clone(),
            members: h.members.clone(),
            gens: h.gens.clone(),
        }
    }

    /// Replaces the span `H` by `H + <g>`. Returns whether it grew.
    pub fn add_generator(&mut self, g: usize) -> bool {
        if self.mask.contains(g) {
            return false;
        }
        let mut multiples = Vec::new();
        let mut m = g;
        while !self.mask.contains(m) {
            multiples.push(m);
            m = self.group.add(m, g);
        }
        let base = self.members.len();
        for &t in &multiples {
            for h in 0..base {
                let x = self.group.add(self.members[h], t);
                self.mask.insert(x);
                self.members.push(x);
            }
        }
        self.gens.push(g);
        true
    }

    /// Fixpoint: every generator that enlarges the span hands its images
    /// under the closing maps back to the worklist.
    pub fn close<F>(&mut self, seeds: impl IntoIterator<Item = usize>, mut images: F)
    where
        F: FnMut(usize, &mut Vec<usize>),
    {
        let mut work: Vec<usize> = seeds.into_iter().collect();
        work.reverse();
        while let Some(g) = work.pop() {
            if self.add_generator(g) {
                let mut out = Vec::new();
                images(g, &mut out);
                out.reverse();
                work.extend(out);
            }
        }
    }

    pub fn finish(self) -> Subgroup {
        let mut members = self.members;
        members.sort_unstable();
        Subgroup {
            parent: self.group.clone(),
            members,
            mask: self.mask,
            gens: self.gens,
        }
    }
}

impl Subgroup {
    pub fn zero(group: &FinAbGroup) -> Self {
        SpanBuilder::new(group).finish()
    }

    pub fn whole(group: &FinAbGroup) -> Self {
        Self::generated(group, group.generators())
    }

    /// Additive span of the given element indices.
    pub fn generated(group: &FinAbGroup, gens: impl IntoIterator<Item = usize>) -> Self {
        let mut b = SpanBuilder::new(group);
        for g in gens {
            b.add_generator(g);
        }
        b.finish()
    }

    /// Accepts an explicit member list after checking it is a subgroup.
    pub fn from_members(group: &FinAbGroup, members: &[usize]) -> Result<Self> {
        let mut set = crate::bitset::BitSet::new(group.order());
        for &m in members {
            if m >= group.order() {
                return Err(Error::invalid(alloc::format!(
                    "member index {m} outside group of order {}",
                    group.order()
                )));
            }
            set.insert(m);
        }
        let h = Self::generated(group, members.iter().copied());
        if h.mask != set {
            return Err(Error::invalid("member set is not closed under addition"));
        }
        Ok(h)
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.members.iter().map(|&m| self.parent.element(m))
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut b = SpanBuilder::from_subgroup(&self.parent, self);
        for &g in &other.gens {
            b.add_generator(g);
        }
        b.finish()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let common = self.members.iter().copied().filter(|&m| other.contains(m));
        Subgroup::generated(&self.parent, common)
    }

    /// Pairwise closure test over all members; used to audit results.
    pub fn verify_closed(&self) -> bool {
        self.contains(0)
            && self.members.iter().all(|&a| {
                self.contains(self.parent.neg(a))
                    && self.members.iter().all(|&b| self.contains(self.parent.add(a, b)))
            })
    }

    pub(crate) fn mask(&self) -> &BitSet {
        &self.mask
    }
}

/// Whether a self-map table of `group` is additive (a group endomorphism).
pub fn is_additive_table(group: &FinAbGroup, table: &[usize]) -> bool {
    if table.len() != group.order() || table.iter().any(|&t| t >= group.order()) {
        return false;
    }
    table[0] == 0
        && group.generators().iter().all(|&g| {
            (0..group.order()).all(|a| table[group.add(a, g)] == group.add(table[a], table[g]))
        })
}

/// Smallest subgroup containing `seed` and stable under every closer table.
///
/// Closers must be additive; the span is then generated by the orbit of the
/// seed under the closers, which is what the fixpoint computes.
pub fn subgroup_closure(
    group: &FinAbGroup,
    seed: &[GroupElement],
    closers: &[Vec<usize>],
) -> Result<Subgroup> {
    let seeds = seed
        .iter()
        .map(|e| group.index_of(e))
        .collect::<Result<Vec<_>>>()?;
    for (k, table) in closers.iter().enumerate() {
        if table.len() != group.order() || table.iter().any(|&t| t >= group.order()) {
            return Err(Error::invalid(alloc::format!(
                "closer {k} is not a total self-map of the group"
            )));
        }
    }
    let mut b = SpanBuilder::new(group);
    b.close(seeds, |g, out| out.extend(closers.iter().map(|t| t[g])));
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::make(&[n]).unwrap()
    }

    fn el(c: u32) -> GroupElement {
        GroupElement(vec![c])
    }

    #[test]
    fn empty_seed_gives_zero() {
        let h = subgroup_closure(&z(4), &[], &[]).unwrap();
        assert_eq!(h.members(), &[0]);
    }

    #[test]
    fn cyclic_closures() {
        assert_eq!(subgroup_closure(&z(4), &[el(2)], &[]).unwrap().members(), &[0, 2]);
        assert_eq!(
            subgroup_closure(&z(4), &[el(1)], &[]).unwrap().members(),
            &[0, 1, 2, 3]
        );
        assert_eq!(
            subgroup_closure(&z(12), &[el(8), el(6)], &[]).unwrap().members(),
            &[0, 2, 4, 6, 8, 10]
        );
    }

    #[test]
    fn closer_tables_are_applied() {
        // Z_2 x Z_2 with the coordinate swap; seed (1,0) must pull in (0,1).
        let g = FinAbGroup::make(&[2, 2]).unwrap();
        let swap: Vec<usize> = (0..4).map(|i| g.index(&[g.coord(i, 1), g.coord(i, 0)]).unwrap()).collect();
        assert!(is_additive_table(&g, &swap));
        let h = subgroup_closure(&g, &[GroupElement(vec![1, 0])], &[swap]).unwrap();
        assert!(h.is_whole());
    }

    #[test]
    fn wrong_parent_seed_rejected() {
        let err = subgroup_closure(&z(4), &[GroupElement(vec![1, 1])], &[]);
        assert!(matches!(err, Err(Error::InvalidInput(_))));
        let err = subgroup_closure(&z(4), &[el(4)], &[]);
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn from_members_checks_closure() {
        assert!(Subgroup::from_members(&z(6), &[0, 2, 4]).is_ok());
        assert!(Subgroup::from_members(&z(6), &[0, 2]).is_err());
    }

    #[test]
    fn lattice_operations() {
        let g = z(12);
        let a = Subgroup::generated(&g, [6]);
        let b = Subgroup::generated(&g, [4]);
        assert_eq!(a.join(&b).members(), &[0, 2, 4, 6, 8, 10]);
        assert_eq!(a.intersect(&b).members(), &[0]);
    }

    fn group_and_seed() -> impl Strategy<Value = (Vec<i64>, Vec<usize>)> {
        prop::collection::vec(1i64..7, 0..4).prop_flat_map(|f| {
            let order: usize = f.iter().product::<i64>() as usize;
            (Just(f), prop::collection::vec(0..order, 0..4))
        })
    }

    proptest! {
        #[test]
        fn closure_is_subgroup_and_idempotent((factors, seed) in group_and_seed()) {
            let g = FinAbGroup::make(&factors).unwrap();
            let seed: Vec<_> = seed.into_iter().map(|i| g.element(i)).collect();
            let h = subgroup_closure(&g, &seed, &[]).unwrap();
            prop_assert!(h.verify_closed());
            prop_assert_eq!(g.order() % h.order(), 0);
            let again: Vec<_> = h.elements().collect();
            prop_assert_eq!(subgroup_closure(&g, &again, &[]).unwrap(), h.clone());
            for s in &seed {
                prop_assert!(h.contains(g.index_of(s).unwrap()));
            }
        }
    }
}
