//! Finite abelian groups presented by invariant factors.
//!
//! An element of `Z_{n_1} × … × Z_{n_r}` is addressed either by its
//! coordinate tuple ([`GroupElement`]) or by its position in the
//! lexicographic enumeration of tuples (a plain `usize` index, first
//! coordinate most significant). All set-valued results are sorted by index,
//! which coincides with lexicographic order on coordinates.

mod present;
mod subgroup;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;

pub use present::{present, Presentation};
pub use subgroup::{is_additive_table, subgroup_closure, Subgroup};
pub(crate) use subgroup::SpanBuilder;

/// `Z_{n_1} × … × Z_{n_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    factors: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

/// Coordinates of one group element, `0 <= coords[k] < n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u32>);

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FinAbGroup {
    /// Builds the group with the default order cap.
    pub fn make(factors: &[i64]) -> Result<Self> {
        Self::with_cap(factors, Limits::default().max_order)
    }

    pub fn with_cap(factors: &[i64], cap: usize) -> Result<Self> {
        let mut out = Vec::with_capacity(factors.len());
        let mut order: usize = 1;
        for &n in factors {
            if n <= 0 {
                return Err(Error::invalid(alloc::format!(
                    "invariant factor {n} must be at least 1"
                )));
            }
            let n = u32::try_from(n).map_err(|_| Error::ResourceLimit {
                what: "group order",
                size: usize::MAX,
                cap,
            })?;
            order = order.checked_mul(n as usize).ok_or(Error::ResourceLimit {
                what: "group order",
                size: usize::MAX,
                cap,
            })?;
            Error::check_cap("group order", order, cap)?;
            out.push(n);
        }
        Ok(Self::from_factors(out))
    }

    /// Trusted constructor; callers have already bounded the order.
    pub(crate) fn from_factors(factors: Vec<u32>) -> Self {
        let mut strides = alloc::vec![1usize; factors.len()];
        let mut acc = 1usize;
        for k in (0..factors.len()).rev() {
            strides[k] = acc;
            acc *= factors[k] as usize;
        }
        FinAbGroup {
            factors,
            strides,
            order: acc,
        }
    }

    pub fn trivial() -> Self {
        Self::from_factors(Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Index of the unit vector along factor `k`.
    pub fn unit(&self, k: usize) -> usize {
        if self.factors[k] == 1 {
            0
        } else {
            self.strides[k]
        }
    }

    /// Unit vectors of the nontrivial factors; they generate the group.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&k| self.factors[k] > 1)
            .map(|k| self.strides[k])
            .collect()
    }

    pub fn coord(&self, idx: usize, k: usize) -> u32 {
        ((idx / self.strides[k]) % self.factors[k] as usize) as u32
    }

    pub fn coords(&self, idx: usize) -> Vec<u32> {
        (0..self.rank()).map(|k| self.coord(idx, k)).collect()
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        GroupElement(self.coords(idx))
    }

    /// Inverse of [`FinAbGroup::coords`]; rejects tuples of the wrong shape.
    pub fn index(&self, coords: &[u32]) -> Result<usize> {
        if coords.len() != self.rank() {
            return Err(Error::invalid(alloc::format!(
                "element has {} coordinates, group {} has rank {}",
                coords.len(),
                self,
                self.rank()
            )));
        }
        let mut idx = 0;
        for (k, (&c, &n)) in coords.iter().zip(&self.factors).enumerate() {
            if c >= n {
                return Err(Error::invalid(alloc::format!(
                    "coordinate {c} out of range for factor Z_{n} (position {k})"
                )));
            }
            idx += c as usize * self.strides[k];
        }
        Ok(idx)
    }

    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        self.index(&e.0)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for k in (0..self.factors.len()).rev() {
            let n = self.factors[k] as usize;
            let s = a % n + b % n;
            out += if s >= n { s - n } else { s } * self.strides[k];
            a /= n;
            b /= n;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        for k in (0..self.factors.len()).rev() {
            let n = self.factors[k] as usize;
            let d = a % n;
            if d != 0 {
                out += (n - d) * self.strides[k];
            }
            a /= n;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k · a` for a nonnegative integer `k`.
    pub fn scale(&self, a: usize, k: u64) -> usize {
        let mut a = a;
        let mut out = 0;
        for j in (0..self.factors.len()).rev() {
            let n = self.factors[j] as u64;
            let d = (a as u64 % n) * (k % n) % n;
            out += d as usize * self.strides[j];
            a /= n as usize;
        }
        out
    }

    /// Additive order of `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut t = 1;
        let mut m = a;
        while m != 0 {
            m = self.add(m, a);
            t += 1;
        }
        t
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        for (k, n) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z_{n}")?;
        }
        Ok(())
    }
}

/// `"(1,0,3)"` → `[1, 0, 3]`. Whitespace is ignored; `"()"` is the empty tuple.
pub fn parse_coords(text: &str) -> Result<GroupElement> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::invalid(alloc::format!("malformed coordinates {t:?}")))?;
    if inner.trim().is_empty() {
        return Ok(GroupElement(Vec::new()));
    }
    inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| Error::invalid(alloc::format!("malformed coordinates {t:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(GroupElement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn trivial_group_from_unit_factor() {
        let g = FinAbGroup::make(&[1]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
        let g = FinAbGroup::make(&[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn klein_enumeration_is_lexicographic() {
        let g = FinAbGroup::make(&[2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        let all: Vec<_> = (0..4).map(|i| g.coords(i)).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn cyclic_four_addition() {
        let g = FinAbGroup::make(&[4]).unwrap();
        // table computed by modular addition
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g.add(a, b), (a + b) % 4);
            }
        }
        assert_eq!(g.add(3, 3), 2);
    }

    #[test]
    fn rejects_bad_factors() {
        assert!(matches!(
            FinAbGroup::make(&[0]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FinAbGroup::make(&[2, -3]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FinAbGroup::make(&[256, 257]),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(FinAbGroup::with_cap(&[4, 4], 15).is_err());
    }

    #[test]
    fn index_roundtrip_and_errors() {
        let g = FinAbGroup::make(&[2, 3, 4]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index(&g.coords(i)).unwrap(), i);
        }
        assert!(g.index(&[1, 3, 0]).is_err());
        assert!(g.index(&[1, 1]).is_err());
    }

    #[test]
    fn coordinate_parsing() {
        assert_eq!(parse_coords("(1, 2)").unwrap().0, vec![1, 2]);
        assert_eq!(parse_coords("()").unwrap().0, Vec::<u32>::new());
        assert!(parse_coords("1,2").is_err());
        assert!(parse_coords("(a)").is_err());
    }

    #[test]
    fn group_axioms_exhaustive_small() {
        for factors in [&[2i64, 2][..], &[4], &[2, 6], &[3, 3, 2], &[16, 16]] {
            let g = FinAbGroup::make(factors).unwrap();
            for a in 0..g.order() {
                assert_eq!(g.add(a, 0), a);
                assert_eq!(g.add(a, g.neg(a)), 0);
                for b in 0..g.order() {
                    assert_eq!(g.add(a, b), g.add(b, a));
                }
            }
        }
    }

    #[test]
    fn scale_matches_repeated_addition() {
        let g = FinAbGroup::make(&[4, 6]).unwrap();
        for a in 0..g.order() {
            let mut acc = 0;
            for k in 0..13u64 {
                assert_eq!(g.scale(a, k), acc);
                acc = g.add(acc, a);
            }
        }
    }
}
