//! Invariant-factor presentation of an abstract finite abelian group.
//!
//! Quotients `A_ij / B_ij` and subgroups `B_ij` arrive as bare element sets
//! with an addition rule. To turn them back into [`FinAbGroup`] coordinates we
//! collect a generating set greedily, record the triangular relation matrix
//! that the greedy span produces, and diagonalise it (Smith form) while
//! tracking column operations.

use alloc::vec;
use alloc::vec::Vec;

use super::FinAbGroup;

/// An explicit isomorphism between an abstract group on `0..n` (zero at 0)
/// and a [`FinAbGroup`].
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FinAbGroup,
    /// abstract index → group index
    pub to_group: Vec<usize>,
    /// group index → abstract index
    pub from_group: Vec<usize>,
}

/// Presents the abstract group with elements `0..n`, zero `0`, sum `add`.
///
/// The addition must be an abelian group law; the result is checked to be a
/// bijection and panics otherwise.
pub fn present<F>(n: usize, add: F) -> Presentation
where
    F: Fn(usize, usize) -> usize,
{
    // coefficient vector of each element over the generators chosen so far
    let mut coef: Vec<Option<Vec<i128>>> = vec![None; n];
    coef[0] = Some(Vec::new());
    let mut known = vec![0usize];
    let mut relations: Vec<Vec<i128>> = Vec::new();

    for a in 0..n {
        if coef[a].is_some() {
            continue;
        }
        let s = relations.len();
        let mut multiples = vec![a];
        let mut m = add(a, a);
        while coef[m].is_none() {
            multiples.push(m);
            m = add(m, a);
        }
        let c = multiples.len() as i128 + 1;
        let mut rel = coef[m].clone().unwrap();
        for v in rel.iter_mut() {
            *v = -*v;
        }
        rel.resize(s + 1, 0);
        rel[s] = c;
        relations.push(rel);

        let base = known.len();
        for (t, &mt) in multiples.iter().enumerate() {
            for h in 0..base {
                let hx = known[h];
                let x = add(hx, mt);
                let mut v = coef[hx].clone().unwrap();
                v.resize(s + 1, 0);
                v[s] += t as i128 + 1;
                coef[x] = Some(v);
                known.push(x);
            }
        }
    }

    let s = relations.len();
    let mut mat: Vec<Vec<i128>> = relations
        .into_iter()
        .map(|mut r| {
            r.resize(s, 0);
            r
        })
        .collect();
    let cols = smith_columns(&mut mat);
    let diag: Vec<i128> = (0..s).map(|k| mat[k][k]).collect();

    let kept: Vec<usize> = (0..s).filter(|&k| diag[k] != 1).collect();
    let group = FinAbGroup::from_factors(kept.iter().map(|&k| diag[k] as u32).collect());

    let mut to_group = vec![0usize; n];
    let mut from_group = vec![usize::MAX; n];
    for a in 0..n {
        let mut v = coef[a].clone().unwrap();
        v.resize(s, 0);
        let mut idx = 0;
        for (pos, &k) in kept.iter().enumerate() {
            let w: i128 = (0..s).map(|r| v[r] * cols[r][k]).sum();
            let c = w.rem_euclid(diag[k]) as u32;
            idx += c as usize * stride(&group, pos);
        }
        to_group[a] = idx;
        assert!(from_group[idx] == usize::MAX, "presentation is not injective");
        from_group[idx] = a;
    }
    assert_eq!(group.order(), n, "presentation order mismatch");
    Presentation {
        group,
        to_group,
        from_group,
    }
}

fn stride(group: &FinAbGroup, pos: usize) -> usize {
    group.factors()[pos + 1..]
        .iter()
        .map(|&f| f as usize)
        .product()
}

/// Reduces the square matrix in place to Smith form `diag(d_1 | d_2 | …)`
/// with `d_k > 0`, returning the accumulated column transform `V`
/// (so that `U · M · V = D` for some unimodular `U`).
fn smith_columns(a: &mut [Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut v: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    for t in 0..n {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j] == 0 {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if a[pi][pj].abs() <= a[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else { return v };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..n {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..n {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for row in a.iter_mut() {
                row[t] = -row[t];
            }
            for row in v.iter_mut() {
                row[t] = -row[t];
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(p: &Presentation, n: usize, add: impl Fn(usize, usize) -> usize) {
        assert_eq!(p.group.order(), n);
        for a in 0..n {
            assert_eq!(p.from_group[p.to_group[a]], a);
            for b in 0..n {
                assert_eq!(p.to_group[add(a, b)], p.group.add(p.to_group[a], p.to_group[b]));
            }
        }
    }

    #[test]
    fn cyclic_six_splits_canonically() {
        let add = |a, b| (a + b) % 6;
        let p = present(6, add);
        assert_eq!(p.group.factors(), &[6]);
        check(&p, 6, add);
    }

    #[test]
    fn z2_times_z4_from_product_encoding() {
        // element a = 4*x + y with x in Z_2, y in Z_4, but enumerated so
        // the greedy generator choice starts with an order-2 element
        let g = FinAbGroup::make(&[2, 4]).unwrap();
        let add = |a, b| g.add(a, b);
        let p = present(8, add);
        assert_eq!(p.group.factors(), &[2, 4]);
        check(&p, 8, add);
    }

    #[test]
    fn z2_times_z3_becomes_z6() {
        let g = FinAbGroup::make(&[2, 3]).unwrap();
        let add = |a, b| g.add(a, b);
        let p = present(6, add);
        assert_eq!(p.group.factors(), &[6]);
        check(&p, 6, add);
    }

    #[test]
    fn trivial_group() {
        let p = present(1, |_, _| 0);
        assert!(p.group.factors().is_empty());
        assert_eq!(p.to_group, alloc::vec![0]);
    }

    #[test]
    fn messy_product_is_consistent() {
        let g = FinAbGroup::make(&[4, 6, 10, 3]).unwrap();
        let add = |a, b| g.add(a, b);
        let p = present(g.order(), add);
        assert_eq!(p.group.factors(), &[2, 6, 60]);
        check(&p, g.order(), add);
    }
}
