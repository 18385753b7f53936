use std::collections::HashMap;

use crate::combinat::{multisets, subsets};
use crate::{Fp, GradedFreeModule, ModuleMap, Polynomial};

pub fn exterior_power_module(m: &GradedFreeModule, k: usize) -> GradedFreeModule {
    GradedFreeModule::new(
        subsets(m.rank(), k).iter().map(|s| s.iter().map(|&i| m.twists()[i]).sum()).collect(),
    )
}

pub fn symmetric_power_module(m: &GradedFreeModule, k: usize) -> GradedFreeModule {
    GradedFreeModule::new(
        multisets(m.rank(), k).iter().map(|s| s.iter().map(|&i| m.twists()[i]).sum()).collect(),
    )
}

pub fn dual_module(m: &GradedFreeModule) -> GradedFreeModule {
    m.dual()
}

pub fn dual(m: &ModuleMap) -> ModuleMap {
    m.dual()
}

pub fn tensor_module(a: &GradedFreeModule, b: &GradedFreeModule) -> GradedFreeModule {
    a.tensor(b)
}

/// Kronecker product, basis ordering as in [`GradedFreeModule::tensor`].
pub fn tensor_map(a: &ModuleMap, b: &ModuleMap, k: Fp) -> ModuleMap {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut entries = vec![vec![Polynomial::zero(); ca * cb]; ra * rb];
    for i1 in 0..ra {
        for j1 in 0..ca {
            let x = a.entry(i1, j1);
            if x.is_zero() {
                continue;
            }
            for i2 in 0..rb {
                for j2 in 0..cb {
                    let y = b.entry(i2, j2);
                    if !y.is_zero() {
                        entries[i1 * rb + i2][j1 * cb + j2] = x.mul(y, k);
                    }
                }
            }
        }
    }
    ModuleMap::new(a.source().tensor(b.source()), a.target().tensor(b.target()), entries)
        .expect("tensor of homogeneous maps is homogeneous")
}

/// Minors of `rows` against every `rows.len()`-subset of columns, keyed by column bitmask.
/// Laplace expansion along the first row, shared across column sets.
fn minors_for_rows(m: &ModuleMap, rows: &[usize], k: Fp) -> HashMap<u32, Polynomial> {
    let n = m.cols();
    assert!(n <= 32, "minor tables support at most 32 columns");
    let size = rows.len();
    let mut level: HashMap<u32, Polynomial> = HashMap::new();
    level.insert(0, Polynomial::one());
    for depth in (0..size).rev() {
        let r = rows[depth];
        let width = size - depth;
        let mut next = HashMap::new();
        for cols in subsets(n, width) {
            let mut acc = Polynomial::zero();
            let mask: u32 = cols.iter().map(|&c| 1u32 << c).sum();
            for (pos, &c) in cols.iter().enumerate() {
                let a = m.entry(r, c);
                if a.is_zero() {
                    continue;
                }
                let sub = &level[&(mask & !(1u32 << c))];
                if sub.is_zero() {
                    continue;
                }
                let term = a.mul(sub, k);
                acc = if pos % 2 == 0 { acc.add(&term, k) } else { acc.sub(&term, k) };
            }
            next.insert(mask, acc);
        }
        level = next;
    }
    level
}

/// `∧^k m`; rows and columns indexed by lexicographic `k`-subsets, entries the minors.
pub fn exterior_power(m: &ModuleMap, k_: usize, k: Fp) -> ModuleMap {
    let source = exterior_power_module(m.source(), k_);
    let target = exterior_power_module(m.target(), k_);
    let col_sets = subsets(m.cols(), k_);
    let mut entries = Vec::with_capacity(target.rank());
    for rows in subsets(m.rows(), k_) {
        let table = minors_for_rows(m, &rows, k);
        entries.push(
            col_sets
                .iter()
                .map(|cs| table[&cs.iter().map(|&c| 1u32 << c).sum::<u32>()].clone())
                .collect(),
        );
    }
    ModuleMap::new(source, target, entries).expect("minors of a homogeneous map are homogeneous")
}

/// All `k×k` minors, row subsets outermost, each in lexicographic order.
pub fn minors(m: &ModuleMap, k_: usize, k: Fp) -> Vec<Polynomial> {
    if k_ == 0 || k_ > m.rows() || k_ > m.cols() {
        return Vec::new();
    }
    exterior_power(m, k_, k).entries().iter().flatten().cloned().collect()
}

/// Determinant of a square map.
pub fn determinant(m: &ModuleMap, k: Fp) -> Polynomial {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square map");
    let rows: Vec<usize> = (0..m.rows()).collect();
    let mask = if m.cols() == 0 { 0 } else { u32::MAX >> (32 - m.cols()) };
    minors_for_rows(m, &rows, k).remove(&mask).unwrap_or_else(Polynomial::one)
}

/// `S_k m`: the column of a multiset `a_1..a_k` is the product `m(e_{a_1}) ... m(e_{a_k})`
/// expanded in the multiset basis of `S_k(target)`.
pub fn symmetric_power_map(m: &ModuleMap, k_: usize, k: Fp) -> ModuleMap {
    let source = symmetric_power_module(m.source(), k_);
    let target = symmetric_power_module(m.target(), k_);
    let row_sets = multisets(m.rows(), k_);
    let row_index: HashMap<Vec<usize>, usize> =
        row_sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let mut entries = vec![vec![Polynomial::zero(); source.rank()]; target.rank()];
    for (j, ms) in multisets(m.cols(), k_).iter().enumerate() {
        let mut acc: HashMap<Vec<usize>, Polynomial> = HashMap::new();
        acc.insert(Vec::new(), Polynomial::one());
        for &a in ms {
            let mut next: HashMap<Vec<usize>, Polynomial> = HashMap::new();
            for (key, c) in &acc {
                for i in 0..m.rows() {
                    let e = m.entry(i, a);
                    if e.is_zero() {
                        continue;
                    }
                    let mut nk = key.clone();
                    let pos = nk.partition_point(|&x| x <= i);
                    nk.insert(pos, i);
                    let slot = next.entry(nk).or_default();
                    *slot = slot.add(&c.mul(e, k), k);
                }
            }
            acc = next;
        }
        for (key, c) in acc {
            entries[row_index[&key]][j] = c;
        }
    }
    ModuleMap::new(source, target, entries).expect("symmetric power of a homogeneous map is homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GradedRing;

    #[test]
    fn wedge_two_of_identity() {
        let r = GradedRing::polynomial(3, 32003).unwrap();
        let id = ModuleMap::identity(&GradedFreeModule::uniform(2, 0));
        let w = exterior_power(&id, 2, r.field());
        assert_eq!(w.rows(), 1);
        assert_eq!(w.entry(0, 0), &Polynomial::one());
    }

    #[test]
    fn symmetric_square_of_diagonal() {
        let r = GradedRing::polynomial(2, 32003).unwrap();
        let k = r.field();
        let x = r.var(0);
        let y = r.var(1);
        let f = GradedFreeModule::uniform(2, -1);
        let g = GradedFreeModule::uniform(2, 0);
        let m = ModuleMap::new(f, g, vec![vec![x.clone(), Polynomial::zero()], vec![Polynomial::zero(), y.clone()]]).unwrap();
        let s = symmetric_power_map(&m, 2, k);
        // e0e0 -> x^2, e0e1 -> xy, e1e1 -> y^2
        assert_eq!(s.entry(0, 0), &x.mul(&x, k));
        assert_eq!(s.entry(1, 1), &x.mul(&y, k));
        assert_eq!(s.entry(2, 2), &y.mul(&y, k));
        assert!(s.entry(0, 1).is_zero());
    }
}
