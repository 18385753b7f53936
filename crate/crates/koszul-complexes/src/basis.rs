use std::collections::HashMap;

use gralg_kernel::combinat::{multisets, subsets};
use gralg_kernel::{Fp, GradedFreeModule, KernelError, ModuleMap, Polynomial};

/// Ordered basis of `∧^k` or `S_k` of a free module, with reverse lookup.
pub(crate) struct Words {
    pub list: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Words {
    pub fn subsets(n: usize, k: usize) -> Words {
        Self::from_list(subsets(n, k))
    }

    pub fn multisets(n: usize, k: usize) -> Words {
        Self::from_list(multisets(n, k))
    }

    fn from_list(list: Vec<Vec<usize>>) -> Words {
        let index = list.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Words { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn pos(&self, w: &[usize]) -> usize {
        self.index[w]
    }
}

/// Dense accumulator for a matrix of polynomials.
pub(crate) struct MatrixBuilder {
    k: Fp,
    rows: Vec<Vec<Polynomial>>,
}

impl MatrixBuilder {
    pub fn new(k: Fp, nrows: usize, ncols: usize) -> MatrixBuilder {
        MatrixBuilder { k, rows: vec![vec![Polynomial::zero(); ncols]; nrows] }
    }

    pub fn add(&mut self, i: usize, j: usize, p: &Polynomial, sign: i32) {
        if p.is_zero() {
            return;
        }
        let e = &mut self.rows[i][j];
        *e = if sign > 0 { e.add(p, self.k) } else { e.sub(p, self.k) };
    }

    pub fn build(self, source: GradedFreeModule, target: GradedFreeModule) -> Result<ModuleMap, KernelError> {
        ModuleMap::new(source, target, self.rows)
    }
}

/// Sorted insertion of `x` into a multiset.
pub(crate) fn insert_sorted(m: &[usize], x: usize) -> Vec<usize> {
    let mut v = m.to_vec();
    let pos = v.partition_point(|&y| y <= x);
    v.insert(pos, x);
    v
}

/// Number of occurrences of `x` in a multiset, and the multiset with one removed.
pub(crate) fn remove_one(m: &[usize], x: usize) -> Option<(u32, Vec<usize>)> {
    let count = m.iter().filter(|&&y| y == x).count() as u32;
    if count == 0 {
        return None;
    }
    let mut v = m.to_vec();
    let pos = v.iter().position(|&y| y == x).unwrap();
    v.remove(pos);
    Some((count, v))
}
