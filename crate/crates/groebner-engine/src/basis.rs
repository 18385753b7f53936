use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap, Mono, Polynomial};

use crate::gb::{Engine, Term};
use crate::hilbert::{monomial_ideal_numerator, HilbertSeries};
use crate::order::{ModuleOrder, OrderKind};
use crate::GbError;

pub(crate) fn encode_column(ord: &ModuleOrder, col: &[Polynomial]) -> Vec<Term> {
    let mut v: Vec<Term> = Vec::new();
    for (c, p) in col.iter().enumerate() {
        for &(m, coef) in p.terms() {
            v.push((ord.encode(m, c as u32), coef));
        }
    }
    v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    v
}

/// Splits a vector over components `offset..offset+rank` back into polynomials.
pub(crate) fn decode_range(ord: &ModuleOrder, v: &[Term], offset: usize, rank: usize) -> Vec<Polynomial> {
    let mut buckets: Vec<Vec<(Mono, u32)>> = vec![Vec::new(); rank];
    for &(key, coef) in v {
        let c = ord.comp(key) as usize;
        if c >= offset && c < offset + rank {
            buckets[c - offset].push((ord.mono(key), coef));
        }
    }
    buckets.into_iter().map(Polynomial::from_sorted_terms).collect()
}

/// Reduced Gröbner basis of a graded submodule of a free module.
#[derive(Debug)]
pub struct GroebnerBasis {
    engine: Engine,
    module: GradedFreeModule,
    nvars: usize,
}

impl GroebnerBasis {
    /// Grevlex with term-over-position on the free module.
    pub fn compute(ring: &GradedRing, module: &GradedFreeModule, gens: &[Vec<Polynomial>]) -> Result<GroebnerBasis, GbError> {
        Self::with_order(ring, module, gens, OrderKind::TermOverPosition)
    }

    pub fn with_order(
        ring: &GradedRing,
        module: &GradedFreeModule,
        gens: &[Vec<Polynomial>],
        kind: OrderKind,
    ) -> Result<GroebnerBasis, GbError> {
        let ord = ModuleOrder::new(kind, module);
        let inputs = gens.iter().map(|c| encode_column(&ord, c)).collect();
        let mut engine = Engine::new(ord, ring.field(), ring.max_degree());
        engine.run(inputs)?;
        Ok(GroebnerBasis { engine, module: module.clone(), nvars: ring.nvars() })
    }

    /// Basis of the image of a map.
    pub fn of_image(ring: &GradedRing, map: &ModuleMap) -> Result<GroebnerBasis, GbError> {
        Self::compute(ring, map.target(), &map.columns())
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.engine.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.engine.elems.is_empty()
    }

    /// Elements as columns, sorted by degree then insertion.
    pub fn elements(&self) -> Vec<Vec<Polynomial>> {
        self.engine
            .elems
            .iter()
            .map(|e| decode_range(&self.engine.ord, &e.v, 0, self.module.rank()))
            .collect()
    }

    /// Leading terms as `(component, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Mono)> {
        self.engine.elems.iter().map(|e| (e.comp as usize, e.lm)).collect()
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let ord = &self.engine.ord;
        let r = self.engine.reduce(encode_column(ord, v));
        decode_range(ord, &r, 0, self.module.rank())
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.normal_form(v).iter().all(Polynomial::is_zero)
    }

    /// Indices of the input generators that were not redundant, in input order.
    pub fn minimal_input_indices(&self) -> Vec<usize> {
        (0..self.engine.input_elem.len()).filter(|&i| self.engine.input_elem[i].is_some()).collect()
    }

    /// Series of `F / U`.
    pub fn quotient_series(&self) -> HilbertSeries {
        let mut per_comp: Vec<Vec<Mono>> = vec![Vec::new(); self.module.rank()];
        for e in &self.engine.elems {
            per_comp[e.comp as usize].push(e.lm);
        }
        let mut acc = HilbertSeries::zero(self.nvars);
        for (c, lms) in per_comp.iter().enumerate() {
            let num = monomial_ideal_numerator(lms, self.nvars);
            acc = acc.add(&HilbertSeries::from_numerator(self.nvars, self.module.degree(c), num));
        }
        acc
    }

    /// Series of `U` itself.
    pub fn submodule_series(&self) -> HilbertSeries {
        HilbertSeries::free(self.nvars, &self.module).sub(&self.quotient_series())
    }
}
