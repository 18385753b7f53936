use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap, Polynomial};

use crate::basis::{decode_range, encode_column};
use crate::gb::{Engine, Origin, Term};
use crate::order::{ModuleOrder, OrderKind};
use crate::GbError;

/// Columns `q * e_c` for each quotient generator `q` and each component `c`.
pub fn quotient_relations(ring: &GradedRing, module: &GradedFreeModule) -> ModuleMap {
    let q = ring.quotient();
    let mut cols = Vec::new();
    let mut twists = Vec::new();
    for c in 0..module.rank() {
        for g in q {
            let mut col = vec![Polynomial::zero(); module.rank()];
            col[c] = g.clone();
            cols.push(col);
            twists.push(module.twists()[c] - g.degree().unwrap_or(0) as i32);
        }
    }
    ModuleMap::from_columns(module.clone(), cols, twists).expect("quotient relations are homogeneous")
}

/// Subset of the columns of `map` minimally generating its image.
pub fn minimal_generators(ring: &GradedRing, map: &ModuleMap) -> Result<ModuleMap, GbError> {
    let keep = minimal_generator_indices(ring, map)?;
    Ok(map.select_columns(&keep))
}

pub fn minimal_generator_indices(ring: &GradedRing, map: &ModuleMap) -> Result<Vec<usize>, GbError> {
    let ord = ModuleOrder::new(OrderKind::TermOverPosition, map.target());
    let inputs = map.columns().iter().map(|c| encode_column(&ord, c)).collect();
    let mut e = Engine::new(ord, ring.field(), ring.max_degree());
    e.run(inputs)?;
    let mut keep: Vec<usize> = (0..map.cols()).filter(|&j| e.input_elem[j].is_some()).collect();
    keep.sort_by_key(|&j| (map.source().degree(j), j));
    Ok(keep)
}

/// Minimal generators of `ker(map)`, as a map into `map.source()`.
pub fn syzygies(ring: &GradedRing, map: &ModuleMap) -> Result<ModuleMap, GbError> {
    syzygies_modulo(ring, map, None)
}

/// Minimal generators of `{u : map(u) ∈ image(modulo)}`.
pub fn syzygies_modulo(ring: &GradedRing, map: &ModuleMap, modulo: Option<&ModuleMap>) -> Result<ModuleMap, GbError> {
    let src = map.source();
    let tgt = map.target();
    let r = tgt.rank();
    let ord = ModuleOrder::with_blocks(OrderKind::TermOverPosition, &[tgt, src]);
    let mut inputs: Vec<Vec<Term>> = Vec::new();
    for (j, col) in map.columns().into_iter().enumerate() {
        let mut full = col;
        full.extend((0..src.rank()).map(|i| if i == j { Polynomial::one() } else { Polynomial::zero() }));
        inputs.push(encode_column(&ord, &full));
    }
    if let Some(n) = modulo {
        if n.target() != tgt {
            return Err(GbError::Invalid("modulo map has a different target".into()));
        }
        for col in n.columns() {
            let mut full = col;
            full.resize(r + src.rank(), Polynomial::zero());
            inputs.push(encode_column(&ord, &full));
        }
    }
    let mut e = Engine::new(ord, ring.field(), ring.max_degree());
    e.run(inputs)?;
    let mut found: Vec<(i32, usize)> = Vec::new();
    for (idx, el) in e.elems.iter().enumerate() {
        if el.block == 1 && el.origin != Origin::LowPair {
            found.push((el.deg, idx));
        }
    }
    found.sort();
    let mut cols = Vec::with_capacity(found.len());
    let mut twists = Vec::with_capacity(found.len());
    for &(d, idx) in &found {
        cols.push(decode_range(&e.ord, &e.elems[idx].v, r, src.rank()));
        twists.push(-d);
    }
    Ok(ModuleMap::from_columns(src.clone(), cols, twists)?)
}
