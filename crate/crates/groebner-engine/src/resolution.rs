use gralg_kernel::{Fp, FreeComplex, GradedFreeModule, GradedRing, ModuleMap, Polynomial};

use crate::syzygy::{minimal_generators, syzygies};
use crate::GbError;

fn unit_of(p: &Polynomial) -> Option<u32> {
    if !p.is_zero() && p.is_constant() {
        Some(p.constant_term())
    } else {
        None
    }
}

fn find_unit(rows: &[Vec<Polynomial>]) -> Option<(usize, usize, u32)> {
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if let Some(u) = unit_of(e) {
                return Some((i, j, u));
            }
        }
    }
    None
}

/// `A[i][j] -= A[i][b] * A[a][j] / u` for all `i != a`, `j != b`, then drop row `a` and column `b`.
fn eliminate(k: Fp, rows: &mut Vec<Vec<Polynomial>>, a: usize, b: usize, u: u32) {
    let ui = k.inv(u);
    let pivot_row = rows[a].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == a || row[b].is_zero() {
            continue;
        }
        let f = row[b].scale(ui, k);
        for (j, e) in row.iter_mut().enumerate() {
            if j != b && !pivot_row[j].is_zero() {
                *e = e.sub(&f.mul(&pivot_row[j], k), k);
            }
        }
    }
    rows.remove(a);
    for row in rows.iter_mut() {
        row.remove(b);
    }
}

fn remove_index(m: &GradedFreeModule, idx: usize) -> GradedFreeModule {
    let mut t = m.twists().to_vec();
    t.remove(idx);
    GradedFreeModule::new(t)
}

/// Removes generators killed by unit entries of a presentation matrix. The cokernel is unchanged.
pub fn prune_presentation(k: Fp, rel: &ModuleMap) -> ModuleMap {
    let mut rows = rel.entries().to_vec();
    let mut src = rel.source().clone();
    let mut tgt = rel.target().clone();
    while let Some((a, b, u)) = find_unit(&rows) {
        eliminate(k, &mut rows, a, b, u);
        tgt = remove_index(&tgt, a);
        src = remove_index(&src, b);
    }
    ModuleMap::new(src, tgt, rows).expect("elimination keeps degrees")
}

/// Splits off trivial `R(a) -> R(a)` summands until every differential has entries in the
/// maximal ideal.
pub fn minimalize(k: Fp, c: &FreeComplex) -> FreeComplex {
    let mut modules = c.modules().to_vec();
    let mut maps: Vec<Vec<Vec<Polynomial>>> = c.maps().iter().map(|d| d.entries().to_vec()).collect();
    loop {
        let hit = maps.iter().enumerate().find_map(|(idx, rows)| find_unit(rows).map(|h| (idx, h)));
        let Some((idx, (a, b, u))) = hit else { break };
        eliminate(k, &mut maps[idx], a, b, u);
        if idx + 1 < maps.len() {
            maps[idx + 1].remove(b);
        }
        if idx > 0 {
            for row in maps[idx - 1].iter_mut() {
                row.remove(a);
            }
        }
        modules[idx] = remove_index(&modules[idx], a);
        modules[idx + 1] = remove_index(&modules[idx + 1], b);
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(i, rows)| ModuleMap::new(modules[i + 1].clone(), modules[i].clone(), rows).expect("degrees kept"))
        .collect();
    FreeComplex::new_unchecked(modules, maps, c.start()).expect("shapes kept")
}

/// Minimal free resolution over the ambient polynomial ring of `coker(rel)`.
///
/// `rel` must already contain any quotient-ring relations.
pub fn resolve_cokernel(ring: &GradedRing, rel: &ModuleMap) -> Result<FreeComplex, GbError> {
    let k = ring.field();
    let pruned = prune_presentation(k, rel);
    let f0 = pruned.target().clone();
    let mut modules = vec![f0];
    let mut maps: Vec<ModuleMap> = Vec::new();
    if modules[0].is_zero() {
        return Ok(FreeComplex::new_unchecked(modules, maps, 0)?);
    }
    let mut cur = minimal_generators(ring, &pruned)?;
    let limit = ring.nvars() + 1;
    while cur.cols() > 0 {
        if maps.len() >= limit {
            return Err(GbError::ResolutionTooLong(limit));
        }
        let next = syzygies(ring, &cur)?;
        modules.push(cur.source().clone());
        maps.push(cur);
        cur = next;
    }
    Ok(FreeComplex::new_unchecked(modules, maps, 0)?)
}
