#![allow(dead_code)]

use gralg_kernel::random::{random_form, random_map};
use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap, Polynomial};
use groebner_engine::syzygies;
use rand::Rng;

pub fn generic_phi(ring: &GradedRing, f: &[i32], g: &[i32], rng: &mut impl Rng) -> ModuleMap {
    random_map(ring, &GradedFreeModule::new(f.to_vec()), &GradedFreeModule::new(g.to_vec()), rng)
}

/// `t` random sections of `ker φ`, each a combination of syzygy generators, of twist `p`.
pub fn random_section(ring: &GradedRing, phi: &ModuleMap, p: &[i32], rng: &mut impl Rng) -> ModuleMap {
    let k = ring.field();
    let syz = syzygies(ring, phi).unwrap();
    let mut cols = Vec::new();
    for &pt in p {
        let mut col = vec![Polynomial::zero(); phi.cols()];
        for j in 0..syz.cols() {
            let d = syz.source().twists()[j] - pt;
            if d < 0 {
                continue;
            }
            let c = random_form(ring, d, rng);
            for (i, slot) in col.iter_mut().enumerate() {
                *slot = slot.add(&c.mul(syz.entry(i, j), k), k);
            }
        }
        cols.push(col);
    }
    ModuleMap::from_columns(phi.source().clone(), cols, p.to_vec()).unwrap()
}
