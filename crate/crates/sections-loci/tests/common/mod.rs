#![allow(dead_code)]

use gralg_kernel::{GradedRing, Polynomial};
use groebner_engine::intersect;
use rand::Rng;

/// Linear forms cutting out one point.
pub fn point_ideal(ring: &GradedRing, p: &[u32]) -> Vec<Polynomial> {
    let k = ring.field();
    let a = p.iter().position(|&c| c != 0).expect("nonzero point");
    (0..p.len())
        .filter(|&i| i != a)
        .map(|i| ring.var(i).scale(p[a], k).sub(&ring.var(a).scale(p[i], k), k))
        .collect()
}

pub fn random_points<R: Rng>(ring: &GradedRing, count: usize, rng: &mut R) -> Vec<Vec<u32>> {
    let q = ring.characteristic();
    (0..count).map(|_| (0..ring.nvars()).map(|_| rng.gen_range(1..q)).collect()).collect()
}

pub fn points_ideal(ring: &GradedRing, points: &[Vec<u32>]) -> Vec<Polynomial> {
    let ideals: Vec<Vec<Polynomial>> = points.iter().map(|p| point_ideal(ring, p)).collect();
    intersect(ring, &ideals).unwrap()
}
