mod common;

use gralg_kernel::random::random_form;
use gralg_kernel::{GradedRing, Polynomial, Fp};
use groebner_engine::{
    annihilator, codim, equidimensional_hull, ext_module, ext_series, ideal_equal, intersect, quotient,
    saturate, HilbertSeries, ModulePresentation,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(n: usize) -> GradedRing {
    GradedRing::polynomial(n, 32003).unwrap()
}

fn ps(r: &GradedRing, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|x| r.parse_poly(x).unwrap()).collect()
}

#[test]
fn colon_intersection_saturation() {
    let r = ring(3);
    let x = ps(&r, &["x0"]);
    let y = ps(&r, &["x1"]);
    assert!(ideal_equal(&r, &intersect(&r, &[x.clone(), y.clone()]).unwrap(), &ps(&r, &["x0*x1"])).unwrap());
    assert!(ideal_equal(&r, &quotient(&r, &ps(&r, &["x0*x1"]), &x).unwrap(), &y).unwrap());
    let emb = ps(&r, &["x0^2", "x0*x1"]);
    // The embedded point is a line here, so saturation leaves the ideal alone.
    assert!(ideal_equal(&r, &saturate(&r, &emb).unwrap(), &emb).unwrap());
    let r2 = ring(2);
    let emb2 = ps(&r2, &["x0^2", "x0*x1"]);
    assert!(ideal_equal(&r2, &saturate(&r2, &emb2).unwrap(), &ps(&r2, &["x0"])).unwrap());
    assert!(ideal_equal(&r, &equidimensional_hull(&r, &emb).unwrap(), &x).unwrap());
    let m2 = ps(&r, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"]);
    assert_eq!(saturate(&r, &m2).unwrap().len(), 1);
    assert_eq!(codim(&r, &emb).unwrap(), 1);
    assert_eq!(codim(&r, &m2).unwrap(), 3);
}

#[test]
fn ext_of_the_residue_field() {
    let r = ring(4);
    let m: Vec<Polynomial> = (0..4).map(|i| r.var(i)).collect();
    let k = ModulePresentation::cyclic(&r, &m);
    for i in 0..4 {
        assert!(ext_series(&k, i).unwrap().is_zero());
    }
    let e = ext_module(&k, 4).unwrap();
    let hs = e.hilbert_series().unwrap();
    assert_eq!(hs, HilbertSeries::from_numerator(4, -4, vec![1, -4, 6, -4, 1]));
    assert_eq!(hs, ext_series(&k, 4).unwrap());
}

#[test]
fn ext_over_a_hypersurface_ring() {
    let base = ring(3);
    let f = base.parse_poly("x0^2 + x1*x2").unwrap();
    let r = GradedRing::new(Fp::default(), base.var_names().to_vec(), vec![f]).unwrap();
    let rr = ModulePresentation::cyclic(&r, &[]);
    let e0 = ext_module(&rr, 0).unwrap();
    assert_eq!(e0.hilbert_series().unwrap(), rr.hilbert_series().unwrap());
    assert!(ext_series(&rr, 1).unwrap().is_zero());
    // A line on the quadric cone is Cohen-Macaulay of codimension 1 in a Gorenstein ring.
    let line = ModulePresentation::cyclic(&r, &ps(&r, &["x0", "x1"]));
    assert_eq!(line.depth().unwrap(), Some(1));
    assert!(ext_series(&line, 0).unwrap().is_zero());
    assert!(!ext_series(&line, 1).unwrap().is_zero());
    assert!(ext_series(&line, 2).unwrap().is_zero());
    assert_eq!(annihilator(&line).unwrap().len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ext_series_matches_presentation(seed in 0u64..10_000, degs in prop::collection::vec(1i32..3, 2..4)) {
        let r = ring(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut gens: Vec<Polynomial> = degs.iter().map(|&d| random_form(&r, d, &mut rng)).collect();
        gens[0] = gens[0].mul(&r.var(0), r.field());
        let m = ModulePresentation::cyclic(&r, &gens);
        for i in 0..=3 {
            let e = ext_module(&m, i).unwrap();
            prop_assert_eq!(e.hilbert_series().unwrap(), ext_series(&m, i).unwrap());
        }
    }

    #[test]
    fn annihilator_of_cyclic_module_is_the_ideal(seed in 0u64..10_000, degs in prop::collection::vec(1i32..3, 1..4)) {
        let r = ring(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Polynomial> = degs.iter().map(|&d| random_form(&r, d, &mut rng)).collect();
        let m = ModulePresentation::cyclic(&r, &gens);
        prop_assert!(ideal_equal(&r, &annihilator(&m).unwrap(), &gens).unwrap());
    }
}
