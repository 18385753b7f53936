use gralg_kernel::random::random_map;
use gralg_kernel::{GradedFreeModule, GradedRing};
use koszul_complexes::{spliced_complex_d, spliced_terms};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn spliced_complexes_are_complexes() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (f, g) in [(4usize, 1usize), (5, 2), (6, 2), (5, 1)] {
        let phi = random_map(&ring, &GradedFreeModule::uniform(f, -1), &GradedFreeModule::uniform(g, 0), &mut rng);
        for i in 0..=(f - g) {
            let d = spliced_complex_d(&phi, i, ring.field()).unwrap();
            assert!(d.check_dd_zero(ring.field()), "f={f} g={g} i={i}");
            assert_eq!(d.modules(), &spliced_terms(phi.source(), phi.target(), i)[..]);
        }
    }
}

fn exact_above_zero(ring: &GradedRing, d: &gralg_kernel::FreeComplex) {
    for m in 1..=d.end() {
        let h = groebner_engine::homology_series(ring, &d.differential(m), &d.differential(m + 1)).unwrap();
        assert!(h.is_zero(), "homology in position {m}");
    }
}

#[test]
fn d_zero_resolves_the_minor_quotient() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let k = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let phi = random_map(&ring, &GradedFreeModule::uniform(4, -1), &GradedFreeModule::uniform(1, 0), &mut rng);
    let d = spliced_complex_d(&phi, 0, k).unwrap();
    assert_eq!(d.ranks(), vec![1, 4, 6, 4, 1]);
    exact_above_zero(&ring, &d);
    let minors = gralg_kernel::minors(&phi, 1, k);
    let h0 = groebner_engine::cokernel_series(&ring, &d.differential(1)).unwrap();
    assert_eq!(h0, groebner_engine::cokernel_series(&ring, &groebner_engine::ideal_map(&minors)).unwrap());
}

#[test]
fn d_one_resolves_the_cokernel() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let k = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (f, g) in [(4usize, 1usize), (5, 2)] {
        let phi = random_map(&ring, &GradedFreeModule::uniform(f, -1), &GradedFreeModule::uniform(g, 0), &mut rng);
        let d = spliced_complex_d(&phi, 1, k).unwrap();
        exact_above_zero(&ring, &d);
        assert_eq!(
            groebner_engine::cokernel_series(&ring, &d.differential(1)).unwrap(),
            groebner_engine::cokernel_series(&ring, &phi).unwrap()
        );
        for i in 2..=(f - g) {
            exact_above_zero(&ring, &spliced_complex_d(&phi, i, k).unwrap());
        }
    }
}

#[test]
fn d_zero_of_the_power_map_gives_the_square_of_the_maximal_ideal() {
    let ring = GradedRing::polynomial(3, 32003).unwrap();
    let k = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let phi = random_map(&ring, &GradedFreeModule::uniform(4, -1), &GradedFreeModule::uniform(2, 0), &mut rng);
    let d = spliced_complex_d(&phi, 0, k).unwrap();
    exact_above_zero(&ring, &d);
    let h0 = groebner_engine::cokernel_series(&ring, &d.differential(1)).unwrap();
    // R/m^2 in three variables: 1 + 3t.
    assert_eq!(h0.values(0, 4), vec![1, 3, 0, 0]);
}

#[test]
fn rejects_bad_ranks() {
    let ring = GradedRing::polynomial(3, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let phi = random_map(&ring, &GradedFreeModule::uniform(2, -1), &GradedFreeModule::uniform(2, 0), &mut rng);
    assert!(spliced_complex_d(&phi, 0, ring.field()).is_err());
}
