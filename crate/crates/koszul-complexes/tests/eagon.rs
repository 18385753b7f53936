mod common;

use common::{generic_phi, random_section};
use gralg_kernel::{symmetric_power_module, GradedFreeModule, GradedRing};
use groebner_engine::{cokernel_series, HilbertSeries};
use koszul_complexes::{eagon_northcott_e, koszul_piece, splice_twist};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sym_m_series(ring: &GradedRing, phi: &gralg_kernel::ModuleMap, j: usize) -> HilbertSeries {
    if j == 0 {
        return HilbertSeries::free(ring.nvars(), &GradedFreeModule::uniform(1, 0));
    }
    cokernel_series(ring, &koszul_piece(phi, 0, j - 1, ring.field()).unwrap()).unwrap()
}

#[test]
fn totalization_is_a_complex() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (f, t) in [(4usize, 1usize), (4, 2), (5, 2)] {
        let phi = generic_phi(&ring, &vec![-1; f], &[0], &mut rng);
        let psi = random_section(&ring, &phi, &vec![-2; t], &mut rng);
        let e = eagon_northcott_e(&phi, &psi, ring.field()).unwrap();
        assert!(e.total.check_dd_zero(ring.field()), "f={f} t={t}");
    }
}

#[test]
fn rank_four_single_section_homology() {
    let ring = GradedRing::polynomial(5, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let phi = generic_phi(&ring, &[-1; 5], &[0], &mut rng);
    let psi = random_section(&ring, &phi, &[-2], &mut rng);
    let e = eagon_northcott_e(&phi, &psi, ring.field()).unwrap();
    let n = ring.nvars();
    let c = splice_twist(&phi);
    let twist = GradedFreeModule::uniform(1, -c);
    let predicted = sym_m_series(&ring, &phi, 1)
        .tensor_free(&symmetric_power_module(psi.source(), 2))
        .tensor_free(&twist);
    assert_eq!(e.homology_series(&ring, 1).unwrap(), predicted);
    for m in 2..=8 {
        assert!(e.homology_series(&ring, m).unwrap().is_zero(), "H_{m}");
    }
    // E* cohomology at 3 is S_1(M) ⊗ S_0(P)*; top pair is -S_2(M) ⊗ P*.
    assert_eq!(e.dual_cohomology_series(&ring, 3).unwrap(), sym_m_series(&ring, &phi, 1));
    for i in [1, 2] {
        assert!(e.dual_cohomology_series(&ring, i).unwrap().is_zero(), "H^{i}");
    }
    let top = sym_m_series(&ring, &phi, 2).tensor_free(&psi.source().dual());
    assert_eq!(e.dual_top_difference(&ring).unwrap(), HilbertSeries::zero(n).sub(&top));
}
