use br_construct::random_instance;
use gralg_kernel::random::random_map;
use gralg_kernel::{minors, GradedFreeModule, GradedRing};
use groebner_engine::{power_of_maximal_ideal, ModulePresentation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sections_loci::{build_case, tor_splitting_check, BatteryCase};

#[test]
fn residue_field_is_koszul_symmetric() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let rep = tor_splitting_check(&ModulePresentation::cyclic(&ring, &power_of_maximal_ideal(&ring, 1))).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.projective_dimension, 4);
    assert!(rep.inequalities.iter().all(|x| x.lhs == x.rhs));
}

#[test]
fn cohen_macaulay_module_has_exact_top_equality() {
    // Cone over a twisted cubic: maximal minors of a generic 2x3 linear matrix.
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let m = random_map(&ring, &GradedFreeModule::uniform(3, -1), &GradedFreeModule::uniform(2, 0), &mut rng);
    let module = ModulePresentation::cyclic(&ring, &minors(&m, 2, ring.field()));
    assert!(module.is_cohen_macaulay().unwrap());
    let rep = tor_splitting_check(&module).unwrap();
    assert!(rep.passed() && rep.top_equality);
}

#[test]
fn symmetric_power_module_passes() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let inst = random_instance(&ring, &GradedFreeModule::uniform(4, -1), &GradedFreeModule::uniform(1, 0), &mut rng).unwrap();
    assert!(tor_splitting_check(&inst.m_phi).unwrap().passed());
}

#[test]
fn even_parity_degeneracy_locus_passes() {
    let sec = build_case(&BatteryCase { n: 4, r: 3, t: 1, g: 1, seed: 3 }, 32003).unwrap();
    let rep = tor_splitting_check(&ModulePresentation::cyclic(&sec.br.ring, &sec.ideal)).unwrap();
    assert!(rep.passed(), "{:?}", rep.inequalities);
}
