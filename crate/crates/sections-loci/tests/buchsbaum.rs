use br_construct::{cotangent, power_map};
use gralg_kernel::{GradedFreeModule, GradedRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sections_loci::{build_case, build_section, k_buchsbaum_check, BatteryCase, SectionInstance, SectionSource, Status};

fn linear_section(inst: &br_construct::BrInstance, t: usize, seed: u64) -> SectionInstance {
    let top = inst.b_embedding.source().twists().iter().copied().min().unwrap();
    build_section(inst, &GradedFreeModule::uniform(t, top - 1), SectionSource::Seed(seed)).unwrap()
}

#[test]
fn cotangent_cohomology_is_killed_by_m() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let sec = linear_section(&cotangent(&ring).unwrap(), 1, 1);
    let rep = k_buchsbaum_check(&sec, 1).unwrap();
    assert!(!rep.positions.is_empty());
    assert_eq!(rep.claim.status, Status::Pass);
}

#[test]
fn square_of_maximal_ideal_instance_is_two_buchsbaum_exactly() {
    let ring = GradedRing::polynomial(4, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let inst = power_map(&ring, 2, &mut rng).unwrap();
    assert_eq!(inst.r, 3);
    let sec = linear_section(&inst, 1, 2);
    let rep = k_buchsbaum_check(&sec, 2).unwrap();
    assert_eq!(rep.positions.len(), 1);
    assert!(rep.positions[0].contains_power && !rep.positions[0].contains_lower_power);
    assert_eq!(rep.claim.status, Status::Pass);
    assert_eq!(k_buchsbaum_check(&sec, 1).unwrap().claim.status, Status::Fail);
}

#[test]
fn acm_case_is_vacuous() {
    let sec = build_case(&BatteryCase { n: 3, r: 2, t: 1, g: 1, seed: 0 }, 32003).unwrap();
    let rep = k_buchsbaum_check(&sec, 1).unwrap();
    assert!(rep.positions.is_empty());
    assert_eq!(rep.claim.status, Status::NotApplicable);
}
