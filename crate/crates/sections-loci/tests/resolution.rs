use br_construct::cotangent;
use gralg_kernel::{GradedFreeModule, GradedRing, ModuleMap, Polynomial};
use groebner_engine::BettiTable;
use sections_loci::{analyze, build_case, build_section, is_symmetric, verify_resolution, BatteryCase, SectionSource, Status};

fn run(n: usize, r: usize, t: usize) -> sections_loci::ResolutionDiff {
    let sec = build_case(&BatteryCase { n, r, t, g: 1, seed: 0 }, 32003).unwrap();
    let rep = analyze(&sec).unwrap();
    verify_resolution(&sec, &rep)
}

#[test]
fn generic_tables_match_on_full_rank_cases() {
    for (n, r, t) in [(3, 3, 1), (4, 4, 1), (3, 3, 2), (4, 4, 3)] {
        let diff = run(n, r, t);
        assert!(diff.mismatches.is_empty(), "({n}, {r}, {t}): {:?}", diff.mismatches);
        assert!(diff.claims.iter().all(|c| c.status == Status::Pass));
    }
}

#[test]
fn odd_rank_single_section_table_is_symmetric() {
    let diff = run(3, 3, 1);
    assert!(is_symmetric(&diff.computed));
    assert!(diff.claims.iter().any(|c| c.name == "self-dual resolution" && c.status == Status::Pass));
}

#[test]
fn even_rank_single_section_table_has_the_stated_shape() {
    let diff = run(4, 4, 1);
    assert!(diff.claims.iter().any(|c| c.name == "even rank resolution" && c.status == Status::Pass));
}

#[test]
fn two_sections_of_rank_four_on_p4() {
    // Reduced-size stand-in for the rank six and seven displays.
    let diff = run(4, 4, 2);
    assert!(diff.mismatches.is_empty());
    assert_eq!(diff.computed.projective_dimension(), 3);
}

#[test]
fn minimal_generator_section_is_a_complete_intersection() {
    let ring = GradedRing::polynomial(3, 32003).unwrap();
    let inst = cotangent(&ring).unwrap();
    let gens = inst.b_embedding.source().clone();
    let mut e = vec![vec![Polynomial::zero()]; gens.rank()];
    e[0][0] = Polynomial::one();
    let c = ModuleMap::new(GradedFreeModule::uniform(1, gens.twists()[0]), gens, e).unwrap();
    let sec = build_section(&inst, c.source(), SectionSource::Coefficients(c.clone())).unwrap();
    let rep = analyze(&sec).unwrap();
    let diff = verify_resolution(&sec, &rep);
    let mut ci = BettiTable::new();
    ci.add(0, 0, 1);
    ci.add(1, 1, 2);
    ci.add(2, 2, 1);
    assert_eq!(diff.computed, ci);
    assert_eq!(diff.predicted.total(1), 3);
    assert!(diff.consecutive_cancellation);
    assert_eq!(diff.claims.len(), 1);
    assert_eq!(diff.claims[0].status, Status::NotApplicable);
}
