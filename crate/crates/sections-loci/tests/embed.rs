mod common;

use br_construct::cotangent;
use gralg_kernel::GradedRing;
use groebner_engine::{BettiTable, ModulePresentation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sections_loci::{ag_embed, ag_embed_even, analyze, verify_resolution, LociError, Status};

fn p3() -> GradedRing {
    GradedRing::polynomial(4, 32003).unwrap()
}

#[test]
fn four_general_points_lie_on_an_ag_scheme_of_degree_five() {
    let ring = p3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pts = common::random_points(&ring, 4, &mut rng);
    let i_x = common::points_ideal(&ring, &pts);
    let inst = cotangent(&ring).unwrap();
    let emb = ag_embed(&inst, &i_x, 3, &mut rng).unwrap();
    assert!(emb.contains_x && emb.gorenstein);
    assert_eq!((emb.y.degree, emb.y.dim), (5, 1));
    let mut expected = BettiTable::new();
    expected.add(0, 0, 1);
    expected.add(1, 2, 5);
    expected.add(2, 3, 5);
    expected.add(3, 5, 1);
    assert_eq!(emb.y.betti, expected);

    let rep = analyze(&emb.section).unwrap();
    assert!(!rep.failed(), "{:?}", rep.claims);
    let diff = verify_resolution(&emb.section, &rep);
    assert!(diff.mismatches.is_empty());
    assert!(diff.claims.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn complete_intersections_through_four_points_have_degree_eight() {
    // I_X has no linear forms, so a complete intersection through X has degree >= 2^3.
    let ring = p3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pts = common::random_points(&ring, 4, &mut rng);
    let i_x = common::points_ideal(&ring, &pts);
    let hs = ModulePresentation::cyclic(&ring, &i_x).hilbert_series().unwrap();
    assert_eq!(hs.values(0, 4), vec![1, 4, 4, 4]);
}

#[test]
fn single_point_embeds_in_degree_at_most_five() {
    let ring = p3();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pts = common::random_points(&ring, 1, &mut rng);
    let i_x = common::points_ideal(&ring, &pts);
    let inst = cotangent(&ring).unwrap();
    let emb = ag_embed(&inst, &i_x, 3, &mut rng).unwrap();
    assert!(emb.contains_x && emb.gorenstein);
    assert!(emb.y.degree <= 5 && emb.y.dim == 1);
}

#[test]
fn low_twist_has_no_section() {
    let ring = p3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pts = common::random_points(&ring, 4, &mut rng);
    let i_x = common::points_ideal(&ring, &pts);
    let inst = cotangent(&ring).unwrap();
    assert_eq!(ag_embed(&inst, &i_x, 2, &mut rng).unwrap_err(), LociError::NoSectionFound { degree: 2 });
}

#[test]
fn even_rank_is_rejected() {
    let ring = GradedRing::polynomial(3, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pts = common::random_points(&ring, 2, &mut rng);
    let i_x = common::points_ideal(&ring, &pts);
    let inst = cotangent(&ring).unwrap();
    assert!(matches!(ag_embed(&inst, &i_x, 3, &mut rng), Err(LociError::Range(_))));
}

#[test]
fn even_codimension_through_a_hypersurface() {
    let ring = GradedRing::polynomial(5, 32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pts = common::random_points(&ring, 1, &mut rng);
    let i_x = common::points_ideal(&ring, &pts);
    let emb = ag_embed_even(&ring, &i_x, 2, 3, &mut rng).unwrap();
    assert!(emb.inner.gorenstein);
    assert!(emb.contains_x && emb.gorenstein);
    assert_eq!(emb.y.dim, 1);
}
