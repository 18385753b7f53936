use cli_verify::commands::{construct, recipe, RecipeParams};
use cli_verify::{CliError, InstanceFile, PsiSpec};
use proptest::prelude::*;

const COTANGENT: &str = "\
# cotangent of P3, one section of twist 3
[ring]
p=32003
vars=x0,x1,x2,x3
quotient=
[F]
twists=-1,-1,-1,-1
[G]
twists=0
[phi]
x0; x1;x2 ;  x3
[P]
twists=-3
[psi]
seed=7
";

fn params(n: usize, seed: u64) -> RecipeParams {
    RecipeParams { n, degrees: vec![1; n + 1], k: 2, twist: None, points: 4, seed, characteristic: 32003 }
}

#[test]
fn parse_then_print_is_canonical() {
    let file = InstanceFile::parse(COTANGENT).unwrap();
    assert_eq!(file.phi, vec![vec!["x0", "x1", "x2", "x3"]]);
    assert_eq!(file.psi, Some(PsiSpec::Seed(7)));
    let text = file.to_text();
    assert_eq!(InstanceFile::parse(&text).unwrap(), file);
    assert_eq!(InstanceFile::parse(&text).unwrap().to_text(), text);
}

#[test]
fn explicit_section_lifts_to_the_same_ideal() {
    let seeded = InstanceFile::parse(COTANGENT).unwrap().build(None).unwrap().section.unwrap();
    let explicit = InstanceFile::from_section(&seeded);
    let again = InstanceFile::parse(&explicit.to_text()).unwrap().build(None).unwrap().section.unwrap();
    assert_eq!(again.psi, seeded.psi);
    assert_eq!(again.ideal, seeded.ideal);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let bad = COTANGENT.replace("x0; x1;x2 ;  x3", "x0; x1; x2 +* x3; x3");
    match InstanceFile::parse(&bad) {
        Err(CliError::Parse { line, .. }) => assert_eq!(line, 11),
        other => panic!("{other:?}"),
    }
    let short = COTANGENT.replace("x0; x1;x2 ;  x3", "x0; x1");
    assert!(matches!(InstanceFile::parse(&short), Err(CliError::Parse { line: 11, .. })));
    let unknown = COTANGENT.replace("[G]", "[H]");
    assert!(matches!(InstanceFile::parse(&unknown), Err(CliError::Parse { line: 8, .. })));
}

#[test]
fn non_section_is_rejected_by_name() {
    let text = COTANGENT.replace("seed=7", "x1^2\nx0^2\nx3^2\nx2^2");
    let err = InstanceFile::parse(&text).unwrap().build(None).err().unwrap();
    assert!(err.to_string().contains("phi ∘ psi is not zero"), "{err}");
}

#[test]
fn degenerate_phi_fails_validation() {
    let text = COTANGENT.replace("x0; x1;x2 ;  x3", "x0; x1; x0; x1");
    assert!(matches!(InstanceFile::parse(&text).unwrap().build(None), Err(CliError::Br(_))));
}

#[test]
fn recipes_produce_valid_files() {
    for name in ["cotangent", "mk", "ag-embed"] {
        let file = recipe(name, &params(3, 1)).unwrap();
        assert!(file.build(None).unwrap().section.is_some(), "{name}");
    }
    let nc = recipe("null-correlation", &params(3, 1)).unwrap();
    assert_eq!(nc.p, Some(vec![-2]));
    assert!(recipe("nope", &params(3, 1)).is_err());
    assert!(recipe("null-correlation", &params(2, 1)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn constructed_files_roundtrip(seed in 0u64..10_000, n in 3usize..=4, extra in 0usize..=1) {
        let f = vec![-1; 2 + extra + 1];
        let file = construct(n, &f, &[0], &[-3], seed, 32003).unwrap();
        let text = file.to_text();
        let parsed = InstanceFile::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(parsed.to_text(), text);
    }
}
