use br_construct::{cotangent, null_correlation_recipe, power_map, random_instance};
use gralg_kernel::{GradedFreeModule, GradedRing, Polynomial};
use groebner_engine::intersect;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sections_loci::{ag_embed, build_case, BatteryCase};

use crate::battery::BatterySpec;
use crate::instance_file::{InstanceFile, PsiSpec};
use crate::report::{report_for, ReportJson};
use crate::CliError;

pub fn construct(n: usize, f: &[i32], g: &[i32], p: &[i32], seed: u64, characteristic: u32) -> Result<InstanceFile, CliError> {
    let ring = GradedRing::polynomial(n + 1, characteristic)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let br = random_instance(&ring, &GradedFreeModule::new(f.to_vec()), &GradedFreeModule::new(g.to_vec()), &mut rng)?;
    let file = if p.is_empty() {
        InstanceFile::from_parts(&br, None, None)
    } else {
        InstanceFile::from_parts(&br, Some(&GradedFreeModule::new(p.to_vec())), Some(PsiSpec::Seed(seed)))
    };
    file.build(None)?;
    Ok(file)
}

pub fn analyze_text(text: &str, max_degree: Option<u32>) -> Result<ReportJson, CliError> {
    let file = InstanceFile::parse(text)?;
    let built = file.build(max_degree)?;
    let sec = built.section.ok_or_else(|| CliError::Invalid("the file has no [P]/[psi] section".into()))?;
    report_for(&sec)
}

pub fn battery(spec: &BatterySpec, seeds: u64, characteristic: u32) -> Vec<(BatteryCase, Result<ReportJson, CliError>)> {
    spec.cases(seeds)
        .into_iter()
        .map(|case| {
            let r = build_case(&case, characteristic).map_err(CliError::from).and_then(|sec| report_for(&sec));
            (case, r)
        })
        .collect()
}

/// Named recipe parameters; unused ones are ignored by a recipe.
#[derive(Clone, Debug)]
pub struct RecipeParams {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub k: usize,
    pub twist: Option<i32>,
    pub points: usize,
    pub seed: u64,
    pub characteristic: u32,
}

fn linear_section_twist(file_br: &br_construct::BrInstance) -> i32 {
    file_br.b_embedding.source().twists().iter().copied().min().unwrap_or(0) - 1
}

fn random_points_ideal<R: Rng>(ring: &GradedRing, count: usize, rng: &mut R) -> Result<Vec<Polynomial>, CliError> {
    let k = ring.field();
    let q = ring.characteristic();
    let ideals: Vec<Vec<Polynomial>> = (0..count)
        .map(|_| {
            let pt: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(1..q)).collect();
            (1..pt.len()).map(|i| ring.var(i).scale(pt[0], k).sub(&ring.var(0).scale(pt[i], k), k)).collect()
        })
        .collect();
    Ok(intersect(ring, &ideals)?)
}

pub fn recipe(name: &str, params: &RecipeParams) -> Result<InstanceFile, CliError> {
    let ring = GradedRing::polynomial(params.n + 1, params.characteristic)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    match name {
        "cotangent" => {
            let br = cotangent(&ring)?;
            let p = GradedFreeModule::uniform(1, -params.twist.unwrap_or(3));
            let file = InstanceFile::from_parts(&br, Some(&p), Some(PsiSpec::Seed(params.seed)));
            file.build(None)?;
            Ok(file)
        }
        "mk" => {
            let br = power_map(&ring, params.k, &mut rng)?;
            let p = GradedFreeModule::uniform(1, params.twist.map(|d| -d).unwrap_or_else(|| linear_section_twist(&br)));
            let file = InstanceFile::from_parts(&br, Some(&p), Some(PsiSpec::Seed(params.seed)));
            file.build(None)?;
            Ok(file)
        }
        "null-correlation" => {
            let (br, section) = null_correlation_recipe(&ring, &params.degrees, &mut rng)?;
            let rows = section.entries().iter().map(|row| row.iter().map(|e| ring.fmt_poly(e)).collect()).collect();
            Ok(InstanceFile::from_parts(&br, Some(section.source()), Some(PsiSpec::Rows(rows))))
        }
        "ag-embed" => {
            let br = cotangent(&ring)?;
            let i_x = random_points_ideal(&ring, params.points, &mut rng)?;
            let emb = ag_embed(&br, &i_x, params.twist.unwrap_or(3), &mut rng)?;
            Ok(InstanceFile::from_section(&emb.section))
        }
        other => Err(CliError::Invalid(format!("unknown recipe {other:?}; expected cotangent, mk, null-correlation or ag-embed"))),
    }
}
