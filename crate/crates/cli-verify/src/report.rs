use std::time::Instant;

use koszul_complexes::PredictionReport;
use sections_loci::{analyze, any_failed, verify_resolution, Claim, Computed, ResolutionDiff, SectionInstance, Status};
use serde::Serialize;

use crate::instance_file::InstanceFile;
use crate::CliError;

pub const REPORT_VERSION: &str = "1.0";

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub version: &'static str,
    /// Canonical instance file text.
    pub instance: String,
    pub prediction: PredictionReport,
    pub computed: Computed,
    pub resolution: ResolutionDiff,
    pub diff: Vec<Claim>,
    pub verdict: Status,
    pub timing: Timing,
}

impl ReportJson {
    pub fn failed(&self) -> bool {
        self.verdict == Status::Fail
    }

    /// JSON with the timing block zeroed, for reproducibility checks.
    pub fn to_stable_json(&self) -> Result<String, CliError> {
        let mut r = self.clone();
        r.timing.millis = 0;
        Ok(serde_json::to_string(&r)?)
    }

    /// One line per claim.
    pub fn summary(&self) -> String {
        self.diff.iter().map(|c| format!("{:<15} {:<26} {}\n", c.status.as_str(), c.name, c.detail)).collect()
    }
}

pub fn report_for(sec: &SectionInstance) -> Result<ReportJson, CliError> {
    let start = Instant::now();
    let locus = analyze(sec)?;
    let resolution = verify_resolution(sec, &locus);
    let mut diff = locus.claims.clone();
    diff.extend(resolution.claims.iter().cloned());
    let verdict = if any_failed(&diff) { Status::Fail } else { Status::Pass };
    Ok(ReportJson {
        version: REPORT_VERSION,
        instance: InstanceFile::from_section(sec).to_text(),
        prediction: locus.prediction,
        computed: locus.computed,
        resolution,
        diff,
        verdict,
        timing: Timing { millis: start.elapsed().as_millis() as u64 },
    })
}
