use sections_loci::{battery_grid, BatteryCase};

use crate::CliError;

/// Parsed `--battery` grid, e.g. `n<=4,r<=4,t<r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatterySpec {
    pub n: (usize, usize),
    pub r: (usize, usize),
    pub g: usize,
}

impl Default for BatterySpec {
    fn default() -> Self {
        BatterySpec { n: (3, 4), r: (2, 4), g: 1 }
    }
}

impl BatterySpec {
    pub fn parse(s: &str) -> Result<BatterySpec, CliError> {
        let mut spec = BatterySpec::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "t<r" {
                continue;
            }
            let (var, op, val) = ["<=", ">=", "="]
                .iter()
                .find_map(|op| part.split_once(op).map(|(a, b)| (a.trim(), *op, b.trim())))
                .ok_or_else(|| CliError::Battery(format!("cannot read {part:?}")))?;
            let v: usize = val.parse().map_err(|_| CliError::Battery(format!("bad bound in {part:?}")))?;
            let slot = match var {
                "n" => &mut spec.n,
                "r" => &mut spec.r,
                "g" if op == "=" => {
                    spec.g = v;
                    continue;
                }
                _ => return Err(CliError::Battery(format!("unknown constraint {part:?}"))),
            };
            match op {
                "<=" => slot.1 = v,
                ">=" => slot.0 = v,
                _ => *slot = (v, v),
            }
        }
        if spec.n.0 < 2 || spec.r.0 < 2 || spec.g == 0 || spec.n.0 > spec.n.1 || spec.r.0 > spec.r.1 {
            return Err(CliError::Battery(format!("empty or invalid grid {spec:?}")));
        }
        Ok(spec)
    }

    pub fn cases(&self, seeds: u64) -> Vec<BatteryCase> {
        let ns: Vec<usize> = (self.n.0..=self.n.1).collect();
        let rs: Vec<usize> = (self.r.0..=self.r.1).collect();
        battery_grid(&ns, &rs, self.g, seeds)
    }
}
