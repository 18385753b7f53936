use groebner_engine::{ext_module, BettiTable, GbError, ModulePresentation};
use serde::Serialize;

/// `β_{s-j}(N)_d <= Σ_{i<=j} β_{j-i}(Ext^{s-i}(N,R))_{-d}` at one `(j, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorInequality {
    pub j: i32,
    pub degree: i32,
    pub lhs: u32,
    pub rhs: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorReport {
    pub projective_dimension: i32,
    pub inequalities: Vec<TorInequality>,
    pub top_equality: bool,
    /// `Tor_1(Ext^s(N,R), K)` fits inside `Tor_{s-1}(N,K)^∨`.
    pub second_inequality: bool,
}

impl TorReport {
    pub fn passed(&self) -> bool {
        self.top_equality && self.second_inequality && self.inequalities.iter().all(|x| x.lhs <= x.rhs)
    }
}

fn degrees(tables: &[&BettiTable], idx: impl Fn(usize) -> i32) -> Vec<i32> {
    let mut d: Vec<i32> = tables.iter().enumerate().flat_map(|(k, t)| t.degrees(idx(k))).collect();
    d.sort_unstable();
    d.dedup();
    d
}

pub fn tor_splitting_check(m: &ModulePresentation) -> Result<TorReport, GbError> {
    let beta = m.betti_table()?;
    let s = beta.projective_dimension();
    // ext[i] = Betti table of Ext^{s-i}(N, R).
    let ext: Vec<BettiTable> = (0..=s).map(|i| ext_module(m, s - i)?.betti_table()).collect::<Result<_, _>>()?;
    let mut inequalities = Vec::new();
    for j in 0..=s {
        let mut ds: Vec<i32> = beta.degrees(s - j);
        for i in 0..=j {
            ds.extend(ext[i as usize].degrees(j - i).into_iter().map(|d| -d));
        }
        ds.sort_unstable();
        ds.dedup();
        for d in ds {
            let lhs = beta.get(s - j, d);
            let rhs = (0..=j).map(|i| ext[i as usize].get(j - i, -d)).sum();
            inequalities.push(TorInequality { j, degree: d, lhs, rhs });
        }
    }
    let top_equality = inequalities.iter().filter(|x| x.j == 0).all(|x| x.lhs == x.rhs);
    let second_inequality = degrees(&[&ext[0]], |_| 1).into_iter().all(|d| ext[0].get(1, d) <= beta.get(s - 1, -d));
    Ok(TorReport { projective_dimension: s, inequalities, top_equality, second_inequality })
}
