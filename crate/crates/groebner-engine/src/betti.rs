use std::collections::BTreeMap;
use std::fmt;

use gralg_kernel::{FreeComplex, GradedFreeModule};
use serde::{Deserialize, Serialize};

/// Graded Betti numbers `beta[i][d]`: number of generators of degree `d` in homological degree `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    beta: BTreeMap<i32, BTreeMap<i32, u32>>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    pub fn from_complex(c: &FreeComplex) -> BettiTable {
        let mut b = BettiTable::new();
        for (k, m) in c.modules().iter().enumerate() {
            b.add_module(c.start() + k as i32, m);
        }
        b
    }

    pub fn add_module(&mut self, i: i32, m: &GradedFreeModule) {
        for d in m.degrees() {
            self.add(i, d, 1);
        }
    }

    pub fn add(&mut self, i: i32, d: i32, n: u32) {
        if n == 0 {
            return;
        }
        *self.beta.entry(i).or_default().entry(d).or_insert(0) += n;
    }

    pub fn get(&self, i: i32, d: i32) -> u32 {
        self.beta.get(&i).and_then(|r| r.get(&d)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: i32) -> u32 {
        self.beta.get(&i).map(|r| r.values().sum()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.beta.values().all(|r| r.values().all(|&v| v == 0))
    }

    /// Largest homological index with a nonzero entry, or `-1` when empty.
    pub fn projective_dimension(&self) -> i32 {
        self.beta.iter().rev().find(|(_, r)| r.values().any(|&v| v > 0)).map(|(&i, _)| i).unwrap_or(-1)
    }

    /// `max(d - i)`.
    pub fn regularity(&self) -> Option<i32> {
        self.entries().map(|(i, d, _)| d - i).max()
    }

    /// Nonzero entries in `(i, d)` order.
    pub fn entries(&self) -> impl Iterator<Item = (i32, i32, u32)> + '_ {
        self.beta.iter().flat_map(|(&i, r)| r.iter().filter(|(_, &v)| v > 0).map(move |(&d, &v)| (i, d, v)))
    }

    /// Generator degrees in homological degree `i`, each repeated by multiplicity.
    pub fn degrees(&self, i: i32) -> Vec<i32> {
        let mut out = Vec::new();
        if let Some(r) = self.beta.get(&i) {
            for (&d, &v) in r {
                out.extend(std::iter::repeat_n(d, v as usize));
            }
        }
        out
    }

    /// Shift every generator degree by `s`.
    pub fn shift_degrees(&self, s: i32) -> BettiTable {
        let mut b = BettiTable::new();
        for (i, d, v) in self.entries() {
            b.add(i, d + s, v);
        }
        b
    }
}

/// Row `d - i`, column `i`, in the usual layout.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<_> = self.entries().collect();
        if entries.is_empty() {
            return writeln!(f, "(zero)");
        }
        let imin = entries.iter().map(|e| e.0).min().unwrap();
        let imax = entries.iter().map(|e| e.0).max().unwrap();
        let rmin = entries.iter().map(|e| e.1 - e.0).min().unwrap();
        let rmax = entries.iter().map(|e| e.1 - e.0).max().unwrap();
        write!(f, "{:>6}", "")?;
        for i in imin..=imax {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in imin..=imax {
            write!(f, "{:>6}", self.total(i))?;
        }
        writeln!(f)?;
        for r in rmin..=rmax {
            write!(f, "{:>6}", format!("{r}:"))?;
            for i in imin..=imax {
                let v = self.get(i, i + r);
                if v == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{v:>6}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
