use crate::{Fp, GradedFreeModule, KernelError, Polynomial};

/// Degree-0 homogeneous map; column `j` is the image of the `j`-th source generator,
/// so composition is the matrix product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    entries: Vec<Vec<Polynomial>>,
}

impl ModuleMap {
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<ModuleMap, KernelError> {
        if entries.len() != target.rank() || entries.iter().any(|row| row.len() != source.rank()) {
            return Err(KernelError::Shape(format!(
                "expected a {}x{} matrix",
                target.rank(),
                source.rank()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let expected = target.twists()[i] - source.twists()[j];
                if e.is_zero() {
                    continue;
                }
                if expected < 0 || !e.is_homogeneous() || e.degree() != Some(expected as u32) {
                    return Err(KernelError::NonHomogeneous { row: i, col: j, expected });
                }
            }
        }
        Ok(ModuleMap { source, target, entries })
    }

    /// Target twists are read off the columns: column `j` of degree `d_j` relative to
    /// a target with given twists. Used when the source is determined by the data.
    pub fn from_columns(
        target: GradedFreeModule,
        columns: Vec<Vec<Polynomial>>,
        source_twists: Vec<i32>,
    ) -> Result<ModuleMap, KernelError> {
        let rows = target.rank();
        let mut entries = vec![Vec::with_capacity(columns.len()); rows];
        for col in &columns {
            if col.len() != rows {
                return Err(KernelError::Shape("column length differs from target rank".into()));
            }
            for (i, e) in col.iter().enumerate() {
                entries[i].push(e.clone());
            }
        }
        ModuleMap::new(GradedFreeModule::new(source_twists), target, entries)
    }

    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> ModuleMap {
        let entries = vec![vec![Polynomial::zero(); source.rank()]; target.rank()];
        ModuleMap { source, target, entries }
    }

    pub fn identity(m: &GradedFreeModule) -> ModuleMap {
        let n = m.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Polynomial::one() } else { Polynomial::zero() }).collect())
            .collect();
        ModuleMap { source: m.clone(), target: m.clone(), entries }
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(Polynomial::is_zero))
    }

    /// No entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_zero() || e.degree() != Some(0)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap, k: Fp) -> Result<ModuleMap, KernelError> {
        if other.target != self.source {
            return Err(KernelError::Shape("composition of non-matching modules".into()));
        }
        let mut entries = vec![vec![Polynomial::zero(); other.cols()]; self.rows()];
        for (i, row) in entries.iter_mut().enumerate() {
            for (l, a) in self.entries[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    let b = &other.entries[l][j];
                    if !b.is_zero() {
                        *slot = slot.add(&a.mul(b, k), k);
                    }
                }
            }
        }
        Ok(ModuleMap { source: other.source.clone(), target: self.target.clone(), entries })
    }

    /// Transpose between dual modules.
    pub fn dual(&self) -> ModuleMap {
        let entries = (0..self.cols()).map(|j| self.column(j)).collect();
        ModuleMap { source: self.target.dual(), target: self.source.dual(), entries }
    }

    pub fn scale(&self, c: u32, k: Fp) -> ModuleMap {
        let entries = self.entries.iter().map(|row| row.iter().map(|e| e.scale(c, k)).collect()).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), entries }
    }

    pub fn add(&self, other: &ModuleMap, k: Fp) -> Result<ModuleMap, KernelError> {
        if self.source != other.source || self.target != other.target {
            return Err(KernelError::Shape("sum of maps with different modules".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y, k)).collect())
            .collect();
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), entries })
    }

    /// Same matrix read as a map between twisted modules `source(a) -> target(a)`.
    pub fn twist(&self, a: i32) -> ModuleMap {
        ModuleMap { source: self.source.twist(a), target: self.target.twist(a), entries: self.entries.clone() }
    }

    /// `[self | other]` with a common target.
    pub fn hstack(&self, other: &ModuleMap) -> Result<ModuleMap, KernelError> {
        if self.target != other.target {
            return Err(KernelError::Shape("hstack with different targets".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Ok(ModuleMap { source: self.source.direct_sum(&other.source), target: self.target.clone(), entries })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &ModuleMap) -> ModuleMap {
        let mut entries = Vec::with_capacity(self.rows() + other.rows());
        for row in &self.entries {
            let mut r = row.clone();
            r.extend(std::iter::repeat_n(Polynomial::zero(), other.cols()));
            entries.push(r);
        }
        for row in &other.entries {
            let mut r = vec![Polynomial::zero(); self.cols()];
            r.extend(row.iter().cloned());
            entries.push(r);
        }
        ModuleMap {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            entries,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> ModuleMap {
        let source = GradedFreeModule::new(cols.iter().map(|&j| self.source.twists()[j]).collect());
        let entries = self.entries.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
        ModuleMap { source, target: self.target.clone(), entries }
    }

    pub fn select_rows(&self, rows: &[usize]) -> ModuleMap {
        let target = GradedFreeModule::new(rows.iter().map(|&i| self.target.twists()[i]).collect());
        let entries = rows.iter().map(|&i| self.entries[i].clone()).collect();
        ModuleMap { source: self.source.clone(), target, entries }
    }

    /// Maximal degree of any entry, for cap bookkeeping.
    pub fn max_entry_degree(&self) -> u32 {
        self.entries.iter().flatten().filter_map(Polynomial::degree).max().unwrap_or(0)
    }
}
