use crate::{Fp, GradedFreeModule, KernelError, ModuleMap};

/// Chain complex `F_start <- F_{start+1} <- ...` of graded free modules.
///
/// `maps[k]` goes from `modules[k+1]` to `modules[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    modules: Vec<GradedFreeModule>,
    maps: Vec<ModuleMap>,
    start: i32,
}

impl FreeComplex {
    pub fn new(modules: Vec<GradedFreeModule>, maps: Vec<ModuleMap>, start: i32, k: Fp) -> Result<FreeComplex, KernelError> {
        let c = FreeComplex::new_unchecked(modules, maps, start)?;
        for i in 0..c.maps.len().saturating_sub(1) {
            if !c.maps[i].compose(&c.maps[i + 1], k)?.is_zero() {
                return Err(KernelError::NotAComplex { index: i });
            }
        }
        Ok(c)
    }

    /// Checks shapes only; callers that constructed `d∘d = 0` by design use this.
    pub fn new_unchecked(modules: Vec<GradedFreeModule>, maps: Vec<ModuleMap>, start: i32) -> Result<FreeComplex, KernelError> {
        if modules.len() != maps.len() + 1 && !(modules.is_empty() && maps.is_empty()) {
            return Err(KernelError::Shape("a complex needs one more module than maps".into()));
        }
        for (i, d) in maps.iter().enumerate() {
            if d.source() != &modules[i + 1] || d.target() != &modules[i] {
                return Err(KernelError::Shape(format!("differential {i} does not match its modules")));
            }
        }
        Ok(FreeComplex { modules, maps, start })
    }

    pub fn empty() -> FreeComplex {
        FreeComplex { modules: Vec::new(), maps: Vec::new(), start: 0 }
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    /// Largest homological index present.
    pub fn end(&self) -> i32 {
        self.start + self.modules.len() as i32 - 1
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    /// `F_i`, zero outside the stored range.
    pub fn term(&self, i: i32) -> GradedFreeModule {
        let idx = i - self.start;
        if idx < 0 || idx as usize >= self.modules.len() {
            GradedFreeModule::zero()
        } else {
            self.modules[idx as usize].clone()
        }
    }

    /// `d_i: F_i -> F_{i-1}`, zero map outside the stored range.
    pub fn differential(&self, i: i32) -> ModuleMap {
        let idx = i - self.start - 1;
        if idx < 0 || idx as usize >= self.maps.len() {
            ModuleMap::zero(self.term(i), self.term(i - 1))
        } else {
            self.maps[idx as usize].clone()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.modules.iter().all(GradedFreeModule::is_zero)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    /// Index of the last nonzero term; the length of a resolution starting at 0.
    pub fn length(&self) -> i32 {
        let mut last = self.start - 1;
        for (i, m) in self.modules.iter().enumerate() {
            if !m.is_zero() {
                last = self.start + i as i32;
            }
        }
        last - self.start
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(ModuleMap::is_minimal)
    }

    pub fn check_dd_zero(&self, k: Fp) -> bool {
        (0..self.maps.len().saturating_sub(1))
            .all(|i| self.maps[i].compose(&self.maps[i + 1], k).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// `Hom(F, R)` reindexed as a chain complex: `F_i^*` sits in index `-i`.
    pub fn dual(&self) -> FreeComplex {
        let l = self.modules.len();
        let modules = (0..l).map(|j| self.modules[l - 1 - j].dual()).collect();
        let maps = (0..self.maps.len()).map(|j| self.maps[self.maps.len() - 1 - j].dual()).collect();
        FreeComplex { modules, maps, start: -self.end() }
    }

    /// Same complex with every term twisted by `a`.
    pub fn twist(&self, a: i32) -> FreeComplex {
        FreeComplex {
            modules: self.modules.iter().map(|m| m.twist(a)).collect(),
            maps: self.maps.iter().map(|d| d.twist(a)).collect(),
            start: self.start,
        }
    }

    pub fn shift_index(&self, s: i32) -> FreeComplex {
        FreeComplex { modules: self.modules.clone(), maps: self.maps.clone(), start: self.start + s }
    }
}
