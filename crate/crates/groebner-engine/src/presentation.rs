use std::sync::OnceLock;

use gralg_kernel::{FreeComplex, GradedFreeModule, GradedRing, ModuleMap, Polynomial};

use crate::basis::GroebnerBasis;
use crate::betti::BettiTable;
use crate::hilbert::HilbertSeries;
use crate::resolution::resolve_cokernel;
use crate::syzygy::quotient_relations;
use crate::GbError;

/// `coker(relations)` as a graded module over `ring` (which may be a quotient ring).
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ring: GradedRing,
    relations: ModuleMap,
    gb: OnceLock<std::sync::Arc<GroebnerBasis>>,
    res: OnceLock<Result<FreeComplex, GbError>>,
}

impl ModulePresentation {
    pub fn new(ring: &GradedRing, relations: ModuleMap) -> ModulePresentation {
        ModulePresentation { ring: ring.clone(), relations, gb: OnceLock::new(), res: OnceLock::new() }
    }

    pub fn free(ring: &GradedRing, module: &GradedFreeModule) -> ModulePresentation {
        Self::new(ring, ModuleMap::zero(GradedFreeModule::zero(), module.clone()))
    }

    /// `R / (gens)`.
    pub fn cyclic(ring: &GradedRing, gens: &[Polynomial]) -> ModulePresentation {
        let cols: Vec<Vec<Polynomial>> = gens.iter().filter(|g| !g.is_zero()).map(|g| vec![g.clone()]).collect();
        let twists = cols.iter().map(|c| -(c[0].degree().unwrap() as i32)).collect();
        let rel = ModuleMap::from_columns(GradedFreeModule::new(vec![0]), cols, twists)
            .expect("ideal generators must be homogeneous");
        Self::new(ring, rel)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &GradedFreeModule {
        self.relations.target()
    }

    pub fn relations(&self) -> &ModuleMap {
        &self.relations
    }

    /// Relations over the ambient polynomial ring: the given ones plus the quotient ideal times each generator.
    pub fn ambient_relations(&self) -> ModuleMap {
        if !self.ring.is_quotient() {
            return self.relations.clone();
        }
        let q = quotient_relations(&self.ring, self.generators());
        self.relations.hstack(&q).expect("same target")
    }

    pub fn twist(&self, a: i32) -> ModulePresentation {
        Self::new(&self.ring, self.relations.twist(a))
    }

    pub fn gb(&self) -> Result<&GroebnerBasis, GbError> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let rel = self.ambient_relations();
        let g = GroebnerBasis::compute(&self.ring, rel.target(), &rel.columns())?;
        Ok(self.gb.get_or_init(|| std::sync::Arc::new(g)))
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries, GbError> {
        Ok(self.gb()?.quotient_series())
    }

    /// Krull dimension; `-1` for the zero module.
    pub fn dimension(&self) -> Result<i32, GbError> {
        Ok(self.hilbert_series()?.dimension())
    }

    pub fn degree(&self) -> Result<i64, GbError> {
        Ok(self.hilbert_series()?.degree())
    }

    pub fn is_zero(&self) -> Result<bool, GbError> {
        Ok(self.hilbert_series()?.is_zero())
    }

    /// Minimal free resolution over the ambient polynomial ring.
    pub fn ambient_resolution(&self) -> Result<&FreeComplex, GbError> {
        let r = self.res.get_or_init(|| resolve_cokernel(&self.ring, &self.ambient_relations()));
        r.as_ref().map_err(Clone::clone)
    }

    pub fn betti_table(&self) -> Result<BettiTable, GbError> {
        Ok(BettiTable::from_complex(self.ambient_resolution()?))
    }

    /// Projective dimension over the ambient polynomial ring.
    pub fn ambient_projective_dimension(&self) -> Result<i32, GbError> {
        Ok(self.betti_table()?.projective_dimension())
    }

    /// Depth with respect to the irrelevant ideal; `None` for the zero module.
    pub fn depth(&self) -> Result<Option<i32>, GbError> {
        let pd = self.ambient_projective_dimension()?;
        if pd < 0 {
            return Ok(None);
        }
        Ok(Some(self.ring.nvars() as i32 - pd))
    }

    pub fn is_cohen_macaulay(&self) -> Result<bool, GbError> {
        match self.depth()? {
            None => Ok(true),
            Some(d) => Ok(d == self.dimension()?),
        }
    }
}

pub fn groebner_basis(ring: &GradedRing, module: &GradedFreeModule, gens: &[Vec<Polynomial>]) -> Result<GroebnerBasis, GbError> {
    GroebnerBasis::compute(ring, module, gens)
}

/// Minimal free resolution over the ambient polynomial ring, with its Betti table.
pub fn minimal_free_resolution(m: &ModulePresentation) -> Result<(FreeComplex, BettiTable), GbError> {
    let c = m.ambient_resolution()?.clone();
    let b = BettiTable::from_complex(&c);
    Ok((c, b))
}

pub fn hilbert_series(m: &ModulePresentation) -> Result<HilbertSeries, GbError> {
    m.hilbert_series()
}

pub fn dimension(m: &ModulePresentation) -> Result<i32, GbError> {
    m.dimension()
}

pub fn degree(m: &ModulePresentation) -> Result<i64, GbError> {
    m.degree()
}

pub fn depth(m: &ModulePresentation) -> Result<Option<i32>, GbError> {
    m.depth()
}
