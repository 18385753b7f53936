use gralg_kernel::{
    exterior_power, exterior_power_module, symmetric_power_module, tensor_map, Fp, FreeComplex, GradedFreeModule,
    GradedRing, ModuleMap, Polynomial,
};
use groebner_engine::{cokernel_series, ext_series, homology_series, image_series, syzygies, HilbertSeries, ModulePresentation};

use crate::basis::{remove_one, MatrixBuilder, Words};
use crate::koszul::{koszul_complex_c, koszul_term};
use crate::KoszulError;

/// `X_{i,k} ⊗ S_{i-t} P` with `X_{i,k} = (∧^{i-k} F ⊗ S_k G)*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub i: usize,
    pub k: usize,
}

/// The complex `E_i = ∧^i B_φ* ⊗ S_{i-t} P`, materialized as the totalization of the
/// resolutions `C_i(φ)* ⊗ S_{i-t} P`; block `(i, k)` sits in total index `i + k`.
/// Index `t - 1` holds `∧^t P*`, reached through `∧^t ψ*`.
#[derive(Clone, Debug)]
pub struct EagonNorthcott {
    pub phi: ModuleMap,
    pub psi: ModuleMap,
    pub r: usize,
    pub t: usize,
    pub total: FreeComplex,
    blocks: Vec<Vec<Block>>,
    k: Fp,
}

fn block_module(phi: &ModuleMap, p: &GradedFreeModule, t: usize, b: Block) -> GradedFreeModule {
    koszul_term(phi.source(), phi.target(), b.i - b.k, b.k).dual().tensor(&symmetric_power_module(p, b.i - t))
}

/// `X_{i,k} ⊗ S_{i-t}P -> X_{i-1,k} ⊗ S_{i-1-t}P`, contraction against the columns of `ψ`.
fn horizontal(phi: &ModuleMap, psi: &ModuleMap, t: usize, b: Block, k: Fp) -> Result<ModuleMap, KoszulError> {
    let (f, g, tp) = (phi.cols(), phi.rows(), psi.cols());
    let a = b.i - b.k;
    let src_j = Words::subsets(f, a);
    let tgt_j = Words::subsets(f, a - 1);
    let gam = Words::multisets(g, b.k).len();
    let src_p = Words::multisets(tp, b.i - t);
    let tgt_p = Words::multisets(tp, b.i - 1 - t);
    let source = block_module(phi, psi.source(), t, b);
    let target = block_module(phi, psi.source(), t, Block { i: b.i - 1, k: b.k });
    let mut mb = MatrixBuilder::new(k, target.rank(), source.rank());
    for (ji, jset) in src_j.list.iter().enumerate() {
        for (s, &js) in jset.iter().enumerate() {
            let mut rest = jset.clone();
            rest.remove(s);
            let ti = tgt_j.pos(&rest);
            let sign = if s % 2 == 0 { 1 } else { -1 };
            for (ai, alpha) in src_p.list.iter().enumerate() {
                for l in 0..tp {
                    let Some((count, beta)) = remove_one(alpha, l) else { continue };
                    let u = psi.entry(js, l);
                    if u.is_zero() {
                        continue;
                    }
                    let u = u.scale(count, k);
                    let bi = tgt_p.pos(&beta);
                    for c in 0..gam {
                        let row = (ti * gam + c) * tgt_p.len() + bi;
                        let col = (ji * gam + c) * src_p.len() + ai;
                        mb.add(row, col, &u, sign);
                    }
                }
            }
        }
    }
    Ok(mb.build(source, target)?)
}

/// Places block maps into one matrix between direct sums.
fn assemble(
    source: &[GradedFreeModule],
    target: &[GradedFreeModule],
    pieces: Vec<(usize, usize, ModuleMap)>,
) -> Result<ModuleMap, KoszulError> {
    let offsets = |mods: &[GradedFreeModule]| {
        let mut o = vec![0];
        for m in mods {
            o.push(o.last().unwrap() + m.rank());
        }
        o
    };
    let (so, to) = (offsets(source), offsets(target));
    let mut entries = vec![vec![Polynomial::zero(); so[source.len()]]; to[target.len()]];
    for (sb, tb, m) in pieces {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                entries[to[tb] + i][so[sb] + j] = m.entry(i, j).clone();
            }
        }
    }
    let sum = |mods: &[GradedFreeModule]| mods.iter().fold(GradedFreeModule::zero(), |a, m| a.direct_sum(m));
    Ok(ModuleMap::new(sum(source), sum(target), entries)?)
}

/// Builds the totalized Eagon–Northcott type complex of the section `ψ: P -> F` of `B_φ = ker φ`.
pub fn eagon_northcott_e(phi: &ModuleMap, psi: &ModuleMap, k: Fp) -> Result<EagonNorthcott, KoszulError> {
    let (f, g) = (phi.cols(), phi.rows());
    if g == 0 || f <= g {
        return Err(KoszulError::Ranks { f, g });
    }
    let (r, t) = (f - g, psi.cols());
    if t == 0 || t >= r {
        return Err(KoszulError::Range(format!("need 1 <= t < r, got t = {t}, r = {r}")));
    }
    if psi.target() != phi.source() || !phi.compose(psi, k)?.is_zero() {
        return Err(KoszulError::NotASection);
    }
    let p = psi.source();
    let cs: Vec<FreeComplex> = (0..=r).map(|i| koszul_complex_c(phi, i, k)).collect::<Result<_, _>>()?;

    let mut blocks: Vec<Vec<Block>> = vec![Vec::new()];
    let mut modules = vec![exterior_power_module(&p.dual(), t)];
    for m in t..=2 * r {
        let bl: Vec<Block> = (t..=r).filter(|&i| m >= i && m - i <= i).map(|i| Block { i, k: m - i }).collect();
        let mods: Vec<GradedFreeModule> = bl.iter().map(|&b| block_module(phi, p, t, b)).collect();
        modules.push(mods.iter().fold(GradedFreeModule::zero(), |a, x| a.direct_sum(x)));
        blocks.push(bl);
    }

    let aug = exterior_power(&psi.dual(), t, k);
    let mut maps = vec![aug];
    for m in (t + 1)..=2 * r {
        let src = &blocks[m - t + 1];
        let tgt = &blocks[m - t];
        let src_mods: Vec<_> = src.iter().map(|&b| block_module(phi, p, t, b)).collect();
        let tgt_mods: Vec<_> = tgt.iter().map(|&b| block_module(phi, p, t, b)).collect();
        let mut pieces = Vec::new();
        for (sb, &b) in src.iter().enumerate() {
            if b.k >= 1 {
                let c_piece = cs[b.i].maps()[b.i - b.k].dual();
                let id = ModuleMap::identity(&symmetric_power_module(p, b.i - t));
                let tb = tgt.iter().position(|&x| x == Block { i: b.i, k: b.k - 1 }).unwrap();
                pieces.push((sb, tb, tensor_map(&c_piece, &id, k)));
            }
            if b.i > t && b.k < b.i {
                let tb = tgt.iter().position(|&x| x == Block { i: b.i - 1, k: b.k }).unwrap();
                pieces.push((sb, tb, horizontal(phi, psi, t, b, k)?));
            }
        }
        maps.push(assemble(&src_mods, &tgt_mods, pieces)?);
    }
    let total = FreeComplex::new_unchecked(modules, maps, t as i32 - 1)?;
    Ok(EagonNorthcott { phi: phi.clone(), psi: psi.clone(), r, t, total, blocks, k })
}

impl EagonNorthcott {
    /// Blocks of the total complex in index `m`.
    pub fn blocks(&self, m: i32) -> &[Block] {
        let idx = m - self.t as i32 + 1;
        if idx <= 0 || idx as usize >= self.blocks.len() {
            &[]
        } else {
            &self.blocks[idx as usize]
        }
    }

    /// `δ_t = ∧^t ψ*: ∧^t F* -> ∧^t P*`; its entries generate `I(ψ)`.
    pub fn terminal_map(&self) -> &ModuleMap {
        &self.total.maps()[0]
    }

    pub fn degeneracy_ideal(&self) -> Vec<Polynomial> {
        self.terminal_map().entries()[0].iter().filter(|p| !p.is_zero()).cloned().collect()
    }

    /// Series of the homology of the totalization in index `m`.
    ///
    /// Column `r` resolves the module exterior power `∧^r(coker φ*) ≅ I(φ)(-c)`, not the
    /// reflexive `∧^r B_φ* ≅ R(-c)`; the two differ by `Q = R/I(φ)(-c) ⊗ S_{r-t}P`.
    pub fn total_homology_series(&self, ring: &GradedRing, m: i32) -> Result<HilbertSeries, KoszulError> {
        let c = &self.total;
        Ok(homology_series(ring, &c.differential(m), &c.differential(m + 1))?)
    }

    /// Series of `Q = E_r / E'_r`.
    pub fn top_defect_series(&self, ring: &GradedRing) -> Result<HilbertSeries, KoszulError> {
        let wedge = exterior_power(&self.phi, self.phi.rows(), self.k);
        let top_f = exterior_power_module(&self.phi.source().dual(), self.phi.cols());
        let sp = symmetric_power_module(self.psi.source(), self.r - self.t);
        Ok(cokernel_series(ring, &wedge)?.tensor_free(&top_f).tensor_free(&sp))
    }

    /// Series of `H_m(E_•)` for `t <= m < r`; at `m = t - 1` this is `R/I(ψ) ⊗ ∧^t P*`.
    ///
    /// With `H_r(E_•) = 0`, the sequence `0 -> Q -> H_{r-1}(E') -> H_{r-1}(E) -> 0` corrects
    /// index `r - 1`. At `m = r` the totalization's homology is returned: it is zero exactly
    /// when `H_r(E_•)` is, both being torsion-free of the same rank.
    pub fn homology_series(&self, ring: &GradedRing, m: i32) -> Result<HilbertSeries, KoszulError> {
        let h = self.total_homology_series(ring, m)?;
        if m == self.r as i32 - 1 {
            Ok(h.sub(&self.top_defect_series(ring)?))
        } else {
            Ok(h)
        }
    }

    fn vertical_presentation(&self, i: usize) -> ModuleMap {
        let p = self.psi.source();
        let c = koszul_complex_c(&self.phi, i, self.k).expect("ranks checked");
        let id = ModuleMap::identity(&symmetric_power_module(p, i - self.t));
        tensor_map(&c.maps()[i - 1].dual(), &id, self.k)
    }

    /// `E_i* = ker(A_i^T)` as a map into `(X_{i,0} ⊗ S_{i-t}P)*`.
    fn dual_term(&self, ring: &GradedRing, i: usize) -> Result<ModuleMap, KoszulError> {
        Ok(syzygies(ring, &self.vertical_presentation(i).dual())?)
    }

    fn h_dual(&self, i: usize) -> Result<ModuleMap, KoszulError> {
        Ok(horizontal(&self.phi, &self.psi, self.t, Block { i, k: 0 }, self.k)?.dual())
    }

    /// Series of `H^i(E_•*)` for `t <= i <= r`, where `E_{t-1}* = ∧^t P`.
    pub fn dual_cohomology_series(&self, ring: &GradedRing, i: usize) -> Result<HilbertSeries, KoszulError> {
        if i < self.t || i > self.r {
            return Err(KoszulError::Range(format!("E* cohomology index {i} outside {}..={}", self.t, self.r)));
        }
        let k = self.k;
        let ki = self.dual_term(ring, i)?;
        let z = if i < self.r {
            let out = self.h_dual(i + 1)?.compose(&ki, k)?;
            ki.compose(&syzygies(ring, &out)?, k)?
        } else {
            ki
        };
        let b = if i == self.t {
            self.terminal_map().dual()
        } else {
            self.h_dual(i)?.compose(&self.dual_term(ring, i - 1)?, k)?
        };
        Ok(image_series(ring, &z)?.sub(&image_series(ring, &b)?))
    }

    /// `HS(H^r(E*)) - HS(H^{r+1}(E*))`, where `H^{r+1}` is the cokernel of `E_r* ->
    /// Ext^{r-t+1}(R/I(ψ), R) ⊗ ∧^t P` in the long exact sequence of the augmented complex.
    pub fn dual_top_difference(&self, ring: &GradedRing) -> Result<HilbertSeries, KoszulError> {
        let hr = self.dual_cohomology_series(ring, self.r)?;
        let quotient = ModulePresentation::cyclic(ring, &self.degeneracy_ideal());
        let ext = ext_series(&quotient, (self.r - self.t + 1) as i32)?;
        let wedge_p = exterior_power_module(self.psi.source(), self.t);
        Ok(hr.sub(&ext.tensor_free(&wedge_p)))
    }
}
