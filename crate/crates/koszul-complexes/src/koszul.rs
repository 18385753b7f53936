use gralg_kernel::combinat::{shuffle_sign, subsets};
use gralg_kernel::{
    exterior_power, exterior_power_module, symmetric_power_module, Fp, FreeComplex, GradedFreeModule,
    ModuleMap,
};

use crate::basis::{insert_sorted, MatrixBuilder, Words};
use crate::KoszulError;

fn check_phi(phi: &ModuleMap) -> Result<(usize, usize), KoszulError> {
    let (f, g) = (phi.cols(), phi.rows());
    if g == 0 || f <= g {
        return Err(KoszulError::Ranks { f, g });
    }
    Ok((f, g))
}

/// `R(c)` with `R(c) ≅ ∧^f F ⊗ ∧^g G*`.
pub fn splice_twist(phi: &ModuleMap) -> i32 {
    phi.source().twists().iter().sum::<i32>() - phi.target().twists().iter().sum::<i32>()
}

/// `∧^a F ⊗ S_b G`.
pub fn koszul_term(f: &GradedFreeModule, g: &GradedFreeModule, a: usize, b: usize) -> GradedFreeModule {
    exterior_power_module(f, a).tensor(&symmetric_power_module(g, b))
}

/// `∧^{a+1} F ⊗ S_b G -> ∧^a F ⊗ S_{b+1} G`, `e_J ⊗ m ↦ Σ_s (-1)^s e_{J∖j_s} ⊗ φ(e_{j_s}) m`.
pub fn koszul_piece(phi: &ModuleMap, a: usize, b: usize, k: Fp) -> Result<ModuleMap, KoszulError> {
    let (f, g) = (phi.cols(), phi.rows());
    let src_w = Words::subsets(f, a + 1);
    let tgt_w = Words::subsets(f, a);
    let src_s = Words::multisets(g, b);
    let tgt_s = Words::multisets(g, b + 1);
    let source = koszul_term(phi.source(), phi.target(), a + 1, b);
    let target = koszul_term(phi.source(), phi.target(), a, b + 1);
    let mut mb = MatrixBuilder::new(k, target.rank(), source.rank());
    for (ji, jset) in src_w.list.iter().enumerate() {
        for (s, &js) in jset.iter().enumerate() {
            let mut rest = jset.clone();
            rest.remove(s);
            let ti = tgt_w.pos(&rest);
            let sign = if s % 2 == 0 { 1 } else { -1 };
            for (mi, m) in src_s.list.iter().enumerate() {
                for row in 0..g {
                    let e = phi.entry(row, js);
                    if e.is_zero() {
                        continue;
                    }
                    let tm = tgt_s.pos(&insert_sorted(m, row));
                    mb.add(ti * tgt_s.len() + tm, ji * src_s.len() + mi, e, sign);
                }
            }
        }
    }
    Ok(mb.build(source, target)?)
}

/// `C_i(φ)`: `∧^p F ⊗ S_{i-p} G` in homological position `p`.
pub fn koszul_complex_c(phi: &ModuleMap, i: usize, k: Fp) -> Result<FreeComplex, KoszulError> {
    check_phi(phi)?;
    let modules = (0..=i).map(|p| koszul_term(phi.source(), phi.target(), p, i - p)).collect();
    let maps = (0..i).map(|p| koszul_piece(phi, p, i - p - 1, k)).collect::<Result<Vec<_>, _>>()?;
    Ok(FreeComplex::new_unchecked(modules, maps, 0)?)
}

/// The connecting map of the splice and the data it came from.
#[derive(Clone, Debug)]
pub struct SpliceData {
    pub phi: ModuleMap,
    pub i: usize,
    /// `ν_i: ∧^{g+i} F ⊗ ∧^g G* -> ∧^i F`.
    pub nu: ModuleMap,
}

/// `ν_i(e_T) = Σ_{S ⊂ T, |S| = g} sgn(S, T∖S) det(φ_S) e_{T∖S}`.
pub fn splice_data(phi: &ModuleMap, i: usize, k: Fp) -> Result<SpliceData, KoszulError> {
    let (f, g) = check_phi(phi)?;
    if i > f - g {
        return Err(KoszulError::Range(format!("splice index {i} exceeds f - g = {}", f - g)));
    }
    let dets = exterior_power(phi, g, k);
    let gw = Words::subsets(f, g);
    let tw = Words::subsets(f, i);
    let sum_g: i32 = phi.target().twists().iter().sum();
    let source = exterior_power_module(phi.source(), g + i).twist(-sum_g);
    let target = exterior_power_module(phi.source(), i);
    let mut mb = MatrixBuilder::new(k, target.rank(), source.rank());
    for (col, tset) in subsets(f, g + i).iter().enumerate() {
        for spos in subsets(g + i, g) {
            let s: Vec<usize> = spos.iter().map(|&p| tset[p]).collect();
            let rest: Vec<usize> = tset.iter().copied().filter(|x| !s.contains(x)).collect();
            let d = dets.entry(0, gw.pos(&s));
            mb.add(tw.pos(&rest), col, d, shuffle_sign(&s, &rest));
        }
    }
    Ok(SpliceData { phi: phi.clone(), i, nu: mb.build(source, target)? })
}

/// `ν_i` precomposed with `(∧^{r-i} F)* ⊗ ∧^f F ≅ ∧^{g+i} F`, `e_K* ↦ sgn(K, K^c) e_{K^c}`.
fn splice_map(phi: &ModuleMap, i: usize, k: Fp) -> Result<ModuleMap, KoszulError> {
    let (f, g) = check_phi(phi)?;
    let r = f - g;
    let data = splice_data(phi, i, k)?;
    let cw = Words::subsets(f, g + i);
    let ksets = subsets(f, r - i);
    let source = exterior_power_module(phi.source(), r - i).dual().twist(splice_twist(phi));
    let mut mb = MatrixBuilder::new(k, data.nu.rows(), ksets.len());
    for (col, kset) in ksets.iter().enumerate() {
        let comp: Vec<usize> = (0..f).filter(|x| !kset.contains(x)).collect();
        let sign = shuffle_sign(kset, &comp);
        let c = cw.pos(&comp);
        for row in 0..data.nu.rows() {
            mb.add(row, col, data.nu.entry(row, c), sign);
        }
    }
    Ok(mb.build(source, data.nu.target().clone())?)
}

/// `D_i(φ)`: `C_i(φ)` in positions `0..=i`, then `C_{r-i}(φ)* ⊗ ∧^f F ⊗ ∧^g G*` joined by `ν_i`.
pub fn spliced_complex_d(phi: &ModuleMap, i: usize, k: Fp) -> Result<FreeComplex, KoszulError> {
    let (f, g) = check_phi(phi)?;
    let r = f - g;
    if i > r {
        return Err(KoszulError::Range(format!("D_{i} needs i <= r = {r}")));
    }
    let c = splice_twist(phi);
    let low = koszul_complex_c(phi, i, k)?;
    let high = koszul_complex_c(phi, r - i, k)?;
    let mut modules = low.modules().to_vec();
    let mut maps = low.maps().to_vec();
    maps.push(splice_map(phi, i, k)?);
    for q in 0..=(r - i) {
        modules.push(high.modules()[r - i - q].dual().twist(c));
    }
    for q in 0..(r - i) {
        maps.push(high.maps()[r - i - q - 1].dual().twist(c));
    }
    Ok(FreeComplex::new_unchecked(modules, maps, 0)?)
}

/// Terms of `D_i(φ)` from twists alone.
pub fn spliced_terms(f: &GradedFreeModule, g: &GradedFreeModule, i: usize) -> Vec<GradedFreeModule> {
    let r = f.rank() - g.rank();
    let c = f.twists().iter().sum::<i32>() - g.twists().iter().sum::<i32>();
    let mut out: Vec<GradedFreeModule> = (0..=i).map(|p| koszul_term(f, g, p, i - p)).collect();
    for q in 0..=(r - i) {
        out.push(koszul_term(f, g, r - i - q, q).dual().twist(c));
    }
    out
}
