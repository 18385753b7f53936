#![allow(dead_code)]

use gralg_kernel::mono::monomials_of_degree;
use gralg_kernel::{Fp, Mono, Polynomial};

/// Rank of a dense matrix over `F_p` by plain elimination.
pub fn rank(k: Fp, mut rows: Vec<Vec<u32>>) -> usize {
    let mut r = 0;
    let ncols = rows.first().map_or(0, |x| x.len());
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = k.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = k.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let v = k.mul(f, rows[r][j]);
                    rows[i][j] = k.sub(rows[i][j], v);
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim_K (S/I)_d` by spanning `I_d` with monomial multiples of the generators.
pub fn quotient_hf(k: Fp, nvars: usize, gens: &[Polynomial], d: u32) -> usize {
    let basis = monomials_of_degree(nvars, d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - gd) {
            let p = g.mul_term(m, 1, k);
            rows.push(basis.iter().map(|b| p.coeff(*b)).collect());
        }
    }
    basis.len() - rank(k, rows)
}

pub fn mono(e: &[u32]) -> Mono {
    Mono::from_exps(e).unwrap()
}
