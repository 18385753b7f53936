use gralg_kernel::Fp;

/// Basis of `{c : Σ_j c_j col_j = 0}` for a dense `rows × ncols` matrix over `F_p`.
pub(crate) fn nullspace(k: Fp, mut a: Vec<Vec<u32>>, ncols: usize) -> Vec<Vec<u32>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&i| a[i][col] != 0) else { continue };
        a.swap(row, p);
        let inv = k.inv(a[row][col]);
        for x in a[row].iter_mut() {
            *x = k.mul(*x, inv);
        }
        for i in 0..a.len() {
            if i != row && a[i][col] != 0 {
                let c = a[i][col];
                for j in 0..ncols {
                    let v = k.mul(c, a[row][j]);
                    a[i][j] = k.sub(a[i][j], v);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = k.neg(a[r][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_kernel() {
        let k = Fp::new(7).unwrap();
        // [1 2 3; 2 4 6] has a two-dimensional kernel.
        let ker = nullspace(k, vec![vec![1, 2, 3], vec![2, 4, 6]], 3);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert_eq!(k.add(k.add(v[0], k.mul(2, v[1])), k.mul(3, v[2])), 0);
        }
    }
}
