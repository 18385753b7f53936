/// Lexicographically ordered `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Lexicographically ordered size-`k` multisets of `0..n`, as sorted index lists.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[i - 1];
        }
    }
}

pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    binomial_poly(n, k as u32)
}

/// `x (x-1) ... (x-m+1) / m!` for any integer `x`, i.e. the binomial polynomial.
pub fn binomial_poly(x: i64, m: u32) -> i128 {
    let mut num: i128 = 1;
    for j in 0..m as i128 {
        num = num * (x as i128 - j) / (j + 1);
    }
    num
}

/// Sign of the permutation sorting the concatenation `a ++ b` of disjoint sorted lists.
pub fn shuffle_sign(a: &[usize], b: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for &x in a {
        inversions += b.iter().filter(|&&y| y < x).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
