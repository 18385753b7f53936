use gralg_kernel::combinat::{binomial, binomial_poly};
use gralg_kernel::{GradedFreeModule, Mono};
use serde::{Deserialize, Serialize};

/// `sum_k num[k] t^(low+k) / (1-t)^nvars`, numerator trimmed of zero ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    nvars: u32,
    low: i32,
    num: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> HilbertSeries {
        HilbertSeries { nvars: nvars as u32, low: 0, num: Vec::new() }
    }

    pub fn from_numerator(nvars: usize, low: i32, num: Vec<i64>) -> HilbertSeries {
        let mut h = HilbertSeries { nvars: nvars as u32, low, num };
        h.trim();
        h
    }

    /// Series of a free module: `sum_i t^(deg e_i)`.
    pub fn free(nvars: usize, m: &GradedFreeModule) -> HilbertSeries {
        let mut h = HilbertSeries::zero(nvars);
        for d in m.degrees() {
            h = h.add(&HilbertSeries::from_numerator(nvars, d, vec![1]));
        }
        h
    }

    fn trim(&mut self) {
        while self.num.last() == Some(&0) {
            self.num.pop();
        }
        let lead = self.num.iter().take_while(|&&c| c == 0).count();
        if lead == self.num.len() {
            self.num.clear();
            self.low = 0;
            return;
        }
        self.num.drain(..lead);
        self.low += lead as i32;
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn numerator(&self) -> (i32, &[i64]) {
        (self.low, &self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars, "series over different rings");
        if self.is_zero() {
            return other.scale(sign);
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.num.len() as i32).max(other.low + other.num.len() as i32);
        let mut num = vec![0i64; (high - low) as usize];
        for (i, &c) in self.num.iter().enumerate() {
            num[(self.low - low) as usize + i] += c;
        }
        for (i, &c) in other.num.iter().enumerate() {
            num[(other.low - low) as usize + i] += sign * c;
        }
        HilbertSeries::from_numerator(self.nvars as usize, low, num)
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i64) -> HilbertSeries {
        HilbertSeries::from_numerator(self.nvars as usize, self.low, self.num.iter().map(|x| x * c).collect())
    }

    /// Series of `M(a)`: generators move to degree `deg - a`.
    pub fn twist(&self, a: i32) -> HilbertSeries {
        if self.is_zero() {
            return self.clone();
        }
        HilbertSeries { nvars: self.nvars, low: self.low - a, num: self.num.clone() }
    }

    /// Series of `M ⊗ W` for a free module `W`.
    pub fn tensor_free(&self, w: &GradedFreeModule) -> HilbertSeries {
        let mut acc = HilbertSeries::zero(self.nvars as usize);
        for &a in w.twists() {
            acc = acc.add(&self.twist(a));
        }
        acc
    }

    /// Value of the Hilbert function in degree `d`.
    pub fn hf(&self, d: i32) -> i128 {
        let n = self.nvars as i64;
        self.num
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let s = (d - self.low - k as i32) as i64;
                if s < 0 {
                    0
                } else {
                    c as i128 * binomial(s + n - 1, n - 1)
                }
            })
            .sum()
    }

    /// Numerator with every factor `(1-t)` cancelled, and the remaining pole order.
    pub fn reduced(&self) -> (i32, Vec<i64>, i32) {
        let mut q = self.num.clone();
        let mut dim = self.nvars as i32;
        if q.is_empty() {
            return (0, q, -1);
        }
        while dim > 0 && q.iter().sum::<i64>() == 0 {
            // divide by (1 - t): q = (1-t) s, s_k = sum_{j<=k} q_j
            let mut s = Vec::with_capacity(q.len() - 1);
            let mut acc = 0;
            for &c in &q[..q.len() - 1] {
                acc += c;
                s.push(acc);
            }
            q = s;
            dim -= 1;
        }
        (self.low, q, dim)
    }

    /// Krull dimension of the module; −1 for the zero module.
    pub fn dimension(&self) -> i32 {
        self.reduced().2
    }

    /// Multiplicity (leading coefficient normalization of the Hilbert polynomial).
    pub fn degree(&self) -> i64 {
        self.reduced().1.iter().sum()
    }

    pub fn hilbert_polynomial(&self, d: i32) -> i128 {
        let (low, q, dim) = self.reduced();
        if dim <= 0 {
            return 0;
        }
        q.iter()
            .enumerate()
            .map(|(k, &c)| c as i128 * binomial_poly((d - low - k as i32) as i64 + dim as i64 - 1, dim as u32 - 1))
            .sum()
    }

    /// Lowest and highest degree where the numerator is supported.
    pub fn support(&self) -> Option<(i32, i32)> {
        if self.is_zero() {
            None
        } else {
            Some((self.low, self.low + self.num.len() as i32 - 1))
        }
    }

    /// First `len` values of the Hilbert function from degree `from`.
    pub fn values(&self, from: i32, len: usize) -> Vec<i128> {
        (0..len as i32).map(|i| self.hf(from + i)).collect()
    }
}

/// Numerator of `HS(R/I)` for a monomial ideal over `(1-t)^nvars`, lowest degree 0.
pub fn monomial_ideal_numerator(gens: &[Mono], nvars: usize) -> Vec<i64> {
    let mut g = minimalize(gens.to_vec());
    g.sort_by(|a, b| b.cmp_grevlex(*a));
    let _ = nvars;
    numerator_rec(g)
}

fn minimalize(mut g: Vec<Mono>) -> Vec<Mono> {
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    v
}

fn numerator_rec(g: Vec<Mono>) -> Vec<i64> {
    if g.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = g.iter().enumerate().all(|(i, a)| g[i + 1..].iter().all(|b| a.coprime(*b)));
    if pairwise_coprime {
        return g.iter().fold(vec![1], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree())));
    }
    // pivot: the variable shared by the most non-linear generators
    let mut counts = [0usize; Mono::MAX_VARS];
    for m in &g {
        if m.degree() > 1 {
            for (v, c) in counts.iter_mut().enumerate() {
                if m.exp(v) > 0 {
                    *c += 1;
                }
            }
        }
    }
    let var = (0..Mono::MAX_VARS).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let mut exps: Vec<u32> = g.iter().map(|m| m.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = [0u32; Mono::MAX_VARS];
    pe[var] = e;
    let pivot = Mono::from_exps(&pe).unwrap();
    // N(I) = N(I + p) + t^deg p * N(I : p)
    let mut with_p: Vec<Mono> = g.iter().copied().filter(|m| !pivot.divides(*m)).collect();
    with_p.push(pivot);
    let colon: Vec<Mono> = g.iter().map(|m| m.div(m.gcd(pivot))).collect();
    let mut out = numerator_rec(minimalize(with_p));
    let b = numerator_rec(minimalize(colon));
    poly_add_shifted(&mut out, &b, e as usize);
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::from_exps(e).unwrap()
    }

    #[test]
    fn numerators() {
        // (x^2, xy) in K[x,y]: HS = (1 - 2t^2 + t^3)/(1-t)^2
        assert_eq!(monomial_ideal_numerator(&[m(&[2, 0]), m(&[1, 1])], 2), vec![1, 0, -2, 1]);
        // maximal ideal of K[x0..x3]
        let vars: Vec<Mono> = (0..4).map(Mono::var).collect();
        assert_eq!(monomial_ideal_numerator(&vars, 4), vec![1, -4, 6, -4, 1]);
    }

    #[test]
    fn series_invariants() {
        let h = HilbertSeries::from_numerator(2, 0, vec![1, 0, -2, 1]);
        assert_eq!(h.dimension(), 1);
        assert_eq!(h.degree(), 1);
        assert_eq!(h.values(0, 5), vec![1, 2, 1, 1, 1]);
        assert_eq!(h.hilbert_polynomial(7), 1);
        let r = HilbertSeries::from_numerator(4, 0, vec![1]);
        assert_eq!(r.dimension(), 4);
        assert_eq!(r.hf(2), 10);
    }
}
