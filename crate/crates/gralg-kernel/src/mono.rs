use std::cmp::Ordering;

const GUARD: u64 = 0x8080_8080_8080_8080;
const LOW7: u64 = 0x7f7f_7f7f_7f7f_7f7f;
const ONES: u64 = 0x0101_0101_0101_0101;

/// Monomial with up to eight variables packed one byte each, variable `i` in byte `i`.
///
/// Exponents are limited to 127 and total degree to 255; the high bit of every byte
/// is kept clear so divisibility and lcm run as word operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Mono(u64);

impl Mono {
    pub const MAX_VARS: usize = 8;
    pub const MAX_EXP: u32 = 127;

    pub const ONE: Mono = Mono(0);

    pub fn var(i: usize) -> Mono {
        assert!(i < Self::MAX_VARS);
        Mono(1u64 << (8 * i))
    }

    pub fn from_exps(exps: &[u32]) -> Option<Mono> {
        if exps.len() > Self::MAX_VARS {
            return None;
        }
        let mut packed = 0u64;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > Self::MAX_EXP {
                return None;
            }
            deg += e;
            packed |= (e as u64) << (8 * i);
        }
        if deg > 255 {
            return None;
        }
        Some(Mono(packed))
    }

    #[inline]
    pub fn packed(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn from_packed(bits: u64) -> Mono {
        debug_assert_eq!(bits & GUARD, 0);
        Mono(bits)
    }

    #[inline]
    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exps(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0.wrapping_mul(ONES) >> 56) as u32
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn mul(self, other: Mono) -> Option<Mono> {
        let s = self.0 + other.0;
        if s & GUARD != 0 || self.degree() + other.degree() > 255 {
            return None;
        }
        Some(Mono(s))
    }

    #[inline]
    pub fn divides(self, other: Mono) -> bool {
        ((other.0 | GUARD) - self.0) & GUARD == GUARD
    }

    /// `self / other`; caller guarantees `other` divides `self`.
    #[inline]
    pub fn div(self, other: Mono) -> Mono {
        debug_assert!(other.divides(self));
        Mono(self.0 - other.0)
    }

    #[inline]
    fn ge_mask(a: u64, b: u64) -> u64 {
        let d = ((a | GUARD) - b) & GUARD;
        (d >> 7) * 0xff
    }

    #[inline]
    pub fn lcm(self, other: Mono) -> Mono {
        let m = Self::ge_mask(self.0, other.0);
        Mono((self.0 & m) | (other.0 & !m))
    }

    #[inline]
    pub fn gcd(self, other: Mono) -> Mono {
        let m = Self::ge_mask(self.0, other.0);
        Mono((other.0 & m) | (self.0 & !m))
    }

    #[inline]
    fn support_mask(a: u64) -> u64 {
        (((a & LOW7) + LOW7) | a) & GUARD
    }

    #[inline]
    pub fn coprime(self, other: Mono) -> bool {
        Self::support_mask(self.0) & Self::support_mask(other.0) == 0
    }

    /// Graded reverse lexicographic order with `x0 > x1 > ... `.
    #[inline]
    pub fn cmp_grevlex(self, other: Mono) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

/// All monomials of degree `d` in `nvars` variables, in decreasing grevlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            if let Some(m) = Mono::from_exps(exps) {
                out.push(m);
            }
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Mono::ONE);
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| b.cmp_grevlex(*a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::from_exps(e).unwrap()
    }

    #[test]
    fn grevlex_ranks_last_variable_lowest() {
        // x0*x2 < x1^2 in grevlex
        assert_eq!(m(&[1, 0, 1]).cmp_grevlex(m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(m(&[2, 0, 0]).cmp_grevlex(m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(m(&[0, 0, 3]).cmp_grevlex(m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn word_ops_match_bytewise() {
        let a = m(&[3, 0, 5, 1]);
        let b = m(&[1, 2, 5, 0]);
        assert_eq!(a.lcm(b), m(&[3, 2, 5, 1]));
        assert_eq!(a.gcd(b), m(&[1, 0, 5, 0]));
        assert!(!a.coprime(b));
        assert!(m(&[1, 0, 0]).coprime(m(&[0, 4, 2])));
        assert!(m(&[1, 0, 5]).divides(a));
        assert!(!b.divides(a));
        assert_eq!(a.degree(), 9);
    }

    #[test]
    fn degree_count() {
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(3, 0), vec![Mono::ONE]);
    }
}
