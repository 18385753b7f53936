use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::{Fp, Mono};

/// Sparse polynomial: terms sorted by decreasing grevlex, no zero coefficients.
///
/// Arithmetic panics if a product leaves the packed exponent range of [`Mono`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Mono, u32)>,
}

fn overflow() -> ! {
    panic!("monomial exponent exceeds the packed range (127 per variable, 255 total)")
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: u32) -> Polynomial {
        Self::term(Mono::ONE, c)
    }

    pub fn one() -> Polynomial {
        Self::constant(1)
    }

    pub fn term(m: Mono, c: u32) -> Polynomial {
        if c == 0 {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(i: usize) -> Polynomial {
        Self::term(Mono::var(i), 1)
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, u32)>, k: Fp) -> Polynomial {
        let mut acc: HashMap<Mono, u32> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = k.add(*e, c % k.modulus());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|t| t.1 != 0).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(a.0));
        Polynomial { terms }
    }

    /// Caller guarantees sorted, distinct, nonzero.
    pub fn from_sorted_terms(terms: Vec<(Mono, u32)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_grevlex(w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Mono, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(Mono, u32)> {
        self.terms.first().copied()
    }

    /// Degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.0.degree() == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn constant_term(&self) -> u32 {
        match self.terms.last() {
            Some(&(m, c)) if m.is_one() => c,
            _ => 0,
        }
    }

    pub fn max_var_exponent(&self, nvars: usize) -> u32 {
        self.terms
            .iter()
            .flat_map(|t| (0..nvars).map(move |i| t.0.exp(i)))
            .max()
            .unwrap_or(0)
    }

    fn merge(&self, other: &Polynomial, k: Fp, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_grevlex(b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { k.neg(b[j].1) } else { b[j].1 };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { k.sub(a[i].1, b[j].1) } else { k.add(a[i].1, b[j].1) };
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(m, c) in &b[j..] {
            out.push((m, if negate { k.neg(c) } else { c }));
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, other: &Polynomial, k: Fp) -> Polynomial {
        self.merge(other, k, false)
    }

    pub fn sub(&self, other: &Polynomial, k: Fp) -> Polynomial {
        self.merge(other, k, true)
    }

    pub fn neg(&self, k: Fp) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|&(m, c)| (m, k.neg(c))).collect() }
    }

    pub fn scale(&self, c: u32, k: Fp) -> Polynomial {
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|&(m, a)| (m, k.mul(a, c))).collect() }
    }

    pub fn mul_term(&self, m: Mono, c: u32, k: Fp) -> Polynomial {
        if c == 0 {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|&(n, a)| (n.mul(m).unwrap_or_else(|| overflow()), k.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, k: Fp) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return other.mul_term(m, c, k);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(m, c, k);
        }
        let mut acc: HashMap<Mono, u32> = HashMap::with_capacity(self.len() * other.len());
        for &(m1, c1) in &self.terms {
            for &(m2, c2) in &other.terms {
                let m = m1.mul(m2).unwrap_or_else(|| overflow());
                let e = acc.entry(m).or_insert(0);
                *e = k.add(*e, k.mul(c1, c2));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|t| t.1 != 0).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(a.0));
        Polynomial { terms }
    }

    pub fn pow(&self, e: u32, k: Fp) -> Polynomial {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    pub fn eval(&self, point: &[u32], k: Fp) -> u32 {
        let mut acc = 0;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v = k.mul(v, k.pow(x, e as u64));
                }
            }
            acc = k.add(acc, v);
        }
        acc
    }

    pub fn coeff(&self, m: Mono) -> u32 {
        self.terms
            .binary_search_by(|t| m.cmp_grevlex(t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn display<'a>(&'a self, names: &'a [String], k: Fp) -> PolyDisplay<'a> {
        PolyDisplay { p: self, names, k }
    }
}

pub struct PolyDisplay<'a> {
    p: &'a Polynomial,
    names: &'a [String],
    k: Fp,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (idx, &(m, c)) in self.p.terms.iter().enumerate() {
            let s = self.k.to_signed(c);
            let a = s.unsigned_abs();
            if idx == 0 {
                if s < 0 {
                    write!(f, "-")?;
                }
            } else if s < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if a != 1 || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, name) in self.names.iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_binomial() {
        let k = Fp::default();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let s = x.add(&y, k);
        let sq = s.mul(&s, k);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(Mono::from_exps(&[1, 1]).unwrap()), 2);
        assert!(sq.sub(&sq, k).is_zero());
        assert!(sq.is_homogeneous());
    }
}
