use crate::combinat::{binomial, binomial_poly};
use crate::{Fp, KernelError, Mono, Polynomial};

pub const DEFAULT_MAX_DEGREE: u32 = 30;

/// `K[x_0..x_n] / (q_1..q_c)` with `q` a homogeneous regular sequence (caller-asserted).
///
/// Also carries the degree cap every Gröbner loop over this ring must respect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    k: Fp,
    vars: Vec<String>,
    quotient: Vec<Polynomial>,
    krull_dim: i32,
    regularity_index: i32,
    max_degree: u32,
}

impl GradedRing {
    pub fn polynomial(nvars: usize, p: u32) -> Result<GradedRing, KernelError> {
        let vars = (0..nvars).map(|i| format!("x{i}")).collect();
        GradedRing::new(Fp::new(p)?, vars, Vec::new())
    }

    pub fn new(k: Fp, vars: Vec<String>, quotient: Vec<Polynomial>) -> Result<GradedRing, KernelError> {
        if vars.len() < 2 {
            return Err(KernelError::TooFewVariables(vars.len()));
        }
        if vars.len() > Mono::MAX_VARS {
            return Err(KernelError::TooManyVariables { got: vars.len(), max: Mono::MAX_VARS });
        }
        for (i, q) in quotient.iter().enumerate() {
            if q.is_zero() || !q.is_homogeneous() || q.degree() == Some(0) {
                return Err(KernelError::BadQuotient(i));
            }
        }
        if quotient.len() >= vars.len() {
            return Err(KernelError::Shape("quotient sequence longer than the variable count".into()));
        }
        let krull_dim = (vars.len() - quotient.len()) as i32;
        let degs: Vec<u32> = quotient.iter().map(|q| q.degree().unwrap()).collect();
        let regularity_index = regularity_from_ci(vars.len(), &degs);
        Ok(GradedRing { k, vars, quotient, krull_dim, regularity_index, max_degree: DEFAULT_MAX_DEGREE })
    }

    pub fn with_max_degree(mut self, cap: u32) -> GradedRing {
        self.max_degree = cap.min(Mono::MAX_EXP);
        self
    }

    /// The polynomial ring this one is a quotient of, with the same cap.
    pub fn ambient(&self) -> GradedRing {
        GradedRing { quotient: Vec::new(), krull_dim: self.vars.len() as i32, regularity_index: regularity_from_ci(self.vars.len(), &[]), ..self.clone() }
    }

    pub fn field(&self) -> Fp {
        self.k
    }

    pub fn characteristic(&self) -> u32 {
        self.k.modulus()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn quotient(&self) -> &[Polynomial] {
        &self.quotient
    }

    pub fn is_quotient(&self) -> bool {
        !self.quotient.is_empty()
    }

    pub fn quotient_degrees(&self) -> Vec<u32> {
        self.quotient.iter().map(|q| q.degree().unwrap()).collect()
    }

    /// Krull dimension, written n+1 in the projective picture.
    pub fn krull_dim(&self) -> i32 {
        self.krull_dim
    }

    /// Dimension n of Proj R.
    pub fn proj_dim(&self) -> i32 {
        self.krull_dim - 1
    }

    pub fn regularity_index(&self) -> i32 {
        self.regularity_index
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    pub fn fmt_poly(&self, p: &Polynomial) -> String {
        p.display(&self.vars, self.k).to_string()
    }

    pub fn parse_poly(&self, src: &str) -> Result<Polynomial, KernelError> {
        let mut parser = Parser { src: src.as_bytes(), pos: 0, ring: self };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.err("unexpected trailing input"));
        }
        Ok(p)
    }
}

/// Smallest `d0` with HF(d) = HP(d) for all `d >= d0`, scanned from the complete
/// intersection series `prod (1 - t^d_j) / (1-t)^N`.
fn regularity_from_ci(nvars: usize, degs: &[u32]) -> i32 {
    let mut q: Vec<i128> = vec![1];
    for &d in degs {
        let mut next = vec![0i128; q.len() + d as usize - 1];
        for (i, &c) in q.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        q = next;
    }
    let dim = (nvars - degs.len()) as i64;
    let hf = |d: i64| -> i128 {
        q.iter()
            .enumerate()
            .map(|(k, &c)| c * binomial(d - k as i64 + dim - 1, dim - 1))
            .sum()
    };
    let hp = |d: i64| -> i128 {
        q.iter()
            .enumerate()
            .map(|(k, &c)| c * binomial_poly(d - k as i64 + dim - 1, (dim - 1) as u32))
            .sum()
    };
    let top = q.len() as i64 + 1;
    let mut d0 = top;
    let mut d = top;
    while d > -(nvars as i64) - 4 {
        if hf(d) != hp(d) {
            break;
        }
        d0 = d;
        d -= 1;
    }
    d0 as i32
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a GradedRing,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> KernelError {
        KernelError::Parse { col: self.pos + 1, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, KernelError> {
        let k = self.ring.k;
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.neg(k)
        } else {
            if self.peek() == Some(b'+') {
                self.pos += 1;
            }
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, k);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?, k);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, KernelError> {
        let k = self.ring.k;
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.power()?;
            acc = checked_mul(&acc, &rhs, k).ok_or_else(|| self.err("degree out of range"))?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, KernelError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.number()?;
            if e > Mono::MAX_EXP as u64 {
                return Err(self.err("exponent too large"));
            }
            let mut acc = Polynomial::one();
            for _ in 0..e {
                acc = checked_mul(&acc, &base, self.ring.k).ok_or_else(|| self.err("degree out of range"))?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<u64, KernelError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| KernelError::Parse { col: start + 1, msg: "expected a number".into() })
    }

    fn atom(&mut self) -> Result<Polynomial, KernelError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let p = self.ring.k.modulus() as u64;
                Ok(Polynomial::constant((n % p) as u32))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::var(i)),
                    None => Err(KernelError::Parse { col: start + 1, msg: format!("unknown variable '{name}'") }),
                }
            }
            _ => Err(self.err("expected a variable, number or '('")),
        }
    }
}

fn checked_mul(a: &Polynomial, b: &Polynomial, k: Fp) -> Option<Polynomial> {
    let da = a.terms().iter().map(|t| t.0.degree()).max().unwrap_or(0);
    let db = b.terms().iter().map(|t| t.0.degree()).max().unwrap_or(0);
    let ea = (0..Mono::MAX_VARS).map(|i| a.terms().iter().map(|t| t.0.exp(i)).max().unwrap_or(0));
    let eb: Vec<u32> = (0..Mono::MAX_VARS).map(|i| b.terms().iter().map(|t| t.0.exp(i)).max().unwrap_or(0)).collect();
    if da + db > 255 || ea.zip(eb).any(|(x, y)| x + y > Mono::MAX_EXP) {
        return None;
    }
    Some(a.mul(b, k))
}
