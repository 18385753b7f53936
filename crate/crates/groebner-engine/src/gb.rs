use std::cmp::Ordering;

use gralg_kernel::{Fp, Mono};

use crate::order::ModuleOrder;
use crate::GbError;

pub(crate) type Term = (u128, u32);

/// Where a basis element came from; decides minimality bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Origin {
    Input(usize),
    /// S-pair between elements with leading terms in a block other than 0.
    LowPair,
    /// Any other S-pair.
    Pair,
}

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub v: Vec<Term>,
    pub lm: Mono,
    pub comp: u32,
    pub block: u8,
    pub deg: i32,
    pub origin: Origin,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    comp: u32,
    deg: i32,
    low: bool,
}

/// Homogeneous Buchberger run, one degree at a time, with Gebauer–Möller pruning.
///
/// Within a degree, S-pairs among non-block-0 elements go first, then the remaining
/// pairs, then the inputs of that degree. With that schedule an element created after
/// the first phase is never in the submodule generated by lower-degree elements, which
/// is what makes minimal generators and minimal syzygies fall out of a single run.
#[derive(Debug)]
pub(crate) struct Engine {
    pub ord: ModuleOrder,
    k: Fp,
    cap: u32,
    ideal_case: bool,
    pub elems: Vec<Elem>,
    by_comp: Vec<Vec<(Mono, usize)>>,
    pairs: Vec<Pair>,
    /// For each input: the index of the element it produced, if it did not reduce to 0.
    pub input_elem: Vec<Option<usize>>,
}

impl Engine {
    pub fn new(ord: ModuleOrder, k: Fp, cap: u32) -> Engine {
        Engine {
            ideal_case: ord.rank() == 1,
            by_comp: vec![Vec::new(); ord.rank()],
            ord,
            k,
            cap,
            elems: Vec::new(),
            pairs: Vec::new(),
            input_elem: Vec::new(),
        }
    }

    fn vec_degree(&self, v: &[Term]) -> i32 {
        self.ord.total_degree(v[0].0)
    }

    fn max_mono_degree(&self, v: &[Term]) -> u32 {
        v.iter().map(|t| self.ord.mono(t.0).degree()).max().unwrap_or(0)
    }

    pub fn run(&mut self, inputs: Vec<Vec<Term>>) -> Result<(), GbError> {
        let mut order: Vec<usize> = Vec::new();
        let mut degs = Vec::with_capacity(inputs.len());
        for (idx, v) in inputs.iter().enumerate() {
            if v.is_empty() {
                degs.push(i32::MIN);
                continue;
            }
            let d = self.vec_degree(v);
            if v.iter().any(|t| self.ord.total_degree(t.0) != d) {
                return Err(GbError::NotHomogeneous(idx));
            }
            degs.push(d);
            order.push(idx);
        }
        order.sort_by_key(|&i| degs[i]);
        self.input_elem = vec![None; inputs.len()];
        let mut inputs: Vec<Option<Vec<Term>>> = inputs.into_iter().map(Some).collect();
        let mut next_input = 0;
        loop {
            let pd = self.pairs.iter().map(|p| p.deg).min();
            let id = order.get(next_input).map(|&i| degs[i]);
            let d = match (pd, id) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let mut now: Vec<Pair> = Vec::new();
            self.pairs.retain(|p| {
                if p.deg == d {
                    now.push(*p);
                    false
                } else {
                    true
                }
            });
            for p in &now {
                if p.lcm.degree() > self.cap {
                    return Err(GbError::DegreeCap { cap: self.cap, degree: p.lcm.degree() });
                }
            }
            now.sort_by(|a, b| {
                b.low
                    .cmp(&a.low)
                    .then_with(|| a.lcm.cmp_grevlex(b.lcm))
                    .then_with(|| a.comp.cmp(&b.comp))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            });
            let first_new = self.elems.len();
            for p in now {
                let s = self.spoly(&p);
                let r = self.reduce(s);
                if !r.is_empty() {
                    let origin = if p.low { Origin::LowPair } else { Origin::Pair };
                    self.add(r, origin);
                }
            }
            while next_input < order.len() && degs[order[next_input]] == d {
                let idx = order[next_input];
                next_input += 1;
                let v = inputs[idx].take().unwrap();
                let md = self.max_mono_degree(&v);
                if md > self.cap {
                    return Err(GbError::DegreeCap { cap: self.cap, degree: md });
                }
                let r = self.reduce(v);
                if !r.is_empty() {
                    self.input_elem[idx] = Some(self.elems.len());
                    self.add(r, Origin::Input(idx));
                }
            }
            for e in first_new..self.elems.len() {
                let v = std::mem::take(&mut self.elems[e].v);
                let head = v[0];
                let tail = self.reduce(v[1..].to_vec());
                let mut nv = Vec::with_capacity(tail.len() + 1);
                nv.push(head);
                nv.extend(tail);
                self.elems[e].v = nv;
            }
        }
        Ok(())
    }

    fn spoly(&self, p: &Pair) -> Vec<Term> {
        let gi = &self.elems[p.i];
        let gj = &self.elems[p.j];
        let qi = p.lcm.div(gi.lm);
        let qj = p.lcm.div(gj.lm);
        let a: Vec<Term> = gi.v[1..].iter().map(|&(key, c)| (self.ord.mul_key(key, qi), c)).collect();
        axpy(&self.ord, self.k, &a, 1, qj, &gj.v[1..])
    }

    fn find_reducer(&self, key: u128) -> Option<usize> {
        let comp = self.ord.comp(key);
        let m = self.ord.mono(key);
        self.by_comp[comp as usize].iter().find(|(lm, _)| lm.divides(m)).map(|&(_, i)| i)
    }

    /// Full reduction against the current basis.
    pub fn reduce(&self, v: Vec<Term>) -> Vec<Term> {
        let mut done: Vec<Term> = Vec::new();
        let mut rest = v;
        loop {
            let hit = rest.iter().enumerate().find_map(|(pos, t)| self.find_reducer(t.0).map(|g| (pos, g)));
            match hit {
                None => {
                    done.extend(rest);
                    return done;
                }
                Some((pos, g)) => {
                    done.extend_from_slice(&rest[..pos]);
                    let (key, c) = rest[pos];
                    let ge = &self.elems[g];
                    let q = self.ord.mono(key).div(ge.lm);
                    rest = axpy(&self.ord, self.k, &rest[pos + 1..], c, q, &ge.v[1..]);
                }
            }
        }
    }

    fn add(&mut self, mut v: Vec<Term>, origin: Origin) {
        let lc = v[0].1;
        if lc != 1 {
            let inv = self.k.inv(lc);
            for t in v.iter_mut() {
                t.1 = self.k.mul(t.1, inv);
            }
        }
        let key = v[0].0;
        let lm = self.ord.mono(key);
        let comp = self.ord.comp(key);
        let elem = Elem {
            deg: self.ord.total_degree(key),
            lm,
            comp,
            block: self.ord.block(comp),
            v,
            origin,
        };
        let h = self.elems.len();
        self.elems.push(elem);
        self.update_pairs(h);
        self.by_comp[comp as usize].push((lm, h));
    }

    fn update_pairs(&mut self, h: usize) {
        let (lm_h, comp, block) = (self.elems[h].lm, self.elems[h].comp, self.elems[h].block);
        let gen_deg = self.ord.comp_degree(comp);
        let cands: Vec<(usize, Mono, bool)> = self.by_comp[comp as usize]
            .iter()
            .map(|&(lm, i)| (i, lm.lcm(lm_h), self.ideal_case && lm.coprime(lm_h)))
            .collect();
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        for (pos, c) in cands.iter().enumerate() {
            let dominated = cands[pos + 1..].iter().any(|o| o.1.divides(c.1))
                || kept.iter().any(|o| o.1.divides(c.1));
            if c.2 || !dominated {
                kept.push(*c);
            }
        }
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != comp || !lm_h.divides(p.lcm) {
                return true;
            }
            let li = elems[p.i].lm.lcm(lm_h);
            let lj = elems[p.j].lm.lcm(lm_h);
            li == p.lcm || lj == p.lcm
        });
        for (i, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            self.pairs.push(Pair {
                i,
                j: h,
                lcm,
                comp,
                deg: lcm.degree() as i32 + gen_deg,
                low: block > 0,
            });
        }
    }
}

/// `a - c * q * b`, both sorted descending; `b` is multiplied term-wise by `q`.
pub(crate) fn axpy(ord: &ModuleOrder, k: Fp, a: &[Term], c: u32, q: Mono, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let nc = k.neg(c);
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let kb = ord.mul_key(b[j].0, q);
        match a[i].0.cmp(&kb) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((kb, k.mul(nc, b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = k.add(a[i].1, k.mul(nc, b[j].1));
                if v != 0 {
                    out.push((kb, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((ord.mul_key(b[j].0, q), k.mul(nc, b[j].1)));
        j += 1;
    }
    out
}
