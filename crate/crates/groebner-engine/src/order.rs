use gralg_kernel::{GradedFreeModule, Mono};

/// How monomial and position compare inside one block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Grevlex on the monomial first, then position.
    TermOverPosition,
    /// Position first, then grevlex.
    PositionOverTerm,
}

/// Module monomial order on `⊕ R e_c`.
///
/// Components carry a block number; every term in block 0 is larger than every term in
/// block 1, and so on. Within a block `kind` decides. Lower component index is larger.
/// Terms are encoded as `u128` keys whose integer order is the module order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    kind: OrderKind,
    blocks: Vec<u8>,
    degrees: Vec<i32>,
}

const DEG_TOP: u32 = 112;
const PACK_TOP: u32 = 48;
const COMP_TOP: u32 = 16;
const COMP_POT: u32 = 88;
const DEG_POT: u32 = 80;
const PACK_POT: u32 = 16;

impl ModuleOrder {
    pub fn new(kind: OrderKind, module: &GradedFreeModule) -> ModuleOrder {
        ModuleOrder { kind, blocks: vec![0; module.rank()], degrees: module.degrees() }
    }

    /// Components of `blocks[b]` form block `b`.
    pub fn with_blocks(kind: OrderKind, blocks: &[&GradedFreeModule]) -> ModuleOrder {
        let mut bl = Vec::new();
        let mut degrees = Vec::new();
        for (b, m) in blocks.iter().enumerate() {
            bl.extend(std::iter::repeat_n(b as u8, m.rank()));
            degrees.extend(m.degrees());
        }
        ModuleOrder { kind, blocks: bl, degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    #[inline]
    pub fn comp_degree(&self, comp: u32) -> i32 {
        self.degrees[comp as usize]
    }

    #[inline]
    pub fn block(&self, comp: u32) -> u8 {
        self.blocks[comp as usize]
    }

    pub fn block_of_key(&self, key: u128) -> u8 {
        255 - (key >> 120) as u8
    }

    #[inline]
    pub fn encode(&self, m: Mono, comp: u32) -> u128 {
        let b = ((255 - self.blocks[comp as usize]) as u128) << 120;
        let ic = (u32::MAX - comp) as u128;
        let d = m.degree() as u128;
        let np = (!m.packed()) as u128;
        match self.kind {
            OrderKind::TermOverPosition => b | d << DEG_TOP | np << PACK_TOP | ic << COMP_TOP,
            OrderKind::PositionOverTerm => b | ic << COMP_POT | d << DEG_POT | np << PACK_POT,
        }
    }

    #[inline]
    pub fn comp(&self, key: u128) -> u32 {
        let shift = match self.kind {
            OrderKind::TermOverPosition => COMP_TOP,
            OrderKind::PositionOverTerm => COMP_POT,
        };
        u32::MAX - ((key >> shift) as u32)
    }

    #[inline]
    pub fn mono(&self, key: u128) -> Mono {
        let shift = match self.kind {
            OrderKind::TermOverPosition => PACK_TOP,
            OrderKind::PositionOverTerm => PACK_POT,
        };
        Mono::from_packed(!((key >> shift) as u64))
    }

    /// Key of `m * term`; the caller keeps exponents inside the packed range.
    #[inline]
    pub fn mul_key(&self, key: u128, m: Mono) -> u128 {
        let d = m.degree() as u128;
        let p = m.packed() as u128;
        match self.kind {
            OrderKind::TermOverPosition => key + (d << DEG_TOP) - (p << PACK_TOP),
            OrderKind::PositionOverTerm => key + (d << DEG_POT) - (p << PACK_POT),
        }
    }

    /// Total degree `deg m + deg e_c` of a term.
    #[inline]
    pub fn total_degree(&self, key: u128) -> i32 {
        self.mono(key).degree() as i32 + self.comp_degree(self.comp(key))
    }
}
