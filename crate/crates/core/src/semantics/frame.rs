use std::collections::{BTreeMap, HashMap};

use super::bitset::{BitSet, WorldSet, MAX_ELEMENTS};
use crate::syntax::Predicate;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrameError {
    #[error("a frame needs at least one world")]
    NoWorlds,
    #[error("at most {MAX_ELEMENTS} {0} are supported")]
    TooMany(&'static str),
    #[error("duplicate {kind} name `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("{0}")]
    Invariant(String),
}

/// Worlds, accessibility, and domains shared by every kind of frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameBase {
    worlds: Vec<String>,
    access: Vec<WorldSet>,
    domain: Vec<String>,
    local: Vec<BitSet>,
}

fn check_names(kind: &'static str, names: &[String]) -> Result<(), FrameError> {
    if names.len() > MAX_ELEMENTS {
        return Err(FrameError::TooMany(kind));
    }
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(FrameError::Duplicate { kind, name: n.clone() });
        }
    }
    Ok(())
}

impl FrameBase {
    /// `access[w]` is `R(w)`, `local[w]` is `d(w)`.
    pub fn new(worlds: Vec<String>, access: Vec<WorldSet>, domain: Vec<String>, local: Vec<BitSet>) -> Result<Self, FrameError> {
        if worlds.is_empty() {
            return Err(FrameError::NoWorlds);
        }
        check_names("worlds", &worlds)?;
        check_names("domain elements", &domain)?;
        if domain.is_empty() {
            return Err(FrameError::Invariant("the domain D must be nonempty".into()));
        }
        let n = worlds.len();
        if access.len() != n || local.len() != n {
            return Err(FrameError::Invariant("accessibility and local domains need one entry per world".into()));
        }
        for (w, r) in access.iter().enumerate() {
            if !r.is_subset(BitSet::full(n)) {
                return Err(FrameError::Invariant(format!("R({}) mentions a world outside W", worlds[w])));
            }
        }
        for (w, d) in local.iter().enumerate() {
            if !d.is_subset(BitSet::full(domain.len())) {
                return Err(FrameError::Invariant(format!("d({}) is not a subset of D", worlds[w])));
            }
        }
        Ok(FrameBase { worlds, access, domain, local })
    }

    /// Frame with worlds and elements named `0, 1, ..`.
    pub fn anonymous(access: Vec<WorldSet>, domain_size: usize, local: Vec<BitSet>) -> Result<Self, FrameError> {
        let worlds = (0..access.len()).map(|i| i.to_string()).collect();
        let domain = (0..domain_size).map(|i| format!("d{i}")).collect();
        FrameBase::new(worlds, access, domain, local)
    }

    pub fn n_worlds(&self) -> usize {
        self.worlds.len()
    }

    pub fn n_domain(&self) -> usize {
        self.domain.len()
    }

    pub fn all_worlds(&self) -> WorldSet {
        BitSet::full(self.worlds.len())
    }

    pub fn access(&self, w: usize) -> WorldSet {
        self.access[w]
    }

    pub fn local(&self, w: usize) -> BitSet {
        self.local[w]
    }

    pub fn world_names(&self) -> &[String] {
        &self.worlds
    }

    pub fn domain_names(&self) -> &[String] {
        &self.domain
    }

    pub fn world_name(&self, w: usize) -> &str {
        &self.worlds[w]
    }

    pub fn elem_name(&self, e: usize) -> &str {
        &self.domain[e]
    }

    pub fn world_index(&self, name: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w == name)
    }

    pub fn elem_index(&self, name: &str) -> Option<usize> {
        self.domain.iter().position(|d| d == name)
    }

    pub fn world_set_names(&self, s: WorldSet) -> Vec<String> {
        s.iter().map(|w| self.worlds[w].clone()).collect()
    }
}

/// How unlisted selection-table entries resolve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionDefault {
    /// `f(P,w) = ∅`
    Empty,
    /// `f(P,w) = {w}` if `w ∈ P`, else `∅`
    Centering,
}

impl SelectionDefault {
    pub fn apply(self, p: WorldSet, w: usize) -> WorldSet {
        match self {
            SelectionDefault::Empty => BitSet::EMPTY,
            SelectionDefault::Centering if p.contains(w) => BitSet::singleton(w),
            SelectionDefault::Centering => BitSet::EMPTY,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Table {
    Sparse { entries: HashMap<(WorldSet, usize), WorldSet>, default: SelectionDefault },
    /// Row `p * n + w`; only for small `n`.
    Dense(Vec<WorldSet>),
}

/// A selection function `f : 2^W × W → 2^W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionTable {
    n: usize,
    table: Table,
}

/// Worlds above which dense tables are refused.
pub const DENSE_MAX_WORLDS: usize = 16;

impl SelectionTable {
    pub fn sparse(n: usize, entries: HashMap<(WorldSet, usize), WorldSet>, default: SelectionDefault) -> Self {
        SelectionTable { n, table: Table::Sparse { entries, default } }
    }

    /// Dense table from `f` evaluated at every `(P, w)`.
    pub fn dense(n: usize, f: impl Fn(WorldSet, usize) -> WorldSet) -> Self {
        assert!(n <= DENSE_MAX_WORLDS, "dense selection tables are limited to {DENSE_MAX_WORLDS} worlds");
        let mut rows = Vec::with_capacity((1usize << n) * n);
        for p in 0..(1u64 << n) {
            for w in 0..n {
                rows.push(f(BitSet(p), w));
            }
        }
        SelectionTable { n, table: Table::Dense(rows) }
    }

    /// Dense table from rows indexed `p * n + w`.
    pub fn from_rows(n: usize, rows: Vec<WorldSet>) -> Self {
        assert_eq!(rows.len(), (1usize << n) * n);
        SelectionTable { n, table: Table::Dense(rows) }
    }

    pub fn n_worlds(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: WorldSet, w: usize) -> WorldSet {
        match &self.table {
            Table::Sparse { entries, default } => entries.get(&(p, w)).copied().unwrap_or_else(|| default.apply(p, w)),
            Table::Dense(rows) => rows[p.0 as usize * self.n + w],
        }
    }

    /// The slice `P ↦ f(P, w)` indexed by `P`.
    pub fn slice(&self, w: usize) -> Vec<WorldSet> {
        (0..1u64 << self.n).map(|p| self.get(BitSet(p), w)).collect()
    }

    /// Explicit entries plus the default rule, for serialisation. Dense
    /// tables report every nonempty entry with the `empty` default.
    pub fn listing(&self) -> (Vec<(WorldSet, usize, WorldSet)>, SelectionDefault) {
        match &self.table {
            Table::Sparse { entries, default } => {
                let mut v: Vec<_> = entries.iter().map(|(&(p, w), &out)| (p, w, out)).collect();
                v.sort();
                (v, *default)
            }
            Table::Dense(rows) => {
                let mut v = Vec::new();
                for p in 0..1u64 << self.n {
                    for w in 0..self.n {
                        let out = rows[p as usize * self.n + w];
                        if !out.is_empty() {
                            v.push((BitSet(p), w, out));
                        }
                    }
                }
                (v, SelectionDefault::Empty)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionFrame {
    pub base: FrameBase,
    table: SelectionTable,
}

impl SelectionFrame {
    /// Checks `f(P,w) ⊆ R(w)` for every listed entry and for the default.
    pub fn new(base: FrameBase, table: SelectionTable) -> Result<Self, FrameError> {
        let n = base.n_worlds();
        if table.n != n {
            return Err(FrameError::Invariant("selection table size does not match W".into()));
        }
        let all = base.all_worlds();
        match &table.table {
            Table::Sparse { entries, default } => {
                for (&(p, w), &out) in entries {
                    if w >= n || !p.is_subset(all) {
                        return Err(FrameError::Invariant("selection entry mentions a world outside W".into()));
                    }
                    check_entry(&base, p, w, out)?;
                }
                if *default == SelectionDefault::Centering {
                    for w in 0..n {
                        if !base.access(w).contains(w) {
                            return Err(FrameError::Invariant(format!(
                                "default `centering` selects world {} from itself but {} is not in R({})",
                                base.world_name(w),
                                base.world_name(w),
                                base.world_name(w)
                            )));
                        }
                    }
                }
            }
            Table::Dense(_) => {
                for p in all.subsets() {
                    for w in 0..n {
                        check_entry(&base, p, w, table.get(p, w))?;
                    }
                }
            }
        }
        Ok(SelectionFrame { base, table })
    }

    pub fn f(&self, p: WorldSet, w: usize) -> WorldSet {
        self.table.get(p, w)
    }

    pub fn table(&self) -> &SelectionTable {
        &self.table
    }
}

fn check_entry(base: &FrameBase, p: WorldSet, w: usize, out: WorldSet) -> Result<(), FrameError> {
    if !out.is_subset(base.access(w)) {
        let names = |s: WorldSet| base.world_set_names(s).join(",");
        return Err(FrameError::Invariant(format!(
            "selection entry f({{{}}}, {}) = {{{}}} is not a subset of R({}) = {{{}}}",
            names(p),
            base.world_name(w),
            names(out),
            base.world_name(w),
            names(base.access(w))
        )));
    }
    Ok(())
}

/// Per-world preorders `⪯_w ⊆ R(w) × R(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingFrame {
    pub base: FrameBase,
    /// `below[w][x] = { y : y ⪯_w x }`
    below: Vec<Vec<WorldSet>>,
    /// `above[w][x] = { y : x ⪯_w y }`
    above: Vec<Vec<WorldSet>>,
}

impl OrderingFrame {
    /// `pairs[w]` lists `(x, y)` meaning `x ⪯_w y`.
    pub fn new(base: FrameBase, pairs: &[Vec<(usize, usize)>]) -> Result<Self, FrameError> {
        let n = base.n_worlds();
        if pairs.len() != n {
            return Err(FrameError::Invariant("ordering needs one relation per world".into()));
        }
        let mut below = vec![vec![BitSet::EMPTY; n]; n];
        let mut above = vec![vec![BitSet::EMPTY; n]; n];
        for (w, rel) in pairs.iter().enumerate() {
            let r = base.access(w);
            for &(x, y) in rel {
                if !(r.contains(x) && r.contains(y)) {
                    return Err(FrameError::Invariant(format!(
                        "order pair ({}, {}) at world {} is not in R({}) × R({})",
                        base.world_name(x.min(n - 1)),
                        base.world_name(y.min(n - 1)),
                        base.world_name(w),
                        base.world_name(w),
                        base.world_name(w)
                    )));
                }
                below[w][y] = below[w][y].with(x);
                above[w][x] = above[w][x].with(y);
            }
        }
        Ok(OrderingFrame { base, below, above })
    }

    /// `x ⪯_w y`
    pub fn le(&self, w: usize, x: usize, y: usize) -> bool {
        self.above[w][x].contains(y)
    }

    pub fn below(&self, w: usize, x: usize) -> WorldSet {
        self.below[w][x]
    }

    pub fn above(&self, w: usize, x: usize) -> WorldSet {
        self.above[w][x]
    }

    /// `min_{⪯_w}(S) = { x ∈ S∩R(w) : ∀y ∈ S∩R(w). x ⪯_w y }`
    pub fn min(&self, w: usize, s: WorldSet) -> WorldSet {
        let s = s & self.base.access(w);
        BitSet::from_iter_indices(s.iter().filter(|&x| s.is_subset(self.above[w][x])))
    }

    pub fn pairs(&self, w: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.base.n_worlds() {
            for y in self.above[w][x].iter() {
                out.push((x, y));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum QuasiStrategy {
    #[serde(rename = "min-of-order")]
    MinOfOrder,
}

/// A quasi-selection frame whose selection is computed from the
/// denotation of the antecedent formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiSelectionFrame {
    pub order: OrderingFrame,
    pub strategy: QuasiStrategy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frame {
    Selection(SelectionFrame),
    Ordering(OrderingFrame),
    Quasi(QuasiSelectionFrame),
}

impl Frame {
    pub fn base(&self) -> &FrameBase {
        match self {
            Frame::Selection(f) => &f.base,
            Frame::Ordering(f) => &f.base,
            Frame::Quasi(f) => &f.order.base,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Frame::Selection(_) => "selection",
            Frame::Ordering(_) => "ordering",
            Frame::Quasi(_) => "quasi-selection",
        }
    }

    /// Truth of `A > B` at `w`, given the denotations `A` and `B`.
    pub fn cond_holds(&self, w: usize, a: WorldSet, b: WorldSet) -> bool {
        match self {
            Frame::Selection(f) => f.f(a, w).is_subset(b),
            Frame::Ordering(o) => {
                let s = a & o.base.access(w);
                s.is_empty() || s.iter().any(|x| (o.below(w, x) & a).is_subset(b))
            }
            Frame::Quasi(q) => match q.strategy {
                QuasiStrategy::MinOfOrder => q.order.min(w, a).is_subset(b),
            },
        }
    }
}

/// Extension of one predicate: bit `w * |D|^n + code(tuple)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PredTable {
    arity: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl PredTable {
    pub fn empty(arity: usize, n_worlds: usize, n_domain: usize) -> Self {
        let stride = n_domain.pow(arity as u32);
        let total = stride * n_worlds;
        PredTable { arity, stride, bits: vec![0; total.div_ceil(64).max(1)] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Tuples per world.
    pub fn stride(&self) -> usize {
        self.stride
    }

    fn bit(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn get_code(&self, w: usize, code: usize) -> bool {
        self.bit(w * self.stride + code)
    }

    pub fn set_code(&mut self, w: usize, code: usize, value: bool) {
        let i = w * self.stride + code;
        if value {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Sets cell `i` (world-major) to `cells[i]`.
    pub fn set_all_from(&mut self, cells: &[bool]) {
        for (i, &v) in cells.iter().enumerate() {
            if v {
                self.bits[i / 64] |= 1 << (i % 64);
            } else {
                self.bits[i / 64] &= !(1 << (i % 64));
            }
        }
    }
}

/// Mixed-radix code of a tuple of domain indices.
pub fn tuple_code(tuple: &[usize], n_domain: usize) -> usize {
    tuple.iter().fold(0, |acc, &e| acc * n_domain + e)
}

pub fn decode_tuple(mut code: usize, arity: usize, n_domain: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = code % n_domain;
        code /= n_domain;
    }
    out
}

/// `I(P, w)` for every predicate; predicates without a table are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Interpretation {
    tables: BTreeMap<Predicate, PredTable>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Predicate, table: PredTable) {
        assert_eq!(p.arity(), table.arity);
        self.tables.insert(p, table);
    }

    pub fn table(&self, p: &Predicate) -> Option<&PredTable> {
        self.tables.get(p)
    }

    pub fn table_mut(&mut self, p: &Predicate) -> Option<&mut PredTable> {
        self.tables.get_mut(p)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&Predicate, &PredTable)> {
        self.tables.iter()
    }

    pub fn holds(&self, p: &Predicate, w: usize, tuple: &[usize], n_domain: usize) -> bool {
        self.tables.get(p).is_some_and(|t| t.get_code(w, tuple_code(tuple, n_domain)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub frame: Frame,
    pub interp: Interpretation,
    /// When set, evaluation rejects formulas outside this language.
    pub language: Option<crate::syntax::Language>,
}

impl Model {
    pub fn new(frame: Frame, interp: Interpretation) -> Self {
        Model { frame, interp, language: None }
    }

    pub fn base(&self) -> &FrameBase {
        self.frame.base()
    }
}
