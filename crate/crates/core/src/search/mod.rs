//! Frame enumeration and sweeps.
//!
//! Selection frames are enumerated up to relabeling of worlds and domain
//! elements: a raw frame is kept only when its encoding is lexicographically
//! least among all its relabelings. Selection conditions are local to a
//! world, so each world's slice `P ↦ f(P, w)` is filtered on its own before
//! the product is formed.

mod compactness;

use serde::Serialize;

use crate::frame_props::{
    check_domain_props_base, check_selection_props, qc2_correspondence_check, slice_violation, Condition, Correspondence,
};
use crate::par::{self, Exec};
use crate::semantics::{
    eval, BitSet, Evaluator, Frame, FrameBase, FrameError, Interpretation, Model, PredTable, SelectionFrame, SelectionTable,
    WorldSet,
};
use crate::syntax::{build_ds, predicate_f, Formula};

pub use compactness::{compactness_prefix, compactness_witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AccessPolicy {
    /// `R(w)` ranges over the sets containing `w`.
    ReflexiveOnly,
    All,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationParams {
    pub max_worlds: usize,
    pub max_domain: usize,
    pub required: Vec<Condition>,
    pub access: AccessPolicy,
}

/// Enumeration refuses per-world slice products beyond this.
pub const MAX_SLICE_CANDIDATES: u64 = 1 << 22;
/// Hard ceilings on frame size.
pub const MAX_WORLDS: usize = 4;
pub const MAX_DOMAIN: usize = 3;

impl EnumerationParams {
    pub fn new(max_worlds: usize, max_domain: usize, required: &[Condition], access: AccessPolicy) -> Self {
        EnumerationParams { max_worlds, max_domain, required: required.to_vec(), access }
    }

    /// `|W| ≤ 3`, `|D| ≤ 2`, weakly Stalnakerian, reflexive `R`.
    pub fn weakly_stalnakerian() -> Self {
        Self::new(3, 2, &Condition::WEAKLY_STALNAKERIAN, AccessPolicy::ReflexiveOnly)
    }

    fn requires(&self, c: Condition) -> bool {
        self.required.contains(&c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("ceiling exceeded: {0}")]
    Ceiling(String),
    #[error("only selection and domain conditions can be required, not {0}")]
    Unsupported(Condition),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchStats {
    /// Raw frames (products of surviving slices and domain choices).
    pub raw_frames: u64,
    /// Frames visited after symmetry reduction.
    pub frames: u64,
    /// Per-world slices rejected by the required conditions.
    pub pruned_slices: u64,
    /// Models (frame plus interpretation) evaluated.
    pub models: u64,
}

impl SearchStats {
    fn add(&mut self, o: &SearchStats) {
        self.raw_frames += o.raw_frames;
        self.frames += o.frames;
        self.pruned_slices += o.pruned_slices;
        self.models += o.models;
    }
}

/// A pointed model.
#[derive(Clone, Debug)]
pub struct SearchWitness {
    pub model: Model,
    pub world: usize,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: bool,
    pub witness: Option<SearchWitness>,
    pub stats: SearchStats,
}

/// All subsets of `s`.
fn subsets(s: BitSet) -> Vec<BitSet> {
    s.subsets().collect()
}

/// Slices `P ↦ f(P, w)` for world `w` of an `n`-world frame with
/// `R(w) = r` that satisfy the required selection conditions.
fn world_slices(p: &EnumerationParams, n: usize, w: usize, r: WorldSet) -> Result<(Vec<Vec<WorldSet>>, u64), SearchError> {
    let n_sets = 1usize << n;
    let mut options: Vec<Vec<WorldSet>> = Vec::with_capacity(n_sets);
    for code in 0..n_sets as u64 {
        let set = BitSet(code);
        let pool = if p.requires(Condition::Success) { set & r } else { r };
        let opts: Vec<WorldSet> = subsets(pool)
            .into_iter()
            .filter(|o| !p.requires(Condition::Uniqueness) || o.len() <= 1)
            .filter(|o| !(p.requires(Condition::WeakCentering) && set.contains(w)) || o.contains(w))
            .filter(|o| !(p.requires(Condition::StrongCentering) && set.contains(w)) || *o == BitSet::singleton(w))
            .filter(|o| !(p.requires(Condition::LimitAssumption) && set.intersects(r)) || !o.is_empty())
            .collect();
        options.push(opts);
    }
    let total = options.iter().try_fold(1u64, |acc, o| acc.checked_mul(o.len() as u64));
    match total {
        Some(t) if t <= MAX_SLICE_CANDIDATES => {}
        _ => {
            return Err(SearchError::Ceiling(format!(
                "world {w} of a {n}-world frame has more than {MAX_SLICE_CANDIDATES} candidate slices; require more conditions"
            )))
        }
    }
    let conds: Vec<Condition> = p.required.iter().copied().filter(|c| c.is_selection()).collect();
    let mut out = Vec::new();
    let mut pruned = 0;
    let mut idx = vec![0usize; n_sets];
    if options.iter().any(|o| o.is_empty()) {
        return Ok((out, 0));
    }
    loop {
        let slice: Vec<WorldSet> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        if conds.iter().all(|&c| slice_violation(c, w, r, &slice).is_none()) {
            out.push(slice);
        } else {
            pruned += 1;
        }
        let mut k = 0;
        loop {
            if k == n_sets {
                return Ok((out, pruned));
            }
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Candidate `(R(w), slice)` pairs for each world of an `n`-world frame.
fn candidates(p: &EnumerationParams, n: usize) -> Result<(Vec<Vec<(WorldSet, Vec<WorldSet>)>>, u64), SearchError> {
    let mut pruned = 0;
    let mut per_world = Vec::with_capacity(n);
    for w in 0..n {
        let mut list = Vec::new();
        for r in subsets(BitSet::full(n)) {
            if p.access == AccessPolicy::ReflexiveOnly && !r.contains(w) {
                continue;
            }
            let (slices, pr) = world_slices(p, n, w, r)?;
            pruned += pr;
            list.extend(slices.into_iter().map(|s| (r, s)));
        }
        per_world.push(list);
    }
    Ok((per_world, pruned))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), n, &mut out);
    out
}

fn map_set(s: BitSet, perm: &[usize]) -> BitSet {
    BitSet::from_iter_indices(s.iter().map(|i| perm[i]))
}

/// A frame before names are attached.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RawFrame {
    n: usize,
    nd: usize,
    access: Vec<WorldSet>,
    slices: Vec<Vec<WorldSet>>,
    local: Vec<BitSet>,
}

impl RawFrame {
    /// Encoding of the frame relabeled by `pi` on worlds and `sigma` on
    /// elements.
    fn encode(&self, pi: &[usize], inv: &[usize], sigma: &[usize]) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n * (2 + (1 << self.n)));
        for new_w in 0..self.n {
            let w = inv[new_w];
            out.push(map_set(self.access[w], pi).0);
            out.push(map_set(self.local[w], sigma).0);
            for new_p in 0..1u64 << self.n {
                let p = map_set(BitSet(new_p), inv);
                out.push(map_set(self.slices[w][p.0 as usize], pi).0);
            }
        }
        out
    }

    fn is_canonical(&self, world_perms: &[(Vec<usize>, Vec<usize>)], elem_perms: &[Vec<usize>]) -> bool {
        let (id, id_inv) = &world_perms[0];
        let own = self.encode(id, id_inv, &elem_perms[0]);
        world_perms
            .iter()
            .all(|(pi, inv)| elem_perms.iter().all(|sigma| own <= self.encode(pi, inv, sigma)))
    }

    fn build(&self) -> Result<SelectionFrame, FrameError> {
        let worlds = (1..=self.n).map(|i| i.to_string()).collect();
        let domain = (0..self.nd).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let base = FrameBase::new(worlds, self.access.clone(), domain, self.local.clone())?;
        let mut rows = Vec::with_capacity((1 << self.n) * self.n);
        for p in 0..1usize << self.n {
            for w in 0..self.n {
                rows.push(self.slices[w][p]);
            }
        }
        SelectionFrame::new(base, SelectionTable::from_rows(self.n, rows))
    }
}

fn check_params(p: &EnumerationParams) -> Result<(), SearchError> {
    if p.max_worlds > MAX_WORLDS || p.max_domain > MAX_DOMAIN || p.max_worlds == 0 || p.max_domain == 0 {
        return Err(SearchError::Ceiling(format!(
            "enumeration supports 1..={MAX_WORLDS} worlds and 1..={MAX_DOMAIN} elements, asked for {} and {}",
            p.max_worlds, p.max_domain
        )));
    }
    if let Some(c) = p.required.iter().find(|c| c.is_ordering()) {
        return Err(SearchError::Unsupported(*c));
    }
    Ok(())
}

/// Visits every frame within the parameters, up to relabeling, in
/// parallel over the choices at the first world. `visit` may stop a
/// partition early by returning `Some`; results are returned in
/// enumeration order.
pub fn sweep_frames<R, V>(p: &EnumerationParams, exec: Exec, visit: V) -> Result<(Vec<R>, SearchStats), SearchError>
where
    R: Send,
    V: Fn(&SelectionFrame, &mut SearchStats) -> Option<R> + Sync + Send,
{
    check_params(p)?;
    let domain_conds: Vec<Condition> = p.required.iter().copied().filter(|c| c.is_domain()).collect();
    let mut results = Vec::new();
    let mut stats = SearchStats::default();
    for n in 1..=p.max_worlds {
        let (per_world, pruned) = candidates(p, n)?;
        stats.pruned_slices += pruned;
        let world_perms: Vec<(Vec<usize>, Vec<usize>)> = permutations(n)
            .into_iter()
            .map(|pi| {
                let mut inv = vec![0; n];
                for (i, &j) in pi.iter().enumerate() {
                    inv[j] = i;
                }
                (pi, inv)
            })
            .collect();
        for nd in 1..=p.max_domain {
            let elem_perms = permutations(nd);
            let locals = subsets(BitSet::full(nd));
            let parts = par::map(exec, &per_world[0], |first| {
                let mut st = SearchStats::default();
                let mut found = Vec::new();
                let mut idx = vec![0usize; n];
                if per_world.iter().skip(1).any(|l| l.is_empty()) {
                    return (found, st);
                }
                'frames: loop {
                    let mut access = vec![first.0];
                    let mut slices = vec![first.1.clone()];
                    for w in 1..n {
                        let (r, s) = &per_world[w][idx[w]];
                        access.push(*r);
                        slices.push(s.clone());
                    }
                    let mut lidx = vec![0usize; n];
                    loop {
                        let local: Vec<BitSet> = lidx.iter().map(|&i| locals[i]).collect();
                        let raw = RawFrame { n, nd, access: access.clone(), slices: slices.clone(), local };
                        st.raw_frames += 1;
                        if raw.is_canonical(&world_perms, &elem_perms) {
                            let frame = raw.build().expect("enumerated frames satisfy the frame invariants");
                            let dom = check_domain_props_base(&frame.base);
                            if domain_conds.iter().all(|&c| dom.holds(c) == Some(true)) {
                                st.frames += 1;
                                if let Some(r) = visit(&frame, &mut st) {
                                    found.push(r);
                                    break 'frames;
                                }
                            }
                        }
                        if !advance(&mut lidx, 0, |_| locals.len()) {
                            break;
                        }
                    }
                    if !advance(&mut idx, 1, |w| per_world[w].len()) {
                        break;
                    }
                }
                (found, st)
            });
            for (found, st) in parts {
                results.extend(found);
                stats.add(&st);
            }
        }
    }
    Ok((results, stats))
}

/// Odometer step over `idx[from..]` with radix `len(k)`; false when it
/// wraps around.
fn advance(idx: &mut [usize], from: usize, len: impl Fn(usize) -> usize) -> bool {
    for k in from..idx.len() {
        idx[k] += 1;
        if idx[k] < len(k) {
            return true;
        }
        idx[k] = 0;
    }
    false
}

/// Every selection frame within the parameters, up to relabeling.
pub fn enumerate_frames(p: &EnumerationParams, exec: Exec) -> Result<(Vec<SelectionFrame>, SearchStats), SearchError> {
    let frames = std::sync::Mutex::new(Vec::new());
    let (_, stats) = sweep_frames::<(), _>(p, exec, |f, _| {
        frames.lock().expect("no panics while holding the lock").push(f.clone());
        None
    })?;
    let mut frames = frames.into_inner().expect("no panics while holding the lock");
    frames.sort_by_key(frame_key);
    Ok((frames, stats))
}

fn frame_key(f: &SelectionFrame) -> Vec<u64> {
    let n = f.base.n_worlds();
    let mut k = vec![n as u64, f.base.n_domain() as u64];
    for w in 0..n {
        k.push(f.base.access(w).0);
        k.push(f.base.local(w).0);
        k.extend(f.table().slice(w).iter().map(|s| s.0));
    }
    k
}

/// How [`ds_sweep`] covers the search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DsMode {
    /// Every frame up to relabeling, every interpretation of `F`, every
    /// world.
    Frames,
    /// Only the evaluation world's slice and domain. DS has no nested
    /// conditionals, so its truth at `w` depends on `f(·, w)`, `d(w)` and
    /// `F` alone; any satisfying slice extends to a full frame with
    /// trivial slices `f(P, v) = P ∩ {v}` elsewhere.
    Pointed,
}

fn f_interp(n: usize, nd: usize, bits: u64) -> Interpretation {
    let mut t = PredTable::empty(1, n, nd);
    for w in 0..n {
        for e in 0..nd {
            t.set_code(w, e, bits >> (w * nd + e) & 1 == 1);
        }
    }
    let mut interp = Interpretation::new();
    interp.insert(predicate_f(), t);
    interp
}

/// Searches for a model of DS at some world among the frames within `p`.
pub fn ds_sweep(p: &EnumerationParams, mode: DsMode, exec: Exec) -> Result<SearchOutcome, SearchError> {
    let ds = build_ds();
    let outcome = match mode {
        DsMode::Frames => {
            let (found, stats) = sweep_frames(p, exec, |frame, st| {
                let (n, nd) = (frame.base.n_worlds(), frame.base.n_domain());
                let mut model = Model::new(Frame::Selection(frame.clone()), f_interp(n, nd, 0));
                for bits in 0..1u64 << (n * nd) {
                    model.interp = f_interp(n, nd, bits);
                    st.models += 1;
                    let d = Evaluator::new(&model).denote_under(&ds, &Default::default());
                    if let Some(w) = d.first() {
                        return Some(SearchWitness { model, world: w });
                    }
                }
                None
            })?;
            SearchOutcome { found: !found.is_empty(), witness: found.into_iter().next(), stats }
        }
        DsMode::Pointed => ds_pointed(p, &ds, exec)?,
    };
    if let Some(w) = &outcome.witness {
        assert!(replay(w, &ds, p), "search witness does not replay");
    }
    Ok(outcome)
}

fn ds_pointed(p: &EnumerationParams, ds: &Formula, exec: Exec) -> Result<SearchOutcome, SearchError> {
    check_params(p)?;
    let mut stats = SearchStats::default();
    for n in 1..=p.max_worlds {
        let (per_world, pruned) = candidates(p, n)?;
        stats.pruned_slices += pruned;
        for nd in 1..=p.max_domain {
            let hits = par::map(exec, &per_world[0], |(r, slice)| {
                let mut st = SearchStats { frames: 1, raw_frames: 1, ..Default::default() };
                let frame = pointed_frame(n, nd, *r, slice);
                let mut model = Model::new(Frame::Selection(frame), f_interp(n, nd, 0));
                for bits in 0..1u64 << (n * nd) {
                    model.interp = f_interp(n, nd, bits);
                    st.models += 1;
                    if eval(&model, 0, &Default::default(), ds).expect("DS is closed") {
                        return (Some(SearchWitness { model, world: 0 }), st);
                    }
                }
                (None, st)
            });
            let mut witness = None;
            for (hit, st) in hits {
                stats.add(&st);
                witness = witness.or(hit);
            }
            if witness.is_some() {
                return Ok(SearchOutcome { found: true, witness, stats });
            }
        }
    }
    Ok(SearchOutcome { found: false, witness: None, stats })
}

/// World 0 carries the given slice; the others select `P ∩ {v}` from
/// `R(v) = {v}`. Every domain is `D`.
fn pointed_frame(n: usize, nd: usize, r0: WorldSet, slice0: &[WorldSet]) -> SelectionFrame {
    let mut access = vec![r0];
    let mut slices = vec![slice0.to_vec()];
    for v in 1..n {
        access.push(BitSet::singleton(v));
        slices.push((0..1u64 << n).map(|p| BitSet(p) & BitSet::singleton(v)).collect());
    }
    let raw = RawFrame { n, nd, access, slices, local: vec![BitSet::full(nd); n] };
    raw.build().expect("pointed frames satisfy the frame invariants")
}

/// Re-evaluates the witness and re-checks the required conditions on its
/// frame.
pub fn replay(w: &SearchWitness, f: &Formula, p: &EnumerationParams) -> bool {
    let Frame::Selection(s) = &w.model.frame else { return false };
    let Ok(report) = check_selection_props(s) else { return false };
    let report = report.merge(check_domain_props_base(&s.base));
    p.required.iter().all(|&c| report.holds(c) == Some(true))
        && eval(&w.model, w.world, &Default::default(), f).unwrap_or(false)
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorrespondenceReport {
    pub frames: u64,
    pub agree: u64,
    pub instance_valid: u64,
    pub properties_hold: u64,
    /// Frames (as JSON) where the two sides differ.
    pub disagreements: Vec<serde_json::Value>,
    pub stats: SearchStats,
}

/// Runs [`qc2_correspondence_check`] on every enumerated frame.
pub fn correspondence_sweep(p: &EnumerationParams, exec: Exec) -> Result<CorrespondenceReport, SearchError> {
    let results = std::sync::Mutex::new(Vec::<(Correspondence, Option<serde_json::Value>)>::new());
    let (_, stats) = sweep_frames::<(), _>(p, exec, |frame, _| {
        let c = qc2_correspondence_check(frame).expect("enumerated frames are within the frame-validity limits");
        let shown = (!c.agree).then(|| {
            crate::parser_io::model_to_json(&Model::new(Frame::Selection(frame.clone()), Interpretation::new()))
        });
        results.lock().expect("no panics while holding the lock").push((c, shown));
        None
    })?;
    let mut report = CorrespondenceReport { stats, ..Default::default() };
    for (c, shown) in results.into_inner().expect("no panics while holding the lock") {
        report.frames += 1;
        report.agree += u64::from(c.agree);
        report.instance_valid += u64::from(c.instance_valid);
        report.properties_hold += u64::from(c.properties_hold);
        report.disagreements.extend(shown);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn single_world_stalnakerian() {
        let conds = [&Condition::STALNAKERIAN[..], &[Condition::GloballyConstant]].concat();
        let p = EnumerationParams::new(1, 1, &conds, AccessPolicy::All);
        let (frames, _) = enumerate_frames(&p, Exec::Sequential).unwrap();
        assert_eq!(frames.len(), 1);
        // without the domain condition, d(w) = ∅ is a second frame
        let p = EnumerationParams::new(1, 1, &Condition::STALNAKERIAN, AccessPolicy::All);
        assert_eq!(enumerate_frames(&p, Exec::Sequential).unwrap().0.len(), 2);
        let f = &frames[0];
        for s in [BitSet(0), BitSet(1)] {
            assert_eq!(f.f(s, 0), s);
        }
    }

    #[test]
    fn includes_the_centering_frame() {
        let p = EnumerationParams::new(2, 1, &Condition::WEAKLY_STALNAKERIAN, AccessPolicy::ReflexiveOnly);
        let (frames, _) = enumerate_frames(&p, Exec::Sequential).unwrap();
        let centred = |f: &SelectionFrame| {
            (0..2).all(|w| {
                f.base.access(w) == BitSet(0b11)
                    && BitSet(0b11).subsets().all(|s| f.f(s, w) == if s.contains(w) { BitSet::singleton(w) } else { BitSet(0) })
            })
        };
        assert!(frames.iter().any(centred));
        for f in &frames {
            let r = check_selection_props(f).unwrap();
            assert_eq!(r.weakly_stalnakerian(), Some(true));
        }
    }

    /// Canonical key computed independently: the least frame table under
    /// all world relabelings, as sorted `(w, R, d, f-row)` tuples.
    fn brute_key(f: &SelectionFrame) -> Vec<(usize, u64, u64, Vec<u64>)> {
        let n = f.base.n_worlds();
        permutations(n)
            .into_iter()
            .map(|pi| {
                let mut rows: Vec<(usize, u64, u64, Vec<u64>)> = (0..n)
                    .map(|w| {
                        let mut row = vec![0; 1 << n];
                        for p in 0..1u64 << n {
                            row[map_set(BitSet(p), &pi).0 as usize] = map_set(f.f(BitSet(p), w), &pi).0;
                        }
                        (pi[w], map_set(f.base.access(w), &pi).0, f.base.local(w).0, row)
                    })
                    .collect();
                rows.sort();
                rows
            })
            .min()
            .unwrap()
    }

    #[test]
    fn enumeration_matches_unpruned_count() {
        for conds in [&Condition::WEAKLY_STALNAKERIAN[..], &[Condition::Success, Condition::Uniqueness], &[]] {
            let p = EnumerationParams::new(2, 1, conds, AccessPolicy::ReflexiveOnly);
            let (frames, _) = enumerate_frames(&p, Exec::Parallel).unwrap();
            // Unpruned: every table with f(P,w) ⊆ R(w) ∋ w, filtered afterwards.
            let mut classes = HashSet::new();
            let open = EnumerationParams::new(2, 1, &[], AccessPolicy::ReflexiveOnly);
            for n in 1..=2 {
                let (per_world, _) = candidates(&open, n).unwrap();
                let mut idx = vec![0; n];
                loop {
                    let raw = RawFrame {
                        n,
                        nd: 1,
                        access: (0..n).map(|w| per_world[w][idx[w]].0).collect(),
                        slices: (0..n).map(|w| per_world[w][idx[w]].1.clone()).collect(),
                        local: vec![BitSet(1); n],
                    };
                    let f = raw.build().unwrap();
                    let r = check_selection_props(&f).unwrap();
                    if conds.iter().all(|&c| r.holds(c) == Some(true)) {
                        classes.insert(brute_key(&f));
                    }
                    if !advance(&mut idx, 0, |w| per_world[w].len()) {
                        break;
                    }
                }
            }
            // frames with d(w) = ∅ are enumerated too; keep the d = D ones
            let with_full_domains = frames.iter().filter(|f| (0..f.base.n_worlds()).all(|w| f.base.local(w) == BitSet(1)));
            assert_eq!(with_full_domains.count(), classes.len(), "{conds:?}");
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let p = EnumerationParams::new(2, 2, &Condition::STALNAKERIAN, AccessPolicy::All);
        let (frames, a) = enumerate_frames(&p, Exec::Sequential).unwrap();
        let (again, b) = enumerate_frames(&p, Exec::Parallel).unwrap();
        assert_eq!(frames, again);
        assert_eq!(a, b);
    }

    #[test]
    fn ds_has_no_model_on_small_weakly_stalnakerian_frames() {
        let p = EnumerationParams::new(2, 2, &Condition::WEAKLY_STALNAKERIAN, AccessPolicy::ReflexiveOnly);
        for mode in [DsMode::Frames, DsMode::Pointed] {
            let out = ds_sweep(&p, mode, Exec::Parallel).unwrap();
            assert!(!out.found);
            assert!(out.stats.models > 0);
        }
    }

    #[test]
    fn ds_control_without_uniformity() {
        let conds = [Condition::Success, Condition::WeakCentering, Condition::Uniqueness];
        // two worlds are not enough: the F(a)- and F(b)-worlds must differ and
        // avoid the evaluation world
        let p = EnumerationParams::new(2, 2, &conds, AccessPolicy::ReflexiveOnly);
        assert!(!ds_sweep(&p, DsMode::Pointed, Exec::Parallel).unwrap().found);
        let p = EnumerationParams::new(3, 2, &conds, AccessPolicy::ReflexiveOnly);
        let pointed = ds_sweep(&p, DsMode::Pointed, Exec::Parallel).unwrap();
        let frames = ds_sweep(&p, DsMode::Frames, Exec::Parallel).unwrap();
        assert!(pointed.found && frames.found);
        let w = pointed.witness.unwrap();
        let Frame::Selection(s) = &w.model.frame else { unreachable!() };
        let r = check_selection_props(s).unwrap();
        assert_eq!(r.holds(Condition::Uniformity), Some(false));
    }

    #[test]
    fn ceilings() {
        let p = EnumerationParams::new(3, 1, &[], AccessPolicy::All);
        assert!(matches!(enumerate_frames(&p, Exec::Sequential), Err(SearchError::Ceiling(_))));
        let p = EnumerationParams::new(5, 1, &Condition::STALNAKERIAN, AccessPolicy::All);
        assert!(matches!(enumerate_frames(&p, Exec::Sequential), Err(SearchError::Ceiling(_))));
    }
}
