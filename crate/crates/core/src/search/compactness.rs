//! Finite prefixes of the set `{◇A_i} ∪ {(A_i ∨ A_{i+1}) > ¬A_i}`, each
//! satisfiable on a finite Stalnakerian frame although the whole set is not.

use super::{SearchOutcome, SearchStats, SearchWitness};
use crate::frame_props::check_selection_props;
use crate::semantics::{eval, BitSet, Frame, FrameBase, Interpretation, Model, PredTable, SelectionFrame, SelectionTable};
use crate::syntax::{Formula, Predicate};

fn letter(i: usize) -> Predicate {
    Predicate::new(&format!("A{i}"), 0)
}

fn atom(i: usize) -> Formula {
    Formula::Atom(letter(i), Vec::new())
}

/// `{◇A_i : i < n} ∪ {(A_i ∨ A_{i+1}) > ¬A_i : i < n−1}`
pub fn compactness_prefix(n: usize) -> Vec<Formula> {
    let mut out: Vec<Formula> = (0..n).map(|i| Formula::possibly(atom(i))).collect();
    for i in 0..n.saturating_sub(1) {
        out.push(Formula::cond(Formula::or(atom(i), atom(i + 1)), Formula::not(atom(i))));
    }
    out
}

/// Searches Stalnakerian models of the prefix at world 0 with up to `n+1`
/// worlds.
///
/// At world 0 a finite Stalnakerian selection is the minimum under a
/// strict linear order on `R(0)` that starts at 0, and the prefix only
/// looks at world 0's selection. Relabeling worlds by closeness, the
/// search fixes `R(0) = W` ordered by index and enumerates valuations
/// world by world. A valuation is cut as soon as some `A_i ∨ A_{i+1}` is
/// first satisfied at a world where `A_i` holds.
pub fn compactness_witness(n: usize) -> SearchOutcome {
    assert!(n >= 1, "the prefix needs at least one letter");
    let prefix = compactness_prefix(n);
    let mut stats = SearchStats::default();
    for size in 1..=n + 1 {
        let mut vals = Vec::with_capacity(size);
        if let Some(vals) = extend(n, size, &mut vals, &mut stats) {
            let model = chain_model(n, &vals);
            stats.frames += 1;
            let witness = SearchWitness { model, world: 0 };
            assert!(replays(&witness, &prefix), "compactness witness does not replay");
            return SearchOutcome { found: true, witness: Some(witness), stats };
        }
    }
    SearchOutcome { found: false, witness: None, stats }
}

/// Depth-first over the valuations (bitmasks over the letters) of worlds
/// `0, 1, …` in closeness order.
fn extend(n: usize, size: usize, vals: &mut Vec<u32>, stats: &mut SearchStats) -> Option<Vec<u32>> {
    stats.models += 1;
    if vals.len() == size {
        let seen = vals.iter().fold(0, |a, v| a | v);
        return (seen == (1u32 << n) - 1).then(|| vals.clone());
    }
    let seen = vals.iter().fold(0u32, |a, v| a | v);
    for v in 0..1u32 << n {
        // the first (A_i ∨ A_{i+1})-world must not be an A_i-world
        let ok = (0..n.saturating_sub(1)).all(|i| {
            let pair = 1 << i | 1 << (i + 1);
            seen & pair != 0 || v & 1 << i == 0
        });
        if !ok {
            continue;
        }
        vals.push(v);
        let r = extend(n, size, vals, stats);
        vals.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Every world sees every world; from `w`, `w` is closest and the others
/// follow by index.
fn chain_model(n: usize, vals: &[u32]) -> Model {
    let size = vals.len();
    let all = BitSet::full(size);
    let base = FrameBase::new(
        (0..size).map(|i| format!("w{i}")).collect(),
        vec![all; size],
        vec!["a".into()],
        vec![BitSet(1); size],
    )
    .expect("valid frame");
    let table = SelectionTable::dense(size, |p, w| {
        if p.contains(w) {
            BitSet::singleton(w)
        } else {
            p.first().map_or(BitSet::EMPTY, BitSet::singleton)
        }
    });
    let frame = SelectionFrame::new(base, table).expect("selections lie in R(w) = W");
    let mut interp = Interpretation::new();
    for i in 0..n {
        let mut t = PredTable::empty(0, size, 1);
        for (w, v) in vals.iter().enumerate() {
            t.set_code(w, 0, v >> i & 1 == 1);
        }
        interp.insert(letter(i), t);
    }
    Model::new(Frame::Selection(frame), interp)
}

fn replays(w: &SearchWitness, prefix: &[Formula]) -> bool {
    let Frame::Selection(s) = &w.model.frame else { return false };
    let stalnakerian = check_selection_props(s).map(|r| r.stalnakerian() == Some(true)).unwrap_or(false);
    stalnakerian && prefix.iter().all(|f| eval(&w.model, w.world, &Default::default(), f).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_letter_needs_one_world() {
        let out = compactness_witness(1);
        assert!(out.found);
        assert_eq!(out.witness.unwrap().model.base().n_worlds(), 1);
    }

    #[test]
    fn two_letters_form_a_chain() {
        let out = compactness_witness(2);
        let w = out.witness.unwrap();
        assert!(w.model.base().n_worlds() <= 3);
        // the A_1-world comes before every A_0-world
        let prefix = compactness_prefix(2);
        assert_eq!(prefix.len(), 3);
        assert!(prefix.iter().all(|f| eval(&w.model, 0, &Default::default(), f).unwrap()));
    }

    #[test]
    fn witnesses_up_to_five() {
        for n in 1..=5 {
            let out = compactness_witness(n);
            assert!(out.found, "n = {n}");
            assert!(out.witness.unwrap().model.base().n_worlds() <= n + 1);
        }
    }
}
