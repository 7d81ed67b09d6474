use super::frame::{Frame, Model, OrderingFrame, SelectionFrame, SelectionTable, DENSE_MAX_WORLDS};
use crate::frame_props::{check_ordering_props, check_selection_props, Condition, PropsError, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConversionError {
    #[error("expected a{} model", if *.0 == "ordering" { "n ordering" } else { " selection" })]
    WrongKind(&'static str),
    #[error("the frame is not Stalnakerian: {condition} fails")]
    NotStalnakerian { condition: Condition, witness: Witness },
    #[error(transparent)]
    Props(#[from] PropsError),
    #[error("conversion is limited to {DENSE_MAX_WORLDS} worlds")]
    TooLarge,
}

/// `f(P, w) := min_{⪯_w}(P)` on a Stalnakerian ordering model.
pub fn ordering_to_selection(model: &Model) -> Result<Model, ConversionError> {
    let Frame::Ordering(o) = &model.frame else {
        return Err(ConversionError::WrongKind("ordering"));
    };
    let n = o.base.n_worlds();
    if n > DENSE_MAX_WORLDS {
        return Err(ConversionError::TooLarge);
    }
    let report = check_ordering_props(o)?;
    for c in Condition::ORDERING {
        let v = &report.verdicts[&c];
        if let Some(w) = &v.witness {
            return Err(ConversionError::NotStalnakerian { condition: c, witness: w.clone() });
        }
    }
    let table = SelectionTable::dense(n, |p, w| o.min(w, p));
    let frame = SelectionFrame::new(o.base.clone(), table).expect("minima lie inside R(w)");
    Ok(Model { frame: Frame::Selection(frame), interp: model.interp.clone(), language: model.language })
}

/// `⪯_w := {(v, u) | v ∈ f({v, u}, w)}`, restricted to `R(w) × R(w)`, on
/// a Stalnakerian selection model.
pub fn selection_to_ordering(model: &Model) -> Result<Model, ConversionError> {
    let Frame::Selection(s) = &model.frame else {
        return Err(ConversionError::WrongKind("selection"));
    };
    let report = check_selection_props(s)?;
    for c in Condition::STALNAKERIAN {
        let v = &report.verdicts[&c];
        if let Some(w) = &v.witness {
            return Err(ConversionError::NotStalnakerian { condition: c, witness: w.clone() });
        }
    }
    let n = s.base.n_worlds();
    let pairs: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|w| {
            let r = s.base.access(w);
            let mut rel = Vec::new();
            for v in r.iter() {
                for u in r.iter() {
                    if s.f(super::BitSet::singleton(v).with(u), w).contains(v) {
                        rel.push((v, u));
                    }
                }
            }
            rel
        })
        .collect();
    let frame = OrderingFrame::new(s.base.clone(), &pairs).expect("pairs lie inside R(w) × R(w)");
    Ok(Model { frame: Frame::Ordering(frame), interp: model.interp.clone(), language: model.language })
}
