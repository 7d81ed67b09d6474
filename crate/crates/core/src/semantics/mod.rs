//! Finite frames and models for the three semantics of `>`, satisfaction,
//! model and frame validity, and the conversions between Stalnakerian
//! ordering and selection models.

mod bitset;
mod convert;
mod eval;
mod frame;

pub use bitset::{BitSet, WorldSet, MAX_ELEMENTS};
pub use convert::{ordering_to_selection, selection_to_ordering, ConversionError};
pub use eval::{
    denote, eval, for_each_assignment, frame_valid, model_valid, Assignment, CounterModel, Counterexample, EvalError,
    Evaluator, FrameValidLimits,
};
pub use frame::{
    decode_tuple, tuple_code, Frame, FrameBase, FrameError, Interpretation, Model, OrderingFrame, PredTable,
    QuasiSelectionFrame, QuasiStrategy, SelectionDefault, SelectionFrame, SelectionTable, DENSE_MAX_WORLDS,
};
