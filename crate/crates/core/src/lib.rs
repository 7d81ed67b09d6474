//! Model checking, proof checking and countermodel search for quantified
//! conditional logic.
//!
//! The crate covers three semantics for the conditional `>` over finite
//! frames (selection functions, ordering frames, and quasi-selection
//! functions computed from an order), Hilbert proof verification for the
//! Stalnaker–Thomason family of logics, and a symbolic decision procedure
//! for the infinite ordering model K over `ℤ⁻ ∪ {−∞}`.

pub mod corpus;
pub mod frame_props;
pub mod kmodel;
pub mod logic_systems;
pub mod par;
pub mod parser_io;
pub mod search;
pub mod semantics;
pub mod syntax;

pub use par::Exec;
pub use syntax::{build_ds, Formula, Language, Metrics, Predicate, Var};
