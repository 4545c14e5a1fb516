//! Exact computations over finite dimensional quiver algebras, used as the
//! reference for the combinatorial criterion.

pub mod algebra;
pub mod complex;
pub mod condition;
pub mod generic;
pub mod module;
pub mod pair;
pub mod quiver;

pub use algebra::FiniteDimAlgebra;
pub use complex::{homotopy_vanishes, is_local_endomorphism, ConcreteTwoTerm};
pub use condition::{check_condition, ConditionReport, LineQuiver};
pub use module::RightModule;
pub use pair::{support_tau_tilting_order, TauPair};
pub use quiver::QuiverPresentation;
