//! Obstructions to unknotting number one for pretzel knots `P(p, q, r)`.
//!
//! The crate is layered: exact linear algebra, knot data, plumbings and
//! correction terms, lens spaces, the individual obstructions, and a
//! classifier combining them.

pub mod error;
pub mod knot;
pub mod lens;
pub mod linalg;
pub mod obstruction;
pub mod plumbing;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use knot::{normalize, signature, PretzelKnot};
pub use obstruction::{classify, ObstructionReport, Verdict};
pub use plumbing::{d_invariants, pretzel_plumbing, CharCovector, DInvariantTable, PlumbingGraph, SpinClass};
