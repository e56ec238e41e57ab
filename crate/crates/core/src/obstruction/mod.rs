//! Obstructions to unknotting number one and the combined classifier.

pub mod alexander;
pub mod classify;
pub mod greene;
pub mod symmetry;

pub use alexander::{nakanishi_test, seifert_matrix, AlexanderStatus, AlexanderVerdict};
pub use classify::{classify, GreeneResult, ObstructionReport, Verdict};
pub use greene::{greene_search, CrossingSign, EmbeddingCertificate, GreeneConstraints};
pub use symmetry::{compute_z, congruence_filter, decompose_ell, symmetry_obstruction, SymmetryOutcome};
