//! Per-cell wildfire risk analytics: composite risk labeling, random-forest
//! classification, exact tree-based Shapley attribution, ICE/PDP response
//! curves, and cross-region transferability audits.
//!
//! The pipeline operates on tabular per-cell data (one row per grid cell).
//! Seven risk indicators are transformed, robust-scaled, and fused by a
//! sign-aligned two-component PCA into a composite score that is binned into
//! four ordinal risk classes per region. A random forest then learns the
//! classes from environmental features, and the attribution/response modules
//! explain what it learned. Everything is seeded and deterministic: the same
//! inputs, config, and seed produce bit-identical models and artifacts.

pub mod forest;
pub mod ice;
pub mod ingest;
pub mod labeler;
pub mod matrix;
pub mod metrics;
pub mod seeding;
pub mod shap;
pub mod synth;
pub mod transfer;
pub mod transforms;

pub use matrix::Matrix;

/// Number of ordinal risk classes (Low, Moderate, High, Very High).
pub const NUM_CLASSES: usize = 4;

/// Display names for the ordinal risk classes, indexed by class label.
pub const CLASS_NAMES: [&str; NUM_CLASSES] = ["Low", "Moderate", "High", "Very High"];
