//! Indicator transforms and the median/IQR robust scaler.
//!
//! Probability-type indicators get a logit (with an epsilon clamp so
//! boundary values stay finite), proportions get arcsine-square-root, and
//! right-skewed nonnegative indicators get log1p. Transformed columns are
//! then centered by the median and scaled by the interquartile range.
//! Quantiles use linear interpolation between order statistics (the common
//! "type 7" rule), so fitted parameters match the usual toolchain defaults.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::matrix::Matrix;

/// Default clamp for the logit transform; keeps 0 and 1 finite.
pub const DEFAULT_LOGIT_EPSILON: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum TransformError {
    #[error("domain error: {transform} requires {requirement}, got {value}")]
    DomainError { transform: &'static str, requirement: &'static str, value: f64 },
    #[error("too few rows: need at least {needed}, got {got}")]
    TooFewRows { needed: usize, got: usize },
    #[error("dimension mismatch: expected {expected} columns, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A per-column value transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransformSpec {
    /// ln(x' / (1 - x')) with x' clamped to [epsilon, 1 - epsilon].
    Logit { clamp_epsilon: f64 },
    /// arcsin(sqrt(x)) for fractions in [0, 1].
    ArcsineSqrt,
    /// ln(1 + x) for nonnegative skewed values.
    Log1p,
    Identity,
}

impl TransformSpec {
    pub fn logit() -> Self {
        TransformSpec::Logit { clamp_epsilon: DEFAULT_LOGIT_EPSILON }
    }
}

/// Apply a transform to a single value, checking its domain first.
pub fn apply_transform(spec: TransformSpec, x: f64) -> Result<f64, TransformError> {
    if !x.is_finite() {
        return Err(TransformError::DomainError {
            transform: "any",
            requirement: "a finite input",
            value: x,
        });
    }
    match spec {
        TransformSpec::Logit { clamp_epsilon } => {
            assert!(
                clamp_epsilon > 0.0 && clamp_epsilon < 0.5,
                "clamp_epsilon must lie in (0, 0.5)"
            );
            if !(0.0..=1.0).contains(&x) {
                return Err(TransformError::DomainError {
                    transform: "logit",
                    requirement: "x in [0, 1]",
                    value: x,
                });
            }
            let clamped = x.clamp(clamp_epsilon, 1.0 - clamp_epsilon);
            Ok((clamped / (1.0 - clamped)).ln())
        }
        TransformSpec::ArcsineSqrt => {
            if !(0.0..=1.0).contains(&x) {
                return Err(TransformError::DomainError {
                    transform: "arcsine_sqrt",
                    requirement: "x in [0, 1]",
                    value: x,
                });
            }
            Ok(x.sqrt().asin())
        }
        TransformSpec::Log1p => {
            if x < 0.0 {
                return Err(TransformError::DomainError {
                    transform: "log1p",
                    requirement: "x >= 0",
                    value: x,
                });
            }
            Ok(x.ln_1p())
        }
        TransformSpec::Identity => Ok(x),
    }
}

/// Apply one transform per column of `m`, in place of the original values.
pub fn apply_transforms(
    specs: &[TransformSpec],
    m: &Matrix,
) -> Result<Matrix, TransformError> {
    if specs.len() != m.n_cols() {
        return Err(TransformError::DimensionMismatch { expected: specs.len(), got: m.n_cols() });
    }
    let mut out = m.clone();
    for r in 0..m.n_rows() {
        for (c, spec) in specs.iter().enumerate() {
            out.set(r, c, apply_transform(*spec, m.get(r, c))?);
        }
    }
    Ok(out)
}

/// Fitted median/IQR parameters for one column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnScaler {
    pub median: f64,
    pub iqr: f64,
    /// True when IQR is zero; such columns are centered but not scaled.
    pub degenerate: bool,
}

/// Fitted robust scaler: one `ColumnScaler` per input column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustScalerParams {
    /// Column names in apply order.
    pub order: Vec<String>,
    /// Per-column parameters, keyed by name.
    pub columns: BTreeMap<String, ColumnScaler>,
}

impl RobustScalerParams {
    pub fn n_cols(&self) -> usize {
        self.order.len()
    }

    pub fn column(&self, idx: usize) -> &ColumnScaler {
        &self.columns[&self.order[idx]]
    }
}

/// Linear-interpolation quantile (type 7) of already-sorted values.
///
/// `p` in [0, 1]; `sorted` must be nonempty and ascending.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
}

/// Sort a copy of `values` and take the type-7 quantile.
pub fn quantile(values: &[f64], p: f64) -> f64 {
    let mut v = values.to_vec();
    v.sort_unstable_by(f64::total_cmp);
    quantile_sorted(&v, p)
}

/// Fit per-column median and IQR (Q3 - Q1) over the rows of `m`.
pub fn fit_robust_scaler(
    m: &Matrix,
    column_names: &[String],
) -> Result<RobustScalerParams, TransformError> {
    if m.n_rows() < 2 {
        return Err(TransformError::TooFewRows { needed: 2, got: m.n_rows() });
    }
    assert_eq!(column_names.len(), m.n_cols(), "one name per column");
    let mut columns = BTreeMap::new();
    for (c, name) in column_names.iter().enumerate() {
        let mut col = m.column(c);
        col.sort_unstable_by(f64::total_cmp);
        let median = quantile_sorted(&col, 0.5);
        let iqr = quantile_sorted(&col, 0.75) - quantile_sorted(&col, 0.25);
        columns.insert(name.clone(), ColumnScaler { median, iqr, degenerate: iqr == 0.0 });
    }
    Ok(RobustScalerParams { order: column_names.to_vec(), columns })
}

/// Scale one row: (x - median) / iqr, or x - median for degenerate columns.
pub fn apply_robust_scaler_row(
    params: &RobustScalerParams,
    row: &[f64],
) -> Result<Vec<f64>, TransformError> {
    if row.len() != params.n_cols() {
        return Err(TransformError::DimensionMismatch {
            expected: params.n_cols(),
            got: row.len(),
        });
    }
    Ok(row
        .iter()
        .enumerate()
        .map(|(c, &x)| {
            let p = params.column(c);
            if p.degenerate {
                x - p.median
            } else {
                (x - p.median) / p.iqr
            }
        })
        .collect())
}

/// Scale every row of a matrix.
pub fn apply_robust_scaler(
    params: &RobustScalerParams,
    m: &Matrix,
) -> Result<Matrix, TransformError> {
    if m.n_cols() != params.n_cols() {
        return Err(TransformError::DimensionMismatch {
            expected: params.n_cols(),
            got: m.n_cols(),
        });
    }
    let mut out = m.clone();
    for r in 0..m.n_rows() {
        let scaled = apply_robust_scaler_row(params, m.row(r))?;
        out.row_mut(r).copy_from_slice(&scaled);
    }
    Ok(out)
}
