//! Error type shared across ingestion, extraction, and sample building.

use std::path::PathBuf;

use thiserror::Error;

use crate::extract::TransitionKind;
use crate::schema::SplitName;

#[derive(Debug, Error)]
pub enum TransError {
    #[error("{path}:{line}: field `{field}`: {message}")]
    Parse {
        path: String,
        line: usize,
        field: String,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("source fps {fps} is not an integer multiple of sample fps {sample_fps}")]
    FpsNotDivisible { fps: f64, sample_fps: f64 },

    #[error("invalid sample spec: {0}")]
    InvalidSampleSpec(String),

    #[error("cannot balance {task} samples for split {split}: the {class} class is empty")]
    EmptyClass {
        task: TransitionKind,
        split: SplitName,
        class: &'static str,
    },

    #[error("feature file {path}: {frames} frames in track but {rows} feature rows")]
    FeatureLengthMismatch {
        path: PathBuf,
        frames: usize,
        rows: usize,
    },

    #[error("feature file {path}: rows have inconsistent widths ({first} vs {other})")]
    FeatureWidthMismatch {
        path: PathBuf,
        first: usize,
        other: usize,
    },
}

impl TransError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        TransError::Io {
            path: path.into(),
            source,
        }
    }
}
