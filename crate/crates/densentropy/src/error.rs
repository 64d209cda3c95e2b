use std::path::PathBuf;

use crate::wfn::WfnError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] densentropy_core::Error),
    #[error("{}:{}: {}: {}", path.display(), source.line, source.record, source.message)]
    Wfn { path: PathBuf, source: WfnError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("R = {distance} bohr: {source}")]
    AtDistance {
        distance: f64,
        source: Box<AppError>,
    },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl AppError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
