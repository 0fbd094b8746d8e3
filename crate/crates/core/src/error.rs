use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    /// A solver kept changing its vector past the sweep bound. Cannot happen
    /// for a well-formed non-negative cost matrix.
    #[error("{method} solver did not converge within {limit} sweeps")]
    NotConverged { method: &'static str, limit: usize },

    #[error("graph has {n} nodes; exhaustive enumeration is limited to {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("no route from node 1 to node {n}")]
    NoRoute { n: usize },

    #[error("unsupported graph-set format: {0}")]
    UnsupportedFormat(String),

    #[error("corrupt graph-set file at line {line}{}: {reason}", record_suffix(*.record))]
    CorruptFile {
        /// Zero-based index of the offending graph record, when one applies.
        record: Option<usize>,
        line: usize,
        reason: String,
    },

    #[error("speedup is undefined when the classic total time is zero")]
    UndefinedSpeedup,

    #[error("graph #{index}: {source}")]
    Solver {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("malformed report: {0}")]
    Report(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn record_suffix(record: Option<usize>) -> String {
    match record {
        Some(r) => format!(" (graph record #{r})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
