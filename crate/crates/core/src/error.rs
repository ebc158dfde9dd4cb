use thiserror::Error;

/// Everything that can go wrong across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {n} exceeds the configured cap of {cap}")]
    DimensionCap { n: usize, cap: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph carries placeholder labels; a genuine hypercube labeling is required")]
    PlaceholderLabels,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("state table needs {needed} bytes, above the cap of {cap} bytes")]
    MemoryCap { needed: u128, cap: u64 },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("vertex index {0} out of range")]
    InvalidVertex(usize),

    #[error("position is not a cop win; no progress move exists")]
    NotWinning,

    #[error("strategy `{strategy}` emitted an illegal move: {detail}")]
    IllegalMove { strategy: String, detail: String },

    #[error("block strategy produced label {label} outside the Fibonacci cube (internal bug)")]
    IllegalLabel { label: String },

    #[error("strategy `{strategy}` is incompatible with this graph: {reason}")]
    Incompatible { strategy: String, reason: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
