use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid node id {0}")]
    InvalidNode(usize),
    #[error("topology is not connected")]
    Disconnected,
    #[error("empty source set")]
    EmptySourceSet,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
