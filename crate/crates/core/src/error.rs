use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("invalid rational {0:?}")]
    BadRational(String),

    #[error("non-positive weight {weight} on edge {edge}")]
    NonPositiveWeight { edge: String, weight: String },

    #[error("self-loop on edge {edge} at vertex {vertex}")]
    SelfLoop { edge: String, vertex: String },

    #[error("floating component containing vertex {0} (no boundary vertex)")]
    FloatingComponent(String),

    #[error("rotation system at vertex {vertex} is inconsistent: {reason}")]
    BadRotation { vertex: String, reason: String },

    #[error("Euler check failed: V - E + F = {value}, expected 2")]
    Euler { value: i64 },

    #[error("boundary index {k} out of range 1..={n}")]
    BadIndex { k: usize, n: usize },

    #[error("parameter must be positive, got {0}")]
    NonPositiveParameter(String),

    #[error("{what} = {value} exceeds the supported bound {bound}")]
    SizeBound {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("boundary vertices {i} and {j} lie in different components")]
    Disconnected { i: usize, j: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
