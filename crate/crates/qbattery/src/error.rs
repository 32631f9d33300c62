use thiserror::Error;

/// Errors produced by validation and numeric routines across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A^dag| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("not a density matrix: {reason}")]
    NotDensityMatrix { reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("site index {site} out of range for {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("system size {qubits} qubits exceeds the supported maximum of {max}")]
    TooManyQubits { qubits: usize, max: usize },

    #[error("parameter {name} = {value} outside [{lo}, {hi}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("grid is not strictly ascending at index {index}")]
    NonAscendingGrid { index: usize },

    #[error("eigensolver failed to converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("{quantity} is not established for this channel/flavor combination")]
    NotEstablished { quantity: &'static str },

    #[error("infeasible energy constraint: {reason}")]
    InfeasibleConstraint { reason: String },

    #[error("invalid channel specification `{spec}`: {reason}")]
    BadChannelSpec { spec: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
