use thiserror::Error;

/// Error type shared by the whole library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    /// A torsion modulus was given as 0; moduli must be ≥ 1.
    #[error("invalid modulus {0}: torsion moduli must be positive")]
    InvalidModulus(u64),

    /// An argument violated a precondition (m ≥ 1, w ≥ 1, ε range, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configurable enumeration cap or a fixed-width arithmetic limit was hit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An index exceeded a documented table range (e.g. Bernoulli index > 64).
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Inputs left the analytic domain (Re(q) ≤ 0, convergence margin, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested evaluation point is within the pole exclusion radius.
    #[error("pole: {0}")]
    Pole(String),

    /// The target tolerance could not be certified within the term budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Neither presentation branch applies to the given (a, w).
    #[error("no admissible presentation branch: {0}")]
    Branch(String),

    /// An error raised while evaluating a specific point of a scheme.
    #[error("at point `{point}`: {source}")]
    AtPoint {
        point: String,
        #[source]
        source: Box<ZetaError>,
    },
}

impl ZetaError {
    /// Wrap an error with the name of the scheme point that produced it.
    pub fn at_point(self, point: &str) -> Self {
        ZetaError::AtPoint {
            point: point.to_owned(),
            source: Box::new(self),
        }
    }

    /// The innermost error, unwrapping any point attribution.
    pub fn root(&self) -> &ZetaError {
        match self {
            ZetaError::AtPoint { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, ZetaError>;
