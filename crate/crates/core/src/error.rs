use core::fmt;

/// Errors raised by the models and the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A pick referenced a vertex that does not exist yet.
    InvalidVertex { vertex: usize, vertices: usize },
    /// An argument is outside the operation's domain.
    InvalidArgument(&'static str),
    /// A structural invariant failed; carries a description of the check.
    Invariant(&'static str),
    /// The bounding iteration ran out of sweeps before the enclosure closed.
    NoConvergence { sweeps: usize, width: f64 },
    /// A bounding sequence moved in the wrong direction.
    NotMonotone { sweep: usize, index: usize },
    /// Adaptive quadrature could not reach the requested tolerance.
    QuadratureBudget { intervals: usize, rel_error: f64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidVertex { vertex, vertices } => {
                write!(f, "vertex {vertex} out of range (graph has {vertices} vertices)")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Invariant(msg) => write!(f, "invariant violated: {msg}"),
            Error::NoConvergence { sweeps, width } => write!(
                f,
                "bounding sequences did not converge after {sweeps} sweeps (enclosure width {width:e})"
            ),
            Error::NotMonotone { sweep, index } => {
                write!(f, "bounding sequence not monotone at sweep {sweep}, index {index}")
            }
            Error::QuadratureBudget { intervals, rel_error } => write!(
                f,
                "quadrature budget exhausted after {intervals} subintervals (relative error {rel_error:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}
