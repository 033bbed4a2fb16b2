//! The limiting degree distribution `c_d`, three ways.
//!
//! * [`fixed_point`]: bounding iteration on the clique-size limits `y_k`,
//!   converted with `c_d = (d+1) y_{d+1}`;
//! * [`integral`]: adaptive quadrature of the integral representation;
//! * [`asymptotic`]: the stretched-exponential leading term.
//!
//! [`distribution`] collects the results and the consistency checks between
//! them (recursion residuals, normalization, generating-function identity).

pub mod asymptotic;
pub mod distribution;
pub mod fixed_point;
pub mod integral;
pub mod quadrature;

pub use asymptotic::{cd_asymptotic, ln_cd_asymptotic, peak_location};
pub use distribution::{
    cd_from_yk, generating_function_residual, normalization_residual, recursion_residuals,
    tail_estimate, yk_from_cd, Method, Tail, TheoreticalDistribution,
};
pub use fixed_point::{fixed_point_yk, BoundingPair, FixedPointSolution};
pub use integral::{cd_quadrature, cd_quadrature_ln, CdEstimate};
