//! Spectral and combinatorial analysis of Hoffman colorings.
//!
//! The crate revolves around the Hoffman number `h(G) = 1 - λmax/λmin` of a
//! regular graph and the structures that attain it: Hoffman colorings,
//! Delsarte cliques and spreads of strongly regular graphs. It provides
//!
//! * a small graph core ([`graph`]) with graph6 ingestion, named families
//!   and regularity classification,
//! * exact arithmetic over `(p + q√D)/r` ([`exact`]) so that strongly
//!   regular eigenvalues and the derived parameter systems stay exact,
//! * a dependency-free symmetric eigensolver ([`linalg`]) and the spectral
//!   toolkit built on it ([`spectral`]),
//! * the three interchangeable parameter systems of a strongly regular
//!   graph and every closed-form bound built from them ([`params`]),
//! * exact clique/chromatic solvers and Hoffman-coloring search with
//!   machine-checkable certificates ([`coloring`]),
//! * strict vector colorings and a small SDP solver for the Lovász theta
//!   number ([`vector`], [`theta`]),
//! * exhaustive small-graph verification campaigns ([`survey`]).
//!
//! Floating-point kernels are generic over the scalar via [`linalg::Real`];
//! the aliases below fix the default `f64` instantiations.

pub mod coloring;
pub mod exact;
pub mod graph;
pub mod linalg;
pub mod params;
pub mod spectral;
pub mod survey;
pub mod theta;
pub mod vector;

pub use exact::{QuadraticNumber, Rational};
pub use graph::{Graph, RegularityClass, RegularityKind};

/// Default `f64` matrix used throughout the crate.
pub type Matrix64 = linalg::Matrix<f64>;
/// Default `f64` spectrum.
pub type Spectrum64 = spectral::Spectrum<f64>;
/// Default `f64` eigenprojectors.
pub type Eigenprojectors64 = spectral::Eigenprojectors<f64>;
/// Default `f64` vector coloring.
pub type VectorColoring64 = vector::VectorColoring<f64>;
/// Default `f64` theta result.
pub type ThetaResult64 = theta::ThetaResult<f64>;

/// Default numerical tolerance (eigenvalue grouping, spectral checks).
pub const DEFAULT_TOL: f64 = 1e-7;
