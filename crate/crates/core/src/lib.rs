//! Exact computation of Hochster's theta pairing for graded hypersurface
//! rings with isolated singularity.
//!
//! theta(M, N) = length Tor_E(M, N) - length Tor_{E+1}(M, N) at a stabilized
//! even index E, computed by two independent algorithms: stabilized Tor
//! lengths from degree-truncated graded free resolutions (route A), and
//! Hilbert-series arithmetic in the truncated ring Q[t]/(1-t)^n (route B,
//! standard gradings). All arithmetic is exact; every heuristic bound is
//! certified or the run aborts.

pub mod error;
pub mod linalg;
pub mod pairing;
pub mod poly;
pub mod rational;
pub mod resolution;
pub mod ring;
pub mod series;
pub mod strand;
pub mod tor;
pub mod weighted;

pub use error::{Error, Result};
pub use poly::{parse_polynomial, Grading, Monomial, MonomialOrder, Polynomial};
pub use rational::{Int, Rat};
pub use ring::{
    certify_vanishing_tail, check_isolated_singularity, GradedFreeModule, HilbertFunction,
    HypersurfaceRing, ModulePresentation, SingularityReport, TailCertificate, TailCheck,
};
