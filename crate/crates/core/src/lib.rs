//! Exact computations with differential modules and n-periodic complexes
//! of projectives over finite dimensional path algebras with monomial
//! relations.
//!
//! The library is organized bottom-up:
//!
//! * [`exactlin`] — exact scalars (prime fields and rationals) and dense
//!   matrix kernels (rref, solve).
//! * [`quiver`] — quivers, monomial relations, the nonzero-path basis of
//!   the quotient path algebra, and multiplication in it.
//! * [`repmod`] — right modules as quiver representations, hom spaces,
//!   kernels/images, projective covers, minimal resolutions and Ext.
//! * [`homspace`] — linearization of morphism spaces, used by every
//!   solver further up.
//! * [`boundedcx`] — bounded complexes of projectives: cones, Gaussian
//!   minimization, homotopy-category Hom.
//! * [`periodic`] — n-periodic complexes (differential modules at n = 1):
//!   suspension, cones, homology, null-homotopy, minimization, and the
//!   isomorphism/indecomposability decision procedures.
//! * [`compress`] — the compression functor from bounded to periodic
//!   complexes and the orbit Hom equality checker.
//! * [`flags`] — projective flag resolutions of differential modules and
//!   the conversion of relative projectives to flags.
//! * [`nongrad`] — the oriented-cycle splicing algorithm, Ext splicing,
//!   non-gradability certificates, and the suspension sign workbench.
//! * [`cert`] — machine-checkable certificates shared by the decision
//!   procedures and the command line front end.

pub mod boundedcx;
pub mod cert;
pub mod compress;
pub mod exactlin;
pub mod flags;
pub mod homspace;
pub mod nongrad;
pub mod periodic;
pub mod poly;
pub mod quiver;
pub mod repmod;
pub mod samples;

use thiserror::Error;

/// Errors surfaced by the core operations. Parse errors live in the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra is not finite dimensional: relation-free path of length {length} exists: {path}")]
    NotFiniteDimensional { length: usize, path: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("not a complex: composite at position {position} is nonzero")]
    NotAComplex { position: String },
    #[error("resolution bound {bound} exceeded; kernel still nonprojective")]
    GldimBoundExceeded { bound: usize },
    #[error("arrows do not form an oriented cycle: {0}")]
    CycleInvalid(String),
    #[error("requested extension class vanishes: Ext^{degree}({from}, {to}) = 0")]
    ZeroExt { degree: usize, from: String, to: String },
    #[error("no null-homotopy for a map that must be null-homotopic (internal invariant broken)")]
    NoHomotopy,
    #[error("algebra is not hereditary: it has relations")]
    NotHereditary,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
