//! Exact computations around symplectic FFLV polytopes and their tropical
//! degenerations.
//!
//! Everything is computed in exact rational arithmetic.  The crate provides:
//!
//! * lattice polytopes of Dyck-path type for the symplectic Lie algebra
//!   ([`fflv`]), together with lattice point enumeration and an independent
//!   Weyl-dimension oracle,
//! * the simplicial cone of weighted PBW degenerations ([`degree`]) with its
//!   facet description, derived inequalities and tropical image,
//! * the symplectic Pluecker ideal with its quadratic and linear generators
//!   ([`plucker`]) and weighted initial ideals via Buchberger ([`groebner`]),
//! * birational charts of the symplectic flag variety given by products of
//!   root-vector exponentials ([`chart`]), their coordinate polynomials and
//!   degenerate (initial) analogues,
//! * PBW-semistandard tableaux ([`tableaux`]) and the valuation bijection
//!   onto lattice points,
//! * a verification suite ([`verify`]) that re-derives the small-rank
//!   examples and property-checks the structural claims.
//!
//! The binary `sympflv` exposes the main entry points as subcommands.

pub mod cone;
pub mod linalg;
pub mod rat;

pub mod lie;

pub mod fflv;

pub mod degree;

pub mod plucker;

pub mod groebner;

pub mod poly;

pub mod chart;

pub mod tableaux;

pub mod trop;

pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must satisfy {0}")]
    BadRank(&'static str),
    #[error("invalid letter {0} for rank {1}")]
    BadLetter(i64, usize),
    #[error("invalid root ({i},{j},barred={barred}) for rank {n}")]
    BadRoot { i: usize, j: usize, barred: bool, n: usize },
    #[error("index tuple is not strictly increasing or has bad length: {0}")]
    BadIndexTuple(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("polynomials live in different variable universes")]
    UniverseMismatch,
    #[error("weight vector does not match variable universe")]
    WeightMismatch,
    #[error("system is infeasible")]
    Infeasible,
    #[error("tuple lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("anti-diagonal pairing undefined: letter {0} is not below {1}")]
    InvalidPairing(i64, i64),
    #[error("sequence is not a good ordering: root #{later} minus root #{earlier} is a sum of positive roots")]
    NotGoodSequence { earlier: usize, later: usize },
    #[error("resource cap exceeded in {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: usize },
    #[error("not a lattice point of the polytope: {0}")]
    NotInPolytope(String),
    #[error("invalid tableau: {0}")]
    BadTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
