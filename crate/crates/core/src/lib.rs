//! Exact-arithmetic Schubert calculus and symmetric-function computations.
//!
//! The crate is organized around a small exact polynomial engine
//! ([`polyring`]) over arbitrary-precision integers, on top of which the
//! remaining modules build:
//!
//! * [`combinatorics`] — partitions, strict partitions, skew diagrams and
//!   Weyl-group elements of types A and C;
//! * [`divdiff`] — divided-difference operators and the symmetrizers that
//!   realize Gysin pushforwards;
//! * [`schurlib`] — Schur, supersymmetric Schur, Q-, P- and Q̃-polynomials,
//!   Pfaffians, Schur-basis expansions;
//! * [`schubertlib`] — single and double Schubert polynomials;
//! * [`loci`] — closed-form degeneracy-locus classes and their numeric
//!   consequences (CSM combinations, Brill–Noether numbers, Prym
//!   coefficients, ideal generator lists);
//! * [`enumgeo`] — enumerative coefficients `D_{I,J}`, `((J))`, `[J]` by
//!   independent routes, complete-quadrics products, Chern classes of
//!   Schur bundles;
//! * [`pieri`] — the Lagrangian Grassmannian cohomology ring: Pieri rule,
//!   Giambelli Pfaffian, basis, and the diagram-operator multiplicity
//!   oracle.
//!
//! Every computation is exact: coefficients are `BigInt`, divisions assert
//! exactness, and cross-checkable quantities are computed by at least two
//! independent routes in the test suites.

pub mod combinatorics;
pub mod divdiff;
pub mod enumgeo;
pub mod loci;
pub mod pieri;
pub mod polyring;
pub mod schubertlib;
pub mod schurlib;

use thiserror::Error;

/// Errors surfaced by library operations.
///
/// Domain precondition violations name the violated condition so callers
/// (in particular the CLI) can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated in {operation}: {condition}")]
    Precondition {
        operation: &'static str,
        condition: String,
    },
    #[error("alphabet mismatch: operands live in different variable universes")]
    AlphabetMismatch,
    #[error("non-exact division in {context}; this signals an internal bug")]
    NonExactDivision { context: &'static str },
    #[error("enumeration guard exceeded ({limit})")]
    GuardExceeded { limit: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn pre(operation: &'static str, condition: impl Into<String>) -> Self {
        Error::Precondition {
            operation,
            condition: condition.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
