//! Exact integer and rational arithmetic for the Diophantine equation
//! `A² + B² + C² = 3D²` and the lattice geometry it governs.
//!
//! The crate is organized around a quaternion parametrization of the
//! solution set: a parameter vector `(x, y, z, t)` is identified with the
//! integer quaternion `q = x + yi + zj + tk`, and the conjugation
//! `q (i+j+k) q̄` sweeps out exactly the triples `(A, B, C)` satisfying
//! `A² + B² + C² = 3 N(q)²`. Around that core sit:
//!
//! * [`intarith`]: checked integer utilities (trial-division factorization,
//!   Legendre symbols, square roots of 3 modulo a prime).
//! * [`eisenstein`]: arithmetic in Z\[ω\], the Eisenstein integers, with a
//!   Euclidean gcd, factorization into primes, and representations by the
//!   norm form `a² − ab + b²`.
//! * [`gaussian`]: primitive two-square decompositions `M = B² + C²`.
//! * [`quaternion`]: exact rational quaternions, the conjugation map on pure
//!   vectors, and the triangle-family multiplier.
//! * [`param`]: the forward parametrization and its constructive inversion,
//!   which recovers a parameter vector from any primitive solution together
//!   with a full audit trace of the norm-splitting argument.
//! * [`census`]: per-D enumeration, the closed-form solution count, a
//!   quadratic-residue sieve over an exceptional prime family, special
//!   one-parameter constructions, and three quadratic-form membership sets.
//! * [`geometry`]: integer equilateral triangles and regular tetrahedra
//!   generated from a parameter vector.
//! * [`solgraph`]: the graph on primitive solutions whose edges apply the
//!   automorph identity of the binary form `α² − 3D²`.
//!
//! Every computation is exact; there is no floating point anywhere in the
//! crate. Inputs that would leave the checked 64-bit operating range fail
//! loudly with [`Error::Overflow`] instead of wrapping.

pub mod census;
pub mod eisenstein;
pub mod gaussian;
pub mod geometry;
pub mod intarith;
pub mod param;
pub mod quaternion;
pub mod solgraph;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An input or intermediate value left the supported operand range.
    #[error("operand exceeds the supported bound of 3_000_000_000_000 (3·10^12)")]
    Overflow,
    /// An argument that must be an odd prime was not.
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    /// A prime outside the exceptional family `p ≡ 11 (mod 12)` was passed
    /// where 3 must be a quadratic residue.
    #[error("3 is not a quadratic residue modulo {0}")]
    NotResidue(i64),
    /// Division or gcd with an argument that must be nonzero.
    #[error("argument must be nonzero")]
    ZeroArgument,
    /// A triple that does not lie on the surface `A² + B² + C² = 3D²`, or
    /// has a zero component.
    #[error("({a}, {b}, {c}; {d}) is not a valid solution triple")]
    InvalidSolution { a: i64, b: i64, c: i64, d: i64 },
    /// An operation that requires a primitive solution received an
    /// imprimitive one.
    #[error("solution is not primitive")]
    NotPrimitive,
    /// A precondition on a domain argument failed (message names it).
    #[error("{0}")]
    Domain(String),
    /// The closed-form count did not divide evenly; indicates a bug or an
    /// input outside the supported range.
    #[error("count formula for D = {0} failed its divisibility check")]
    Divisibility(i64),
    /// The sieve produced an admissible value with no coprime two-square
    /// completion: every solution containing it pairs it with two
    /// components that share a factor.
    #[error("admissible A = {a} for D = {d} has no primitive decomposition")]
    SieveUncovered { d: i64, a: i64 },
    /// The inversion search space was exhausted without a round trip.
    /// This cannot happen for primitive inputs; treated as an internal
    /// failure and reported with the partial state for debugging.
    #[error("inversion search exhausted for ({a}, {b}, {c}; {d})")]
    InversionExhausted { a: i64, b: i64, c: i64, d: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
