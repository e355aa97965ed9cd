//! Exact combinatorics of good Lyndon words, cluster seeds and
//! Newton-Okounkov simplices for finite-type root systems.
//!
//! The crate is organized around five building blocks:
//!
//! * [`rootsys`] — Cartan data, Weyl group elements, reduced words,
//!   inversion sets and reduced-expression counting.
//! * [`lyndon`] — words over an ordered alphabet, good Lyndon words,
//!   the dominant-word monoid and a brute-force shuffle oracle.
//! * [`cluster`] — seeds attached to reduced words, exchange-matrix
//!   mutation with tropical vector tracking, seed enumeration and the
//!   dominance-order test.
//! * [`okbody`] — the degree hyperplane, rational simplices, their
//!   normal fans, cluster-monomial decomposition of rational points,
//!   and exact disjointness of simplex interiors.
//! * [`hookalg`] — sparse multivariate polynomials over exact
//!   rationals and the hook-identity verifiers.
//!
//! Everything is computed with exact integer and rational arithmetic;
//! no floating point is used anywhere. The crate is `no_std`
//! compatible (it requires `alloc`); IO, serialization and the command
//! line live in the companion `okbodies-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cluster;
pub mod hookalg;
mod linalg;
pub mod lyndon;
pub mod okbody;
pub mod rootsys;

use alloc::string::String;
use core::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `(family, rank)` does not name a finite-type root system.
    InvalidType { family: char, rank: usize },
    /// A letter outside `1..=rank` appeared in a word.
    InvalidLetter { letter: u8, rank: usize },
    /// The alphabet order is not a permutation of `1..=rank`.
    InvalidOrder,
    /// Exceptional type combined with a non-natural alphabet order.
    /// The sorted-merge product is only established for classical types
    /// under arbitrary orders and exceptional types under the natural
    /// order, so these configurations are refused rather than guessed.
    UnsupportedConfiguration { family: char, rank: usize },
    /// An operation that needs a nonempty word received an empty one.
    EmptyWord,
    /// A word that must be reduced is not.
    NonReducedWord,
    /// Mutation requested at a frozen index.
    FrozenIndex(usize),
    /// Shuffle enumeration would exceed the configured size bound.
    ShuffleBoundExceeded { len: usize, bound: usize },
    /// Two vectors of different dimensions were compared.
    DimensionMismatch { left: usize, right: usize },
    /// A weight was requested for the zero vector.
    ZeroVector,
    /// A verifier needs a complete seed enumeration but the finiteness
    /// flag is false.
    IncompleteEnumeration,
    /// A mutated cluster valuation acquired a negative component; this
    /// signals a bug or an out-of-theory configuration.
    NegativeValuation { index: usize, depth: usize },
    /// An internal invariant failed; the message describes where.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType { family, rank } => {
                write!(f, "{}{} is not a finite-type root system", family, rank)
            }
            Error::InvalidLetter { letter, rank } => {
                write!(f, "letter {} outside alphabet 1..={}", letter, rank)
            }
            Error::InvalidOrder => write!(f, "order is not a permutation of the alphabet"),
            Error::UnsupportedConfiguration { family, rank } => write!(
                f,
                "unsupported configuration: {}{} with a non-natural alphabet order",
                family, rank
            ),
            Error::EmptyWord => write!(f, "empty word"),
            Error::NonReducedWord => write!(f, "word is not reduced"),
            Error::FrozenIndex(k) => write!(f, "index {} is frozen", k + 1),
            Error::ShuffleBoundExceeded { len, bound } => {
                write!(f, "shuffle of total length {} exceeds bound {}", len, bound)
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {} vs {}", left, right)
            }
            Error::ZeroVector => write!(f, "zero vector has no weight form"),
            Error::IncompleteEnumeration => {
                write!(f, "seed enumeration is incomplete; refusing to verify")
            }
            Error::NegativeValuation { index, depth } => write!(
                f,
                "mutated valuation at index {} (depth {}) has a negative component",
                index + 1,
                depth
            ),
            Error::Internal(msg) => write!(f, "internal invariant violated: {}", msg),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
