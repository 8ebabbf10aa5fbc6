//! Exact enumeration and counting of trihexes: 3-regular planar graphs whose
//! faces are all triangles or hexagons.
//!
//! Counts come from the prime factorization of `V/4` ([`counting`]), are
//! certified by explicit signature enumeration ([`enumeration`]), and the
//! signatures themselves are realized as embedded graphs ([`graph`]) whose
//! isomorphism classes certify the signature calculus ([`signature`]).

pub mod counting;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod numtheory;
pub mod signature;

pub use counting::CountReport;
pub use enumeration::EnumerationResult;
pub use error::{CheckedField, Error, Result};
pub use graph::{CanonicalCode, EmbeddedGraph};
pub use signature::{Signature, SignatureOrbit};

/// Factorization over the default 64-bit width.
pub type Factorization = numtheory::Factorization<u64>;
/// Congruence roots over the default 64-bit width.
pub type CongruenceSolutions = numtheory::CongruenceSolutions<u64>;
