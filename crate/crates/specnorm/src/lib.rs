//! Combinatorics of finite spectral spaces.
//!
//! A finite topological space satisfying T0 is the same thing as a finite
//! poset under the specialization order, and every finite poset arises as
//! the spectrum of some commutative ring. This crate works on that
//! combinatorial side: it builds finite spectral spaces, extracts their
//! specialization graphs, computes longest-chain lengths and exact rational
//! morphism norms, classifies continuous maps along longitudinal and
//! latitudinal axes, and sweeps a small catalog of structural statements
//! over exhaustively enumerated and randomly sampled instances, with every
//! clever computation cross-checked against a brute-force oracle.
//!
//! Desk-scale spectra of arithmetic flavor (stars of prime ideals of the
//! integers, lines over a finite field, fragments of the arithmetic plane)
//! come as ready-made constructors, and the `specnorm` binary exposes the
//! whole toolkit over JSON documents.

pub mod budget;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod jsonio;
pub mod lengths;
pub mod morphism;
pub mod poly;
pub mod random;
pub mod ratio;
pub mod search;
pub mod space;
pub mod spectra;
pub mod statements;
pub mod suite;

pub use error::{Error, Result};
pub use lengths::Lengths;
pub use morphism::{MorphismProfile, OwnedMorphism, SchemeMorphism};
pub use ratio::Ratio;
pub use space::SpectralSpace;
