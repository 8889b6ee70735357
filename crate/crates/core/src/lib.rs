//! Voting correspondences, witness builders and exhaustive range oracles
//! for strict-preference profiles.
//!
//! Alternatives are dense ids `0..m` (at most 16); an [`Ordering`] lists
//! them top first and a [`Profile`] holds one ordering per individual.
//! [`rules`] evaluates the correspondences, [`constructions`] builds
//! profiles realizing a requested choice set, and [`oracle`] enumerates
//! profile spaces to compute ranges directly.

pub mod choice;
pub mod cli;
pub mod codec;
pub mod constructions;
pub mod error;
pub mod majority;
pub mod oracle;
pub mod ordering;
pub mod profile;
pub mod rules;

pub use choice::ChoiceSet;
pub use error::{Error, Result};
pub use majority::{majority_matrix, MajorityMatrix};
pub use ordering::{Alternative, Ordering};
pub use profile::{CanonicalKey, Profile};
pub use rules::{evaluate, IndexVector, Rule, ScoreVector};
