//! Minimal monomial generating sets for invariant rings of diagonal actions
//! of elementary abelian groups `(Z/p)^k`.
//!
//! The pipeline builds `n - k` seed invariants from signed maximal minors of
//! the weight matrix, takes every mod-`p` combination of them together with
//! the pure powers `x_j^p`, and reduces that pool to its divisibility-minimal
//! elements. A brute-force box enumeration is provided as an independent
//! check.

pub mod action;
pub mod bench;
pub mod cli;
pub mod error;
pub mod growth;
pub mod instance;
pub mod modp;
pub mod oracle;
pub mod seedgen;

pub use action::{format_monomial, normalize, ActionSpec, ExponentVector, GeneratingSet};
pub use error::{Error, Result};
pub use growth::{compute_generators, CandidatePool};
pub use modp::{is_invariant, PivotSet};
pub use oracle::oracle_atoms;
pub use seedgen::{generate_seeds, SeedSet};
