//! Cycles in the burnt pancake graph BP_n.
//!
//! BP_n is the Cayley graph of the signed permutations of {1..n} under
//! prefix reversals (burnt pancake flips): n-regular, vertex-transitive,
//! with 2^n n! vertices and girth 8. This crate constructs a simple cycle
//! of every length from 8 up to 2^n n! (so BP_n is Hamiltonian and weakly
//! pancyclic), classifies all 8-cycles into four canonical families, and
//! ships an independent brute-force oracle plus the published ground-truth
//! cycle tables for BP_3 and BP_4.
//!
//! Quick tour:
//!
//! ```
//! use burnt_pancake::{perm::SignedPerm, synthesis};
//!
//! let (witness, _plan) = synthesis::synth_cycle(4, 100).unwrap();
//! assert_eq!(witness.len(), 100);
//! assert_eq!(witness.start, SignedPerm::identity(4).unwrap());
//! ```

pub mod base_cycles;
pub mod cli;
pub mod corpus;
pub mod eight_cycles;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod perm;
pub mod synthesis;

pub use error::{Error, Result};

