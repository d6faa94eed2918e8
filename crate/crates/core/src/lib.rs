//! Exact computations with finite quandles, with a focus on Alexander
//! quandles `a^b = t a + (1 - t) b` over `Z_n`.
//!
//! - [`quandle`]: Cayley tables, axiom validation, trivial and conjugation
//!   quandles, the inner maps `rho_b`.
//! - [`alexander`]: Alexander quandles and their closed-form identities.
//! - [`word`]: free-group words and their action on elements.
//! - [`group`]: operator groups and connectivity.
//! - [`morphism`]: homomorphisms, generated subquandles, automorphisms.
//! - [`verify`]: batch verification over ranges of primes.
//! - [`cli`]: the `quandle` command.

pub mod alexander;
pub mod cli;
pub mod error;
pub mod group;
pub mod modular;
pub mod morphism;
pub mod perm;
pub mod quandle;
pub mod verify;
pub mod word;

pub use alexander::{
    alexander_quandle, AlexanderParams, AlexanderQuandle, AlternatingForm, AlternatingPattern,
    BaseLetter,
};
pub use error::{QuandleError, Result};
pub use group::{extended_axiom_check, is_connected, operator_group, PermGroup};
pub use morphism::{
    enumerate_automorphisms, generated_subquandle, is_homomorphism, pair_automorphism,
    verify_two_generation, PairMode, QuandleMap,
};
pub use perm::Permutation;
pub use quandle::{
    conjugation_quandle, trivial_quandle, validate_axioms, AxiomReport, FiniteQuandle, GroupTable,
};
pub use word::{evaluate, operationally_equivalent, parse_word, reduce_word, Letter, Sign, Word};
