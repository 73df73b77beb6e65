//! Exact-arithmetic constructions of four families of graded Lie algebras
//! over group algebras: Witt type (vector fields), Special type
//! (divergence-free fields), Hamiltonian type, and Contact type.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers, so every identity check in this crate is a zero-tolerance
//! equality. The crate provides:
//!
//! - the underlying algebra of group-and-polynomial symbols ([`algebra`]),
//! - grading / down-grading / mixed operators ([`deriv`]),
//! - the four bracket constructions and their admissibility validators,
//!   which report failed numbered conditions as data
//!   ([`witt`], [`special`], [`hamiltonian`], [`contact`]),
//! - exact lattice arithmetic backing the validators ([`lattice`]),
//! - finite-window ideal-closure probes with replayable witnesses
//!   ([`probe`]),
//! - seeded property suites and closed-form cross-checks ([`suites`]),
//! - a text grammar for elements and a TOML config format with presets
//!   ([`textform`], [`configfile`]).
//!
//! The companion guide under `book/` walks through the constructions; its
//! code blocks run as doc-tests of this crate.

pub mod algebra;
pub mod config;
pub mod configfile;
pub mod contact;
pub mod deriv;
pub mod error;
pub mod hamiltonian;
pub mod lattice;
pub mod probe;
pub mod sample;
pub mod special;
pub mod suites;
pub mod textform;
pub mod witt;

pub use algebra::{AlgebraElement, ExponentVector, Monomial, VariableKind};
pub use config::{bracket_elements, AlgebraConfig, Element, Violation};
pub use configfile::{load_config, parse_window, preset, ConfigFile};
pub use contact::ContactConfig;
pub use deriv::DerivationKind;
pub use error::{Error, Result};
pub use hamiltonian::HamiltonianConfig;
pub use lattice::{GradingMap, GroupElement, IntegerLattice, SkewForm};
pub use probe::{ideal_closure, ClosureReport, RankAccumulator, Window};
pub use special::SpecialConfig;
pub use suites::{run_suite, Suite, SuiteRun};
pub use textform::parse_element;
pub use witt::{WittConfig, WittVector};

// The guide chapters double as doc-tests: every fenced Rust block below is
// compiled and run by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/derivations.md")]
    mod derivations {}
    #[doc = include_str!("../../../book/src/witt.md")]
    mod witt {}
    #[doc = include_str!("../../../book/src/special.md")]
    mod special {}
    #[doc = include_str!("../../../book/src/hamiltonian.md")]
    mod hamiltonian {}
    #[doc = include_str!("../../../book/src/contact.md")]
    mod contact {}
    #[doc = include_str!("../../../book/src/probing.md")]
    mod probing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
