//! Follower set graphs of factorial languages and the invariants read off
//! them.
//!
//! A language is given either by finitely many forbidden words
//! ([`LanguageSpec::finite_type`], or the text format read by
//! [`parse_forbidden_file`]) or by a labeled graph presenting it
//! ([`LanguageSpec::from_presentation`]). From it [`build_fsg`] produces the
//! follower set graph: one vertex per follower set `F(μ) = {w : wμ allowable}`
//! and an edge `F(μ) → F(iμ)` labeled `i`.
//!
//! Words are stored in the order they are printed. `wμ` puts `w` on the
//! left, so a path in the graph spells its word from right to left. The CLI
//! flag `--convention right` reverses words on input and output for data
//! written the other way round.
//!
//! On top of the graph:
//!
//! * [`equivalence`]: labeled isomorphism (the languages agree up to renaming
//!   symbols), unlabeled isomorphism (local piecewise conjugacy), the word
//!   bijections `f_n`, and lifting unlabeled witnesses to labeled ones.
//! * [`covers`]: synchronizing words and the Fischer cover.
//! * [`dynamics`]: the levels `Ω_l`, support masks, entropy, periodic points,
//!   and the operator relations on a truncated Fock space.
//! * [`corpus`]: worked examples with their expected results.
//!
//! ```
//! use soficlab::{build_fsg, LanguageSpec};
//!
//! let golden = LanguageSpec::from_strs(&["0", "1"], &["11"]).unwrap();
//! let g = build_fsg(&golden).unwrap();
//! assert_eq!(g.vertex_count(), 2);
//! ```

pub mod automaton;
pub mod cli;
pub mod corpus;
pub mod covers;
pub mod dynamics;
pub mod equivalence;
pub mod error;
pub mod fsg;
pub mod graph;
pub mod language;
pub mod sampling;

pub use error::{Error, Result};
pub use fsg::{build_fsg, build_fsg_finite_type, build_fsg_from_presentation, FollowerSetGraph};
pub use graph::{LabeledGraph, Presentation};
pub use language::{is_allowable, parse_forbidden_file, Alphabet, Convention, LanguageSpec, Symbol, Word};
