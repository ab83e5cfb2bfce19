//! Runs every code snippet in the guide as a doc-test.
//!
//! Each chapter is attached to an empty module via `#[doc = include_str!]`,
//! so `cargo test -p mckay-book` fails whenever a snippet in the book drifts
//! out of sync with the library.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("src/structure.md")]
pub mod structure {}

#[doc = include_str!("src/character-degrees.md")]
pub mod character_degrees {}

#[doc = include_str!("src/symmetric-groups.md")]
pub mod symmetric_groups {}

#[doc = include_str!("src/matching.md")]
pub mod matching {}

#[doc = include_str!("src/cli.md")]
pub mod cli {}
