//! Invariants of compact Seifert fibered 3-manifolds.
//!
//! Symbols are parsed and normalized by [`symbol`], turned into group
//! presentations by [`groups`], recognized by [`lens`] and [`topology`], and
//! covered by [`covers`]. [`report`] bundles everything for one symbol.

pub mod arith;
pub mod covers;
pub mod error;
pub mod fst;
pub mod groups;
pub mod lens;
pub mod report;
pub mod symbol;
pub mod topology;

pub use error::{Error, Result};
pub use symbol::{parse_symbol, SeifertSymbol};
