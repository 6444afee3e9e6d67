//! Hyperproperty logic toolkit.
//!
//! The crate provides:
//!
//! - [`logic`]: formula ASTs (quantifier-free hyper formulas, prenex
//!   HyperLTL sentences, HyperCTL* formulas, FO\[<=\] over words), a shared
//!   concrete syntax with parser and minimal-parenthesis printer, prenexing,
//!   alternation classification, and temporal depth.
//! - [`models`]: lasso traces and named trace sets, trace/path assignments,
//!   Kripke structures with bounded lasso-path enumeration, finite words,
//!   boundedness/split views of `$`-padded trace sets, and the text file
//!   formats for all of them.
//! - [`hyperltl`]: exact HyperLTL evaluation over finite sets of lasso
//!   traces via expansion tables, plus bounded satisfiability search over
//!   finite trace-set models.
//! - [`hyperctl`]: bounded HyperCTL* evaluation over Kripke structures by
//!   direct semantics and, independently, by solving the associated
//!   model-checking game.
//! - [`constructions`]: formula generators (tiling reductions, binary-tree
//!   and counting structures, arithmetic encodings, boundedness, split
//!   combination, finite-model selector).
//! - [`fobridge`]: FO\[<=\] evaluation over finite words, word-to-trace-set
//!   encodings, translation into HyperLTL, and quantifier-free
//!   simplification over stretched encodings.

pub mod constructions;
pub mod error;
pub mod fobridge;
pub mod hyperctl;
pub mod hyperltl;
pub mod logic;
pub mod models;

pub use error::{Error, Result};
