//! Finite words and stretch functions for the first-order encodings.

use crate::error::{Error, Result};
use crate::logic::PropName;
use crate::models::split::DOLLAR;
use crate::models::trace::Letter;
use std::collections::BTreeSet;

/// The reserved order proposition used by word encodings.
pub const ORDER_PROP: &str = "o";

/// A non-empty finite word over `2^AP`, with the reserved propositions `o`
/// and `dollar` excluded from its letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::invalid("word must contain at least one letter"));
        }
        for l in &letters {
            for reserved in [ORDER_PROP, DOLLAR] {
                if l.contains(reserved) {
                    return Err(Error::invalid(format!(
                        "word letters may not use the reserved proposition `{reserved}`"
                    )));
                }
            }
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letter(&self, i: usize) -> &Letter {
        &self.letters[i]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// All propositions occurring in the word.
    pub fn props(&self) -> BTreeSet<PropName> {
        self.letters.iter().flat_map(|l| l.iter().cloned()).collect()
    }
}

/// A strictly increasing map from positions to positive naturals, fixing
/// where each word position lands in a stretched encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StretchSpec {
    /// `f(n) = N·(n+1)` for a fixed `N ≥ 1`.
    Uniform(usize),
    /// Explicit table `f(0) < f(1) < ⋯`, all values ≥ 1.
    Table(Vec<usize>),
}

impl StretchSpec {
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("uniform stretch factor must be at least 1"));
        }
        Ok(StretchSpec::Uniform(n))
    }

    pub fn table(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("stretch table must be non-empty"));
        }
        if values[0] == 0 {
            return Err(Error::invalid("stretch values must be at least 1"));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("stretch table must be strictly increasing"));
        }
        Ok(StretchSpec::Table(values))
    }

    /// `f(n)`; errors when a table does not cover position `n`.
    pub fn value(&self, n: usize) -> Result<usize> {
        match self {
            StretchSpec::Uniform(k) => Ok(k * (n + 1)),
            StretchSpec::Table(values) => values.get(n).copied().ok_or_else(|| {
                Error::invalid(format!("stretch table has no entry for position {n}"))
            }),
        }
    }

    /// Whether the spec covers positions `0..len`.
    pub fn covers(&self, len: usize) -> bool {
        match self {
            StretchSpec::Uniform(_) => true,
            StretchSpec::Table(values) => values.len() >= len,
        }
    }
}
