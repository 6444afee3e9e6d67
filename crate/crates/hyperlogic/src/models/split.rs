//! Bounded and split trace sets: the `dollar`-padding structure used to
//! stitch two trace sets into one.

use crate::error::{Error, Result};
use crate::models::trace::{LassoTrace, Letter, TraceSet};
use std::collections::BTreeSet;

/// The reserved padding proposition.
pub const DOLLAR: &str = "dollar";

/// A split trace set decomposed into its bound and its two sides. Left
/// traces are kept as stored (ordinary prefix, then `{dollar}` forever);
/// right traces have their `{dollar}^b` prefix stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitView {
    pub b: usize,
    pub left: TraceSet,
    pub right: TraceSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// `b` dollar-free letters, then exactly `{dollar}` forever.
    Left(usize),
    /// Exactly `{dollar}` at positions `0..b`, then dollar-free forever.
    Right(usize),
}

/// Classify one trace semantically. The scan horizon `|stem| + 2·|loop|`
/// visits every loop offset at least once past any stem position.
fn shape_of(t: &LassoTrace) -> Option<Shape> {
    let horizon = t.stem().len() + 2 * t.loop_part().len();
    let pure_dollar = |l: &Letter| l.len() == 1 && l.contains(DOLLAR);
    let dollar_free = |l: &Letter| !l.contains(DOLLAR);

    // Left: find the first pure-{dollar} position; everything before must be
    // dollar-free, everything after (through the horizon) pure {dollar}.
    if let Some(b) = (0..horizon).find(|&i| pure_dollar(t.letter_at(i))) {
        if b >= 1
            && (0..b).all(|i| dollar_free(t.letter_at(i)))
            && (b..horizon).all(|i| pure_dollar(t.letter_at(i)))
        {
            return Some(Shape::Left(b));
        }
    }
    // Right: find the first dollar-free position; everything before must be
    // pure {dollar}, everything after dollar-free.
    if let Some(b) = (0..horizon).find(|&i| dollar_free(t.letter_at(i))) {
        if b >= 1
            && (0..b).all(|i| pure_dollar(t.letter_at(i)))
            && (b..horizon).all(|i| dollar_free(t.letter_at(i)))
        {
            return Some(Shape::Right(b));
        }
    }
    None
}

/// The unique bound `b ≥ 1` such that every trace consists of `b` ordinary
/// (dollar-free) letters followed by `{dollar}` forever; `None` if the set is
/// empty or any trace does not fit a common bound.
pub fn is_bounded(t: &TraceSet) -> Option<usize> {
    let mut bound = None;
    if t.is_empty() {
        return None;
    }
    for (_, trace) in t.iter() {
        match shape_of(trace) {
            Some(Shape::Left(b)) => match bound {
                None => bound = Some(b),
                Some(prev) if prev == b => {}
                Some(_) => return None,
            },
            _ => return None,
        }
    }
    bound
}

/// Decompose a split set: every trace must be left-shaped or right-shaped for
/// one common bound `b ≥ 1`. Left traces are returned unchanged; right traces
/// are returned with the `{dollar}^b` prefix removed and `dollar` dropped
/// from the right alphabet. Either side may be empty, but not both.
pub fn split_view(t: &TraceSet) -> Option<SplitView> {
    let mut bound: Option<usize> = None;
    let mut left_entries: Vec<(String, LassoTrace)> = Vec::new();
    let mut right_entries: Vec<(String, LassoTrace)> = Vec::new();
    if t.is_empty() {
        return None;
    }
    for (name, trace) in t.iter() {
        let shape = shape_of(trace)?;
        let b = match shape {
            Shape::Left(b) | Shape::Right(b) => b,
        };
        match bound {
            None => bound = Some(b),
            Some(prev) if prev == b => {}
            Some(_) => return None,
        }
        match shape {
            Shape::Left(_) => left_entries.push((name.to_string(), trace.clone())),
            Shape::Right(_) => right_entries.push((name.to_string(), trace.suffix(b))),
        }
    }
    let b = bound?;
    let left_alpha = t.alphabet().clone();
    let mut right_alpha: BTreeSet<String> = t.alphabet().clone();
    right_alpha.remove(DOLLAR);
    let left = TraceSet::new(left_alpha, left_entries).ok()?;
    let right = TraceSet::new(right_alpha, right_entries).ok()?;
    Some(SplitView { b, left, right })
}

/// Build a split trace set from its parts: each left entry contributes `b`
/// ordinary letters followed by `{dollar}` forever, each right trace is
/// prefixed with `{dollar}^b`. Inverse of [`split_view`].
pub fn compose_split(
    b: usize,
    left: &[(String, Vec<Letter>)],
    right: &TraceSet,
) -> Result<TraceSet> {
    if b == 0 {
        return Err(Error::invalid("split bound must be at least 1"));
    }
    let dollar_letter: Letter = [DOLLAR.to_string()].into();
    let mut alphabet: BTreeSet<String> = right.alphabet().clone();
    alphabet.insert(DOLLAR.to_string());
    let mut entries: Vec<(String, LassoTrace)> = Vec::new();
    for (name, letters) in left {
        if letters.len() != b {
            return Err(Error::invalid(format!(
                "left trace `{name}` must contribute exactly {b} letters"
            )));
        }
        for l in letters {
            if l.contains(DOLLAR) {
                return Err(Error::invalid(format!(
                    "left trace `{name}` contains a dollar letter"
                )));
            }
            alphabet.extend(l.iter().cloned());
        }
        entries.push((
            name.clone(),
            LassoTrace::new(letters.clone(), vec![dollar_letter.clone()])?,
        ));
    }
    for (name, trace) in right.iter() {
        if trace.props().contains(DOLLAR) {
            return Err(Error::invalid(format!(
                "right trace `{name}` contains a dollar letter"
            )));
        }
        let mut stem = vec![dollar_letter.clone(); b];
        stem.extend(trace.stem().iter().cloned());
        entries.push((
            name.to_string(),
            LassoTrace::new(stem, trace.loop_part().to_vec())?,
        ));
    }
    TraceSet::new(alphabet, entries)
}
