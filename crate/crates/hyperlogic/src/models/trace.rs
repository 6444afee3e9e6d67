//! Lasso traces and named trace sets.

use crate::error::{Error, Result};
use crate::logic::PropName;
use std::collections::{BTreeMap, BTreeSet};

/// A letter is a set of propositions (an element of `2^AP`).
pub type Letter = BTreeSet<PropName>;

/// Build a letter from proposition names.
pub fn letter<I, S>(props: I) -> Letter
where
    I: IntoIterator<Item = S>,
    S: Into<PropName>,
{
    props.into_iter().map(Into::into).collect()
}

/// Reduce a lasso representation to the canonical one: the loop becomes its
/// primitive root, then the stem sheds any tail it shares with the loop end,
/// producing the unique shortest-stem/shortest-loop representation of the
/// induced ultimately periodic word.
pub(crate) fn canonical_lasso<T: Eq + Clone>(stem: &[T], looped: &[T]) -> (Vec<T>, Vec<T>) {
    let mut lp: Vec<T> = looped.to_vec();
    let n = lp.len();
    for d in 1..=n {
        if n % d == 0 && (0..n).all(|i| lp[i] == lp[i % d]) {
            lp.truncate(d);
            break;
        }
    }
    let mut st: Vec<T> = stem.to_vec();
    while let Some(last) = st.last() {
        if *last == lp[lp.len() - 1] {
            st.pop();
            lp.rotate_right(1);
        } else {
            break;
        }
    }
    (st, lp)
}

/// An ultimately periodic trace: a finite stem followed by a non-empty loop
/// repeated forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoTrace {
    stem: Vec<Letter>,
    looped: Vec<Letter>,
}

impl LassoTrace {
    /// Build a trace; the loop must be non-empty.
    pub fn new(stem: Vec<Letter>, looped: Vec<Letter>) -> Result<Self> {
        if looped.is_empty() {
            return Err(Error::EmptyLoop);
        }
        Ok(LassoTrace { stem, looped })
    }

    pub fn stem(&self) -> &[Letter] {
        &self.stem
    }

    pub fn loop_part(&self) -> &[Letter] {
        &self.looped
    }

    /// Letter at position `i`: `stem[i]` if `i < |stem|`, else
    /// `loop[(i - |stem|) mod |loop|]`.
    pub fn letter_at(&self, i: usize) -> &Letter {
        if i < self.stem.len() {
            &self.stem[i]
        } else {
            &self.looped[(i - self.stem.len()) % self.looped.len()]
        }
    }

    /// The trace starting at position `k` (the paper's suffix `t[k, ∞]`).
    pub fn suffix(&self, k: usize) -> LassoTrace {
        if k <= self.stem.len() {
            LassoTrace {
                stem: self.stem[k..].to_vec(),
                looped: self.looped.clone(),
            }
        } else {
            let r = (k - self.stem.len()) % self.looped.len();
            let mut lp = self.looped.clone();
            lp.rotate_left(r);
            LassoTrace {
                stem: Vec::new(),
                looped: lp,
            }
        }
    }

    /// All propositions occurring in some letter.
    pub fn props(&self) -> BTreeSet<PropName> {
        self.stem
            .iter()
            .chain(self.looped.iter())
            .flat_map(|l| l.iter().cloned())
            .collect()
    }

    /// The canonical (shortest) representation of the same trace.
    pub fn canonical(&self) -> LassoTrace {
        let (stem, looped) = canonical_lasso(&self.stem, &self.looped);
        LassoTrace { stem, looped }
    }

    /// Whether two representations induce the same infinite trace.
    pub fn same_trace(&self, other: &LassoTrace) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Alignment of a tuple of traces: `s` is the maximum stem length, `p` the
/// least common multiple of the loop lengths. The pointwise product of the
/// traces is ultimately periodic with stem `s` and period `p`. An empty
/// tuple aligns as `(0, 1)`.
pub fn align<'a>(traces: impl IntoIterator<Item = &'a LassoTrace>) -> (usize, usize) {
    let mut s = 0usize;
    let mut p = 1usize;
    for t in traces {
        s = s.max(t.stem.len());
        p = lcm(p, t.looped.len());
    }
    (s, p)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A named, finite set of lasso traces over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSet {
    alphabet: BTreeSet<PropName>,
    names: Vec<String>,
    traces: Vec<LassoTrace>,
    index: BTreeMap<String, usize>,
}

impl TraceSet {
    /// Build a trace set; names must be unique and every letter must stay
    /// inside the alphabet. Iteration follows insertion order.
    pub fn new(
        alphabet: BTreeSet<PropName>,
        entries: impl IntoIterator<Item = (String, LassoTrace)>,
    ) -> Result<Self> {
        let mut names = Vec::new();
        let mut traces = Vec::new();
        let mut index = BTreeMap::new();
        for (name, trace) in entries {
            if index.contains_key(&name) {
                return Err(Error::DuplicateTraceName(name));
            }
            for prop in trace.props() {
                if !alphabet.contains(&prop) {
                    return Err(Error::LetterOutsideAlphabet(prop));
                }
            }
            index.insert(name.clone(), traces.len());
            names.push(name);
            traces.push(trace);
        }
        Ok(TraceSet {
            alphabet,
            names,
            traces,
            index,
        })
    }

    pub fn alphabet(&self) -> &BTreeSet<PropName> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&LassoTrace> {
        self.index.get(name).map(|&i| &self.traces[i])
    }

    /// Traces in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &LassoTrace)> {
        self.names
            .iter()
            .map(String::as_str)
            .zip(self.traces.iter())
    }
}
