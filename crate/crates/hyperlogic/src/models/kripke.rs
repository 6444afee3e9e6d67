//! Kripke structures and ultimately periodic paths through them.

use crate::error::{Error, Result};
use crate::logic::PropName;
use crate::models::trace::{canonical_lasso, LassoTrace, Letter};
use std::collections::{BTreeMap, BTreeSet};

/// A finite, total, labeled transition system with one initial vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeStructure {
    names: Vec<String>,
    labels: Vec<Letter>,
    index: BTreeMap<String, usize>,
    initial: usize,
    succs: Vec<BTreeSet<usize>>,
}

impl KripkeStructure {
    /// Build a structure from named labeled vertices, an initial vertex, and
    /// edges. Every vertex must have at least one successor.
    pub fn new(
        vertices: Vec<(String, Letter)>,
        initial: &str,
        edges: &[(String, String)],
    ) -> Result<Self> {
        let mut names = Vec::new();
        let mut labels = Vec::new();
        let mut index = BTreeMap::new();
        for (name, label) in vertices {
            if index.contains_key(&name) {
                return Err(Error::DuplicateVertex(name));
            }
            index.insert(name.clone(), names.len());
            names.push(name);
            labels.push(label);
        }
        let mut succs = vec![BTreeSet::new(); names.len()];
        for (src, dst) in edges {
            let &s = index
                .get(src)
                .ok_or_else(|| Error::UnknownVertex(src.clone()))?;
            let &d = index
                .get(dst)
                .ok_or_else(|| Error::UnknownVertex(dst.clone()))?;
            succs[s].insert(d);
        }
        let initial = *index
            .get(initial)
            .ok_or_else(|| Error::UnknownVertex(initial.to_string()))?;
        for (i, out) in succs.iter().enumerate() {
            if out.is_empty() {
                return Err(Error::NotTotal(names[i].clone()));
            }
        }
        Ok(KripkeStructure {
            names,
            labels,
            index,
            initial,
            succs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn label(&self, i: usize) -> &Letter {
        &self.labels[i]
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn successors(&self, i: usize) -> &BTreeSet<usize> {
        &self.succs[i]
    }

    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        self.succs[src].contains(&dst)
    }

    /// All propositions used by some label.
    pub fn props(&self) -> BTreeSet<PropName> {
        self.labels
            .iter()
            .flat_map(|l| l.iter().cloned())
            .collect()
    }
}

/// An ultimately periodic path: vertex indices for a stem followed by a
/// non-empty loop. Consecutive vertices (including the loop-back edge and the
/// stem-to-loop junction) are connected in the owning structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoPath {
    stem: Vec<usize>,
    looped: Vec<usize>,
}

impl LassoPath {
    /// Build a path and validate edge-connectedness against `k`.
    pub fn new(k: &KripkeStructure, stem: Vec<usize>, looped: Vec<usize>) -> Result<Self> {
        if looped.is_empty() {
            return Err(Error::EmptyLoop);
        }
        let seq: Vec<usize> = stem.iter().chain(looped.iter()).copied().collect();
        for w in seq.windows(2) {
            if !k.has_edge(w[0], w[1]) {
                return Err(Error::invalid(format!(
                    "missing edge {} -> {}",
                    k.vertex_name(w[0]),
                    k.vertex_name(w[1])
                )));
            }
        }
        let last = *looped.last().unwrap();
        let first = looped[0];
        if !k.has_edge(last, first) {
            return Err(Error::invalid(format!(
                "missing loop-back edge {} -> {}",
                k.vertex_name(last),
                k.vertex_name(first)
            )));
        }
        Ok(LassoPath { stem, looped })
    }

    pub fn stem(&self) -> &[usize] {
        &self.stem
    }

    pub fn loop_part(&self) -> &[usize] {
        &self.looped
    }

    /// Vertex at position `i` of the induced infinite path.
    pub fn vertex_at(&self, i: usize) -> usize {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.looped[(i - self.stem.len()) % self.looped.len()]
        }
    }

    /// The path starting at position `k` of this one.
    pub fn suffix(&self, k: usize) -> LassoPath {
        if k <= self.stem.len() {
            LassoPath {
                stem: self.stem[k..].to_vec(),
                looped: self.looped.clone(),
            }
        } else {
            let r = (k - self.stem.len()) % self.looped.len();
            let mut lp = self.looped.clone();
            lp.rotate_left(r);
            LassoPath {
                stem: Vec::new(),
                looped: lp,
            }
        }
    }

    /// First vertex of the path.
    pub fn head(&self) -> usize {
        self.vertex_at(0)
    }

    /// The canonical (shortest) representation of the same vertex sequence.
    pub fn canonical(&self) -> LassoPath {
        let (stem, looped) = canonical_lasso(&self.stem, &self.looped);
        LassoPath { stem, looped }
    }

    /// The label trace this path induces.
    pub fn to_trace(&self, k: &KripkeStructure) -> LassoTrace {
        LassoTrace::new(
            self.stem.iter().map(|&v| k.label(v).clone()).collect(),
            self.looped.iter().map(|&v| k.label(v).clone()).collect(),
        )
        .expect("loop is non-empty")
    }

    /// Human-readable rendering using vertex names: `v0 v1 ( v2 v3 )`.
    pub fn display_with(&self, k: &KripkeStructure) -> String {
        let mut parts: Vec<&str> = self.stem.iter().map(|&v| k.vertex_name(v)).collect();
        parts.push("(");
        parts.extend(self.looped.iter().map(|&v| k.vertex_name(v)));
        parts.push(")");
        parts.join(" ")
    }
}

/// Enumerate all distinct ultimately periodic paths from `start` that admit a
/// representation with at most `s_bound` stem vertices and at most `l_bound`
/// loop vertices. Distinctness is semantic (same infinite vertex sequence):
/// each path is reported once, in its canonical shortest representation, and
/// the result is ordered by (total length, stem length, stem, loop).
pub fn lasso_paths(
    k: &KripkeStructure,
    start: usize,
    s_bound: usize,
    l_bound: usize,
) -> Vec<LassoPath> {
    let mut seen: BTreeSet<LassoPath> = BTreeSet::new();
    let mut stem: Vec<usize> = Vec::new();
    collect_stems(k, start, s_bound, l_bound, &mut stem, &mut seen);
    let mut out: Vec<LassoPath> = seen.into_iter().collect();
    out.sort_by_key(|p| {
        (
            p.stem.len() + p.looped.len(),
            p.stem.len(),
            p.stem.clone(),
            p.looped.clone(),
        )
    });
    out
}

fn collect_stems(
    k: &KripkeStructure,
    start: usize,
    s_left: usize,
    l_bound: usize,
    stem: &mut Vec<usize>,
    seen: &mut BTreeSet<LassoPath>,
) {
    let anchors: Vec<usize> = match stem.last() {
        None => vec![start],
        Some(&v) => k.successors(v).iter().copied().collect(),
    };
    for anchor in anchors {
        let mut looped = vec![anchor];
        collect_loops(k, anchor, l_bound - 1, &mut looped, stem, seen);
    }
    if s_left > 0 {
        let nexts: Vec<usize> = match stem.last() {
            None => vec![start],
            Some(&v) => k.successors(v).iter().copied().collect(),
        };
        for v in nexts {
            stem.push(v);
            collect_stems(k, start, s_left - 1, l_bound, stem, seen);
            stem.pop();
        }
    }
}

fn collect_loops(
    k: &KripkeStructure,
    first: usize,
    l_left: usize,
    looped: &mut Vec<usize>,
    stem: &[usize],
    seen: &mut BTreeSet<LassoPath>,
) {
    let last = *looped.last().unwrap();
    if k.has_edge(last, first) {
        let path = LassoPath {
            stem: stem.to_vec(),
            looped: looped.clone(),
        };
        seen.insert(path.canonical());
    }
    if l_left > 0 {
        let nexts: Vec<usize> = k.successors(last).iter().copied().collect();
        for v in nexts {
            looped.push(v);
            collect_loops(k, first, l_left - 1, looped, stem, seen);
            looped.pop();
        }
    }
}
