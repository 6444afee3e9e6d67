//! Syntactic transformations: prenexing, alternation classification, and
//! temporal depth.

use crate::logic::ast::{HyperLTLSentence, QfFormula, Quantifier, VarName};
use std::collections::{BTreeMap, BTreeSet};

/// A boolean combination of prenex sentences — the input shape of
/// [`to_prenex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SentenceComb {
    Leaf(HyperLTLSentence),
    Not(Box<SentenceComb>),
    And(Box<SentenceComb>, Box<SentenceComb>),
    Or(Box<SentenceComb>, Box<SentenceComb>),
}

impl SentenceComb {
    pub fn leaf(s: HyperLTLSentence) -> Self {
        SentenceComb::Leaf(s)
    }
    pub fn not(self) -> Self {
        SentenceComb::Not(Box::new(self))
    }
    pub fn and(self, rhs: Self) -> Self {
        SentenceComb::And(Box::new(self), Box::new(rhs))
    }
    pub fn or(self, rhs: Self) -> Self {
        SentenceComb::Or(Box::new(self), Box::new(rhs))
    }
}

/// Hoist a boolean combination of prenex sentences into one prenex sentence.
///
/// Negation dualizes the prefix and negates the matrix. Conjunction and
/// disjunction concatenate prefixes left to right; when the right operand
/// reuses a variable name already taken, the clashing variable is renamed to
/// `base` followed by the smallest integer suffix >= 2 that is globally
/// fresh (`p`, `p2`, `p3`, ...).
pub fn to_prenex(comb: &SentenceComb) -> HyperLTLSentence {
    match comb {
        SentenceComb::Leaf(s) => s.clone(),
        SentenceComb::Not(inner) => {
            let s = to_prenex(inner);
            HyperLTLSentence {
                prefix: s.prefix.into_iter().map(|(q, v)| (q.dual(), v)).collect(),
                matrix: s.matrix.not(),
            }
        }
        SentenceComb::And(a, b) => merge(to_prenex(a), to_prenex(b), QfFormula::and),
        SentenceComb::Or(a, b) => merge(to_prenex(a), to_prenex(b), QfFormula::or),
    }
}

fn merge(
    left: HyperLTLSentence,
    right: HyperLTLSentence,
    join: impl FnOnce(QfFormula, QfFormula) -> QfFormula,
) -> HyperLTLSentence {
    let mut used: BTreeSet<VarName> = left.prefix.iter().map(|(_, v)| v.clone()).collect();
    used.extend(right.prefix.iter().map(|(_, v)| v.clone()));
    let mut rename: BTreeMap<VarName, VarName> = BTreeMap::new();
    let left_names: BTreeSet<&VarName> = left.prefix.iter().map(|(_, v)| v).collect();
    let mut prefix = left.prefix.clone();
    for (q, v) in &right.prefix {
        let name = if left_names.contains(v) {
            let mut k = 2usize;
            let fresh = loop {
                let cand = format!("{v}{k}");
                if !used.contains(&cand) {
                    break cand;
                }
                k += 1;
            };
            used.insert(fresh.clone());
            rename.insert(v.clone(), fresh.clone());
            fresh
        } else {
            v.clone()
        };
        prefix.push((*q, name));
    }
    let right_matrix = if rename.is_empty() {
        right.matrix
    } else {
        right.matrix.rename_vars(&rename)
    };
    HyperLTLSentence {
        prefix,
        matrix: join(left.matrix, right_matrix),
    }
}

/// Left-fold a conjunction over `parts` and prenex it; `parts` must be
/// non-empty.
pub fn conjoin_sentences(parts: &[HyperLTLSentence]) -> HyperLTLSentence {
    assert!(!parts.is_empty(), "conjoin_sentences needs at least one part");
    let mut comb = SentenceComb::Leaf(parts[0].clone());
    for p in &parts[1..] {
        comb = comb.and(SentenceComb::Leaf(p.clone()));
    }
    to_prenex(&comb)
}

/// Quantifier-alternation class of a prenex sentence.
///
/// The level is the number of maximal blocks of identical quantifiers. A
/// sentence whose first block is existential is a Sigma sentence, one whose
/// first block is universal a Pi sentence; a quantifier-free sentence
/// (level 0) is both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternationClass {
    pub level: usize,
    pub sigma: bool,
    pub pi: bool,
}

impl std::fmt::Display for AlternationClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.sigma, self.pi) {
            (true, true) => write!(f, "Sigma_{0}/Pi_{0}", self.level),
            (true, false) => write!(f, "Sigma_{}", self.level),
            (false, true) => write!(f, "Pi_{}", self.level),
            (false, false) => unreachable!("classification always sets a flag"),
        }
    }
}

/// Classify a prenex sentence by quantifier alternation.
pub fn classify(sentence: &HyperLTLSentence) -> AlternationClass {
    let mut level = 0usize;
    let mut last: Option<Quantifier> = None;
    for (q, _) in &sentence.prefix {
        if last != Some(*q) {
            level += 1;
            last = Some(*q);
        }
    }
    match sentence.prefix.first() {
        None => AlternationClass {
            level: 0,
            sigma: true,
            pi: true,
        },
        Some((Quantifier::Exists, _)) => AlternationClass {
            level,
            sigma: true,
            pi: false,
        },
        Some((Quantifier::Forall, _)) => AlternationClass {
            level,
            sigma: false,
            pi: true,
        },
    }
}

/// Maximal nesting depth of temporal operators, counted on the desugared
/// core (`F`/`G` each count as one until; `X` counts one).
pub fn temporal_depth(matrix: &QfFormula) -> usize {
    fn depth(f: &QfFormula) -> usize {
        match f {
            QfFormula::True | QfFormula::False | QfFormula::Atom(..) => 0,
            QfFormula::Not(a) => depth(a),
            QfFormula::Or(a, b) => depth(a).max(depth(b)),
            QfFormula::Next(a) => 1 + depth(a),
            QfFormula::Until(a, b) => 1 + depth(a).max(depth(b)),
            QfFormula::And(..)
            | QfFormula::Implies(..)
            | QfFormula::Iff(..)
            | QfFormula::Eventually(..)
            | QfFormula::Globally(..) => unreachable!("measured on the desugared core"),
        }
    }
    depth(&matrix.desugar())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::ast::QfFormula as Q;
    use crate::logic::parser::{parse_hyperltl, parse_qf, parse_sentence_comb};

    #[test]
    fn prenex_renames_clashing_variables() {
        let comb = parse_sentence_comb("(exists p. a[p]) & (exists p. b[p])").unwrap();
        let s = to_prenex(&comb);
        assert_eq!(s.to_string(), "exists p. exists p2. a[p] & b[p2]");
    }

    #[test]
    fn prenex_keeps_disjoint_names() {
        let comb = parse_sentence_comb("(exists p. a[p]) | (forall q. b[q])").unwrap();
        let s = to_prenex(&comb);
        assert_eq!(s.to_string(), "exists p. forall q. a[p] | b[q]");
    }

    #[test]
    fn prenex_negation_dualizes() {
        let comb = parse_sentence_comb("!(forall p. exists q. a[p] & b[q])").unwrap();
        let s = to_prenex(&comb);
        assert_eq!(s.to_string(), "exists p. forall q. !(a[p] & b[q])");
    }

    #[test]
    fn prenex_rename_avoids_all_names() {
        // Right side reuses `p` while `p2` is also already taken.
        let comb = parse_sentence_comb("(exists p. exists p2. a[p] & a[p2]) & (exists p. b[p])")
            .unwrap();
        let s = to_prenex(&comb);
        assert_eq!(
            s.to_string(),
            "exists p. exists p2. exists p3. a[p] & a[p2] & b[p3]"
        );
    }

    #[test]
    fn classify_examples() {
        let c = classify(&parse_hyperltl("exists p. a[p]").unwrap());
        assert_eq!((c.level, c.sigma, c.pi), (1, true, false));
        assert_eq!(c.to_string(), "Sigma_1");

        let c = classify(&parse_hyperltl("forall p. forall q. exists r. a[r]").unwrap());
        assert_eq!((c.level, c.sigma, c.pi), (2, false, true));
        assert_eq!(c.to_string(), "Pi_2");

        let c = classify(&HyperLTLSentence::new(vec![], Q::True).unwrap());
        assert_eq!((c.level, c.sigma, c.pi), (0, true, true));
        assert_eq!(c.to_string(), "Sigma_0/Pi_0");
    }

    #[test]
    fn temporal_depth_examples() {
        assert_eq!(temporal_depth(&parse_qf("a[p]").unwrap()), 0);
        assert_eq!(temporal_depth(&parse_qf("X a[p]").unwrap()), 1);
        assert_eq!(temporal_depth(&parse_qf("F (o[p] & F o[q])").unwrap()), 2);
        assert_eq!(temporal_depth(&parse_qf("G (a[p] -> F b[p])").unwrap()), 2);
        assert_eq!(
            temporal_depth(&parse_qf("a[p] U (b[p] U c[p])").unwrap()),
            2
        );
    }
}
