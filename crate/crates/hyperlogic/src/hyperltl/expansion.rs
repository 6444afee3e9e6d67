//! Expansion tables: exact finite evaluation of quantifier-free hyper
//! formulas over a tuple of lasso traces.
//!
//! For an assignment with alignment `(s, p)` the pointwise product of the
//! bound traces is ultimately periodic: position `s + p` behaves exactly like
//! position `s`. A table therefore fixes the truth value of every subformula
//! at the `s + p` distinct positions, with the successor of the last position
//! wrapping back to `s`.

use crate::error::Result;
use crate::logic::{PropName, QfFormula, VarName};
use crate::models::{align, LassoTrace, TraceAssignment};
use std::collections::BTreeMap;

/// One node of the flattened core formula; children precede parents.
enum Node {
    True,
    False,
    Atom(PropName, VarName),
    Not(usize),
    Or(usize, usize),
    Next(usize),
    Until(usize, usize),
}

/// Truth values of every subformula of a core formula at every position of
/// the aligned stem-plus-loop window.
#[derive(Debug)]
pub struct ExpansionTable {
    s: usize,
    p: usize,
    root: usize,
    values: Vec<Vec<bool>>,
}

fn flatten(f: &QfFormula, nodes: &mut Vec<Node>) -> usize {
    let node = match f {
        QfFormula::True => Node::True,
        QfFormula::False => Node::False,
        QfFormula::Atom(a, x) => Node::Atom(a.clone(), x.clone()),
        QfFormula::Not(g) => Node::Not(flatten(g, nodes)),
        QfFormula::Or(g, h) => {
            let gi = flatten(g, nodes);
            let hi = flatten(h, nodes);
            Node::Or(gi, hi)
        }
        QfFormula::Next(g) => Node::Next(flatten(g, nodes)),
        QfFormula::Until(g, h) => {
            let gi = flatten(g, nodes);
            let hi = flatten(h, nodes);
            Node::Until(gi, hi)
        }
        _ => unreachable!("formula was desugared"),
    };
    nodes.push(node);
    nodes.len() - 1
}

/// Build the expansion table of `psi` under `asg`. Sugared operators are
/// desugared first; every free variable must be bound.
pub fn build_expansion(psi: &QfFormula, asg: &TraceAssignment) -> Result<ExpansionTable> {
    let core = psi.desugar();
    let mut traces: BTreeMap<VarName, LassoTrace> = BTreeMap::new();
    for var in core.free_vars() {
        traces.insert(var.clone(), asg.current(&var)?);
    }
    let (s, p) = align(traces.values());
    let n = s + p;
    let succ = |j: usize| if j + 1 < n { j + 1 } else { s };

    let mut nodes = Vec::new();
    let root = flatten(&core, &mut nodes);
    let mut values: Vec<Vec<bool>> = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let row: Vec<bool> = match node {
            Node::True => vec![true; n],
            Node::False => vec![false; n],
            Node::Atom(a, x) => {
                let trace = &traces[x];
                (0..n).map(|j| trace.letter_at(j).contains(a)).collect()
            }
            Node::Not(c) => (0..n).map(|j| !values[*c][j]).collect(),
            Node::Or(c, d) => (0..n).map(|j| values[*c][j] || values[*d][j]).collect(),
            Node::Next(c) => (0..n).map(|j| values[*c][succ(j)]).collect(),
            Node::Until(c, d) => (0..n)
                .map(|j| {
                    // Walk successors; `n + 1` steps visit every position
                    // reachable from `j`, so an unresolved walk means the
                    // obligation is postponed forever.
                    let mut pos = j;
                    for _ in 0..=n {
                        if values[*d][pos] {
                            return true;
                        }
                        if !values[*c][pos] {
                            return false;
                        }
                        pos = succ(pos);
                    }
                    false
                })
                .collect(),
        };
        values.push(row);
    }
    Ok(ExpansionTable { s, p, root, values })
}

impl ExpansionTable {
    /// Stem length of the alignment window.
    pub fn stem_len(&self) -> usize {
        self.s
    }

    /// Period of the alignment window.
    pub fn period(&self) -> usize {
        self.p
    }

    /// Truth value of the whole formula at position `j` (any natural;
    /// positions beyond the window wrap into the loop).
    pub fn value_at(&self, j: usize) -> bool {
        let j = if j < self.s + self.p {
            j
        } else {
            self.s + (j - self.s) % self.p
        };
        self.values[self.root][j]
    }
}

/// Evaluate a quantifier-free formula under an assignment at position 0.
pub fn eval_qf(psi: &QfFormula, asg: &TraceAssignment) -> Result<bool> {
    Ok(build_expansion(psi, asg)?.value_at(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::logic::parse_qf;
    use crate::models::letter;

    fn tr(stem: &[&[&str]], lp: &[&[&str]]) -> LassoTrace {
        LassoTrace::new(
            stem.iter().map(|l| letter(l.iter().copied())).collect(),
            lp.iter().map(|l| letter(l.iter().copied())).collect(),
        )
        .unwrap()
    }

    fn bind(entries: &[(&str, LassoTrace)]) -> TraceAssignment {
        let mut asg = TraceAssignment::new();
        for (v, t) in entries {
            asg = asg.bind(v, t.clone());
        }
        asg
    }

    #[test]
    fn atom_row() {
        let asg = bind(&[("p", tr(&[&["a"]], &[&[]]))]);
        let table = build_expansion(&parse_qf("a[p]").unwrap(), &asg).unwrap();
        assert!(table.value_at(0));
        assert!(!table.value_at(1));
        assert!(!table.value_at(7));
        assert_eq!((table.stem_len(), table.period()), (1, 1));
    }

    #[test]
    fn next_wraps_into_loop() {
        // Trace a (b c)^ω: X at the last window position wraps to position 1.
        let asg = bind(&[("p", tr(&[&["a"]], &[&["b"], &["c"]]))]);
        let table = build_expansion(&parse_qf("X b[p]").unwrap(), &asg).unwrap();
        assert!(table.value_at(0)); // next letter is b
        assert!(!table.value_at(1)); // next letter is c
        assert!(table.value_at(2)); // wraps: next is position 1 = b
    }

    #[test]
    fn until_needs_witness_in_loop() {
        // a^ω: F b is false even though a holds forever.
        let asg = bind(&[("p", tr(&[], &[&["a"]]))]);
        assert!(!eval_qf(&parse_qf("a[p] U b[p]").unwrap(), &asg).unwrap());
        assert!(eval_qf(&parse_qf("G a[p]").unwrap(), &asg).unwrap());
        // a a b^ω: a U b true at 0, 1, 2.
        let asg = bind(&[("p", tr(&[&["a"], &["a"]], &[&["b"]]))]);
        let table = build_expansion(&parse_qf("a[p] U b[p]").unwrap(), &asg).unwrap();
        assert!(table.value_at(0) && table.value_at(1) && table.value_at(2));
    }

    #[test]
    fn two_trace_alignment() {
        // p = ({a}{})^ω, q = ({b}{b}{})^ω: a holds at even positions, b at
        // positions not ≡ 2 (mod 3). F (a[p] & !b[q]) needs an even
        // position ≡ 2 (mod 3); position 2 works.
        let p = tr(&[], &[&["a"], &[]]);
        let q = tr(&[], &[&["b"], &["b"], &[]]);
        let asg = bind(&[("p", p), ("q", q)]);
        let table = build_expansion(&parse_qf("F (a[p] & !b[q])").unwrap(), &asg).unwrap();
        assert_eq!((table.stem_len(), table.period()), (0, 6));
        // Position 2 has a on p and the empty letter on q.
        assert!(table.value_at(0));
        // Three consecutive b's never happen on ({b}{b}{})^ω.
        let never =
            build_expansion(&parse_qf("F (b[q] & X b[q] & X X b[q])").unwrap(), &asg).unwrap();
        assert!(!never.value_at(0));
    }

    #[test]
    fn unbound_variable_rejected() {
        let asg = TraceAssignment::new();
        assert_eq!(
            build_expansion(&parse_qf("a[p]").unwrap(), &asg).unwrap_err(),
            Error::UnboundVariable("p".into())
        );
    }

    #[test]
    fn closed_formula_on_empty_assignment() {
        let asg = TraceAssignment::new();
        assert!(eval_qf(&parse_qf("true U true").unwrap(), &asg).unwrap());
        assert!(!eval_qf(&parse_qf("X false").unwrap(), &asg).unwrap());
    }

    /// Independent oracle: direct recursive evaluation on concrete positions
    /// of the infinite traces, with until witnesses searched within the
    /// window length (sufficient from any start by ultimate periodicity).
    fn naive(f: &QfFormula, traces: &BTreeMap<VarName, LassoTrace>, j: usize, window: usize) -> bool {
        match f {
            QfFormula::True => true,
            QfFormula::False => false,
            QfFormula::Atom(a, x) => traces[x].letter_at(j).contains(a),
            QfFormula::Not(g) => !naive(g, traces, j, window),
            QfFormula::Or(g, h) => {
                naive(g, traces, j, window) || naive(h, traces, j, window)
            }
            QfFormula::Next(g) => naive(g, traces, j + 1, window),
            QfFormula::Until(g, h) => (0..=window).any(|n| {
                naive(h, traces, j + n, window)
                    && (0..n).all(|m| naive(g, traces, j + m, window))
            }),
            _ => unreachable!(),
        }
    }

    #[test]
    fn matches_naive_unrolling_on_battery() {
        let traces = [
            tr(&[&["a"]], &[&["b"], &[]]),
            tr(&[], &[&["a"], &["a", "b"], &[]]),
            tr(&[&[], &["b"]], &[&["a"]]),
        ];
        let formulas = [
            "a[p] U b[q]",
            "G F a[p]",
            "F G b[q]",
            "X (a[p] U (b[q] & X a[p]))",
            "(a[p] U b[p]) U (a[q] U b[q])",
            "G (a[p] -> F b[q])",
            "!(F a[p] <-> F b[q])",
        ];
        for ti in &traces {
            for tj in &traces {
                let asg = bind(&[("p", ti.clone()), ("q", tj.clone())]);
                let map: BTreeMap<VarName, LassoTrace> =
                    [("p".to_string(), ti.clone()), ("q".to_string(), tj.clone())].into();
                let (s, p) = align(map.values());
                for src in &formulas {
                    let f = parse_qf(src).unwrap().desugar();
                    let table = build_expansion(&f, &asg).unwrap();
                    for j in 0..s + 2 * p {
                        assert_eq!(
                            table.value_at(j),
                            naive(&f, &map, j, s + p),
                            "formula {src} at {j}"
                        );
                    }
                }
            }
        }
    }

    /// The five consistency conditions, checked across independently built
    /// tables for the subformulas.
    #[test]
    fn consistency_conditions_hold() {
        let p = tr(&[&["a"]], &[&["b"], &[]]);
        let q = tr(&[], &[&["a"], &["b"]]);
        let asg = bind(&[("p", p.clone()), ("q", q.clone())]);
        let psi1 = parse_qf("a[p] | b[q]").unwrap().desugar();
        let psi2 = parse_qf("X a[q]").unwrap().desugar();
        let until = QfFormula::until(psi1.clone(), psi2.clone());
        let (s, pp) = align([&p, &q]);
        let n = s + pp;
        let succ = |j: usize| if j + 1 < n { j + 1 } else { s };
        let t_until = build_expansion(&until, &asg).unwrap();
        let t1 = build_expansion(&psi1, &asg).unwrap();
        let t2 = build_expansion(&psi2, &asg).unwrap();
        let t_not = build_expansion(&QfFormula::not(psi1.clone()), &asg).unwrap();
        let t_or = build_expansion(&QfFormula::or(psi1.clone(), psi2.clone()), &asg).unwrap();
        let t_next = build_expansion(&QfFormula::next(psi1.clone()), &asg).unwrap();
        for j in 0..n {
            // Atom condition on a sample atom.
            let t_atom = build_expansion(&QfFormula::atom("a", "p"), &asg).unwrap();
            assert_eq!(t_atom.value_at(j), p.letter_at(j).contains("a"));
            // Negation, disjunction, next.
            assert_eq!(t_not.value_at(j), !t1.value_at(j));
            assert_eq!(t_or.value_at(j), t1.value_at(j) || t2.value_at(j));
            assert_eq!(t_next.value_at(j), t1.value_at(succ(j)));
            // Until: local unfolding…
            assert_eq!(
                t_until.value_at(j),
                t2.value_at(j) || (t1.value_at(j) && t_until.value_at(succ(j)))
            );
            // …and no infinite postponement: a true until has a witness.
            if t_until.value_at(j) {
                let mut pos = j;
                let mut witnessed = false;
                for _ in 0..=n {
                    if t2.value_at(pos) {
                        witnessed = true;
                        break;
                    }
                    pos = succ(pos);
                }
                assert!(witnessed);
            }
        }
    }
}
