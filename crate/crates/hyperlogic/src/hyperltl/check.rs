//! Exact HyperLTL satisfaction over finite trace sets.

use crate::error::{Error, Result};
use crate::hyperltl::expansion::build_expansion;
use crate::logic::{HyperLTLSentence, QfFormula, Quantifier, VarName};
use crate::models::{TraceAssignment, TraceSet};

/// Does `t` satisfy `sentence`? Quantifiers range over the traces of `t`;
/// the matrix is decided by its expansion table. The set must be non-empty
/// and its alphabet must cover the sentence's propositions.
pub fn check(sentence: &HyperLTLSentence, t: &TraceSet) -> Result<bool> {
    if t.is_empty() {
        return Err(Error::EmptyTraceSet);
    }
    for prop in sentence.props() {
        if !t.alphabet().contains(&prop) {
            return Err(Error::AlphabetMismatch(prop));
        }
    }
    let core = sentence.matrix.desugar();
    quantify(&sentence.prefix, &core, t, &TraceAssignment::new())
}

fn quantify(
    prefix: &[(Quantifier, VarName)],
    matrix: &QfFormula,
    t: &TraceSet,
    asg: &TraceAssignment,
) -> Result<bool> {
    let Some(((q, var), rest)) = prefix.split_first() else {
        return Ok(build_expansion(matrix, asg)?.value_at(0));
    };
    for (_, trace) in t.iter() {
        let sub = quantify(rest, matrix, t, &asg.bind(var, trace.clone()))?;
        match q {
            Quantifier::Exists if sub => return Ok(true),
            Quantifier::Forall if !sub => return Ok(false),
            _ => {}
        }
    }
    Ok(matches!(q, Quantifier::Forall))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_hyperltl;
    use crate::models::{letter, LassoTrace};
    use std::collections::BTreeSet;

    fn tr(stem: &[&[&str]], lp: &[&[&str]]) -> LassoTrace {
        LassoTrace::new(
            stem.iter().map(|l| letter(l.iter().copied())).collect(),
            lp.iter().map(|l| letter(l.iter().copied())).collect(),
        )
        .unwrap()
    }

    fn set(alphabet: &[&str], entries: Vec<(&str, LassoTrace)>) -> TraceSet {
        let alphabet: BTreeSet<String> = alphabet.iter().map(|s| s.to_string()).collect();
        TraceSet::new(
            alphabet,
            entries.into_iter().map(|(n, t)| (n.to_string(), t)),
        )
        .unwrap()
    }

    #[test]
    fn exists_atom() {
        let t = set(&["a"], vec![("t", tr(&[], &[&["a"]]))]);
        let phi = parse_hyperltl("exists p. a[p]").unwrap();
        assert!(check(&phi, &t).unwrap());
    }

    #[test]
    fn exactly_one_x() {
        // "Exactly one position where x holds."
        let phi = parse_hyperltl("forall p. !x[p] U (x[p] & X G !x[p])").unwrap();
        let good = set(&["x"], vec![("t", tr(&[&[], &["x"]], &[&[]]))]);
        assert!(check(&phi, &good).unwrap());
        let bad = set(&["x"], vec![("t", tr(&[], &[&["x"]]))]);
        assert!(!check(&phi, &bad).unwrap());
    }

    #[test]
    fn forall_exists_interplay() {
        // Every trace has a companion with the same first letter and a
        // flipped second letter somewhere in the set.
        let phi = parse_hyperltl(
            "forall p. exists q. (a[p] <-> a[q]) & (X a[p] <-> X !a[q])",
        )
        .unwrap();
        let t = set(
            &["a"],
            vec![
                ("t1", tr(&[&["a"], &["a"]], &[&[]])),
                ("t2", tr(&[&["a"], &[]], &[&[]])),
                ("t3", tr(&[&[], &["a"]], &[&[]])),
                ("t4", tr(&[&[], &[]], &[&[]])),
            ],
        );
        assert!(check(&phi, &t).unwrap());
        let partial = set(
            &["a"],
            vec![
                ("t1", tr(&[&["a"], &["a"]], &[&[]])),
                ("t4", tr(&[&[], &[]], &[&[]])),
            ],
        );
        assert!(!check(&phi, &partial).unwrap());
    }

    #[test]
    fn empty_set_rejected() {
        let t = TraceSet::new(["a".to_string()].into(), vec![]).unwrap();
        let phi = parse_hyperltl("exists p. a[p]").unwrap();
        assert_eq!(check(&phi, &t).unwrap_err(), Error::EmptyTraceSet);
    }

    #[test]
    fn alphabet_must_cover_props() {
        let t = set(&["a"], vec![("t", tr(&[], &[&["a"]]))]);
        let phi = parse_hyperltl("exists p. b[p]").unwrap();
        assert_eq!(
            check(&phi, &t).unwrap_err(),
            Error::AlphabetMismatch("b".into())
        );
    }

    #[test]
    fn quantifier_duality() {
        let traces = [
            tr(&[&["a"]], &[&["b"], &[]]),
            tr(&[], &[&["a"], &["b"]]),
            tr(&[&["b"]], &[&["a"]]),
        ];
        let bodies = ["a[p] U b[p]", "G F a[p]", "X b[p]", "F (a[p] & X b[p])"];
        for body in bodies {
            let all = parse_hyperltl(&format!("forall p. {body}")).unwrap();
            let none = parse_hyperltl(&format!("exists p. !({body})")).unwrap();
            for k in 1..=traces.len() {
                let t = set(
                    &["a", "b"],
                    traces[..k]
                        .iter()
                        .enumerate()
                        .map(|(i, t)| (["t1", "t2", "t3"][i], t.clone()))
                        .collect(),
                );
                assert_eq!(
                    check(&all, &t).unwrap(),
                    !check(&none, &t).unwrap(),
                    "duality failed for {body} on {k} traces"
                );
            }
        }
    }
}
