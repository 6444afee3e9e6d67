//! Abstract syntax for the three formula languages.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Atomic proposition name.
pub type PropName = String;
/// Trace, path, or first-order variable name.
pub type VarName = String;

/// Trace/path quantifier kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    /// The dual quantifier (used when negating a prenex sentence).
    pub fn dual(self) -> Self {
        match self {
            Quantifier::Exists => Quantifier::Forall,
            Quantifier::Forall => Quantifier::Exists,
        }
    }
}

/// Quantifier-free hyper formula: atoms are propositions indexed by a trace
/// variable (`a[p]` in concrete syntax).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QfFormula {
    True,
    False,
    /// Proposition `.0` on the trace bound to variable `.1`.
    Atom(PropName, VarName),
    Not(Box<QfFormula>),
    And(Box<QfFormula>, Box<QfFormula>),
    Or(Box<QfFormula>, Box<QfFormula>),
    Implies(Box<QfFormula>, Box<QfFormula>),
    Iff(Box<QfFormula>, Box<QfFormula>),
    Next(Box<QfFormula>),
    Until(Box<QfFormula>, Box<QfFormula>),
    Eventually(Box<QfFormula>),
    Globally(Box<QfFormula>),
}

impl QfFormula {
    pub fn atom(prop: impl Into<PropName>, var: impl Into<VarName>) -> Self {
        QfFormula::Atom(prop.into(), var.into())
    }
    pub fn not(self) -> Self {
        QfFormula::Not(Box::new(self))
    }
    pub fn and(self, rhs: Self) -> Self {
        QfFormula::And(Box::new(self), Box::new(rhs))
    }
    pub fn or(self, rhs: Self) -> Self {
        QfFormula::Or(Box::new(self), Box::new(rhs))
    }
    pub fn implies(self, rhs: Self) -> Self {
        QfFormula::Implies(Box::new(self), Box::new(rhs))
    }
    pub fn iff(self, rhs: Self) -> Self {
        QfFormula::Iff(Box::new(self), Box::new(rhs))
    }
    pub fn next(self) -> Self {
        QfFormula::Next(Box::new(self))
    }
    pub fn until(self, rhs: Self) -> Self {
        QfFormula::Until(Box::new(self), Box::new(rhs))
    }
    pub fn eventually(self) -> Self {
        QfFormula::Eventually(Box::new(self))
    }
    pub fn globally(self) -> Self {
        QfFormula::Globally(Box::new(self))
    }

    /// Left-associated conjunction of `parts`; `true` when empty.
    pub fn conj(parts: impl IntoIterator<Item = QfFormula>) -> Self {
        let mut it = parts.into_iter();
        match it.next() {
            None => QfFormula::True,
            Some(first) => it.fold(first, QfFormula::and),
        }
    }

    /// Left-associated disjunction of `parts`; `false` when empty.
    pub fn disj(parts: impl IntoIterator<Item = QfFormula>) -> Self {
        let mut it = parts.into_iter();
        match it.next() {
            None => QfFormula::False,
            Some(first) => it.fold(first, QfFormula::or),
        }
    }

    /// Variables occurring in atoms.
    pub fn free_vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            QfFormula::True | QfFormula::False => {}
            QfFormula::Atom(_, v) => {
                out.insert(v.clone());
            }
            QfFormula::Not(a)
            | QfFormula::Next(a)
            | QfFormula::Eventually(a)
            | QfFormula::Globally(a) => a.collect_vars(out),
            QfFormula::And(a, b)
            | QfFormula::Or(a, b)
            | QfFormula::Implies(a, b)
            | QfFormula::Iff(a, b)
            | QfFormula::Until(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Propositions occurring in atoms.
    pub fn props(&self) -> BTreeSet<PropName> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<PropName>) {
        match self {
            QfFormula::True | QfFormula::False => {}
            QfFormula::Atom(p, _) => {
                out.insert(p.clone());
            }
            QfFormula::Not(a)
            | QfFormula::Next(a)
            | QfFormula::Eventually(a)
            | QfFormula::Globally(a) => a.collect_props(out),
            QfFormula::And(a, b)
            | QfFormula::Or(a, b)
            | QfFormula::Implies(a, b)
            | QfFormula::Iff(a, b)
            | QfFormula::Until(a, b) => {
                a.collect_props(out);
                b.collect_props(out);
            }
        }
    }

    /// Rewrite into the core fragment `true/false, atoms, !, |, X, U`.
    ///
    /// `a & b` becomes `!(!a | !b)`, `a -> b` becomes `!a | b`, `a <-> b`
    /// becomes the conjunction of both implications, `F a` becomes
    /// `true U a`, and `G a` becomes `!(true U !a)`.
    pub fn desugar(&self) -> QfFormula {
        match self {
            QfFormula::True => QfFormula::True,
            QfFormula::False => QfFormula::False,
            QfFormula::Atom(p, v) => QfFormula::Atom(p.clone(), v.clone()),
            QfFormula::Not(a) => a.desugar().not(),
            QfFormula::Or(a, b) => a.desugar().or(b.desugar()),
            QfFormula::And(a, b) => a.desugar().not().or(b.desugar().not()).not(),
            QfFormula::Implies(a, b) => a.desugar().not().or(b.desugar()),
            QfFormula::Iff(a, b) => {
                let (da, db) = (a.desugar(), b.desugar());
                let fwd = da.clone().not().or(db.clone());
                let bwd = db.not().or(da);
                fwd.not().or(bwd.not()).not()
            }
            QfFormula::Next(a) => a.desugar().next(),
            QfFormula::Until(a, b) => a.desugar().until(b.desugar()),
            QfFormula::Eventually(a) => QfFormula::True.until(a.desugar()),
            QfFormula::Globally(a) => QfFormula::True.until(a.desugar().not()).not(),
        }
    }

    /// True when the formula is already in the core fragment.
    pub fn is_core(&self) -> bool {
        match self {
            QfFormula::True | QfFormula::False | QfFormula::Atom(..) => true,
            QfFormula::Not(a) | QfFormula::Next(a) => a.is_core(),
            QfFormula::Or(a, b) | QfFormula::Until(a, b) => a.is_core() && b.is_core(),
            QfFormula::And(..)
            | QfFormula::Implies(..)
            | QfFormula::Iff(..)
            | QfFormula::Eventually(..)
            | QfFormula::Globally(..) => false,
        }
    }

    /// Rename variables according to `map` (names absent from `map` are kept).
    pub fn rename_vars(&self, map: &std::collections::BTreeMap<VarName, VarName>) -> QfFormula {
        match self {
            QfFormula::True => QfFormula::True,
            QfFormula::False => QfFormula::False,
            QfFormula::Atom(p, v) => {
                let v2 = map.get(v).cloned().unwrap_or_else(|| v.clone());
                QfFormula::Atom(p.clone(), v2)
            }
            QfFormula::Not(a) => a.rename_vars(map).not(),
            QfFormula::And(a, b) => a.rename_vars(map).and(b.rename_vars(map)),
            QfFormula::Or(a, b) => a.rename_vars(map).or(b.rename_vars(map)),
            QfFormula::Implies(a, b) => a.rename_vars(map).implies(b.rename_vars(map)),
            QfFormula::Iff(a, b) => a.rename_vars(map).iff(b.rename_vars(map)),
            QfFormula::Next(a) => a.rename_vars(map).next(),
            QfFormula::Until(a, b) => a.rename_vars(map).until(b.rename_vars(map)),
            QfFormula::Eventually(a) => a.rename_vars(map).eventually(),
            QfFormula::Globally(a) => a.rename_vars(map).globally(),
        }
    }

    /// Total number of connectives (each unary or binary operator counts 1).
    pub fn size(&self) -> usize {
        match self {
            QfFormula::True | QfFormula::False | QfFormula::Atom(..) => 0,
            QfFormula::Not(a)
            | QfFormula::Next(a)
            | QfFormula::Eventually(a)
            | QfFormula::Globally(a) => 1 + a.size(),
            QfFormula::And(a, b)
            | QfFormula::Or(a, b)
            | QfFormula::Implies(a, b)
            | QfFormula::Iff(a, b)
            | QfFormula::Until(a, b) => 1 + a.size() + b.size(),
        }
    }
}

/// A HyperLTL sentence: a quantifier prefix over trace variables followed by
/// a quantifier-free matrix. Sentences are closed: every variable of the
/// matrix is bound by the prefix, and prefix variables are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperLTLSentence {
    pub prefix: Vec<(Quantifier, VarName)>,
    pub matrix: QfFormula,
}

impl HyperLTLSentence {
    /// Build a sentence, validating distinct prefix names and closedness.
    pub fn new(prefix: Vec<(Quantifier, VarName)>, matrix: QfFormula) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (_, v) in &prefix {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        for v in matrix.free_vars() {
            if !seen.contains(&v) {
                return Err(Error::UnboundVariable(v));
            }
        }
        Ok(HyperLTLSentence { prefix, matrix })
    }

    /// Propositions occurring in the matrix.
    pub fn props(&self) -> BTreeSet<PropName> {
        self.matrix.props()
    }

    /// The sentence as a freely-nested HyperCTL* formula.
    pub fn to_hyperctl(&self) -> HyperCTLFormula {
        let mut out = HyperCTLFormula::from_qf(&self.matrix);
        for (q, v) in self.prefix.iter().rev() {
            out = match q {
                Quantifier::Exists => HyperCTLFormula::Exists(v.clone(), Box::new(out)),
                Quantifier::Forall => HyperCTLFormula::Forall(v.clone(), Box::new(out)),
            };
        }
        out
    }
}

/// HyperCTL* formula: path quantifiers nest freely among the connectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HyperCTLFormula {
    True,
    False,
    Atom(PropName, VarName),
    Not(Box<HyperCTLFormula>),
    And(Box<HyperCTLFormula>, Box<HyperCTLFormula>),
    Or(Box<HyperCTLFormula>, Box<HyperCTLFormula>),
    Implies(Box<HyperCTLFormula>, Box<HyperCTLFormula>),
    Iff(Box<HyperCTLFormula>, Box<HyperCTLFormula>),
    Next(Box<HyperCTLFormula>),
    Until(Box<HyperCTLFormula>, Box<HyperCTLFormula>),
    Eventually(Box<HyperCTLFormula>),
    Globally(Box<HyperCTLFormula>),
    Exists(VarName, Box<HyperCTLFormula>),
    Forall(VarName, Box<HyperCTLFormula>),
}

impl HyperCTLFormula {
    pub fn atom(prop: impl Into<PropName>, var: impl Into<VarName>) -> Self {
        HyperCTLFormula::Atom(prop.into(), var.into())
    }
    pub fn not(self) -> Self {
        HyperCTLFormula::Not(Box::new(self))
    }
    pub fn and(self, rhs: Self) -> Self {
        HyperCTLFormula::And(Box::new(self), Box::new(rhs))
    }
    pub fn or(self, rhs: Self) -> Self {
        HyperCTLFormula::Or(Box::new(self), Box::new(rhs))
    }
    pub fn implies(self, rhs: Self) -> Self {
        HyperCTLFormula::Implies(Box::new(self), Box::new(rhs))
    }
    pub fn iff(self, rhs: Self) -> Self {
        HyperCTLFormula::Iff(Box::new(self), Box::new(rhs))
    }
    pub fn next(self) -> Self {
        HyperCTLFormula::Next(Box::new(self))
    }
    pub fn until(self, rhs: Self) -> Self {
        HyperCTLFormula::Until(Box::new(self), Box::new(rhs))
    }
    pub fn eventually(self) -> Self {
        HyperCTLFormula::Eventually(Box::new(self))
    }
    pub fn globally(self) -> Self {
        HyperCTLFormula::Globally(Box::new(self))
    }
    pub fn exists(var: impl Into<VarName>, body: Self) -> Self {
        HyperCTLFormula::Exists(var.into(), Box::new(body))
    }
    pub fn forall(var: impl Into<VarName>, body: Self) -> Self {
        HyperCTLFormula::Forall(var.into(), Box::new(body))
    }

    /// Left-associated conjunction of `parts`; `true` when empty.
    pub fn conj(parts: impl IntoIterator<Item = HyperCTLFormula>) -> Self {
        let mut it = parts.into_iter();
        match it.next() {
            None => HyperCTLFormula::True,
            Some(first) => it.fold(first, HyperCTLFormula::and),
        }
    }

    /// Embed a quantifier-free formula.
    pub fn from_qf(f: &QfFormula) -> Self {
        match f {
            QfFormula::True => HyperCTLFormula::True,
            QfFormula::False => HyperCTLFormula::False,
            QfFormula::Atom(p, v) => HyperCTLFormula::Atom(p.clone(), v.clone()),
            QfFormula::Not(a) => Self::from_qf(a).not(),
            QfFormula::And(a, b) => Self::from_qf(a).and(Self::from_qf(b)),
            QfFormula::Or(a, b) => Self::from_qf(a).or(Self::from_qf(b)),
            QfFormula::Implies(a, b) => Self::from_qf(a).implies(Self::from_qf(b)),
            QfFormula::Iff(a, b) => Self::from_qf(a).iff(Self::from_qf(b)),
            QfFormula::Next(a) => Self::from_qf(a).next(),
            QfFormula::Until(a, b) => Self::from_qf(a).until(Self::from_qf(b)),
            QfFormula::Eventually(a) => Self::from_qf(a).eventually(),
            QfFormula::Globally(a) => Self::from_qf(a).globally(),
        }
    }

    /// Convert back to a quantifier-free formula; fails on any quantifier.
    pub fn to_qf(&self) -> Result<QfFormula> {
        match self {
            HyperCTLFormula::True => Ok(QfFormula::True),
            HyperCTLFormula::False => Ok(QfFormula::False),
            HyperCTLFormula::Atom(p, v) => Ok(QfFormula::Atom(p.clone(), v.clone())),
            HyperCTLFormula::Not(a) => Ok(a.to_qf()?.not()),
            HyperCTLFormula::And(a, b) => Ok(a.to_qf()?.and(b.to_qf()?)),
            HyperCTLFormula::Or(a, b) => Ok(a.to_qf()?.or(b.to_qf()?)),
            HyperCTLFormula::Implies(a, b) => Ok(a.to_qf()?.implies(b.to_qf()?)),
            HyperCTLFormula::Iff(a, b) => Ok(a.to_qf()?.iff(b.to_qf()?)),
            HyperCTLFormula::Next(a) => Ok(a.to_qf()?.next()),
            HyperCTLFormula::Until(a, b) => Ok(a.to_qf()?.until(b.to_qf()?)),
            HyperCTLFormula::Eventually(a) => Ok(a.to_qf()?.eventually()),
            HyperCTLFormula::Globally(a) => Ok(a.to_qf()?.globally()),
            HyperCTLFormula::Exists(..) | HyperCTLFormula::Forall(..) => {
                Err(Error::NotQuantifierFree)
            }
        }
    }

    /// Rewrite into the core fragment (quantifiers kept, sugar removed).
    pub fn desugar(&self) -> HyperCTLFormula {
        match self {
            HyperCTLFormula::True => HyperCTLFormula::True,
            HyperCTLFormula::False => HyperCTLFormula::False,
            HyperCTLFormula::Atom(p, v) => HyperCTLFormula::Atom(p.clone(), v.clone()),
            HyperCTLFormula::Not(a) => a.desugar().not(),
            HyperCTLFormula::Or(a, b) => a.desugar().or(b.desugar()),
            HyperCTLFormula::And(a, b) => a.desugar().not().or(b.desugar().not()).not(),
            HyperCTLFormula::Implies(a, b) => a.desugar().not().or(b.desugar()),
            HyperCTLFormula::Iff(a, b) => {
                let (da, db) = (a.desugar(), b.desugar());
                let fwd = da.clone().not().or(db.clone());
                let bwd = db.not().or(da);
                fwd.not().or(bwd.not()).not()
            }
            HyperCTLFormula::Next(a) => a.desugar().next(),
            HyperCTLFormula::Until(a, b) => a.desugar().until(b.desugar()),
            HyperCTLFormula::Eventually(a) => HyperCTLFormula::True.until(a.desugar()),
            HyperCTLFormula::Globally(a) => {
                HyperCTLFormula::True.until(a.desugar().not()).not()
            }
            HyperCTLFormula::Exists(v, a) => HyperCTLFormula::Exists(v.clone(), Box::new(a.desugar())),
            HyperCTLFormula::Forall(v, a) => HyperCTLFormula::Forall(v.clone(), Box::new(a.desugar())),
        }
    }

    /// Validate that the formula is closed and never shadows a bound variable.
    pub fn validate_closed(&self) -> Result<()> {
        fn walk(f: &HyperCTLFormula, scope: &mut Vec<VarName>) -> Result<()> {
            match f {
                HyperCTLFormula::True | HyperCTLFormula::False => Ok(()),
                HyperCTLFormula::Atom(_, v) => {
                    if scope.iter().any(|s| s == v) {
                        Ok(())
                    } else {
                        Err(Error::UnboundVariable(v.clone()))
                    }
                }
                HyperCTLFormula::Not(a)
                | HyperCTLFormula::Next(a)
                | HyperCTLFormula::Eventually(a)
                | HyperCTLFormula::Globally(a) => walk(a, scope),
                HyperCTLFormula::And(a, b)
                | HyperCTLFormula::Or(a, b)
                | HyperCTLFormula::Implies(a, b)
                | HyperCTLFormula::Iff(a, b)
                | HyperCTLFormula::Until(a, b) => {
                    walk(a, scope)?;
                    walk(b, scope)
                }
                HyperCTLFormula::Exists(v, a) | HyperCTLFormula::Forall(v, a) => {
                    if scope.iter().any(|s| s == v) {
                        return Err(Error::DuplicateVariable(v.clone()));
                    }
                    scope.push(v.clone());
                    let r = walk(a, scope);
                    scope.pop();
                    r
                }
            }
        }
        walk(self, &mut Vec::new())
    }

    /// Propositions occurring in atoms.
    pub fn props(&self) -> BTreeSet<PropName> {
        let mut out = BTreeSet::new();
        fn walk(f: &HyperCTLFormula, out: &mut BTreeSet<PropName>) {
            match f {
                HyperCTLFormula::True | HyperCTLFormula::False => {}
                HyperCTLFormula::Atom(p, _) => {
                    out.insert(p.clone());
                }
                HyperCTLFormula::Not(a)
                | HyperCTLFormula::Next(a)
                | HyperCTLFormula::Eventually(a)
                | HyperCTLFormula::Globally(a) => walk(a, out),
                HyperCTLFormula::And(a, b)
                | HyperCTLFormula::Or(a, b)
                | HyperCTLFormula::Implies(a, b)
                | HyperCTLFormula::Iff(a, b)
                | HyperCTLFormula::Until(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                HyperCTLFormula::Exists(_, a) | HyperCTLFormula::Forall(_, a) => walk(a, out),
            }
        }
        walk(self, &mut out);
        out
    }

    /// Total number of connectives and quantifiers.
    pub fn size(&self) -> usize {
        match self {
            HyperCTLFormula::True | HyperCTLFormula::False | HyperCTLFormula::Atom(..) => 0,
            HyperCTLFormula::Not(a)
            | HyperCTLFormula::Next(a)
            | HyperCTLFormula::Eventually(a)
            | HyperCTLFormula::Globally(a)
            | HyperCTLFormula::Exists(_, a)
            | HyperCTLFormula::Forall(_, a) => 1 + a.size(),
            HyperCTLFormula::And(a, b)
            | HyperCTLFormula::Or(a, b)
            | HyperCTLFormula::Implies(a, b)
            | HyperCTLFormula::Iff(a, b)
            | HyperCTLFormula::Until(a, b) => 1 + a.size() + b.size(),
        }
    }
}

/// First-order formula over finite words with `<=` on positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FOFormula {
    True,
    False,
    /// Proposition `.0` holds at the position bound to variable `.1` (`a(x)`).
    Prop(PropName, VarName),
    /// Position order `x <= y`.
    Le(VarName, VarName),
    Not(Box<FOFormula>),
    And(Box<FOFormula>, Box<FOFormula>),
    Or(Box<FOFormula>, Box<FOFormula>),
    Implies(Box<FOFormula>, Box<FOFormula>),
    Iff(Box<FOFormula>, Box<FOFormula>),
    Exists(VarName, Box<FOFormula>),
    Forall(VarName, Box<FOFormula>),
}

impl FOFormula {
    pub fn prop(p: impl Into<PropName>, v: impl Into<VarName>) -> Self {
        FOFormula::Prop(p.into(), v.into())
    }
    pub fn le(a: impl Into<VarName>, b: impl Into<VarName>) -> Self {
        FOFormula::Le(a.into(), b.into())
    }
    pub fn not(self) -> Self {
        FOFormula::Not(Box::new(self))
    }
    pub fn and(self, rhs: Self) -> Self {
        FOFormula::And(Box::new(self), Box::new(rhs))
    }
    pub fn or(self, rhs: Self) -> Self {
        FOFormula::Or(Box::new(self), Box::new(rhs))
    }
    pub fn implies(self, rhs: Self) -> Self {
        FOFormula::Implies(Box::new(self), Box::new(rhs))
    }
    pub fn iff(self, rhs: Self) -> Self {
        FOFormula::Iff(Box::new(self), Box::new(rhs))
    }
    pub fn exists(v: impl Into<VarName>, body: Self) -> Self {
        FOFormula::Exists(v.into(), Box::new(body))
    }
    pub fn forall(v: impl Into<VarName>, body: Self) -> Self {
        FOFormula::Forall(v.into(), Box::new(body))
    }

    /// Free variables of the formula.
    pub fn free_vars(&self) -> BTreeSet<VarName> {
        fn walk(f: &FOFormula, bound: &mut Vec<VarName>, out: &mut BTreeSet<VarName>) {
            match f {
                FOFormula::True | FOFormula::False => {}
                FOFormula::Prop(_, v) => {
                    if !bound.iter().any(|b| b == v) {
                        out.insert(v.clone());
                    }
                }
                FOFormula::Le(a, b) => {
                    for v in [a, b] {
                        if !bound.iter().any(|x| x == v) {
                            out.insert(v.clone());
                        }
                    }
                }
                FOFormula::Not(a) => walk(a, bound, out),
                FOFormula::And(a, b)
                | FOFormula::Or(a, b)
                | FOFormula::Implies(a, b)
                | FOFormula::Iff(a, b) => {
                    walk(a, bound, out);
                    walk(b, bound, out);
                }
                FOFormula::Exists(v, a) | FOFormula::Forall(v, a) => {
                    bound.push(v.clone());
                    walk(a, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Propositions occurring in atoms.
    pub fn props(&self) -> BTreeSet<PropName> {
        let mut out = BTreeSet::new();
        fn walk(f: &FOFormula, out: &mut BTreeSet<PropName>) {
            match f {
                FOFormula::True | FOFormula::False | FOFormula::Le(..) => {}
                FOFormula::Prop(p, _) => {
                    out.insert(p.clone());
                }
                FOFormula::Not(a) => walk(a, out),
                FOFormula::And(a, b)
                | FOFormula::Or(a, b)
                | FOFormula::Implies(a, b)
                | FOFormula::Iff(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                FOFormula::Exists(_, a) | FOFormula::Forall(_, a) => walk(a, out),
            }
        }
        walk(self, &mut out);
        out
    }

    /// Quantifier nesting depth (used to size brute-force evaluation).
    pub fn quantifier_depth(&self) -> usize {
        match self {
            FOFormula::True | FOFormula::False | FOFormula::Prop(..) | FOFormula::Le(..) => 0,
            FOFormula::Not(a) => a.quantifier_depth(),
            FOFormula::And(a, b)
            | FOFormula::Or(a, b)
            | FOFormula::Implies(a, b)
            | FOFormula::Iff(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            FOFormula::Exists(_, a) | FOFormula::Forall(_, a) => 1 + a.quantifier_depth(),
        }
    }
}
