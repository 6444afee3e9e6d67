//! Variable assignments shared by the trace and path engines.

use crate::error::{Error, Result};
use crate::logic::VarName;
use crate::models::kripke::LassoPath;
use crate::models::trace::LassoTrace;

/// Values a variable can be bound to: anything with a suffix operation.
pub trait Shiftable: Clone {
    /// The value advanced by `k` positions.
    fn suffix(&self, k: usize) -> Self;
}

impl Shiftable for LassoTrace {
    fn suffix(&self, k: usize) -> Self {
        LassoTrace::suffix(self, k)
    }
}

impl Shiftable for LassoPath {
    fn suffix(&self, k: usize) -> Self {
        LassoPath::suffix(self, k)
    }
}

/// A partial map from variables to values, together with a global shift.
///
/// Each binding remembers the shift at which it was created, so advancing the
/// assignment moves every bound value in lockstep while later bindings start
/// unshifted. The most recently bound variable is the last entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment<T> {
    entries: Vec<(VarName, T, usize)>,
    shift: usize,
}

/// Assignment of trace variables to lasso traces.
pub type TraceAssignment = Assignment<LassoTrace>;

/// Assignment of path variables to lasso paths.
pub type PathAssignment = Assignment<LassoPath>;

impl<T: Shiftable> Assignment<T> {
    /// The empty assignment at shift 0.
    pub fn new() -> Self {
        Assignment {
            entries: Vec::new(),
            shift: 0,
        }
    }

    /// This assignment extended with `var ↦ value`; rebinding a variable that
    /// is already present replaces its value (quantifier shadowing is ruled
    /// out syntactically, but sibling scopes may reuse names).
    pub fn bind(&self, var: &str, value: T) -> Self {
        let mut next = self.clone();
        next.entries.retain(|(v, _, _)| v != var);
        next.entries.push((var.to_string(), value, next.shift));
        next
    }

    /// The assignment advanced by `k` positions.
    pub fn advance(&self, k: usize) -> Self {
        let mut next = self.clone();
        next.shift += k;
        next
    }

    /// Global shift accumulated so far.
    pub fn shift(&self) -> usize {
        self.shift
    }

    /// The current value of `var`: the bound value advanced by the shift
    /// accumulated since it was bound.
    pub fn current(&self, var: &str) -> Result<T> {
        self.entries
            .iter()
            .rev()
            .find(|(v, _, _)| v == var)
            .map(|(_, value, birth)| value.suffix(self.shift - birth))
            .ok_or_else(|| Error::UnboundVariable(var.to_string()))
    }

    /// Current values of all bound variables, in binding order.
    pub fn current_all(&self) -> Vec<(VarName, T)> {
        self.entries
            .iter()
            .map(|(v, value, birth)| (v.clone(), value.suffix(self.shift - birth)))
            .collect()
    }

    /// The most recently bound variable and its current value, if any.
    pub fn most_recent(&self) -> Option<(&str, T)> {
        self.entries
            .last()
            .map(|(v, value, birth)| (v.as_str(), value.suffix(self.shift - birth)))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Raw `(variable, value, birth shift)` entries in binding order.
    pub fn entries(&self) -> &[(VarName, T, usize)] {
        &self.entries
    }
}

impl<T: Shiftable> Default for Assignment<T> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::trace::letter;

    fn tr(stem: &[&[&str]], lp: &[&[&str]]) -> LassoTrace {
        LassoTrace::new(
            stem.iter().map(|l| letter(l.iter().copied())).collect(),
            lp.iter().map(|l| letter(l.iter().copied())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn advance_shifts_old_bindings_only() {
        let a = tr(&[&["a"]], &[&["b"]]);
        let asg = TraceAssignment::new().bind("p", a.clone()).advance(1);
        // p was bound before the advance: its current value is a[1,∞].
        assert_eq!(asg.current("p").unwrap(), a.suffix(1));
        // A fresh binding after the advance starts at its own position 0.
        let asg2 = asg.bind("q", a.clone());
        assert_eq!(asg2.current("q").unwrap(), a);
        assert_eq!(asg2.current("p").unwrap(), a.suffix(1));
        // Advancing again moves both.
        let asg3 = asg2.advance(2);
        assert_eq!(asg3.current("q").unwrap(), a.suffix(2));
        assert_eq!(asg3.current("p").unwrap(), a.suffix(3));
    }

    #[test]
    fn most_recent_is_last_bound() {
        let a = tr(&[], &[&["a"]]);
        let b = tr(&[], &[&["b"]]);
        let asg = TraceAssignment::new().bind("p", a).bind("q", b.clone());
        let (name, value) = asg.most_recent().unwrap();
        assert_eq!(name, "q");
        assert_eq!(value, b);
        assert!(TraceAssignment::new().most_recent().is_none());
    }

    #[test]
    fn unbound_lookup_errors() {
        let asg = TraceAssignment::new();
        assert_eq!(
            asg.current("p").unwrap_err(),
            Error::UnboundVariable("p".into())
        );
    }
}
