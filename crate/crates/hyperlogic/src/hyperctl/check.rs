//! Bounded-path HyperCTL* checking by direct recursive semantics.
//!
//! Path quantifiers range over the ultimately periodic paths of the
//! structure that fit the given stem/loop bounds, starting at the current
//! vertex `rcnt(Π)` (the first vertex of the most recently bound path, or
//! the initial vertex for the empty assignment). This bounded path domain is
//! an under-approximation of the full semantics in both quantifier
//! directions; callers label results accordingly.

use crate::error::{Error, Result};
use crate::logic::HyperCTLFormula;
use crate::models::{lasso_paths, KripkeStructure, LassoPath, PathAssignment};

/// Bounds on the quantified path representations: stems of at most
/// `max_stem` vertices, loops of at most `max_loop`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathBounds {
    pub max_stem: usize,
    pub max_loop: usize,
}

impl PathBounds {
    /// Both bounds must be at least 1.
    pub fn new(max_stem: usize, max_loop: usize) -> Result<Self> {
        if max_stem == 0 || max_loop == 0 {
            return Err(Error::invalid("path bounds must be at least 1"));
        }
        Ok(PathBounds { max_stem, max_loop })
    }
}

/// The vertex new quantifiers start from: head of the most recently bound
/// path, or the initial vertex when nothing is bound yet.
pub(crate) fn rcnt(k: &KripkeStructure, asg: &PathAssignment) -> usize {
    asg.most_recent()
        .map(|(_, path)| path.head())
        .unwrap_or_else(|| k.initial())
}

/// Alignment window of the current assignment: `s` is the maximum stem
/// length, `p` the lcm of the loop lengths ((0, 1) for the empty
/// assignment). The tuple of path suffixes is periodic beyond `s` with
/// period `p`, so `s + p` positions decide every until.
pub(crate) fn path_window<'a, I>(paths: I) -> (usize, usize)
where
    I: IntoIterator<Item = &'a LassoPath>,
{
    let mut s = 0usize;
    let mut p = 1usize;
    for path in paths {
        s = s.max(path.stem().len());
        let l = path.loop_part().len();
        p = p / gcd(p, l) * l;
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

/// Evaluate a closed HyperCTL* formula on `k` under the bounded-path
/// semantics.
pub fn check_bounded(
    phi: &HyperCTLFormula,
    k: &KripkeStructure,
    bounds: &PathBounds,
) -> Result<bool> {
    check_bounded_with_slack(phi, k, bounds, 0)
}

/// As [`check_bounded`], with `slack` extra until positions beyond the
/// `s + p` window — the result must not depend on it, which the tests
/// exercise.
pub(crate) fn check_bounded_with_slack(
    phi: &HyperCTLFormula,
    k: &KripkeStructure,
    bounds: &PathBounds,
    slack: usize,
) -> Result<bool> {
    phi.validate_closed()?;
    let core = phi.desugar();
    eval(&core, k, bounds, &PathAssignment::new(), slack)
}

fn eval(
    f: &HyperCTLFormula,
    k: &KripkeStructure,
    bounds: &PathBounds,
    asg: &PathAssignment,
    slack: usize,
) -> Result<bool> {
    match f {
        HyperCTLFormula::True => Ok(true),
        HyperCTLFormula::False => Ok(false),
        HyperCTLFormula::Atom(a, x) => {
            let path = asg.current(x)?;
            Ok(k.label(path.head()).contains(a))
        }
        HyperCTLFormula::Not(g) => Ok(!eval(g, k, bounds, asg, slack)?),
        HyperCTLFormula::Or(g, h) => {
            Ok(eval(g, k, bounds, asg, slack)? || eval(h, k, bounds, asg, slack)?)
        }
        HyperCTLFormula::Next(g) => eval(g, k, bounds, &asg.advance(1), slack),
        HyperCTLFormula::Until(g, h) => {
            let current = asg.current_all();
            let (s, p) = path_window(current.iter().map(|(_, path)| path));
            for j in 0..s + p + slack {
                if eval(h, k, bounds, &asg.advance(j), slack)? {
                    return Ok(true);
                }
                if !eval(g, k, bounds, &asg.advance(j), slack)? {
                    return Ok(false);
                }
            }
            Ok(false)
        }
        HyperCTLFormula::Exists(v, g) => {
            let start = rcnt(k, asg);
            for path in lasso_paths(k, start, bounds.max_stem, bounds.max_loop) {
                if eval(g, k, bounds, &asg.bind(v, path), slack)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        HyperCTLFormula::Forall(v, g) => {
            let start = rcnt(k, asg);
            for path in lasso_paths(k, start, bounds.max_stem, bounds.max_loop) {
                if !eval(g, k, bounds, &asg.bind(v, path), slack)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => unreachable!("formula was desugared"),
    }
}
