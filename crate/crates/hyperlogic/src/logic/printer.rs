//! Concrete-syntax rendering with minimal parentheses.
//!
//! Printing inverts the parser exactly: `parse(print(f))` yields `f` for
//! every well-formed formula, and the output never contains a redundant
//! parenthesis under the documented precedence and associativity rules.

use crate::logic::ast::{FOFormula, HyperCTLFormula, HyperLTLSentence, QfFormula, Quantifier};
use std::fmt::{self, Display, Formatter, Write};

const PREC_QUANT: u8 = 0;
const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNTIL: u8 = 5;
const PREC_UNARY: u8 = 6;
const PREC_ATOM: u8 = 7;

/// One connective's rendering plan: its own precedence and the minimum
/// precedence each operand must be printed at.
struct BinPlan {
    prec: u8,
    left_min: u8,
    right_min: u8,
    op: &'static str,
}

fn bin_plan(op: &'static str) -> BinPlan {
    match op {
        "<->" => BinPlan {
            prec: PREC_IFF,
            left_min: PREC_IMPLIES,
            right_min: PREC_IFF,
            op,
        },
        "->" => BinPlan {
            prec: PREC_IMPLIES,
            left_min: PREC_OR,
            right_min: PREC_IMPLIES,
            op,
        },
        "|" => BinPlan {
            prec: PREC_OR,
            left_min: PREC_OR,
            right_min: PREC_AND,
            op,
        },
        "&" => BinPlan {
            prec: PREC_AND,
            left_min: PREC_AND,
            right_min: PREC_UNTIL,
            op,
        },
        "U" => BinPlan {
            prec: PREC_UNTIL,
            left_min: PREC_UNARY,
            right_min: PREC_UNTIL,
            op,
        },
        _ => unreachable!("unknown operator"),
    }
}

trait Render {
    fn render(&self, out: &mut String, min_prec: u8);
}

fn bin<L: Render, R: Render>(out: &mut String, min_prec: u8, op: &'static str, l: &L, r: &R) {
    let plan = bin_plan(op);
    let parens = plan.prec < min_prec;
    if parens {
        out.push('(');
    }
    l.render(out, plan.left_min);
    let _ = write!(out, " {} ", plan.op);
    r.render(out, plan.right_min);
    if parens {
        out.push(')');
    }
}

fn unary<C: Render>(out: &mut String, min_prec: u8, op: &str, c: &C) {
    let parens = PREC_UNARY < min_prec;
    if parens {
        out.push('(');
    }
    out.push_str(op);
    c.render(out, PREC_UNARY);
    if parens {
        out.push(')');
    }
}

fn quant<C: Render>(out: &mut String, min_prec: u8, q: Quantifier, var: &str, body: &C) {
    let parens = PREC_QUANT < min_prec;
    if parens {
        out.push('(');
    }
    let kw = match q {
        Quantifier::Exists => "exists",
        Quantifier::Forall => "forall",
    };
    let _ = write!(out, "{kw} {var}. ");
    body.render(out, PREC_QUANT);
    if parens {
        out.push(')');
    }
}

impl Render for QfFormula {
    fn render(&self, out: &mut String, min_prec: u8) {
        match self {
            QfFormula::True => out.push_str("true"),
            QfFormula::False => out.push_str("false"),
            QfFormula::Atom(p, v) => {
                let _ = write!(out, "{p}[{v}]");
            }
            QfFormula::Not(a) => unary(out, min_prec, "!", a.as_ref()),
            QfFormula::Next(a) => unary(out, min_prec, "X ", a.as_ref()),
            QfFormula::Eventually(a) => unary(out, min_prec, "F ", a.as_ref()),
            QfFormula::Globally(a) => unary(out, min_prec, "G ", a.as_ref()),
            QfFormula::And(a, b) => bin(out, min_prec, "&", a.as_ref(), b.as_ref()),
            QfFormula::Or(a, b) => bin(out, min_prec, "|", a.as_ref(), b.as_ref()),
            QfFormula::Implies(a, b) => bin(out, min_prec, "->", a.as_ref(), b.as_ref()),
            QfFormula::Iff(a, b) => bin(out, min_prec, "<->", a.as_ref(), b.as_ref()),
            QfFormula::Until(a, b) => bin(out, min_prec, "U", a.as_ref(), b.as_ref()),
        }
    }
}

impl Render for HyperCTLFormula {
    fn render(&self, out: &mut String, min_prec: u8) {
        match self {
            HyperCTLFormula::True => out.push_str("true"),
            HyperCTLFormula::False => out.push_str("false"),
            HyperCTLFormula::Atom(p, v) => {
                let _ = write!(out, "{p}[{v}]");
            }
            HyperCTLFormula::Not(a) => unary(out, min_prec, "!", a.as_ref()),
            HyperCTLFormula::Next(a) => unary(out, min_prec, "X ", a.as_ref()),
            HyperCTLFormula::Eventually(a) => unary(out, min_prec, "F ", a.as_ref()),
            HyperCTLFormula::Globally(a) => unary(out, min_prec, "G ", a.as_ref()),
            HyperCTLFormula::And(a, b) => bin(out, min_prec, "&", a.as_ref(), b.as_ref()),
            HyperCTLFormula::Or(a, b) => bin(out, min_prec, "|", a.as_ref(), b.as_ref()),
            HyperCTLFormula::Implies(a, b) => bin(out, min_prec, "->", a.as_ref(), b.as_ref()),
            HyperCTLFormula::Iff(a, b) => bin(out, min_prec, "<->", a.as_ref(), b.as_ref()),
            HyperCTLFormula::Until(a, b) => bin(out, min_prec, "U", a.as_ref(), b.as_ref()),
            HyperCTLFormula::Exists(v, a) => {
                quant(out, min_prec, Quantifier::Exists, v, a.as_ref())
            }
            HyperCTLFormula::Forall(v, a) => {
                quant(out, min_prec, Quantifier::Forall, v, a.as_ref())
            }
        }
    }
}

impl Render for FOFormula {
    fn render(&self, out: &mut String, min_prec: u8) {
        match self {
            FOFormula::True => out.push_str("true"),
            FOFormula::False => out.push_str("false"),
            FOFormula::Prop(p, v) => {
                let _ = write!(out, "{p}({v})");
            }
            FOFormula::Le(a, b) => {
                let parens = PREC_ATOM < min_prec;
                debug_assert!(!parens);
                let _ = write!(out, "{a} <= {b}");
            }
            FOFormula::Not(a) => unary(out, min_prec, "!", a.as_ref()),
            FOFormula::And(a, b) => bin(out, min_prec, "&", a.as_ref(), b.as_ref()),
            FOFormula::Or(a, b) => bin(out, min_prec, "|", a.as_ref(), b.as_ref()),
            FOFormula::Implies(a, b) => bin(out, min_prec, "->", a.as_ref(), b.as_ref()),
            FOFormula::Iff(a, b) => bin(out, min_prec, "<->", a.as_ref(), b.as_ref()),
            FOFormula::Exists(v, a) => quant(out, min_prec, Quantifier::Exists, v, a.as_ref()),
            FOFormula::Forall(v, a) => quant(out, min_prec, Quantifier::Forall, v, a.as_ref()),
        }
    }
}

impl Display for QfFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, PREC_QUANT);
        f.write_str(&s)
    }
}

impl Display for HyperCTLFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, PREC_QUANT);
        f.write_str(&s)
    }
}

impl Display for FOFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, PREC_QUANT);
        f.write_str(&s)
    }
}

impl Display for HyperLTLSentence {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (q, v) in &self.prefix {
            let kw = match q {
                Quantifier::Exists => "exists",
                Quantifier::Forall => "forall",
            };
            let _ = write!(s, "{kw} {v}. ");
        }
        self.matrix.render(&mut s, PREC_QUANT);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use crate::logic::parser::{parse_fo, parse_hyperctl, parse_hyperltl, parse_qf};

    fn roundtrip_qf(src: &str) -> String {
        let f = parse_qf(src).unwrap();
        let printed = f.to_string();
        assert_eq!(parse_qf(&printed).unwrap(), f, "reparse of `{printed}`");
        printed
    }

    #[test]
    fn minimal_parens() {
        assert_eq!(roundtrip_qf("a[p] | (b[p] & c[p])"), "a[p] | b[p] & c[p]");
        assert_eq!(roundtrip_qf("(a[p] | b[p]) & c[p]"), "(a[p] | b[p]) & c[p]");
        assert_eq!(roundtrip_qf("a[p] U (b[p] U c[p])"), "a[p] U b[p] U c[p]");
        assert_eq!(roundtrip_qf("(a[p] U b[p]) U c[p]"), "(a[p] U b[p]) U c[p]");
        assert_eq!(roundtrip_qf("!(a[p] & b[p])"), "!(a[p] & b[p])");
        assert_eq!(roundtrip_qf("X (a[p] U b[p])"), "X (a[p] U b[p])");
        assert_eq!(roundtrip_qf("X X a[p]"), "X X a[p]");
        assert_eq!(
            roundtrip_qf("a[p] -> (b[p] <-> c[p])"),
            "a[p] -> (b[p] <-> c[p])"
        );
    }

    #[test]
    fn sentence_roundtrip() {
        let src = "forall p. exists q. G (a[p] -> F b[q])";
        let s = parse_hyperltl(src).unwrap();
        assert_eq!(s.to_string(), src);
    }

    #[test]
    fn hyperctl_quantifier_parenthesized_under_connectives() {
        let f = parse_hyperctl("(exists p. a[p]) & (exists q. b[q])").unwrap();
        assert_eq!(f.to_string(), "(exists p. a[p]) & (exists q. b[q])");
        let g = parse_hyperctl("exists p. a[p] & (exists q. b[q])").unwrap();
        assert_eq!(g.to_string(), "exists p. a[p] & (exists q. b[q])");
    }

    #[test]
    fn fo_roundtrip() {
        let src = "exists x. forall y. x <= y & a(x) -> b(y)";
        let f = parse_fo(src).unwrap();
        assert_eq!(parse_fo(&f.to_string()).unwrap(), f);
    }
}
