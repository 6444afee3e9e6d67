//! Lexer and recursive-descent parsers for the formula languages.
//!
//! One token stream serves all languages. Precedence, loosest to tightest:
//! `<->`, `->`, `|`, `&`, `U`, unary (`!`, `X`, `F`, `G`), atoms. `U`, `->`
//! and `<->` associate to the right, `&` and `|` to the left. A quantifier
//! (`exists v.` / `forall v.`) scopes maximally to the right. Hyper atoms
//! are written `a[p]`, first-order atoms `a(x)` and `x <= y`.

use crate::error::{Error, Result};
use crate::logic::ast::{FOFormula, HyperCTLFormula, HyperLTLSentence, QfFormula, Quantifier};
use crate::logic::transform::SentenceComb;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    KwTrue,
    KwFalse,
    KwExists,
    KwForall,
    KwNext,
    KwUntil,
    KwEventually,
    KwGlobally,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    Le,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Dot,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::KwTrue => write!(f, "`true`"),
            Tok::KwFalse => write!(f, "`false`"),
            Tok::KwExists => write!(f, "`exists`"),
            Tok::KwForall => write!(f, "`forall`"),
            Tok::KwNext => write!(f, "`X`"),
            Tok::KwUntil => write!(f, "`U`"),
            Tok::KwEventually => write!(f, "`F`"),
            Tok::KwGlobally => write!(f, "`G`"),
            Tok::Bang => write!(f, "`!`"),
            Tok::Amp => write!(f, "`&`"),
            Tok::Pipe => write!(f, "`|`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::DArrow => write!(f, "`<->`"),
            Tok::Le => write!(f, "`<=`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Dot => write!(f, "`.`"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err_at(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

struct Cursor {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            i: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut cur = Cursor::new(src);
    while let Some(c) = cur.peek() {
        let (tl, tc) = (cur.line, cur.col);
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(c2) = cur.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    s.push(cur.bump().unwrap());
                } else {
                    break;
                }
            }
            let tok = match s.as_str() {
                "true" => Tok::KwTrue,
                "false" => Tok::KwFalse,
                "exists" => Tok::KwExists,
                "forall" => Tok::KwForall,
                "X" => Tok::KwNext,
                "U" => Tok::KwUntil,
                "F" => Tok::KwEventually,
                "G" => Tok::KwGlobally,
                _ => Tok::Ident(s),
            };
            out.push(Spanned { tok, line: tl, col: tc });
            continue;
        }
        cur.bump();
        let tok = match c {
            '!' => Tok::Bang,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '.' => Tok::Dot,
            '-' => match cur.peek() {
                Some('>') => {
                    cur.bump();
                    Tok::Arrow
                }
                _ => return Err(err_at(tl, tc, "expected `->`")),
            },
            '<' => match cur.peek() {
                Some('=') => {
                    cur.bump();
                    Tok::Le
                }
                Some('-') => {
                    cur.bump();
                    match cur.peek() {
                        Some('>') => {
                            cur.bump();
                            Tok::DArrow
                        }
                        _ => return Err(err_at(tl, tc, "expected `<->`")),
                    }
                }
                _ => return Err(err_at(tl, tc, "expected `<=` or `<->`")),
            },
            other => {
                return Err(err_at(tl, tc, format!("unexpected character `{other}`")));
            }
        };
        out.push(Spanned { tok, line: tl, col: tc });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col),
            None => self
                .toks
                .last()
                .map(|s| (s.line, s.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        let (l, c) = self.here();
        match self.bump() {
            Some(t) if &t == want => Ok(()),
            Some(t) => Err(err_at(l, c, format!("expected {what}, found {t}"))),
            None => Err(err_at(l, c, format!("expected {what}, found end of input"))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(t) => Err(err_at(l, c, format!("expected {what}, found {t}"))),
            None => Err(err_at(l, c, format!("expected {what}, found end of input"))),
        }
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            let (l, c) = self.here();
            Err(err_at(
                l,
                c,
                format!("expected end of input, found {}", self.toks[self.pos].tok),
            ))
        }
    }

    // --- hyper formulas (HyperCTL* superset; prenex forms derived later) ---

    fn hyper_formula(&mut self) -> Result<HyperCTLFormula> {
        self.hyper_iff()
    }

    fn hyper_iff(&mut self) -> Result<HyperCTLFormula> {
        let lhs = self.hyper_implies()?;
        if self.peek() == Some(&Tok::DArrow) {
            self.bump();
            let rhs = self.hyper_iff()?;
            Ok(lhs.iff(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn hyper_implies(&mut self) -> Result<HyperCTLFormula> {
        let lhs = self.hyper_or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let rhs = self.hyper_implies()?;
            Ok(lhs.implies(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn hyper_or(&mut self) -> Result<HyperCTLFormula> {
        let mut lhs = self.hyper_and()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.bump();
            let rhs = self.hyper_and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn hyper_and(&mut self) -> Result<HyperCTLFormula> {
        let mut lhs = self.hyper_until()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            let rhs = self.hyper_until()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn hyper_until(&mut self) -> Result<HyperCTLFormula> {
        let lhs = self.hyper_unary()?;
        if self.peek() == Some(&Tok::KwUntil) {
            self.bump();
            let rhs = self.hyper_until()?;
            Ok(lhs.until(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn hyper_unary(&mut self) -> Result<HyperCTLFormula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(self.hyper_unary()?.not())
            }
            Some(Tok::KwNext) => {
                self.bump();
                Ok(self.hyper_unary()?.next())
            }
            Some(Tok::KwEventually) => {
                self.bump();
                Ok(self.hyper_unary()?.eventually())
            }
            Some(Tok::KwGlobally) => {
                self.bump();
                Ok(self.hyper_unary()?.globally())
            }
            Some(Tok::KwExists) | Some(Tok::KwForall) => {
                let q = match self.bump() {
                    Some(Tok::KwExists) => Quantifier::Exists,
                    _ => Quantifier::Forall,
                };
                let var = self.expect_ident("a variable name")?;
                self.expect(&Tok::Dot, "`.` after the quantified variable")?;
                let body = self.hyper_formula()?;
                Ok(match q {
                    Quantifier::Exists => HyperCTLFormula::exists(var, body),
                    Quantifier::Forall => HyperCTLFormula::forall(var, body),
                })
            }
            _ => self.hyper_primary(),
        }
    }

    fn hyper_primary(&mut self) -> Result<HyperCTLFormula> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::KwTrue) => Ok(HyperCTLFormula::True),
            Some(Tok::KwFalse) => Ok(HyperCTLFormula::False),
            Some(Tok::LParen) => {
                let inner = self.hyper_formula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(prop)) => {
                self.expect(&Tok::LBracket, "`[` after a proposition name")?;
                let var = self.expect_ident("a trace variable")?;
                self.expect(&Tok::RBracket, "`]`")?;
                Ok(HyperCTLFormula::Atom(prop, var))
            }
            Some(t) => Err(err_at(l, c, format!("expected a formula, found {t}"))),
            None => Err(err_at(l, c, "expected a formula, found end of input")),
        }
    }

    // --- first-order formulas over words ---

    fn fo_formula(&mut self) -> Result<FOFormula> {
        self.fo_iff()
    }

    fn fo_iff(&mut self) -> Result<FOFormula> {
        let lhs = self.fo_implies()?;
        if self.peek() == Some(&Tok::DArrow) {
            self.bump();
            Ok(lhs.iff(self.fo_iff()?))
        } else {
            Ok(lhs)
        }
    }

    fn fo_implies(&mut self) -> Result<FOFormula> {
        let lhs = self.fo_or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            Ok(lhs.implies(self.fo_implies()?))
        } else {
            Ok(lhs)
        }
    }

    fn fo_or(&mut self) -> Result<FOFormula> {
        let mut lhs = self.fo_and()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.bump();
            lhs = lhs.or(self.fo_and()?);
        }
        Ok(lhs)
    }

    fn fo_and(&mut self) -> Result<FOFormula> {
        let mut lhs = self.fo_unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            lhs = lhs.and(self.fo_unary()?);
        }
        Ok(lhs)
    }

    fn fo_unary(&mut self) -> Result<FOFormula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(self.fo_unary()?.not())
            }
            Some(Tok::KwExists) | Some(Tok::KwForall) => {
                let q = match self.bump() {
                    Some(Tok::KwExists) => Quantifier::Exists,
                    _ => Quantifier::Forall,
                };
                let var = self.expect_ident("a variable name")?;
                self.expect(&Tok::Dot, "`.` after the quantified variable")?;
                let body = self.fo_formula()?;
                Ok(match q {
                    Quantifier::Exists => FOFormula::exists(var, body),
                    Quantifier::Forall => FOFormula::forall(var, body),
                })
            }
            _ => self.fo_primary(),
        }
    }

    fn fo_primary(&mut self) -> Result<FOFormula> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::KwTrue) => Ok(FOFormula::True),
            Some(Tok::KwFalse) => Ok(FOFormula::False),
            Some(Tok::LParen) => {
                let inner = self.fo_formula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => match self.peek() {
                Some(Tok::LParen) => {
                    self.bump();
                    let var = self.expect_ident("a position variable")?;
                    self.expect(&Tok::RParen, "`)`")?;
                    Ok(FOFormula::Prop(name, var))
                }
                Some(Tok::Le) => {
                    self.bump();
                    let rhs = self.expect_ident("a position variable")?;
                    Ok(FOFormula::Le(name, rhs))
                }
                _ => {
                    let (l2, c2) = self.here();
                    Err(err_at(
                        l2,
                        c2,
                        format!("expected `(` or `<=` after `{name}`"),
                    ))
                }
            },
            Some(t) => Err(err_at(l, c, format!("expected a formula, found {t}"))),
            None => Err(err_at(l, c, "expected a formula, found end of input")),
        }
    }
}

/// Parse a HyperCTL* formula: quantifiers may nest freely. The result is
/// validated to be closed and shadowing-free.
pub fn parse_hyperctl(src: &str) -> Result<HyperCTLFormula> {
    let mut p = Parser::new(src)?;
    let f = p.hyper_formula()?;
    p.expect_end()?;
    f.validate_closed()?;
    Ok(f)
}

/// Parse a prenex HyperLTL sentence: a (possibly empty) quantifier prefix
/// followed by a quantifier-free matrix.
pub fn parse_hyperltl(src: &str) -> Result<HyperLTLSentence> {
    let mut p = Parser::new(src)?;
    let ast = p.hyper_formula()?;
    p.expect_end()?;
    let mut prefix = Vec::new();
    let mut rest = &ast;
    loop {
        match rest {
            HyperCTLFormula::Exists(v, body) => {
                prefix.push((Quantifier::Exists, v.clone()));
                rest = body;
            }
            HyperCTLFormula::Forall(v, body) => {
                prefix.push((Quantifier::Forall, v.clone()));
                rest = body;
            }
            _ => break,
        }
    }
    let matrix = rest.to_qf().map_err(|e| match e {
        Error::NotQuantifierFree => Error::NotPrenex,
        other => other,
    })?;
    HyperLTLSentence::new(prefix, matrix)
}

/// Parse a quantifier-free hyper formula; free variables are allowed.
pub fn parse_qf(src: &str) -> Result<QfFormula> {
    let mut p = Parser::new(src)?;
    let ast = p.hyper_formula()?;
    p.expect_end()?;
    ast.to_qf()
}

/// Parse a boolean combination (`!`, `&`, `|`, `->`, `<->`) of prenex
/// sentences, the input form of prenexing. Temporal operators above a
/// quantifier are rejected.
pub fn parse_sentence_comb(src: &str) -> Result<SentenceComb> {
    let mut p = Parser::new(src)?;
    let ast = p.hyper_formula()?;
    p.expect_end()?;
    hyperctl_to_comb(&ast)
}

fn hyperctl_to_comb(f: &HyperCTLFormula) -> Result<SentenceComb> {
    fn leaf(f: &HyperCTLFormula) -> Result<SentenceComb> {
        let mut prefix = Vec::new();
        let mut rest = f;
        loop {
            match rest {
                HyperCTLFormula::Exists(v, body) => {
                    prefix.push((Quantifier::Exists, v.clone()));
                    rest = body;
                }
                HyperCTLFormula::Forall(v, body) => {
                    prefix.push((Quantifier::Forall, v.clone()));
                    rest = body;
                }
                _ => break,
            }
        }
        let matrix = rest.to_qf().map_err(|e| match e {
            Error::NotQuantifierFree => Error::NotPrenex,
            other => other,
        })?;
        Ok(SentenceComb::Leaf(HyperLTLSentence::new(prefix, matrix)?))
    }
    match f {
        HyperCTLFormula::Not(a) => Ok(SentenceComb::Not(Box::new(hyperctl_to_comb(a)?))),
        HyperCTLFormula::And(a, b) => Ok(SentenceComb::And(
            Box::new(hyperctl_to_comb(a)?),
            Box::new(hyperctl_to_comb(b)?),
        )),
        HyperCTLFormula::Or(a, b) => Ok(SentenceComb::Or(
            Box::new(hyperctl_to_comb(a)?),
            Box::new(hyperctl_to_comb(b)?),
        )),
        HyperCTLFormula::Implies(a, b) => Ok(SentenceComb::Or(
            Box::new(SentenceComb::Not(Box::new(hyperctl_to_comb(a)?))),
            Box::new(hyperctl_to_comb(b)?),
        )),
        HyperCTLFormula::Iff(a, b) => {
            let (ca, cb) = (hyperctl_to_comb(a)?, hyperctl_to_comb(b)?);
            let fwd = SentenceComb::Or(
                Box::new(SentenceComb::Not(Box::new(ca.clone()))),
                Box::new(cb.clone()),
            );
            let bwd = SentenceComb::Or(Box::new(SentenceComb::Not(Box::new(cb))), Box::new(ca));
            Ok(SentenceComb::And(Box::new(fwd), Box::new(bwd)))
        }
        _ => leaf(f),
    }
}

/// Parse a first-order formula over words; free variables are allowed
/// (evaluation takes a valuation).
pub fn parse_fo(src: &str) -> Result<FOFormula> {
    let mut p = Parser::new(src)?;
    let f = p.fo_formula()?;
    p.expect_end()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::ast::QfFormula as Q;

    #[test]
    fn precedence_or_binds_looser_than_and() {
        let f = parse_qf("a[p] | b[p] & c[p]").unwrap();
        let expect = Q::atom("a", "p").or(Q::atom("b", "p").and(Q::atom("c", "p")));
        assert_eq!(f, expect);
    }

    #[test]
    fn until_is_right_associative_and_tighter_than_and() {
        let f = parse_qf("a[p] U b[p] U c[p] & d[p]").unwrap();
        let expect = (Q::atom("a", "p").until(Q::atom("b", "p").until(Q::atom("c", "p"))))
            .and(Q::atom("d", "p"));
        assert_eq!(f, expect);
    }

    #[test]
    fn implication_is_right_associative() {
        let f = parse_qf("a[p] -> b[p] -> c[p]").unwrap();
        let expect = Q::atom("a", "p").implies(Q::atom("b", "p").implies(Q::atom("c", "p")));
        assert_eq!(f, expect);
    }

    #[test]
    fn unary_chain() {
        let f = parse_qf("!X G a[p]").unwrap();
        let expect = Q::atom("a", "p").globally().next().not();
        assert_eq!(f, expect);
    }

    #[test]
    fn prenex_sentence_is_split() {
        let s = parse_hyperltl("forall p. exists q. X (a[p] & !b[q])").unwrap();
        assert_eq!(
            s.prefix,
            vec![
                (Quantifier::Forall, "p".to_string()),
                (Quantifier::Exists, "q".to_string())
            ]
        );
        assert_eq!(
            s.matrix,
            Q::atom("a", "p").and(Q::atom("b", "q").not()).next()
        );
    }

    #[test]
    fn quantifier_scopes_maximally() {
        let s = parse_hyperltl("exists p. a[p] & b[p]").unwrap();
        assert_eq!(s.matrix, Q::atom("a", "p").and(Q::atom("b", "p")));
    }

    #[test]
    fn inner_quantifier_is_not_prenex() {
        let e = parse_hyperltl("exists p. a[p] & exists q. b[q]").unwrap_err();
        assert_eq!(e, Error::NotPrenex);
    }

    #[test]
    fn unbound_variable_rejected() {
        let e = parse_hyperltl("exists p. a[q]").unwrap_err();
        assert_eq!(e, Error::UnboundVariable("q".into()));
    }

    #[test]
    fn shadowing_rejected() {
        let e = parse_hyperctl("exists p. exists p. a[p]").unwrap_err();
        assert_eq!(e, Error::DuplicateVariable("p".into()));
    }

    #[test]
    fn sibling_rebinding_allowed_in_combinations() {
        assert!(parse_sentence_comb("(exists p. a[p]) & (exists p. b[p])").is_ok());
    }

    #[test]
    fn fo_atoms() {
        let f = parse_fo("exists x. forall y. x <= y & a(x)").unwrap();
        let expect = FOFormula::exists(
            "x",
            FOFormula::forall("y", FOFormula::le("x", "y").and(FOFormula::prop("a", "x"))),
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn parse_error_has_position() {
        match parse_qf("a[p] &\n& b[p]") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!((line, col), (2, 1));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
