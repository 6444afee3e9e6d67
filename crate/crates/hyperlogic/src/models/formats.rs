//! Text formats for trace sets, Kripke structures, and words.
//!
//! All formats are line-based; blank lines and `#` comments are skipped.
//! Trace set:
//! ```text
//! props: a b dollar
//! trace t1 = {a}{a b} ( {} {b} )
//! ```
//! Kripke structure:
//! ```text
//! vertex v0 {a}
//! init v0
//! edge v0 v0
//! ```
//! Word:
//! ```text
//! word = {a}{}{a b}
//! ```

use crate::error::{Error, Result};
use crate::models::kripke::KripkeStructure;
use crate::models::trace::{LassoTrace, Letter, TraceSet};
use crate::models::word::Word;
use std::collections::BTreeSet;
use std::fmt::Write as _;

const KEYWORDS: &[&str] = &["true", "false", "exists", "forall", "X", "U", "F", "G"];

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&s)
}

fn check_ident(s: &str, line: usize, what: &str) -> Result<()> {
    if is_ident(s) {
        Ok(())
    } else {
        Err(err(line, format!("invalid {what} name `{s}`")))
    }
}

/// Meaningful lines with their 1-based numbers.
fn lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Parse a sequence of brace groups like `{a}{a b}{}` into letters.
fn parse_letters(s: &str, line: usize) -> Result<Vec<Letter>> {
    let mut letters = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('{') else {
            return Err(err(line, format!("expected `{{` before `{rest}`")));
        };
        let Some(end) = stripped.find('}') else {
            return Err(err(line, "missing `}`"));
        };
        let mut letter = Letter::new();
        for prop in stripped[..end].split_whitespace() {
            check_ident(prop, line, "proposition")?;
            letter.insert(prop.to_string());
        }
        letters.push(letter);
        rest = stripped[end + 1..].trim_start();
    }
    Ok(letters)
}

fn letter_string(l: &Letter) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for p in l {
        if !first {
            out.push(' ');
        }
        out.push_str(p);
        first = false;
    }
    out.push('}');
    out
}

/// Parse a trace-set file.
pub fn parse_trace_set(src: &str) -> Result<TraceSet> {
    let mut alphabet: Option<BTreeSet<String>> = None;
    let mut entries: Vec<(String, LassoTrace)> = Vec::new();
    for (line_no, line) in lines(src) {
        if let Some(rest) = line.strip_prefix("props:") {
            if alphabet.is_some() {
                return Err(err(line_no, "duplicate `props:` header"));
            }
            let mut set = BTreeSet::new();
            for prop in rest.split_whitespace() {
                check_ident(prop, line_no, "proposition")?;
                set.insert(prop.to_string());
            }
            alphabet = Some(set);
        } else if let Some(rest) = line.strip_prefix("trace") {
            if alphabet.is_none() {
                return Err(err(line_no, "`props:` header must precede traces"));
            }
            let rest = rest.trim_start();
            let Some(eq) = rest.find('=') else {
                return Err(err(line_no, "expected `=` in trace declaration"));
            };
            let name = rest[..eq].trim();
            check_ident(name, line_no, "trace")?;
            let body = rest[eq + 1..].trim();
            let Some(open) = body.find('(') else {
                return Err(err(line_no, "expected `(` introducing the loop"));
            };
            let Some(close) = body.rfind(')') else {
                return Err(err(line_no, "expected `)` closing the loop"));
            };
            if close < open || !body[close + 1..].trim().is_empty() {
                return Err(err(line_no, "malformed loop parentheses"));
            }
            let stem = parse_letters(&body[..open], line_no)?;
            let looped = parse_letters(&body[open + 1..close], line_no)?;
            if looped.is_empty() {
                return Err(err(line_no, "loop must contain at least one letter"));
            }
            entries.push((name.to_string(), LassoTrace::new(stem, looped)?));
        } else {
            return Err(err(line_no, format!("unrecognized line `{line}`")));
        }
    }
    let alphabet = alphabet.ok_or_else(|| err(1, "missing `props:` header"))?;
    TraceSet::new(alphabet, entries)
}

/// Render a trace-set file.
pub fn print_trace_set(t: &TraceSet) -> String {
    let mut out = String::from("props:");
    for p in t.alphabet() {
        let _ = write!(out, " {p}");
    }
    out.push('\n');
    for (name, trace) in t.iter() {
        let _ = write!(out, "trace {name} = ");
        for l in trace.stem() {
            out.push_str(&letter_string(l));
        }
        if !trace.stem().is_empty() {
            out.push(' ');
        }
        out.push('(');
        for l in trace.loop_part() {
            out.push(' ');
            out.push_str(&letter_string(l));
        }
        out.push_str(" )\n");
    }
    out
}

/// Parse a Kripke-structure file.
pub fn parse_kripke(src: &str) -> Result<KripkeStructure> {
    let mut vertices: Vec<(String, Letter)> = Vec::new();
    let mut initial: Option<String> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for (line_no, line) in lines(src) {
        if let Some(rest) = line.strip_prefix("vertex") {
            let rest = rest.trim_start();
            let Some(brace) = rest.find('{') else {
                return Err(err(line_no, "expected `{props}` after vertex name"));
            };
            let name = rest[..brace].trim();
            check_ident(name, line_no, "vertex")?;
            let letters = parse_letters(&rest[brace..], line_no)?;
            if letters.len() != 1 {
                return Err(err(line_no, "vertex takes exactly one `{props}` group"));
            }
            vertices.push((name.to_string(), letters.into_iter().next().unwrap()));
        } else if let Some(rest) = line.strip_prefix("init") {
            if initial.is_some() {
                return Err(Error::MultipleInitial);
            }
            let name = rest.trim();
            check_ident(name, line_no, "vertex")?;
            initial = Some(name.to_string());
        } else if let Some(rest) = line.strip_prefix("edge") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(err(line_no, "edge takes exactly two vertex names"));
            }
            check_ident(parts[0], line_no, "vertex")?;
            check_ident(parts[1], line_no, "vertex")?;
            edges.push((parts[0].to_string(), parts[1].to_string()));
        } else {
            return Err(err(line_no, format!("unrecognized line `{line}`")));
        }
    }
    let initial = initial.ok_or(Error::MissingInitial)?;
    KripkeStructure::new(vertices, &initial, &edges)
}

/// Render a Kripke-structure file.
pub fn print_kripke(k: &KripkeStructure) -> String {
    let mut out = String::new();
    for i in 0..k.vertex_count() {
        let _ = writeln!(
            out,
            "vertex {} {}",
            k.vertex_name(i),
            letter_string(k.label(i))
        );
    }
    let _ = writeln!(out, "init {}", k.vertex_name(k.initial()));
    for i in 0..k.vertex_count() {
        for &j in k.successors(i) {
            let _ = writeln!(out, "edge {} {}", k.vertex_name(i), k.vertex_name(j));
        }
    }
    out
}

/// Parse a word file.
pub fn parse_word(src: &str) -> Result<Word> {
    let mut word: Option<Word> = None;
    for (line_no, line) in lines(src) {
        let Some(rest) = line.strip_prefix("word") else {
            return Err(err(line_no, format!("unrecognized line `{line}`")));
        };
        if word.is_some() {
            return Err(err(line_no, "duplicate `word =` line"));
        }
        let rest = rest.trim_start();
        let Some(body) = rest.strip_prefix('=') else {
            return Err(err(line_no, "expected `=` after `word`"));
        };
        word = Some(Word::new(parse_letters(body, line_no)?)?);
    }
    word.ok_or_else(|| err(1, "missing `word =` line"))
}

/// Render a word file.
pub fn print_word(w: &Word) -> String {
    let mut out = String::from("word =");
    for l in w.letters() {
        out.push(' ');
        out.push_str(&letter_string(l));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::trace::letter;

    #[test]
    fn trace_set_roundtrip() {
        let src = "\
# a comment
props: a b dollar

trace t1 = {a}{a b} ( {} {b} )
trace t2 = ( {dollar} )
";
        let set = parse_trace_set(src).unwrap();
        assert_eq!(set.len(), 2);
        let t1 = set.get("t1").unwrap();
        assert_eq!(t1.stem(), &[letter(["a"]), letter(["a", "b"])]);
        assert_eq!(t1.loop_part(), &[letter::<_, &str>([]), letter(["b"])]);
        let t2 = set.get("t2").unwrap();
        assert!(t2.stem().is_empty());
        let printed = print_trace_set(&set);
        assert_eq!(parse_trace_set(&printed).unwrap(), set);
        assert!(printed.contains("trace t1 = {a}{a b} ( {} {b} )"));
        assert!(printed.contains("trace t2 = ( {dollar} )"));
    }

    #[test]
    fn trace_set_errors() {
        assert!(matches!(
            parse_trace_set("trace t = ( {a} )"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_trace_set("props: a\ntrace t = {a} ( )"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_trace_set("props: a\ntrace t = ( {b} )").unwrap_err(),
            Error::LetterOutsideAlphabet("b".into())
        );
        assert!(matches!(
            parse_trace_set("props: a\ntrace exists = ( {a} )"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn kripke_roundtrip() {
        let src = "\
vertex v0 {a}
vertex v1 {}
init v0
edge v0 v1
edge v1 v0
edge v1 v1
";
        let k = parse_kripke(src).unwrap();
        assert_eq!(k.vertex_count(), 2);
        assert_eq!(k.vertex_name(k.initial()), "v0");
        assert!(k.has_edge(1, 1));
        let printed = print_kripke(&k);
        assert_eq!(parse_kripke(&printed).unwrap(), k);
    }

    #[test]
    fn kripke_errors() {
        assert_eq!(
            parse_kripke("vertex v {a}\nedge v v").unwrap_err(),
            Error::MissingInitial
        );
        assert_eq!(
            parse_kripke("vertex v {}\ninit v\ninit v\nedge v v").unwrap_err(),
            Error::MultipleInitial
        );
        assert_eq!(
            parse_kripke("vertex v {}\ninit v").unwrap_err(),
            Error::NotTotal("v".into())
        );
    }

    #[test]
    fn word_roundtrip() {
        let w = parse_word("word = {a}{}{a b}\n").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(*w.letter(2), letter(["a", "b"]));
        let printed = print_word(&w);
        assert_eq!(parse_word(&printed).unwrap(), w);
        assert!(parse_word("word =").is_err());
        assert!(parse_word("word = {o}").is_err());
    }
}
