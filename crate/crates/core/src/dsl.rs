//! The `.lie` algebra-definition language and its JSON twin.
//!
//! ```text
//! algebra h1 {
//!   basis X, Y, I;
//!   [X,Y] = I;
//! }
//! ```
//!
//! Brackets not written are zero. Coefficients are exact rationals
//! (`p`, `-p` or `p/q`). Both surfaces map to the same [`AlgebraDocument`];
//! printing a canonicalized document and parsing it back is the identity.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{LieAlgebra, SparseVec};
use crate::error::CoreError;
use crate::rational::{format_rat, parse_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    /// Canonical rational text (`p` or `p/q`).
    pub coeff: String,
    pub gen: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDef {
    pub left: String,
    pub right: String,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketDef>,
}

impl AlgebraDocument {
    /// Canonical document: pairs in `a < b` index order, terms by basis
    /// index, zero brackets omitted. Display names like `sp(4)` are
    /// sanitized into valid identifiers (`sp_4`).
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        fn sanitize(name: &str) -> String {
            let mut s = String::new();
            for ch in name.chars() {
                if ch.is_ascii_alphanumeric() || ch == '_' {
                    s.push(ch);
                } else if !s.ends_with('_') {
                    s.push('_');
                }
            }
            let s = s.trim_matches('_').to_string();
            if s.is_empty() || s.chars().next().unwrap().is_ascii_digit() {
                format!("alg_{s}")
            } else {
                s
            }
        }
        let brackets = l
            .brackets
            .iter()
            .map(|((a, b), v)| BracketDef {
                left: l.basis_names[*a].clone(),
                right: l.basis_names[*b].clone(),
                terms: v
                    .iter()
                    .map(|(i, c)| Term {
                        coeff: format_rat(c),
                        gen: l.basis_names[*i].clone(),
                    })
                    .collect(),
            })
            .collect();
        Self {
            name: sanitize(&l.name),
            basis: l.basis_names.clone(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra, CoreError> {
        let index: BTreeMap<&str, usize> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        if index.len() != self.basis.len() {
            return Err(CoreError::InvalidParameter(
                "duplicate basis names".into(),
            ));
        }
        let lookup = |n: &str| -> Result<usize, CoreError> {
            index
                .get(n)
                .copied()
                .ok_or_else(|| CoreError::InvalidParameter(format!("unknown basis name {n}")))
        };
        let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for def in &self.brackets {
            let a = lookup(&def.left)?;
            let b = lookup(&def.right)?;
            if a == b {
                return Err(CoreError::InvalidParameter(format!(
                    "bracket [{0},{0}] is identically zero and may not be defined",
                    def.left
                )));
            }
            let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
            if brackets.contains_key(&(lo, hi)) {
                return Err(CoreError::InvalidParameter(format!(
                    "duplicate bracket definition for pair [{},{}]",
                    def.left, def.right
                )));
            }
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for t in &def.terms {
                let i = lookup(&t.gen)?;
                let c = parse_rat(&t.coeff)?;
                let slot = acc.entry(i).or_insert_with(Rat::zero);
                *slot = &*slot + c * Rat::from_integer(sign.into());
            }
            let v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            brackets.insert((lo, hi), v);
        }
        LieAlgebra::new(self.name.clone(), self.basis.clone(), brackets)
    }
}

/// Renders a document in `.lie` syntax.
pub fn print_algebra(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {} {{\n", doc.name));
    out.push_str(&format!("  basis {};\n", doc.basis.join(", ")));
    for b in &doc.brackets {
        let rhs = if b.terms.is_empty() {
            "0".to_string()
        } else {
            let mut s = String::new();
            for (i, t) in b.terms.iter().enumerate() {
                let c = parse_rat(&t.coeff).expect("document coefficients are canonical");
                let (sep, mag) = if c.is_negative() {
                    (if i == 0 { "-" } else { " - " }, -c.clone())
                } else {
                    (if i == 0 { "" } else { " + " }, c.clone())
                };
                s.push_str(sep);
                if mag.is_one() {
                    s.push_str(&t.gen);
                } else {
                    s.push_str(&format!("{}*{}", format_rat(&mag), t.gen));
                }
            }
            s
        };
        out.push_str(&format!("  [{},{}] = {};\n", b.left, b.right, rhs));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexer, CoreError> {
    let mut toks = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        let bump = |ch: char, line: &mut usize, col: &mut usize| {
            if ch == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            '#' => {
                // comment to end of line
                while let Some(&ch) = chars.peek() {
                    chars.next();
                    bump(ch, &mut line, &mut col);
                    if ch == '\n' {
                        break;
                    }
                }
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        s.push(ch);
                        chars.next();
                        bump(ch, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(s), l0, c0));
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_ascii_digit() || ch == '/' {
                        s.push(ch);
                        chars.next();
                        bump(ch, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Number(s), l0, c0));
            }
            '{' | '}' | '[' | ']' | ',' | ';' | '=' | '+' | '-' | '*' => {
                chars.next();
                bump(c, &mut line, &mut col);
                toks.push((Tok::Sym(c), l0, c0));
            }
            other => {
                return Err(CoreError::Parse {
                    line: l0,
                    col: c0,
                    msg: format!("unexpected character {other:?}"),
                });
            }
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: (line, col),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> CoreError {
        let (line, col) = self.here();
        CoreError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<Tok, CoreError> {
        let t = self
            .toks
            .get(self.pos)
            .map(|(t, _, _)| t.clone())
            .ok_or_else(|| self.err(format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), CoreError> {
        match self.next(&format!("{c:?}"))? {
            Tok::Sym(s) if s == c => Ok(()),
            t => {
                self.pos -= 1;
                Err(self.err(format!("expected {c:?}, found {t:?}")))
            }
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, CoreError> {
        match self.next(what)? {
            Tok::Ident(s) => Ok(s),
            t => {
                self.pos -= 1;
                Err(self.err(format!("expected {what}, found {t:?}")))
            }
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), CoreError> {
        let s = self.expect_ident(&format!("keyword {kw:?}"))?;
        if s == kw {
            Ok(())
        } else {
            self.pos -= 1;
            Err(self.err(format!("expected keyword {kw:?}, found {s:?}")))
        }
    }
}

/// Parses a `.lie` document, checking basis-name references and duplicate
/// pairs with line/column diagnostics.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, CoreError> {
    let mut lx = lex(text)?;
    lx.expect_keyword("algebra")?;
    let name = lx.expect_ident("algebra name")?;
    lx.expect_sym('{')?;
    lx.expect_keyword("basis")?;

    let mut basis = vec![lx.expect_ident("basis name")?];
    loop {
        match lx.peek() {
            Some(Tok::Sym(',')) => {
                lx.pos += 1;
                basis.push(lx.expect_ident("basis name")?);
            }
            Some(Tok::Sym(';')) => {
                lx.pos += 1;
                break;
            }
            _ => return Err(lx.err("expected ',' or ';' in basis list")),
        }
    }
    {
        let mut sorted = basis.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != basis.len() {
            return Err(lx.err("duplicate basis name"));
        }
    }

    let known = |lx: &Lexer, n: &str| -> Result<(), CoreError> {
        if basis.iter().any(|b| b == n) {
            Ok(())
        } else {
            Err(lx.err(format!("unknown basis name {n}")))
        }
    };

    let mut brackets: Vec<BracketDef> = Vec::new();
    let mut seen_pairs: Vec<(String, String)> = Vec::new();
    loop {
        match lx.peek() {
            Some(Tok::Sym('}')) => {
                lx.pos += 1;
                break;
            }
            Some(Tok::Sym('[')) => {
                lx.pos += 1;
                let left = lx.expect_ident("basis name")?;
                known(&lx, &left)?;
                lx.expect_sym(',')?;
                let right = lx.expect_ident("basis name")?;
                known(&lx, &right)?;
                lx.expect_sym(']')?;
                lx.expect_sym('=')?;
                let key = if left <= right {
                    (left.clone(), right.clone())
                } else {
                    (right.clone(), left.clone())
                };
                if seen_pairs.contains(&key) {
                    return Err(lx.err(format!("duplicate bracket for pair [{left},{right}]")));
                }
                seen_pairs.push(key);

                let terms = parse_rhs(&mut lx, |n| basis.iter().any(|b| b == n))?;
                lx.expect_sym(';')?;
                brackets.push(BracketDef { left, right, terms });
            }
            _ => return Err(lx.err("expected '[' to start a bracket or '}'")),
        }
    }
    if lx.pos != lx.toks.len() {
        return Err(lx.err("trailing input after closing '}'"));
    }

    let doc = AlgebraDocument {
        name,
        basis,
        brackets,
    };
    doc.to_algebra()?; // surface index/coefficient problems now
    Ok(doc)
}

fn parse_rhs(
    lx: &mut Lexer,
    known: impl Fn(&str) -> bool,
) -> Result<Vec<Term>, CoreError> {
    // literal zero right-hand side
    if let (Some(Tok::Number(n)), Some((Tok::Sym(';'), _, _))) =
        (lx.peek(), lx.toks.get(lx.pos + 1))
    {
        if n == "0" {
            lx.pos += 1;
            return Ok(Vec::new());
        }
    }
    let mut terms = Vec::new();
    let mut sign = match lx.peek() {
        Some(Tok::Sym('-')) => {
            lx.pos += 1;
            -1i64
        }
        _ => 1,
    };
    loop {
        let coeff = match lx.peek() {
            Some(Tok::Number(n)) => {
                let n = n.clone();
                let c = parse_rat(&n).map_err(|_| lx.err(format!("malformed rational {n:?}")))?;
                lx.pos += 1;
                lx.expect_sym('*')?;
                c
            }
            _ => Rat::one(),
        };
        let gen = lx.expect_ident("generator name")?;
        if !known(&gen) {
            lx.pos -= 1;
            return Err(lx.err(format!("unknown basis name {gen}")));
        }
        terms.push(Term {
            coeff: format_rat(&(coeff * Rat::from_integer(sign.into()))),
            gen,
        });
        sign = match lx.peek() {
            Some(Tok::Sym('+')) => {
                lx.pos += 1;
                1
            }
            Some(Tok::Sym('-')) => {
                lx.pos += 1;
                -1
            }
            _ => break,
        };
    }
    Ok(terms)
}
