//! Recursive-descent parser for formulas and problem files. The grammar is
//! documented in the README; precedence from loosest to tightest is
//! `<->`, `->`, `|`, `&`, then the prefix operators (`not`, modalities) and
//! quantifiers, whose bodies extend as far right as possible.

use super::ast::{Declarations, Definition, ModalAst, Sort, TermAst, DEFAULT_INDEX};
use super::problem::{LogicKind, ProblemFile};
use super::ParseError;
use crate::embedding::{DomainCondition, FrameClass, FrameFlags, Grounding, LogicPreset};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LAngle,
    RAngle,
    LBrace,
    RBrace,
    Dot,
    Colon,
    Comma,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    Define, // :=
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str, start_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut toks = Vec::new();
    let mut line = start_line;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, co) = (line, col);
        let bump = |chars: &mut std::iter::Peekable<std::str::Chars>, col: &mut usize| {
            chars.next();
            *col += 1;
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => bump(&mut chars, &mut col),
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            '(' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::LParen, line: l, col: co });
            }
            ')' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::RParen, line: l, col: co });
            }
            '[' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::LBracket, line: l, col: co });
            }
            ']' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::RBracket, line: l, col: co });
            }
            '{' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::LBrace, line: l, col: co });
            }
            '}' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::RBrace, line: l, col: co });
            }
            '.' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::Dot, line: l, col: co });
            }
            ',' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::Comma, line: l, col: co });
            }
            '&' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::Amp, line: l, col: co });
            }
            '|' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::Pipe, line: l, col: co });
            }
            ':' => {
                bump(&mut chars, &mut col);
                if chars.peek() == Some(&'=') {
                    bump(&mut chars, &mut col);
                    toks.push(Spanned { tok: Tok::Define, line: l, col: co });
                } else {
                    toks.push(Spanned { tok: Tok::Colon, line: l, col: co });
                }
            }
            '-' => {
                bump(&mut chars, &mut col);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars, &mut col);
                    toks.push(Spanned { tok: Tok::Arrow, line: l, col: co });
                } else {
                    return Err(ParseError::Syntax {
                        line: l,
                        col: co,
                        msg: "expected `->`".into(),
                    });
                }
            }
            '<' => {
                bump(&mut chars, &mut col);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars, &mut col);
                    if chars.peek() == Some(&'>') {
                        bump(&mut chars, &mut col);
                        toks.push(Spanned { tok: Tok::DArrow, line: l, col: co });
                    } else {
                        return Err(ParseError::Syntax {
                            line: l,
                            col: co,
                            msg: "expected `<->`".into(),
                        });
                    }
                } else {
                    toks.push(Spanned { tok: Tok::LAngle, line: l, col: co });
                }
            }
            '>' => {
                bump(&mut chars, &mut col);
                toks.push(Spanned { tok: Tok::RAngle, line: l, col: co });
            }
            c if is_ident_start(c) => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if is_ident_char(c) {
                        name.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push(Spanned { tok: Tok::Ident(name), line: l, col: co });
            }
            other => {
                return Err(ParseError::Syntax {
                    line: l,
                    col: co,
                    msg: format!("unexpected character `{}`", other),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    decls: &'a Declarations,
    scope: Vec<(String, Sort)>,
}

const KEYWORDS: &[&str] = &[
    "not", "box", "dia", "forall", "exists", "all_free", "some_free", "top", "bot", "E", "C",
];

impl<'a> Parser<'a> {
    fn new(toks: Vec<Spanned>, decls: &'a Declarations) -> Parser<'a> {
        Parser {
            toks,
            pos: 0,
            decls,
            scope: Vec::new(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|s| (s.line, s.col))
            .unwrap_or((1, 1))
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected {}", what))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(format!("expected {}", what))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    // ---- sorts ----

    fn parse_sort(&mut self) -> Result<Sort, ParseError> {
        let lhs = self.parse_sort_atom()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.parse_sort()?;
            Ok(Sort::fun(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_sort_atom(&mut self) -> Result<Sort, ParseError> {
        match self.next() {
            Some(Tok::Ident(n)) if n == "indiv" => Ok(Sort::Indiv),
            Some(Tok::Ident(n)) if n == "prop" => Ok(Sort::Prop),
            Some(Tok::LParen) => {
                let s = self.parse_sort()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(s)
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("expected a sort (`indiv`, `prop`, or parenthesized)"))
            }
        }
    }

    // ---- formulas ----

    fn parse_formula(&mut self) -> Result<ModalAst, ParseError> {
        self.parse_iff()
    }

    fn parse_iff(&mut self) -> Result<ModalAst, ParseError> {
        let lhs = self.parse_imp()?;
        if self.peek() == Some(&Tok::DArrow) {
            self.pos += 1;
            let rhs = self.parse_iff()?;
            Ok(ModalAst::iff(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_imp(&mut self) -> Result<ModalAst, ParseError> {
        let lhs = self.parse_or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.parse_imp()?;
            Ok(ModalAst::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_or(&mut self) -> Result<ModalAst, ParseError> {
        let mut lhs = self.parse_and()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.pos += 1;
            let rhs = self.parse_and()?;
            lhs = ModalAst::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<ModalAst, ParseError> {
        let mut lhs = self.parse_unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            let rhs = self.parse_unary()?;
            lhs = ModalAst::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn default_index(&self) -> Result<String, ParseError> {
        if self.decls.indices.len() == 1 {
            Ok(self.decls.indices[0].clone())
        } else if self.decls.has_index(DEFAULT_INDEX) {
            Ok(DEFAULT_INDEX.to_string())
        } else {
            Err(self.err("bare `box`/`dia` needs a unique or default modality index"))
        }
    }

    fn check_index(&self, idx: &str) -> Result<(), ParseError> {
        if self.decls.has_index(idx) {
            Ok(())
        } else {
            let (line, col) = self.here();
            Err(ParseError::UnknownSymbol {
                name: format!("modality index {}", idx),
                line,
                col,
            })
        }
    }

    fn parse_unary(&mut self) -> Result<ModalAst, ParseError> {
        match self.peek() {
            Some(Tok::Ident(n)) if n == "not" => {
                self.pos += 1;
                Ok(ModalAst::not(self.parse_unary()?))
            }
            Some(Tok::Ident(n)) if n == "box" => {
                self.pos += 1;
                let idx = self.default_index()?;
                Ok(ModalAst::boxed(idx, self.parse_unary()?))
            }
            Some(Tok::Ident(n)) if n == "dia" => {
                self.pos += 1;
                let idx = self.default_index()?;
                Ok(ModalAst::dia(idx, self.parse_unary()?))
            }
            Some(Tok::Ident(n)) if n.starts_with("K_") => {
                let idx = n[2..].to_string();
                self.check_index(&idx)?;
                self.pos += 1;
                Ok(ModalAst::boxed(idx, self.parse_unary()?))
            }
            Some(Tok::Ident(n)) if n == "C" => {
                self.pos += 1;
                let indices = if self.peek() == Some(&Tok::LBrace) {
                    self.pos += 1;
                    let mut set = vec![self.expect_ident("modality index")?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        set.push(self.expect_ident("modality index")?);
                    }
                    self.expect(Tok::RBrace, "`}`")?;
                    for i in &set {
                        self.check_index(i)?;
                    }
                    set
                } else {
                    self.decls.indices.clone()
                };
                Ok(ModalAst::CommonKnows(
                    indices,
                    Box::new(self.parse_unary()?),
                ))
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let idx = self.expect_ident("modality index")?;
                self.check_index(&idx)?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(ModalAst::boxed(idx, self.parse_unary()?))
            }
            Some(Tok::LAngle) => {
                self.pos += 1;
                let idx = self.expect_ident("modality index")?;
                self.check_index(&idx)?;
                self.expect(Tok::RAngle, "`>`")?;
                Ok(ModalAst::dia(idx, self.parse_unary()?))
            }
            Some(Tok::Ident(n)) if n == "forall" || n == "exists" => {
                let universal = n == "forall";
                self.pos += 1;
                self.expect(Tok::LParen, "`(`")?;
                let var = self.expect_ident("bound variable")?;
                self.expect(Tok::Colon, "`:`")?;
                let sort = self.parse_sort()?;
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::Dot, "`.`")?;
                self.scope.push((var.clone(), sort.clone()));
                let body = self.parse_formula();
                self.scope.pop();
                let body = body?;
                Ok(if universal {
                    ModalAst::forall(var, sort, body)
                } else {
                    ModalAst::exists(var, sort, body)
                })
            }
            Some(Tok::Ident(n)) if n == "all_free" || n == "some_free" => {
                let universal = n == "all_free";
                self.pos += 1;
                let var = self.expect_ident("bound variable")?;
                self.expect(Tok::Dot, "`.`")?;
                self.scope.push((var.clone(), Sort::Indiv));
                let body = self.parse_formula();
                self.scope.pop();
                let body = Box::new(body?);
                Ok(if universal {
                    ModalAst::FreeForall(var, body)
                } else {
                    ModalAst::FreeExists(var, body)
                })
            }
            Some(Tok::Ident(n)) if n == "E" => {
                self.pos += 1;
                let (term, sort) = self.parse_term_arg()?;
                if sort != Sort::Indiv {
                    return Err(self.err("`E` applies to individual terms"));
                }
                Ok(ModalAst::ExistsPred(term))
            }
            Some(Tok::Ident(n)) if n == "top" => {
                self.pos += 1;
                Ok(ModalAst::Top)
            }
            Some(Tok::Ident(n)) if n == "bot" => {
                self.pos += 1;
                Ok(ModalAst::Bottom)
            }
            Some(Tok::Ident(_)) => self.parse_atom(),
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.parse_formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(self.err("expected a formula")),
        }
    }

    fn resolve(&self, name: &str) -> Option<(TermAst, Sort)> {
        if let Some((_, sort)) = self.scope.iter().rev().find(|(n, _)| n == name) {
            return Some((TermAst::Var(name.to_string()), sort.clone()));
        }
        self.decls
            .sort_of(name)
            .map(|s| (TermAst::Const(name.to_string()), s))
    }

    fn arg_starts_here(&self) -> bool {
        match self.peek() {
            Some(Tok::LParen) => true,
            Some(Tok::Ident(n)) => !KEYWORDS.contains(&n.as_str()),
            _ => false,
        }
    }

    /// Parses an atom: a head applied to as many arguments as its sort
    /// expects, ending at sort `prop`.
    fn parse_atom(&mut self) -> Result<ModalAst, ParseError> {
        let (line, col) = self.here();
        let head = self.expect_ident("an atom")?;
        let (mut term, mut sort) = self.resolve(&head).ok_or(ParseError::UnknownSymbol {
            name: head.clone(),
            line,
            col,
        })?;
        let mut args = Vec::new();
        while let Sort::Fun(dom, cod) = sort.clone() {
            if !self.arg_starts_here() {
                break;
            }
            let (arg, arg_sort) = self.parse_term_arg()?;
            if arg_sort != *dom {
                return Err(ParseError::SortMismatch {
                    expected: dom.to_string(),
                    found: arg_sort.to_string(),
                    line,
                    col,
                });
            }
            args.push(arg.clone());
            term = TermAst::app(term, arg);
            sort = *cod;
        }
        if sort != Sort::Prop {
            return Err(ParseError::ArityMismatch {
                name: head,
                line,
                col,
            });
        }
        match term {
            TermAst::Var(_) | TermAst::Const(_) => Ok(ModalAst::Atom(head, args)),
            TermAst::App(..) => Ok(ModalAst::Atom(head, args)),
        }
    }

    /// A term argument: a bare symbol or a parenthesized application.
    fn parse_term_arg(&mut self) -> Result<(TermAst, Sort), ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) => {
                let (line, col) = self.here();
                let name = self.expect_ident("a term")?;
                self.resolve(&name).ok_or(ParseError::UnknownSymbol {
                    name,
                    line,
                    col,
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.parse_term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.err("expected a term")),
        }
    }

    /// A term: head symbol applied left-to-right to argument terms.
    fn parse_term(&mut self) -> Result<(TermAst, Sort), ParseError> {
        let (line, col) = self.here();
        let head = self.expect_ident("a term head")?;
        let (mut term, mut sort) = self.resolve(&head).ok_or(ParseError::UnknownSymbol {
            name: head.clone(),
            line,
            col,
        })?;
        while self.arg_starts_here() {
            let (dom, cod) = match sort {
                Sort::Fun(d, c) => (*d, *c),
                _ => {
                    return Err(ParseError::ArityMismatch {
                        name: head,
                        line,
                        col,
                    })
                }
            };
            let (arg, arg_sort) = self.parse_term_arg()?;
            if arg_sort != dom {
                return Err(ParseError::SortMismatch {
                    expected: dom.to_string(),
                    found: arg_sort.to_string(),
                    line,
                    col,
                });
            }
            term = TermAst::app(term, arg);
            sort = cod;
        }
        Ok((term, sort))
    }
}

/// Parses a single formula against the given declarations.
pub fn parse_formula(text: &str, decls: &Declarations) -> Result<ModalAst, ParseError> {
    parse_formula_at(text, decls, 1)
}

fn parse_formula_at(
    text: &str,
    decls: &Declarations,
    start_line: usize,
) -> Result<ModalAst, ParseError> {
    let toks = lex(text, start_line)?;
    let mut p = Parser::new(toks, decls);
    let f = p.parse_formula()?;
    if !p.at_end() {
        return Err(p.err("trailing input after formula"));
    }
    Ok(f)
}

/// Parses a full problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut logic: Option<LogicKind> = None;
    let mut domains = DomainCondition::Constant;
    let mut grounding = Grounding::Global;
    let mut indices: Option<Vec<String>> = None;
    let mut decls = Declarations::new();
    let mut axioms: Vec<(String, ModalAst)> = Vec::new();
    let mut conjectures: Vec<(String, ModalAst)> = Vec::new();
    let mut pending_formulas: Vec<(bool, String, String, usize)> = Vec::new();
    let mut pending_defines: Vec<(String, Vec<(String, Sort)>, String, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match kw {
            "logic" => {
                if logic.is_some() {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        col: 1,
                        msg: "duplicate `logic` declaration".into(),
                    });
                }
                logic = Some(parse_logic_kind(rest, lineno)?);
            }
            "domains" => {
                domains = match rest {
                    "constant" => DomainCondition::Constant,
                    "varying" => DomainCondition::Varying,
                    _ => {
                        return Err(ParseError::Syntax {
                            line: lineno,
                            col: 1,
                            msg: "expected `constant` or `varying`".into(),
                        })
                    }
                };
            }
            "grounding" => {
                grounding = match rest.split_whitespace().collect::<Vec<_>>().as_slice() {
                    ["global"] => Grounding::Global,
                    ["actual", w] => Grounding::Actual(w.to_string()),
                    _ => {
                        return Err(ParseError::Syntax {
                            line: lineno,
                            col: 1,
                            msg: "expected `global` or `actual <world>`".into(),
                        })
                    }
                };
            }
            "indices" => {
                let set: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if set.is_empty() {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        col: 1,
                        msg: "`indices` needs at least one name".into(),
                    });
                }
                indices = Some(set);
            }
            "const" => {
                let (name, sort_text) =
                    rest.split_once(':')
                        .ok_or_else(|| ParseError::Syntax {
                            line: lineno,
                            col: 1,
                            msg: "expected `const <name> : <sort>`".into(),
                        })?;
                let name = name.trim().to_string();
                check_declarable(&name, &decls, lineno)?;
                let sort = parse_sort_text(sort_text.trim(), lineno)?;
                decls.consts.push((name, sort));
            }
            "define" => {
                // define name (p: sort) ... := body
                let (head, body) =
                    rest.split_once(":=")
                        .ok_or_else(|| ParseError::Syntax {
                            line: lineno,
                            col: 1,
                            msg: "expected `define <name> (<p>: <sort>)* := <formula>`".into(),
                        })?;
                let toks = lex(head, lineno)?;
                let mut p = Parser::new(toks, &decls);
                let name = p.expect_ident("definition name")?;
                check_declarable(&name, &decls, lineno)?;
                let mut params = Vec::new();
                while p.peek() == Some(&Tok::LParen) {
                    p.pos += 1;
                    let v = p.expect_ident("parameter name")?;
                    p.expect(Tok::Colon, "`:`")?;
                    let s = p.parse_sort()?;
                    p.expect(Tok::RParen, "`)`")?;
                    params.push((v, s));
                }
                if !p.at_end() {
                    return Err(p.err("trailing input in definition head"));
                }
                pending_defines.push((name, params, body.trim().to_string(), lineno));
            }
            "axiom" | "conjecture" => {
                let (name, formula_text) =
                    rest.split_once(':')
                        .ok_or_else(|| ParseError::Syntax {
                            line: lineno,
                            col: 1,
                            msg: format!("expected `{} <name>: <formula>`", kw),
                        })?;
                let name = name.trim().to_string();
                if axioms.iter().any(|(n, _)| *n == name)
                    || conjectures.iter().any(|(n, _)| *n == name)
                    || pending_formulas.iter().any(|(_, n, _, _)| *n == name)
                {
                    return Err(ParseError::DuplicateName(name));
                }
                pending_formulas.push((
                    kw == "axiom",
                    name,
                    formula_text.trim().to_string(),
                    lineno,
                ));
            }
            _ => {
                return Err(ParseError::Syntax {
                    line: lineno,
                    col: 1,
                    msg: format!("unknown declaration `{}`", kw),
                });
            }
        }
    }

    let logic = logic.ok_or(ParseError::UndeclaredLogic)?;
    if let Some(set) = indices {
        decls.indices = set;
    }

    // Definitions may refer to earlier definitions, so resolve them in order.
    for (name, params, body_text, lineno) in pending_defines {
        let toks = lex(&body_text, lineno)?;
        let mut p = Parser::new(toks, &decls);
        p.scope = params.clone();
        let body = p.parse_formula()?;
        if !p.at_end() {
            return Err(p.err("trailing input after definition body"));
        }
        decls.defines.push(Definition { name, params, body });
    }

    for (is_axiom, name, formula_text, lineno) in pending_formulas {
        let ast = parse_formula_at(&formula_text, &decls, lineno)?;
        if is_axiom {
            axioms.push((name, ast));
        } else {
            conjectures.push((name, ast));
        }
    }

    let preset = match &logic {
        LogicKind::Modal(frame) => Some(LogicPreset {
            frame: frame.clone(),
            domains,
            indices: decls.indices.clone(),
            grounding,
        }),
        LogicKind::Free => None,
    };

    Ok(ProblemFile {
        logic,
        preset,
        decls,
        axioms,
        conjectures,
    })
}

fn check_declarable(
    name: &str,
    decls: &Declarations,
    lineno: usize,
) -> Result<(), ParseError> {
    if KEYWORDS.contains(&name) || name.starts_with("K_") {
        return Err(ParseError::Syntax {
            line: lineno,
            col: 1,
            msg: format!("`{}` is a reserved word", name),
        });
    }
    if decls.sort_of(name).is_some() {
        return Err(ParseError::DuplicateName(name.to_string()));
    }
    Ok(())
}

fn parse_sort_text(text: &str, lineno: usize) -> Result<Sort, ParseError> {
    let toks = lex(text, lineno)?;
    let empty = Declarations::new();
    let mut p = Parser::new(toks, &empty);
    let s = p.parse_sort()?;
    if !p.at_end() {
        return Err(p.err("trailing input after sort"));
    }
    Ok(s)
}

fn parse_logic_kind(text: &str, lineno: usize) -> Result<LogicKind, ParseError> {
    let text = text.trim();
    let frame = match text {
        "K" => FrameClass::K,
        "KB" => FrameClass::Kb,
        "KT" => FrameClass::Kt,
        "S4" => FrameClass::S4,
        "S5" => FrameClass::S5Universal,
        "S5equiv" => FrameClass::S5Equiv,
        "free" => return Ok(LogicKind::Free),
        _ => {
            if let Some(inner) = text
                .strip_prefix("custom(")
                .and_then(|t| t.strip_suffix(')'))
            {
                let mut flags = FrameFlags::default();
                for flag in inner.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                    match flag {
                        "reflexive" => flags.reflexive = true,
                        "symmetric" => flags.symmetric = true,
                        "transitive" => flags.transitive = true,
                        "euclidean" => flags.euclidean = true,
                        "universal" => flags.universal = true,
                        _ => {
                            return Err(ParseError::Syntax {
                                line: lineno,
                                col: 1,
                                msg: format!("unknown frame flag `{}`", flag),
                            })
                        }
                    }
                }
                FrameClass::Custom(flags)
            } else {
                return Err(ParseError::UndeclaredLogic);
            }
        }
    };
    Ok(LogicKind::Modal(frame))
}
