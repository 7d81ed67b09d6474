use std::collections::{BTreeMap, BTreeSet};

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, SourceSpan};
use crate::syntax::{Formula, Language, Predicate, Var};

/// Name tables shared by every formula parsed in one batch (a proof file, a
/// model document, a CLI invocation).
///
/// Variables written `x<digits>` denote the variable with that index. Any
/// other lowercase name is assigned the smallest index not yet taken, where
/// literal indices anywhere in the batch count as taken; call
/// [`Symbols::reserve_literals`] on every text of the batch first.
#[derive(Clone, Debug, Default)]
pub struct Symbols {
    vars: BTreeMap<String, Var>,
    names: BTreeMap<Var, String>,
    taken: BTreeSet<Var>,
    preds: BTreeMap<String, usize>,
}

fn literal_index(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    // `x01` would alias `x1`; only canonical spellings are literals.
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

impl Symbols {
    pub fn new() -> Self {
        Self::default()
    }

    /// Marks every `x<digits>` word in `text` as taken.
    pub fn reserve_literals(&mut self, text: &str) {
        for word in text.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '\'')) {
            if let Some(i) = literal_index(word) {
                self.taken.insert(Var(i));
            }
        }
    }

    /// The variable for `name`, allocating one if needed.
    pub fn var(&mut self, name: &str) -> Var {
        if let Some(i) = literal_index(name) {
            self.taken.insert(Var(i));
            return Var(i);
        }
        if let Some(v) = self.vars.get(name) {
            return *v;
        }
        let mut i = 0;
        while self.taken.contains(&Var(i)) {
            i += 1;
        }
        let v = Var(i);
        self.taken.insert(v);
        self.vars.insert(name.to_string(), v);
        self.names.insert(v, name.to_string());
        v
    }

    pub fn lookup_var(&self, name: &str) -> Option<Var> {
        literal_index(name).map(Var).or_else(|| self.vars.get(name).copied())
    }

    /// Display name for `v`: the source name if it had one, else `x<n>`.
    pub fn var_name(&self, v: Var) -> String {
        self.names.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// The predicate `name` with the given arity; the arity of a name is
    /// fixed by its first use.
    pub fn predicate(&mut self, name: &str, arity: usize) -> Result<Predicate, String> {
        match self.preds.get(name) {
            Some(&a) if a != arity => Err(format!("predicate {name} was used with {a} arguments, here with {arity}")),
            _ => {
                self.preds.insert(name.to_string(), arity);
                Ok(Predicate::new(name, arity))
            }
        }
    }
}

/// Parses one formula of `lang`.
pub fn parse_formula(text: &str, lang: Language) -> Result<Formula, ParseError> {
    let mut symbols = Symbols::new();
    symbols.reserve_literals(text);
    parse_formula_with(text, lang, &mut symbols)
}

/// Parses one formula, resolving names through `symbols`.
pub fn parse_formula_with(text: &str, lang: Language, symbols: &mut Symbols) -> Result<Formula, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, lang, symbols };
    let f = p.iff()?;
    if p.peek() != &Tok::End {
        let t = p.bump();
        return Err(ParseError {
            span: t.span,
            message: format!("expected a binary connective or end of input, found {}", t.tok.describe()),
        });
    }
    Ok(if lang == Language::Identity { f.expand_existence() } else { f })
}

/// Parses a formula file: one formula per line, blank lines and `#`
/// comments ignored. Spans in errors are offsets into the whole text.
pub fn parse_formula_file(text: &str, lang: Language, symbols: &mut Symbols) -> Result<Vec<Formula>, ParseError> {
    symbols.reserve_literals(text);
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let content = line.split('#').next().unwrap_or("");
        if !content.trim().is_empty() {
            let f = parse_formula_with(content, lang, symbols).map_err(|e| ParseError {
                span: SourceSpan { start: e.span.start + offset, end: e.span.end + offset },
                message: e.message,
            })?;
            out.push(f);
        }
        offset += line.chars().count() + 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    lang: Language,
    symbols: &'a mut Symbols,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, t: &Token, expected: &str) -> Result<T, ParseError> {
        Err(ParseError { span: t.span, message: format!("expected {expected}, found {}", t.tok.describe()) })
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.imp()?;
        while self.peek() == &Tok::Iff {
            self.bump();
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    /// `->` is right-associative; `>` does not chain with anything.
    fn imp(&mut self) -> Result<Formula, ParseError> {
        let mut operands = vec![self.or()?];
        let mut ops: Vec<Token> = Vec::new();
        while matches!(self.peek(), Tok::Implies | Tok::Cond) {
            ops.push(self.bump());
            operands.push(self.or()?);
        }
        if ops.len() > 1 {
            if let Some(op) = ops.iter().find(|t| t.tok == Tok::Cond) {
                return Err(ParseError {
                    span: op.span,
                    message: "`>` does not associate; expected parentheses around the nested `>` or `->` operand".into(),
                });
            }
        }
        let mut acc = operands.pop().expect("at least one operand");
        while let Some(op) = ops.pop() {
            let lhs = operands.pop().expect("operand count matches operators");
            acc = match op.tok {
                Tok::Cond => Formula::cond(lhs, acc),
                _ => Formula::implies(lhs, acc),
            };
        }
        Ok(acc)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == &Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == &Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Box => {
                self.bump();
                Ok(Formula::necessarily(self.unary()?))
            }
            Tok::Dia => {
                self.bump();
                Ok(Formula::possibly(self.unary()?))
            }
            Tok::Forall | Tok::Exists => {
                let q = self.bump();
                let x = self.variable()?;
                if self.peek() == &Tok::Dot {
                    self.bump();
                }
                let body = self.iff()?;
                Ok(if q.tok == Tok::Forall { Formula::forall(x, body) } else { Formula::exists(x, body) })
            }
            _ => self.primary(),
        }
    }

    fn variable(&mut self) -> Result<Var, ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::Ident(name) if name.starts_with(|c: char| c.is_ascii_lowercase() || c == '_') => Ok(self.symbols.var(name)),
            _ => self.error(&t, "a variable (lowercase identifier)"),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::LParen => {
                let f = self.iff()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return self.error(&close, "`)`");
                }
                Ok(f)
            }
            Tok::Top => Ok(Formula::top()),
            Tok::Bot => Ok(Formula::Bot),
            Tok::Ident(name) if name.starts_with(|c: char| c.is_ascii_uppercase()) => {
                let name = name.clone();
                let args = if self.peek() == &Tok::LParen {
                    self.bump();
                    let mut args = vec![self.variable()?];
                    loop {
                        let sep = self.bump();
                        match sep.tok {
                            Tok::Comma => args.push(self.variable()?),
                            Tok::RParen => break,
                            _ => return self.error(&sep, "`,` or `)` in an argument list"),
                        }
                    }
                    args
                } else {
                    Vec::new()
                };
                if name == "E" {
                    if self.lang == Language::Plain {
                        return Err(ParseError {
                            span: t.span,
                            message: "the existence predicate E is reserved; expected language LE or L=".into(),
                        });
                    }
                    if args.len() != 1 {
                        return Err(ParseError { span: t.span, message: "E takes exactly one variable argument".into() });
                    }
                    return Ok(Formula::Existence(args[0]));
                }
                let pred = self
                    .symbols
                    .predicate(&name, args.len())
                    .map_err(|message| ParseError { span: t.span, message })?;
                Ok(Formula::Atom(pred, args))
            }
            Tok::Ident(name) if name.starts_with(|c: char| c.is_ascii_lowercase() || c == '_') => {
                let x = self.symbols.var(name);
                let op = self.bump();
                let negated = match op.tok {
                    Tok::Equals => false,
                    Tok::NotEquals => true,
                    _ => return self.error(&op, "`=` after a variable"),
                };
                if self.lang != Language::Identity {
                    return Err(ParseError {
                        span: op.span,
                        message: format!("identity is only available in L=; expected a predicate atom (language is {})", self.lang),
                    });
                }
                let y = self.variable()?;
                let eq = Formula::Eq(x, y);
                Ok(if negated { Formula::not(eq) } else { eq })
            }
            _ => self.error(&t, "a formula (atom, `(`, `~`, `box`, `dia`, quantifier, `top` or `bot`)"),
        }
    }
}
