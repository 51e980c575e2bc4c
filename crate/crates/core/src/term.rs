//! Interval terms over a positional variable context, their printer and
//! parser, and the substructural occurrence discipline.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::{Signature, StructuralRules};

/// A term over a context `x1..xn`. Variables are 1-based positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    Zero,
    One,
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Rev(Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Self {
        Term::Var(i)
    }

    pub fn constant(bit: bool) -> Self {
        if bit {
            Term::One
        } else {
            Term::Zero
        }
    }

    pub fn join(a: Term, b: Term) -> Self {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Term, b: Term) -> Self {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn rev(a: Term) -> Self {
        Term::Rev(Box::new(a))
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 0,
            Term::Rev(a) => 1 + a.depth(),
            Term::Join(a, b) | Term::Meet(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Appends the left-to-right variable occurrences to `out`.
    pub fn push_variables(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(i) => out.push(*i),
            Term::Zero | Term::One => {}
            Term::Rev(a) => a.push_variables(out),
            Term::Join(a, b) | Term::Meet(a, b) => {
                a.push_variables(out);
                b.push_variables(out);
            }
        }
    }

    pub fn max_var(&self) -> usize {
        let mut v = Vec::new();
        self.push_variables(&mut v);
        v.into_iter().max().unwrap_or(0)
    }

    /// Checks variable range and that every constructor is licensed by `sig`.
    pub fn check_well_formed(&self, arity: usize, sig: Signature) -> Result<(), TermError> {
        match self {
            Term::Var(i) => {
                if *i == 0 || *i > arity {
                    Err(TermError::VariableOutOfRange { index: *i, arity })
                } else {
                    Ok(())
                }
            }
            Term::Zero | Term::One => Ok(()),
            Term::Rev(a) => {
                if !sig.has_reversal() {
                    return Err(TermError::Unlicensed { symbol: "′", signature: sig });
                }
                a.check_well_formed(arity, sig)
            }
            Term::Join(a, b) | Term::Meet(a, b) => {
                let (ok, symbol) = match self {
                    Term::Join(..) => (sig.has_join(), "∨"),
                    _ => (sig.has_meet(), "∧"),
                };
                if !ok {
                    return Err(TermError::Unlicensed { symbol, signature: sig });
                }
                a.check_well_formed(arity, sig)?;
                b.check_well_formed(arity, sig)
            }
        }
    }

    pub fn is_well_formed(&self, arity: usize, sig: Signature) -> bool {
        self.check_well_formed(arity, sig).is_ok()
    }

    /// Replaces every `Var(j)` by `args[j - 1]`.
    pub fn substitute(&self, args: &[Term]) -> Term {
        match self {
            Term::Var(j) => args[*j - 1].clone(),
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Rev(a) => Term::rev(a.substitute(args)),
            Term::Join(a, b) => Term::join(a.substitute(args), b.substitute(args)),
            Term::Meet(a, b) => Term::meet(a.substitute(args), b.substitute(args)),
        }
    }

    /// Adds `offset` to every variable index.
    pub fn shift(&self, offset: usize) -> Term {
        match self {
            Term::Var(j) => Term::Var(j + offset),
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Rev(a) => Term::rev(a.shift(offset)),
            Term::Join(a, b) => Term::join(a.shift(offset), b.shift(offset)),
            Term::Meet(a, b) => Term::meet(a.shift(offset), b.shift(offset)),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: Ctx) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Rev(a) => {
                a.fmt_prec(f, Ctx::Postfix)?;
                f.write_str("′")
            }
            Term::Join(a, b) | Term::Meet(a, b) => {
                let (op, me) = match self {
                    Term::Join(..) => (" ∨ ", Ctx::JoinLeft),
                    _ => (" ∧ ", Ctx::MeetLeft),
                };
                let bare = ctx == Ctx::Top || ctx == me;
                if !bare {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, me)?;
                f.write_str(op)?;
                b.fmt_prec(f, Ctx::Operand)?;
                if !bare {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    Top,
    JoinLeft,
    MeetLeft,
    Operand,
    Postfix,
}

/// Fully parenthesized except for left-associated chains of one operator.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, Ctx::Top)
    }
}

impl Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_term_unchecked(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol `{symbol}` is not in signature {signature}")]
    Unlicensed { symbol: &'static str, signature: Signature },
    #[error("variable x{index} out of range for context of arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Var(usize),
    Zero,
    One,
    Join,
    Meet,
    Prime,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, TermError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some((pos, c)) = it.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0' => Token::Zero,
            '1' => Token::One,
            '∨' => Token::Join,
            '∧' => Token::Meet,
            '′' | '\'' => Token::Prime,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '\\' | '/' => {
                let want = if c == '\\' { '/' } else { '\\' };
                match it.next() {
                    Some((_, n)) if n == want => {
                        if c == '\\' {
                            Token::Join
                        } else {
                            Token::Meet
                        }
                    }
                    _ => {
                        return Err(TermError::Syntax { pos, msg: format!("expected `{c}{want}`") });
                    }
                }
            }
            'x' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                let index = digits
                    .parse::<usize>()
                    .map_err(|_| TermError::Syntax { pos, msg: "expected variable index after `x`".into() })?;
                Token::Var(index)
            }
            other => return Err(TermError::Syntax { pos, msg: format!("unexpected character `{other}`") }),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.at).map(|t| t.1)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T, TermError> {
        Err(TermError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn join_chain(&mut self) -> Result<Term, TermError> {
        let mut acc = self.meet_chain()?;
        while self.peek() == Some(Token::Join) {
            self.at += 1;
            acc = Term::join(acc, self.meet_chain()?);
        }
        Ok(acc)
    }

    fn meet_chain(&mut self) -> Result<Term, TermError> {
        let mut acc = self.postfix()?;
        while self.peek() == Some(Token::Meet) {
            self.at += 1;
            acc = Term::meet(acc, self.postfix()?);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Term, TermError> {
        let mut t = self.atom()?;
        while self.peek() == Some(Token::Prime) {
            self.at += 1;
            t = Term::rev(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        let t = match self.peek() {
            Some(Token::Var(i)) => Term::Var(i),
            Some(Token::Zero) => Term::Zero,
            Some(Token::One) => Term::One,
            Some(Token::LParen) => {
                self.at += 1;
                let inner = self.join_chain()?;
                if self.peek() != Some(Token::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                return Ok(inner);
            }
            Some(_) => return self.err("expected a variable, constant or `(`"),
            None => return self.err("unexpected end of input"),
        };
        self.at += 1;
        Ok(t)
    }
}

/// Parses without checking the signature or context arity.
pub fn parse_term_unchecked(text: &str) -> Result<Term, TermError> {
    let mut p = Parser { tokens: tokenize(text)?, at: 0, end: text.len() };
    let t = p.join_chain()?;
    if p.at != p.tokens.len() {
        return p.err("trailing input");
    }
    Ok(t)
}

/// Parses `text` as a term over `x1..x{arity}` in signature `sig`.
///
/// `∧` binds tighter than `∨`, both associate to the left, and `′` is
/// postfix. The ASCII spellings `\/`, `/\` and `'` are accepted.
pub fn parse_term(text: &str, arity: usize, sig: Signature) -> Result<Term, TermError> {
    let t = parse_term_unchecked(text)?;
    t.check_well_formed(arity, sig)?;
    Ok(t)
}

/// Concatenated left-to-right variable occurrences of a tuple of terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableListing(pub Vec<usize>);

pub fn variable_listing(terms: &[Term]) -> VariableListing {
    let mut out = Vec::new();
    for t in terms {
        t.push_variables(&mut out);
    }
    VariableListing(out)
}

impl VariableListing {
    /// Whether this occurrence sequence over `x1..x{arity}` is allowed by `rules`.
    pub fn satisfies(&self, arity: usize, rules: StructuralRules) -> bool {
        let seq = &self.0;
        if seq.iter().any(|&v| v == 0 || v > arity) {
            return false;
        }
        if !rules.weakening() {
            let mut seen = vec![false; arity + 1];
            for &v in seq {
                seen[v] = true;
            }
            if !seen[1..].iter().all(|&b| b) {
                return false;
            }
        }
        if !rules.exchange() && seq.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if !rules.contraction() {
            let mut seen = vec![false; arity + 1];
            for &v in seq {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// Occurrence discipline for a tuple of terms, read as one concatenated listing.
pub fn check_discipline(terms: &[Term], arity: usize, rules: StructuralRules) -> bool {
    variable_listing(terms).satisfies(arity, rules)
}
