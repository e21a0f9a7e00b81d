//! Recursive-descent parser for the concrete grammar.
//!
//! ```text
//! formula := implies ("<->" formula)?
//! implies := or ("->" implies)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | ("E" | "A") var [":"] unary | atom
//! atom    := "P(" term "," term ")" | term "=" term | "(" formula ")"
//! term    := prod ("+" prod)*
//! prod    := prim ("*" prim)*
//! prim    := "s" prim | "0" | "N[" digits "]" | var | "sub(" term "," term ")" | "(" term ")"
//! ```
//!
//! A `(` in atom position is tried as the start of an equation first and
//! reparsed as a parenthesized formula when that fails.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{Formula, Symbol, SymbolSeq, Term, Var};

const MAX_DEPTH: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset into the text, or symbol index for symbol input.
    pub offset: usize,
    /// What would have been accepted at `offset`.
    pub expected: Vec<&'static str>,
}

impl SyntaxError {
    pub(crate) fn new(offset: usize, expected: &[&'static str]) -> Self {
        let mut e = SyntaxError {
            offset,
            expected: expected.to_vec(),
        };
        e.expected.sort_unstable();
        e.expected.dedup();
        e
    }

    /// Keeps the error that got further; unions expectations on a tie.
    fn merge(self, other: SyntaxError) -> SyntaxError {
        use core::cmp::Ordering::*;
        match self.offset.cmp(&other.offset) {
            Greater => self,
            Less => other,
            Equal => {
                let mut all = self.expected;
                all.extend(other.expected);
                SyntaxError::new(self.offset, &all)
            }
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: expected ", self.offset)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(" or ")?;
            }
            f.write_str(e)?;
        }
        Ok(())
    }
}

impl core::error::Error for SyntaxError {}

#[derive(Clone, Debug)]
struct Tok {
    sym: Symbol,
    /// Only successor tokens carry counts above one.
    count: BigUint,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Tok>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut toks: Vec<Tok> = Vec::new();
    let mut i = 0;
    let one = BigUint::one();
    let tok = |sym, offset| Tok {
        sym,
        count: BigUint::one(),
        offset,
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let sym = match c {
            b'0' => Symbol::Zero,
            b's' if rest.starts_with("sub") => {
                i += 2;
                Symbol::Sub
            }
            b's' => Symbol::Succ,
            b'+' => Symbol::Plus,
            b'*' => Symbol::Times,
            b'=' => Symbol::Equals,
            b'(' => Symbol::LParen,
            b')' => Symbol::RParen,
            b',' => Symbol::Comma,
            b'~' => Symbol::Not,
            b'&' => Symbol::And,
            b'|' => Symbol::Or,
            b'-' if rest.starts_with("->") => {
                i += 1;
                Symbol::Implies
            }
            b'<' if rest.starts_with("<->") => {
                i += 2;
                Symbol::Iff
            }
            b'E' => Symbol::Exists,
            b'A' => Symbol::Forall,
            b'P' => Symbol::Proves,
            b'N' => {
                let digits_start = i + 2;
                let close = rest.find(']');
                let ok = rest.as_bytes().get(1) == Some(&b'[')
                    && close.is_some_and(|k| k > 2)
                    && rest[2..close.unwrap()].bytes().all(|b| b.is_ascii_digit());
                if !ok {
                    return Err(SyntaxError::new(start, &["numeral N[<decimal>]"]));
                }
                let close = i + close.unwrap();
                let k: BigUint = text[digits_start..close].parse().unwrap();
                if !k.is_zero() {
                    toks.push(Tok {
                        sym: Symbol::Succ,
                        count: k,
                        offset: start,
                    });
                }
                toks.push(tok(Symbol::Zero, start));
                i = close + 1;
                continue;
            }
            b':' => {
                let after_binder = toks.len() >= 2
                    && matches!(toks[toks.len() - 1].sym, Symbol::Var(_))
                    && matches!(toks[toks.len() - 2].sym, Symbol::Exists | Symbol::Forall);
                if !after_binder {
                    return Err(SyntaxError::new(start, &["symbol"]));
                }
                i += 1;
                continue;
            }
            _ => match Var::from_name(c as char) {
                Some(v) => Symbol::Var(v),
                None => return Err(SyntaxError::new(start, &["symbol"])),
            },
        };
        i += 1;
        toks.push(Tok {
            sym,
            count: one.clone(),
            offset: start,
        });
    }
    Ok(toks)
}

/// Lexes text into its symbol sequence without checking the grammar.
pub fn lex_symbols(text: &str) -> Result<SymbolSeq, SyntaxError> {
    let mut seq = SymbolSeq::new();
    for t in lex(text)? {
        seq.push_run(t.sym, &t.count);
    }
    Ok(seq)
}

fn tokens_of(seq: &SymbolSeq) -> Result<Vec<Tok>, SyntaxError> {
    let mut toks = Vec::new();
    let mut offset = 0usize;
    for run in seq {
        if run.item == Symbol::Succ {
            toks.push(Tok {
                sym: Symbol::Succ,
                count: run.count.clone(),
                offset,
            });
            offset = offset.saturating_add(run.count.to_usize().unwrap_or(usize::MAX));
            continue;
        }
        let n = match run.count.to_usize() {
            Some(n) if n <= MAX_DEPTH * 4 => n,
            _ => {
                return Err(SyntaxError::new(
                    offset,
                    &["shorter run of repeated symbols"],
                ))
            }
        };
        for _ in 0..n {
            toks.push(Tok {
                sym: run.item,
                count: BigUint::one(),
                offset,
            });
            offset = offset.saturating_add(1);
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    end: usize,
    depth: usize,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser<'_> {
    fn peek(&self) -> Option<Symbol> {
        self.toks.get(self.pos).map(|t| t.sym)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn err<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(SyntaxError::new(self.offset(), expected))
    }

    fn eat(&mut self, sym: Symbol) -> bool {
        if self.peek() == Some(sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: Symbol, name: &'static str) -> PResult<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            self.err(&[name])
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.err(&["shallower nesting"]);
        }
        Ok(())
    }

    fn formula(&mut self) -> PResult<Formula> {
        self.enter()?;
        let left = self.implies()?;
        let f = if self.eat(Symbol::Iff) {
            Formula::iff(left, self.formula()?)
        } else {
            left
        };
        self.depth -= 1;
        Ok(f)
    }

    fn implies(&mut self) -> PResult<Formula> {
        let left = self.or()?;
        if self.eat(Symbol::Implies) {
            self.enter()?;
            let right = self.implies()?;
            self.depth -= 1;
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut left = self.and()?;
        while self.eat(Symbol::Or) {
            left = Formula::or(left, self.and()?);
        }
        Ok(left)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut left = self.unary()?;
        while self.eat(Symbol::And) {
            left = Formula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> PResult<Formula> {
        self.enter()?;
        let f = match self.peek() {
            Some(Symbol::Not) => {
                self.pos += 1;
                Formula::not(self.unary()?)
            }
            Some(q @ (Symbol::Exists | Symbol::Forall)) => {
                self.pos += 1;
                let v = match self.peek() {
                    Some(Symbol::Var(v)) => v,
                    _ => return self.err(&["variable"]),
                };
                self.pos += 1;
                let body = self.unary()?;
                if q == Symbol::Exists {
                    Formula::exists(v, body)
                } else {
                    Formula::forall(v, body)
                }
            }
            _ => self.atom()?,
        };
        self.depth -= 1;
        Ok(f)
    }

    fn atom(&mut self) -> PResult<Formula> {
        match self.peek() {
            Some(Symbol::Proves) => {
                self.pos += 1;
                self.expect(Symbol::LParen, "'('")?;
                let r = self.term()?;
                self.expect(Symbol::Comma, "','")?;
                let s = self.term()?;
                self.expect(Symbol::RParen, "')'")?;
                Ok(Formula::proves(r, s))
            }
            Some(Symbol::LParen) => {
                let start = self.pos;
                let saved_depth = self.depth;
                let as_equation = self.equation();
                match as_equation {
                    Ok(f) => Ok(f),
                    Err(e1) => {
                        self.pos = start + 1;
                        self.depth = saved_depth;
                        let inner = self.formula().and_then(|f| {
                            self.expect(Symbol::RParen, "')'")?;
                            Ok(f)
                        });
                        inner.map_err(|e2| e1.merge(e2))
                    }
                }
            }
            None => self.err(&["formula"]),
            _ => {
                let start = self.offset();
                self.equation().map_err(|e| {
                    if e.offset == start {
                        let at = e.offset;
                        e.merge(SyntaxError::new(at, &["formula"]))
                    } else {
                        e
                    }
                })
            }
        }
    }

    fn equation(&mut self) -> PResult<Formula> {
        let a = self.term()?;
        self.expect(Symbol::Equals, "'='")?;
        let b = self.term()?;
        Ok(Formula::equals(a, b))
    }

    fn term(&mut self) -> PResult<Term> {
        let mut left = self.prod()?;
        while self.eat(Symbol::Plus) {
            left = Term::plus(left, self.prod()?);
        }
        Ok(left)
    }

    fn prod(&mut self) -> PResult<Term> {
        let mut left = self.prim()?;
        while self.eat(Symbol::Times) {
            left = Term::times(left, self.prim()?);
        }
        Ok(left)
    }

    fn prim(&mut self) -> PResult<Term> {
        self.enter()?;
        let t = match self.peek() {
            Some(Symbol::Succ) => {
                let count = self.toks[self.pos].count.clone();
                self.pos += 1;
                let inner = self.prim()?;
                if inner.numeral_value().is_none() {
                    let nested = count.to_usize().unwrap_or(usize::MAX);
                    if nested.saturating_add(self.depth) > MAX_DEPTH {
                        return self.err(&["shallower nesting"]);
                    }
                }
                Term::succ_n(inner, &count)
            }
            Some(Symbol::Zero) => {
                self.pos += 1;
                Term::Zero
            }
            Some(Symbol::Var(v)) => {
                self.pos += 1;
                Term::Var(v)
            }
            Some(Symbol::Sub) => {
                self.pos += 1;
                self.expect(Symbol::LParen, "'('")?;
                let a = self.term()?;
                self.expect(Symbol::Comma, "','")?;
                let b = self.term()?;
                self.expect(Symbol::RParen, "')'")?;
                Term::sub_app(a, b)
            }
            Some(Symbol::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Symbol::RParen, "')'")?;
                t
            }
            _ => return self.err(&["term"]),
        };
        self.depth -= 1;
        Ok(t)
    }

    fn finish(&self) -> PResult<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.err(&["end of input"])
        }
    }
}

fn run_formula(toks: &[Tok], end: usize) -> Result<Formula, SyntaxError> {
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        depth: 0,
    };
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a formula written in the concrete grammar.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let toks = lex(text)?;
    run_formula(&toks, text.len())
}

pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        depth: 0,
    };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses a symbol sequence with the same grammar. Offsets count symbols.
pub(crate) fn parse_symbols(seq: &SymbolSeq) -> Result<Formula, SyntaxError> {
    let toks = tokens_of(seq)?;
    let end = toks.last().map_or(0, |t| {
        t.offset
            .saturating_add(t.count.to_usize().unwrap_or(usize::MAX))
    });
    run_formula(&toks, end)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_atom() {
        assert_eq!(
            parse("0=0").unwrap(),
            Formula::equals(Term::Zero, Term::Zero)
        );
    }

    #[test]
    fn negated_existential_with_numeral() {
        let f = parse("~(Er:Ex:(P(r,x) & x=N[5]))").unwrap();
        let expected = Formula::not(Formula::exists(
            Var::R,
            Formula::exists(
                Var::X,
                Formula::and(
                    Formula::proves(Term::Var(Var::R), Term::Var(Var::X)),
                    Formula::equals(Term::Var(Var::X), Term::numeral(5u32)),
                ),
            ),
        ));
        assert_eq!(f, expected);
        assert_eq!(f.render(), "~ErEx(P(r,x)&x=sssss0)");
    }

    #[test]
    fn successor_letter_is_not_a_variable() {
        assert!(parse("~(Er:Es:(P(r,s) & s=N[5]))").is_err());
    }

    #[test]
    fn truncated_input() {
        let e = parse("0=").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.expected.contains(&"term"));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse("x+y*z=0").unwrap().render(), "x+(y*z)=0");
        assert_eq!(parse("0=0->0=0->0=0").unwrap().render(), "0=0->(0=0->0=0)");
        assert_eq!(parse("0=0&0=0&0=0").unwrap().render(), "(0=0&0=0)&0=0");
        assert_eq!(parse("((x+y))*z=0").unwrap().render(), "(x+y)*z=0");
        assert_eq!(parse("~0=0").unwrap().render(), "~(0=0)");
    }

    #[test]
    fn colon_only_after_binder() {
        assert!(parse("Ax:(x=x)").is_ok());
        assert!(parse("0:=0").is_err());
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let mut s = alloc::string::String::new();
        for _ in 0..5000 {
            s.push('~');
        }
        s.push_str("0=0");
        assert!(parse(&s).is_err());
    }
}
