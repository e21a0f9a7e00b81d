//! The object language: terms and formulas of first-order arithmetic with
//! `0`, `s`, `+`, `*`, the proof predicate `P` and the binary `sub` symbol.
//!
//! Numerals `s…s0` are stored run-length compressed as [`Term::Numeral`], so a
//! numeral with 10^60 successor symbols costs one big integer. Every value is
//! kept in *normal form*: a successor applied to `0` or to a numeral is merged
//! into a single numeral, and `Numeral(0)` is written [`Term::Zero`]. The
//! smart constructors and the parser only ever produce normal forms; use
//! [`Formula::normalized`] on hand-built trees before comparing.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::runs::RunSeq;
use crate::{Error, Result};

mod emit;
mod matching;
mod parse;

pub use emit::DEFAULT_DISPLAY_THRESHOLD;
pub(crate) use emit::{emit_formula, Emit};
pub use matching::match_instance;
pub use parse::{lex_symbols, parse, parse_term, SyntaxError};

/// The fixed variable supply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    R,
    W,
    U,
    V,
}

impl Var {
    pub const ALL: [Var; 7] = [Var::X, Var::Y, Var::Z, Var::R, Var::W, Var::U, Var::V];

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::R => 'r',
            Var::W => 'w',
            Var::U => 'u',
            Var::V => 'v',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl core::str::FromStr for Var {
    type Err = SyntaxError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(Var::from_name), chars.next()) {
            (Some(v), None) => Ok(v),
            _ => Err(SyntaxError::new(0, &["variable"])),
        }
    }
}

/// One letter of the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    Succ,
    Plus,
    Times,
    Equals,
    LParen,
    RParen,
    Comma,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Exists,
    Forall,
    Proves,
    Sub,
    Var(Var),
    /// Separates the lines of a coded proof; never inside a formula.
    ProofSep,
}

impl Symbol {
    /// Every symbol of the alphabet.
    pub const ALL: [Symbol; 25] = [
        Symbol::Zero,
        Symbol::Succ,
        Symbol::Plus,
        Symbol::Times,
        Symbol::Equals,
        Symbol::LParen,
        Symbol::RParen,
        Symbol::Comma,
        Symbol::Not,
        Symbol::And,
        Symbol::Or,
        Symbol::Implies,
        Symbol::Iff,
        Symbol::Exists,
        Symbol::Forall,
        Symbol::Proves,
        Symbol::Sub,
        Symbol::Var(Var::X),
        Symbol::Var(Var::Y),
        Symbol::Var(Var::Z),
        Symbol::Var(Var::R),
        Symbol::Var(Var::W),
        Symbol::Var(Var::U),
        Symbol::Var(Var::V),
        Symbol::ProofSep,
    ];

    /// The ASCII spelling used by the concrete grammar.
    pub fn text(self) -> &'static str {
        match self {
            Symbol::Zero => "0",
            Symbol::Succ => "s",
            Symbol::Plus => "+",
            Symbol::Times => "*",
            Symbol::Equals => "=",
            Symbol::LParen => "(",
            Symbol::RParen => ")",
            Symbol::Comma => ",",
            Symbol::Not => "~",
            Symbol::And => "&",
            Symbol::Or => "|",
            Symbol::Implies => "->",
            Symbol::Iff => "<->",
            Symbol::Exists => "E",
            Symbol::Forall => "A",
            Symbol::Proves => "P",
            Symbol::Sub => "sub",
            Symbol::Var(v) => match v {
                Var::X => "x",
                Var::Y => "y",
                Var::Z => "z",
                Var::R => "r",
                Var::W => "w",
                Var::U => "u",
                Var::V => "v",
            },
            Symbol::ProofSep => "\n",
        }
    }
}

/// A run-length encoded symbol sequence.
pub type SymbolSeq = RunSeq<Symbol>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Zero,
    /// `count` successor symbols followed by `0`.
    Numeral(BigUint),
    Succ(Box<Term>),
    Plus(Box<Term>, Box<Term>),
    Times(Box<Term>, Box<Term>),
    /// The object-language `sub(a, b)`.
    SubApp(Box<Term>, Box<Term>),
}

impl Term {
    /// The numeral for `n`, in normal form.
    pub fn numeral(n: impl Into<BigUint>) -> Term {
        let n = n.into();
        if n.is_zero() {
            Term::Zero
        } else {
            Term::Numeral(n)
        }
    }

    /// Successor, merging into numerals.
    pub fn succ(t: Term) -> Term {
        Term::succ_n(t, &BigUint::one())
    }

    pub(crate) fn succ_n(t: Term, n: &BigUint) -> Term {
        match t {
            Term::Zero => Term::numeral(n.clone()),
            Term::Numeral(k) => Term::Numeral(k + n),
            mut other => {
                let mut i = BigUint::zero();
                while &i < n {
                    other = Term::Succ(Box::new(other));
                    i += 1u32;
                }
                other
            }
        }
    }

    pub fn plus(a: Term, b: Term) -> Term {
        Term::Plus(Box::new(a), Box::new(b))
    }

    pub fn times(a: Term, b: Term) -> Term {
        Term::Times(Box::new(a), Box::new(b))
    }

    pub fn sub_app(a: Term, b: Term) -> Term {
        Term::SubApp(Box::new(a), Box::new(b))
    }

    /// The numeric value if this term is `0` or a numeral.
    pub fn numeral_value(&self) -> Option<BigUint> {
        match self {
            Term::Zero => Some(BigUint::zero()),
            Term::Numeral(k) => Some(k.clone()),
            _ => None,
        }
    }

    /// `t` when `self` is the successor of `t`; numerals count as successors.
    pub fn predecessor(&self) -> Option<Term> {
        match self {
            Term::Succ(t) => Some((**t).clone()),
            Term::Numeral(k) if !k.is_zero() => Some(Term::numeral(k - 1u32)),
            _ => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Zero | Term::Numeral(_) => true,
            Term::Succ(t) => t.is_closed(),
            Term::Plus(a, b) | Term::Times(a, b) | Term::SubApp(a, b) => {
                a.is_closed() && b.is_closed()
            }
        }
    }

    pub(crate) fn is_binary(&self) -> bool {
        matches!(self, Term::Plus(..) | Term::Times(..))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        match self {
            Term::Var(w) => *w == v,
            Term::Zero | Term::Numeral(_) => false,
            Term::Succ(t) => t.contains_var(v),
            Term::Plus(a, b) | Term::Times(a, b) | Term::SubApp(a, b) => {
                a.contains_var(v) || b.contains_var(v)
            }
        }
    }

    /// Rebuilds the term through the smart constructors.
    pub fn normalized(&self) -> Term {
        match self {
            Term::Var(v) => Term::Var(*v),
            Term::Zero => Term::Zero,
            Term::Numeral(k) => Term::numeral(k.clone()),
            Term::Succ(t) => Term::succ(t.normalized()),
            Term::Plus(a, b) => Term::plus(a.normalized(), b.normalized()),
            Term::Times(a, b) => Term::times(a.normalized(), b.normalized()),
            Term::SubApp(a, b) => Term::sub_app(a.normalized(), b.normalized()),
        }
    }

    fn replace(&self, v: Var, t: &Term) -> Term {
        match self {
            Term::Var(w) if *w == v => t.clone(),
            Term::Var(_) | Term::Zero | Term::Numeral(_) => self.clone(),
            Term::Succ(a) => Term::succ(a.replace(v, t)),
            Term::Plus(a, b) => Term::plus(a.replace(v, t), b.replace(v, t)),
            Term::Times(a, b) => Term::times(a.replace(v, t), b.replace(v, t)),
            Term::SubApp(a, b) => Term::sub_app(a.replace(v, t), b.replace(v, t)),
        }
    }

    /// Expanded symbol count; a numeral `s^k 0` counts `k + 1`.
    pub fn symbol_count(&self) -> BigUint {
        let mut counter = emit::Counter::default();
        emit::emit_term(self, &mut counter, &mut emit::Bound::default());
        counter.total
    }

    pub fn symbols(&self) -> SymbolSeq {
        let mut seq = SymbolSeq::new();
        emit::emit_term(self, &mut seq, &mut emit::Bound::default());
        seq
    }

    pub fn render(&self) -> String {
        self.render_with(DEFAULT_DISPLAY_THRESHOLD)
    }

    pub fn render_with(&self, threshold: u64) -> String {
        let mut w = emit::TextWriter::new(threshold);
        emit::emit_term(self, &mut w, &mut emit::Bound::default());
        w.finish()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Equals(Term, Term),
    /// The proof predicate `P(r, s)`.
    Proves(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(Var, Box<Formula>),
    Forall(Var, Box<Formula>),
}

impl Formula {
    pub fn equals(a: Term, b: Term) -> Formula {
        Formula::Equals(a, b)
    }

    pub fn proves(r: Term, s: Term) -> Formula {
        Formula::Proves(r, s)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn exists(v: Var, f: Formula) -> Formula {
        Formula::Exists(v, Box::new(f))
    }

    pub fn forall(v: Var, f: Formula) -> Formula {
        Formula::Forall(v, Box::new(f))
    }

    pub(crate) fn is_binary(&self) -> bool {
        matches!(
            self,
            Formula::And(..) | Formula::Or(..) | Formula::Implies(..) | Formula::Iff(..)
        )
    }

    /// Variables with at least one free occurrence.
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut emit::Bound::default(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut emit::Bound, out: &mut BTreeSet<Var>) {
        fn term(t: &Term, bound: &emit::Bound, out: &mut BTreeSet<Var>) {
            match t {
                Term::Var(v) if !bound.contains(*v) => {
                    out.insert(*v);
                }
                Term::Var(_) | Term::Zero | Term::Numeral(_) => {}
                Term::Succ(a) => term(a, bound, out),
                Term::Plus(a, b) | Term::Times(a, b) | Term::SubApp(a, b) => {
                    term(a, bound, out);
                    term(b, bound, out);
                }
            }
        }
        match self {
            Formula::Equals(a, b) | Formula::Proves(a, b) => {
                term(a, bound, out);
                term(b, bound, out);
            }
            Formula::Not(g) => g.collect_free(bound, out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, g) | Formula::Forall(v, g) => {
                bound.push(*v);
                g.collect_free(bound, out);
                bound.pop(*v);
            }
        }
    }

    /// Whether `v` occurs anywhere, bound, free or as a binder.
    pub fn mentions(&self, v: Var) -> bool {
        match self {
            Formula::Equals(a, b) | Formula::Proves(a, b) => a.contains_var(v) || b.contains_var(v),
            Formula::Not(g) => g.mentions(v),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.mentions(v) || b.mentions(v),
            Formula::Exists(w, g) | Formula::Forall(w, g) => *w == v || g.mentions(v),
        }
    }

    /// Replaces every free occurrence of `v` by the closed term `t`.
    pub fn substitute(&self, v: Var, t: &Term) -> Result<Formula> {
        if !t.is_closed() {
            return Err(Error::OpenTerm);
        }
        Ok(self.replace_free(v, t))
    }

    /// Free-occurrence replacement without the closedness check. Callers make
    /// sure no variable of `t` is captured.
    pub(crate) fn replace_free(&self, v: Var, t: &Term) -> Formula {
        match self {
            Formula::Equals(a, b) => Formula::Equals(a.replace(v, t), b.replace(v, t)),
            Formula::Proves(a, b) => Formula::Proves(a.replace(v, t), b.replace(v, t)),
            Formula::Not(g) => Formula::not(g.replace_free(v, t)),
            Formula::And(a, b) => Formula::and(a.replace_free(v, t), b.replace_free(v, t)),
            Formula::Or(a, b) => Formula::or(a.replace_free(v, t), b.replace_free(v, t)),
            Formula::Implies(a, b) => Formula::implies(a.replace_free(v, t), b.replace_free(v, t)),
            Formula::Iff(a, b) => Formula::iff(a.replace_free(v, t), b.replace_free(v, t)),
            Formula::Exists(w, _) | Formula::Forall(w, _) if *w == v => self.clone(),
            Formula::Exists(w, g) => Formula::exists(*w, g.replace_free(v, t)),
            Formula::Forall(w, g) => Formula::forall(*w, g.replace_free(v, t)),
        }
    }

    pub fn normalized(&self) -> Formula {
        match self {
            Formula::Equals(a, b) => Formula::Equals(a.normalized(), b.normalized()),
            Formula::Proves(a, b) => Formula::Proves(a.normalized(), b.normalized()),
            Formula::Not(g) => Formula::not(g.normalized()),
            Formula::And(a, b) => Formula::and(a.normalized(), b.normalized()),
            Formula::Or(a, b) => Formula::or(a.normalized(), b.normalized()),
            Formula::Implies(a, b) => Formula::implies(a.normalized(), b.normalized()),
            Formula::Iff(a, b) => Formula::iff(a.normalized(), b.normalized()),
            Formula::Exists(v, g) => Formula::exists(*v, g.normalized()),
            Formula::Forall(v, g) => Formula::forall(*v, g.normalized()),
        }
    }

    /// Symbol count of the fully expanded canonical rendering, computed from
    /// the compressed numerals by arithmetic.
    pub fn symbol_count(&self) -> BigUint {
        let mut counter = emit::Counter::default();
        emit_formula(self, &mut counter);
        counter.total
    }

    /// The canonical symbol sequence.
    pub fn symbols(&self) -> SymbolSeq {
        let mut seq = SymbolSeq::new();
        emit_formula(self, &mut seq);
        seq
    }

    /// Reads a symbol sequence that must be the canonical rendering of a
    /// formula. Unlike [`parse`], redundant parentheses are rejected, so
    /// every formula has exactly one symbol sequence.
    pub fn from_symbols(seq: &SymbolSeq) -> core::result::Result<Formula, SyntaxError> {
        let f = parse::parse_symbols(seq)?;
        if f.symbols() != *seq {
            return Err(SyntaxError::new(0, &["canonical form"]));
        }
        Ok(f)
    }

    pub fn render(&self) -> String {
        self.render_with(DEFAULT_DISPLAY_THRESHOLD)
    }

    /// Numerals longer than `threshold` successors print as `N[k]`.
    pub fn render_with(&self, threshold: u64) -> String {
        let mut w = emit::TextWriter::new(threshold);
        emit_formula(self, &mut w);
        w.finish()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl core::str::FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        parse(s)
    }
}

/// Free variables of `f`.
pub fn free_vars(f: &Formula) -> BTreeSet<Var> {
    f.free_vars()
}

/// Replaces the free occurrences of `v` in `f` by the closed term `t`.
pub fn substitute_ast(f: &Formula, v: Var, t: &Term) -> Result<Formula> {
    f.substitute(v, t)
}

pub fn symbol_count(f: &Formula) -> BigUint {
    f.symbol_count()
}

pub fn render(f: &Formula) -> String {
    f.render()
}

/// Text form of an arbitrary symbol sequence, numerals compressed past
/// `threshold`. Proof separators become line breaks.
pub fn render_symbols(seq: &SymbolSeq, threshold: u64) -> String {
    let mut w = emit::TextWriter::new(threshold);
    for run in seq {
        w.symbol(run.item, &run.count);
    }
    w.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn free_vars_examples() {
        assert_eq!(
            f("z=0")
                .free_vars()
                .into_iter()
                .collect::<alloc::vec::Vec<_>>(),
            vec![Var::Z]
        );
        assert!(f("Az:(z=0)").free_vars().is_empty());
        assert!(f("~(Er:Ex:(P(r,x) & x=N[5]))").free_vars().is_empty());
        let mixed = f("Ez(z=x)&z=y");
        assert_eq!(mixed.free_vars().len(), 3);
    }

    #[test]
    fn substitute_examples() {
        let two = Term::numeral(2u32);
        assert_eq!(
            substitute_ast(&f("z=0"), Var::Z, &two).unwrap().render(),
            "ss0=0"
        );
        let bound = f("Az:(z=0)");
        assert_eq!(substitute_ast(&bound, Var::Z, &two).unwrap(), bound);
        assert_eq!(
            substitute_ast(&f("z=0"), Var::Z, &Term::Var(Var::Y)),
            Err(Error::OpenTerm)
        );
    }

    #[test]
    fn substitution_merges_into_numerals() {
        let g = substitute_ast(&f("sz=0"), Var::Z, &Term::numeral(4u32)).unwrap();
        assert_eq!(g, Formula::equals(Term::numeral(5u32), Term::Zero));
    }

    #[test]
    fn symbol_count_examples() {
        assert_eq!(f("0=0").symbol_count(), BigUint::from(3u32));
        assert_eq!(
            Term::numeral(1185u32).symbol_count(),
            BigUint::from(1186u32)
        );
        assert_eq!(Term::numeral(0u32).symbol_count(), BigUint::one());
    }

    #[test]
    fn render_examples() {
        assert_eq!(Formula::equals(Term::Zero, Term::Zero).render(), "0=0");
        assert_eq!(
            Formula::equals(Term::numeral(3u32), Term::Zero).render(),
            "sss0=0"
        );
        assert_eq!(
            Formula::equals(Term::numeral(1_000_000u32), Term::Zero).render(),
            "N[1000000]=0"
        );
        assert_eq!(Term::Numeral(BigUint::zero()).render(), Term::Zero.render());
    }

    #[test]
    fn canonical_symbols_are_strict() {
        let canon = f("0=0").symbols();
        assert!(Formula::from_symbols(&canon).is_ok());
        let redundant = parse::lex_symbols("(0=0)").unwrap();
        assert!(Formula::from_symbols(&redundant).is_err());
    }
}
