//! Canonical rendering. Every printer (symbol runs, text, counters and the
//! code splicer in `numbering`) is driven by the same walk, so they agree on
//! the one canonical form by construction.

use alloc::string::String;
use core::fmt::Write;

use num_bigint::BigUint;
use num_traits::One;

use super::{Formula, Symbol, SymbolSeq, Term, Var};

/// Numerals with more successors than this print as `N[k]`.
pub const DEFAULT_DISPLAY_THRESHOLD: u64 = 16;

/// Receives the canonical symbol stream.
pub(crate) trait Emit {
    /// `count` copies of `sym`; `count >= 1`.
    fn symbol(&mut self, sym: Symbol, count: &BigUint);

    /// A variable occurrence. Binder positions report `free = false`.
    fn variable(&mut self, v: Var, free: bool) {
        let _ = free;
        self.symbol(Symbol::Var(v), &BigUint::one());
    }

    fn one(&mut self, sym: Symbol) {
        self.symbol(sym, &BigUint::one());
    }
}

/// Multiset of variables bound at the current position.
#[derive(Default, Debug)]
pub(crate) struct Bound([u32; 7]);

impl Bound {
    fn slot(v: Var) -> usize {
        Var::ALL.iter().position(|w| *w == v).unwrap()
    }

    pub(crate) fn push(&mut self, v: Var) {
        self.0[Self::slot(v)] += 1;
    }

    pub(crate) fn pop(&mut self, v: Var) {
        self.0[Self::slot(v)] -= 1;
    }

    pub(crate) fn contains(&self, v: Var) -> bool {
        self.0[Self::slot(v)] > 0
    }
}

pub(crate) fn emit_term(t: &Term, e: &mut impl Emit, bound: &mut Bound) {
    match t {
        Term::Var(v) => e.variable(*v, !bound.contains(*v)),
        Term::Zero => e.one(Symbol::Zero),
        Term::Numeral(k) => {
            if k.bits() > 0 {
                e.symbol(Symbol::Succ, k);
            }
            e.one(Symbol::Zero);
        }
        Term::Succ(a) => {
            e.one(Symbol::Succ);
            operand(a, e, bound);
        }
        Term::Plus(a, b) => {
            operand(a, e, bound);
            e.one(Symbol::Plus);
            operand(b, e, bound);
        }
        Term::Times(a, b) => {
            operand(a, e, bound);
            e.one(Symbol::Times);
            operand(b, e, bound);
        }
        Term::SubApp(a, b) => {
            e.one(Symbol::Sub);
            e.one(Symbol::LParen);
            emit_term(a, e, bound);
            e.one(Symbol::Comma);
            emit_term(b, e, bound);
            e.one(Symbol::RParen);
        }
    }
}

fn operand(t: &Term, e: &mut impl Emit, bound: &mut Bound) {
    if t.is_binary() {
        e.one(Symbol::LParen);
        emit_term(t, e, bound);
        e.one(Symbol::RParen);
    } else {
        emit_term(t, e, bound);
    }
}

pub(crate) fn emit_formula(f: &Formula, e: &mut impl Emit) {
    emit_formula_in(f, e, &mut Bound::default());
}

fn emit_formula_in(f: &Formula, e: &mut impl Emit, bound: &mut Bound) {
    match f {
        Formula::Equals(a, b) => {
            emit_term(a, e, bound);
            e.one(Symbol::Equals);
            emit_term(b, e, bound);
        }
        Formula::Proves(a, b) => {
            e.one(Symbol::Proves);
            e.one(Symbol::LParen);
            emit_term(a, e, bound);
            e.one(Symbol::Comma);
            emit_term(b, e, bound);
            e.one(Symbol::RParen);
        }
        Formula::Not(g) => {
            e.one(Symbol::Not);
            prefix_operand(g, e, bound);
        }
        Formula::Exists(v, g) | Formula::Forall(v, g) => {
            e.one(if matches!(f, Formula::Exists(..)) {
                Symbol::Exists
            } else {
                Symbol::Forall
            });
            e.variable(*v, false);
            bound.push(*v);
            prefix_operand(g, e, bound);
            bound.pop(*v);
        }
        Formula::And(a, b) => binary(a, Symbol::And, b, e, bound),
        Formula::Or(a, b) => binary(a, Symbol::Or, b, e, bound),
        Formula::Implies(a, b) => binary(a, Symbol::Implies, b, e, bound),
        Formula::Iff(a, b) => binary(a, Symbol::Iff, b, e, bound),
    }
}

// Infix operands of a prefix operator are wrapped: ~(0=0), Ax(x=x).
fn prefix_operand(g: &Formula, e: &mut impl Emit, bound: &mut Bound) {
    if g.is_binary() || matches!(g, Formula::Equals(..)) {
        e.one(Symbol::LParen);
        emit_formula_in(g, e, bound);
        e.one(Symbol::RParen);
    } else {
        emit_formula_in(g, e, bound);
    }
}

fn binary(a: &Formula, op: Symbol, b: &Formula, e: &mut impl Emit, bound: &mut Bound) {
    for (i, side) in [a, b].into_iter().enumerate() {
        if i == 1 {
            e.one(op);
        }
        if side.is_binary() {
            e.one(Symbol::LParen);
            emit_formula_in(side, e, bound);
            e.one(Symbol::RParen);
        } else {
            emit_formula_in(side, e, bound);
        }
    }
}

impl Emit for SymbolSeq {
    fn symbol(&mut self, sym: Symbol, count: &BigUint) {
        self.push_run(sym, count);
    }
}

#[derive(Default, Debug)]
pub(crate) struct Counter {
    pub(crate) total: BigUint,
}

impl Emit for Counter {
    fn symbol(&mut self, _sym: Symbol, count: &BigUint) {
        self.total += count;
    }
}

/// Text printer. Successor runs are held back until the next symbol shows
/// whether they end a numeral.
#[derive(Debug)]
pub(crate) struct TextWriter {
    out: String,
    pending_succ: BigUint,
    threshold: BigUint,
}

impl TextWriter {
    pub(crate) fn new(threshold: u64) -> Self {
        Self {
            out: String::new(),
            pending_succ: BigUint::default(),
            threshold: threshold.into(),
        }
    }

    fn flush(&mut self, next_is_zero: bool) -> bool {
        if self.pending_succ.bits() == 0 {
            return false;
        }
        let compressed = next_is_zero && self.pending_succ > self.threshold;
        if compressed {
            let _ = write!(self.out, "N[{}]", self.pending_succ);
        } else {
            let mut n = core::mem::take(&mut self.pending_succ);
            while n.bits() > 0 {
                self.out.push('s');
                n -= 1u32;
            }
        }
        self.pending_succ = BigUint::default();
        compressed
    }

    pub(crate) fn finish(mut self) -> String {
        self.flush(false);
        self.out
    }
}

impl Emit for TextWriter {
    fn symbol(&mut self, sym: Symbol, count: &BigUint) {
        if sym == Symbol::Succ {
            self.pending_succ += count;
            return;
        }
        let mut remaining = count.clone();
        if self.flush(sym == Symbol::Zero) {
            // the numeral already printed its final 0
            remaining -= 1u32;
        }
        while remaining.bits() > 0 {
            self.out.push_str(sym.text());
            remaining -= 1u32;
        }
    }
}
