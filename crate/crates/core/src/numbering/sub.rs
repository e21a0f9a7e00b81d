use alloc::vec::Vec;

use num_bigint::BigUint;

use super::codec::{decode_compressed, decode_formula, encode, encode_compressed};
use super::{CodeValue, CodecScheme, CompressedCode, GoedelNumber, SchemeKind, SizeReport};
use crate::error::DecodeFailure;
use crate::runs::RunSeq;
use crate::syntax::{emit_formula, Emit, Formula, Symbol, Term, Var};
use crate::{Error, Result};

/// The numeral `s…s0` naming `n`: `n + 1` symbols.
pub fn numeral_of(n: &GoedelNumber) -> Term {
    Term::numeral(n.0.clone())
}

/// Exact size of the positional code of `f`, computed from the compressed
/// numerals; one digit per symbol.
pub fn encode_size(f: &Formula, scheme: &CodecScheme) -> Result<SizeReport> {
    scheme.require_base()?;
    Ok(SizeReport::positional(f.symbol_count(), scheme))
}

/// The code of `f`, exact when it fits the cap and compressed otherwise.
pub fn code_of(f: &Formula, scheme: &CodecScheme) -> Result<CodeValue> {
    match scheme.kind() {
        SchemeKind::Positional { .. } => Ok(CodeValue::from_compressed(
            encode_compressed(&f.symbols(), scheme)?,
            scheme,
        )),
        SchemeKind::PrimePower => Ok(CodeValue::Exact(encode(&f.symbols(), scheme)?)),
    }
}

/// `sub(y, z, j)`: the code of the formula coded by `y` with every free `z`
/// replaced by the numeral for `j`.
///
/// Positional codes are edited in place: each digit of a free `z` is replaced
/// by the digit run of `s^j 0`. Prime-power codes go through the syntax tree.
pub fn sub(y: &GoedelNumber, z: Var, j: &BigUint, scheme: &CodecScheme) -> Result<GoedelNumber> {
    match scheme.kind() {
        SchemeKind::Positional { base } => {
            let spliced = sub_code(&CompressedCode::from_number(&y.0, base), z, j, scheme)?;
            let report = SizeReport::positional(spliced.digit_length(), scheme);
            if !report.materializable {
                return Err(Error::CapExceeded(Some(report)));
            }
            Ok(spliced.to_number())
        }
        SchemeKind::PrimePower => {
            let f = decode_formula(y, scheme)?;
            if !f.free_vars().contains(&z) {
                return Err(Error::VariableNotFree(z));
            }
            encode(
                &f.substitute(z, &Term::numeral(j.clone()))?.symbols(),
                scheme,
            )
        }
    }
}

/// Digit-splicing `sub` on a compressed positional code; the result is never
/// materialized.
pub fn sub_code(
    y: &CompressedCode,
    z: Var,
    j: &BigUint,
    scheme: &CodecScheme,
) -> Result<CompressedCode> {
    let seq = decode_compressed(y, scheme)?;
    let f = Formula::from_symbols(&seq).map_err(DecodeFailure::NotAFormula)?;
    let sites = free_sites(&f, z);
    if sites.is_empty() {
        return Err(Error::VariableNotFree(z));
    }

    let table = scheme.table();
    let (succ, zero) = (table.code(Symbol::Succ), table.code(Symbol::Zero));
    let mut out = RunSeq::new();
    let mut next_site = sites.iter().peekable();
    for (i, run) in y.digits().iter().enumerate() {
        if next_site.peek() == Some(&&i) {
            next_site.next();
            out.push_run(succ, j);
            out.push(zero);
        } else {
            out.push_run(run.item, &run.count);
        }
    }
    Ok(CompressedCode::from_digits(y.base(), out))
}

/// Indices of the runs, in the canonical run sequence of `f`, holding a free
/// occurrence of `v`.
fn free_sites(f: &Formula, v: Var) -> Vec<usize> {
    struct Sites {
        v: Var,
        last: Option<Symbol>,
        runs: usize,
        found: Vec<usize>,
    }
    impl Sites {
        fn step(&mut self, sym: Symbol) {
            if self.last != Some(sym) {
                self.runs += 1;
                self.last = Some(sym);
            }
        }
    }
    impl Emit for Sites {
        fn symbol(&mut self, sym: Symbol, _count: &BigUint) {
            self.step(sym);
        }

        fn variable(&mut self, v: Var, free: bool) {
            self.step(Symbol::Var(v));
            if free && v == self.v {
                self.found.push(self.runs - 1);
            }
        }
    }
    let mut sites = Sites {
        v,
        last: None,
        runs: 0,
        found: Vec::new(),
    };
    emit_formula(f, &mut sites);
    sites.found
}
