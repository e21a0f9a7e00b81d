use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::numbering::{code_of, encode_size, CodecScheme, SizeReport};
use crate::syntax::{Formula, Term, Var};
use crate::{Error, Result};

/// `~(N[g(Z)] = N[g(s1)]) & ... & ~(N[g(Z)] = N[g(sk)])`, left-associated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPrefix {
    pub k: usize,
    pub prefix: Formula,
    pub report: SizeReport,
}

fn code_numeral(f: &Formula, scheme: &CodecScheme) -> Result<Term> {
    let code = code_of(f, scheme)?;
    let n = code.exact().ok_or(Error::CapExceeded(None))?;
    Ok(Term::numeral(n.0.clone()))
}

/// The first `k` conjuncts. Every `s` must have exactly one free variable.
pub fn gamma_prefix(
    k: usize,
    s: &[Formula],
    z: &Formula,
    scheme: &CodecScheme,
) -> Result<GammaPrefix> {
    scheme.require_base()?;
    if k == 0 || k > s.len() {
        return Err(Error::Bounds {
            k,
            available: s.len(),
        });
    }
    let zn = code_numeral(z, scheme)?;
    let mut prefix: Option<Formula> = None;
    for si in &s[..k] {
        let found = si.free_vars().len();
        if found != 1 {
            return Err(Error::Arity { found });
        }
        let conjunct = Formula::not(Formula::equals(zn.clone(), code_numeral(si, scheme)?));
        prefix = Some(match prefix {
            None => conjunct,
            Some(p) => Formula::and(p, conjunct),
        });
    }
    let prefix = prefix.expect("k >= 1");
    let report = encode_size(&prefix, scheme)?;
    Ok(GammaPrefix { k, prefix, report })
}

/// Rows `(k, symbol_count)` for `k = 1..=k_max` over the first `k_max`
/// formulas of `generator`.
pub fn gamma_divergence(
    generator: impl IntoIterator<Item = Formula>,
    k_max: usize,
    z: &Formula,
    scheme: &CodecScheme,
) -> Result<Vec<(usize, BigUint)>> {
    let s: Vec<Formula> = generator.into_iter().take(k_max).collect();
    (1..=k_max)
        .map(|k| gamma_prefix(k, &s, z, scheme).map(|g| (k, g.report.symbol_count)))
        .collect()
}

/// `z = N[i]` for `i = 1, 2, ...`.
pub fn numeral_equations() -> impl Iterator<Item = Formula> {
    (1u32..).map(|i| Formula::equals(Term::Var(Var::Z), Term::numeral(i)))
}

/// `s^i z = 0` for `i = 1, 2, ...`; each is refutable in arithmetic.
pub fn successor_equations() -> impl Iterator<Item = Formula> {
    (1u32..).map(|i| {
        Formula::equals(
            Term::succ_n(Term::Var(Var::Z), &BigUint::from(i)),
            Term::Zero,
        )
    })
}
