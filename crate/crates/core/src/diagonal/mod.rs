//! Diagonal fixed points and size certificates.
//!
//! For a formula `d` with one free variable `v`, [`diagonalize`] builds
//! `theta = d[v := sub(y, y)]`, takes its code `n`, and returns
//! `alpha = d[v := sub(N[n], N[n])]`. The term `sub(N[n], N[n])` evaluates to
//! the code of `alpha` itself. That code is far too long to write out, so the
//! check runs on compressed digit runs: the evaluator splices the numeral
//! into the code of `theta`, and independently `alpha` is encoded straight
//! from its syntax tree.
//!
//! A formula can never contain the numeral of its own code: under a
//! positional scheme the code of a formula of `L` symbols is at least
//! `base^(L-1) >= L`, and the numeral for it has one more symbol than that.
//! [`self_numeral_certificate`] computes both sides exactly.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;

use crate::numbering::{code_of, encode_size, CodeValue, CodecScheme, GoedelNumber, SizeReport};
use crate::syntax::{match_instance, parse, Formula, Term, Var};
use crate::{Error, Result};

mod eval;
mod gamma;

pub use eval::{eval_sub_term, eval_value};
pub use gamma::{
    gamma_divergence, gamma_prefix, numeral_equations, successor_equations, GammaPrefix,
};

/// Output of [`diagonalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointResult {
    pub alpha: Formula,
    pub d: Formula,
    pub var: Var,
    /// Code of `theta`; `alpha` is `d[var := sub(N[n], N[n])]`.
    pub n: GoedelNumber,
    /// Value of `sub(N[n], N[n])`.
    pub witness_code: CodeValue,
    /// Size of the code of `alpha`, computed from its syntax tree.
    pub alpha_code_report: SizeReport,
    pub verified: bool,
}

impl FixedPointResult {
    /// The diagonal term inside `alpha`.
    pub fn term(&self) -> Term {
        diagonal_term(&self.n.0)
    }

    /// `alpha` rebuilt with `n + 1` in place of `n`; never a fixed point.
    pub fn tampered(&self) -> Formula {
        self.d
            .replace_free(self.var, &diagonal_term(&(&self.n.0 + 1u32)))
    }
}

fn diagonal_term(n: &BigUint) -> Term {
    Term::sub_app(Term::numeral(n.clone()), Term::numeral(n.clone()))
}

fn single_free_var(d: &Formula, v: Var) -> Result<()> {
    let free = d.free_vars();
    if free.len() != 1 {
        return Err(Error::Arity { found: free.len() });
    }
    if !free.contains(&v) {
        return Err(Error::VariableNotFree(v));
    }
    Ok(())
}

/// The diagonal fixed point of `d` in `v`. Positional schemes only.
pub fn diagonalize(d: &Formula, v: Var, scheme: &CodecScheme) -> Result<FixedPointResult> {
    scheme.require_base()?;
    single_free_var(d, v)?;
    let y = [Var::Y, Var::Z, Var::X, Var::R, Var::W, Var::U, Var::V]
        .into_iter()
        .find(|y| *y != v && !d.mentions(*y))
        .unwrap_or(v);
    let theta = d.replace_free(v, &Term::sub_app(Term::Var(y), Term::Var(y)));
    let n = code_of(&theta, scheme)?
        .exact()
        .cloned()
        .ok_or_else(|| Error::CapExceeded(encode_size(&theta, scheme).ok()))?;
    let term = diagonal_term(&n.0);
    let alpha = d.replace_free(v, &term);
    let witness_code = eval_value(&term, scheme)?;
    let alpha_code_report = encode_size(&alpha, scheme)?;
    let verified = verify_fixed_point(&alpha, d, v, scheme);
    Ok(FixedPointResult {
        alpha,
        d: d.clone(),
        var: v,
        n,
        witness_code,
        alpha_code_report,
        verified,
    })
}

/// Whether `alpha = d[v := t]` for a `sub` term `t` whose value is the code
/// of `alpha`. Compares compressed codes and their size reports, so nothing
/// is materialized.
pub fn verify_fixed_point(alpha: &Formula, d: &Formula, v: Var, scheme: &CodecScheme) -> bool {
    let Some(base) = scheme.base() else {
        return false;
    };
    let Some(Some(t @ Term::SubApp(..))) = match_instance(d, v, alpha) else {
        return false;
    };
    let (Ok(witness), Ok(code)) = (eval_value(&t, scheme), code_of(alpha, scheme)) else {
        return false;
    };
    let (Ok(report), witness_digits) = (encode_size(alpha, scheme), witness.digit_length(base))
    else {
        return false;
    };
    report.digit_length == witness_digits
        && code.digit_length(base) == witness_digits
        && witness.same_value(&code, base)
}

/// `D(x) = Ar ~P(r, x)`: no proof has the code `x` as conclusion.
pub fn goedel_template() -> Formula {
    parse("Ar~P(r,x)").expect("fixed text parses")
}

/// The Goedel sentence: the fixed point of [`goedel_template`] in `x`.
pub fn goedel_sentence(scheme: &CodecScheme) -> Result<FixedPointResult> {
    diagonalize(&goedel_template(), Var::X, scheme)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    SelfContainmentImpossible,
    Inconclusive,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::SelfContainmentImpossible => "impossible",
            Conclusion::Inconclusive => "inconclusive",
        })
    }
}

/// Compares a formula's length with the length of the numeral of its code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub formula_symbols: BigUint,
    /// `code + 1`.
    pub numeral_symbols: CodeValue,
    pub conclusion: Conclusion,
}

/// Size certificate that `f` cannot contain the numeral of its own code.
pub fn self_numeral_certificate(f: &Formula, scheme: &CodecScheme) -> Result<Certificate> {
    let base = scheme.require_base()?;
    let code = code_of(f, scheme)?.to_compressed(base).incremented();
    let formula_symbols = f.symbol_count();
    let longer = code.cmp(&crate::numbering::CompressedCode::from_number(
        &formula_symbols,
        base,
    )) == Ordering::Greater;
    let conclusion = if longer {
        Conclusion::SelfContainmentImpossible
    } else {
        Conclusion::Inconclusive
    };
    Ok(Certificate {
        formula_symbols,
        numeral_symbols: CodeValue::from_compressed(code, scheme),
        conclusion,
    })
}

/// Which variable of the substitution term is read as free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    ZFree,
    YFree,
}

impl Reading {
    pub fn var(self) -> Var {
        match self {
            Reading::ZFree => Var::Z,
            Reading::YFree => Var::Y,
        }
    }
}

/// The steps of the literal self-referential construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralReport {
    pub reading: Reading,
    /// `~ErEx(P(r,x) & x = sub(v, v))` with `v` the free variable.
    pub template: Formula,
    /// Code of the template.
    pub n: GoedelNumber,
    /// The template with `N[n]` for `v`.
    pub instance: Formula,
    /// Value of `sub(N[n], N[n])`, the code of the instance.
    pub instance_code: CodeValue,
    pub instance_report: SizeReport,
    pub fixed_point: bool,
    /// Why the instance cannot hold the numeral of its own code literally.
    pub certificate: Certificate,
}

/// Runs the literal construction under `reading`. The self-referential
/// position holds the object term `sub(N[n], N[n])`; writing the numeral of
/// its value there instead is ruled out by the certificate.
pub fn literal_pipeline(reading: Reading, scheme: &CodecScheme) -> Result<LiteralReport> {
    let v = reading.var();
    let d = parse("~ErEx(P(r,x)&x=w)").expect("fixed text parses");
    let template = d.replace_free(Var::W, &Term::sub_app(Term::Var(v), Term::Var(v)));
    let n = code_of(&template, scheme)?
        .exact()
        .cloned()
        .ok_or(Error::CapExceeded(None))?;
    let term = diagonal_term(&n.0);
    let instance = template.replace_free(v, &Term::numeral(n.0.clone()));
    let instance_code = eval_value(&term, scheme)?;
    let instance_report = encode_size(&instance, scheme)?;
    let fixed_point = verify_fixed_point(&instance, &d, Var::W, scheme);
    let certificate = self_numeral_certificate(&instance, scheme)?;
    Ok(LiteralReport {
        reading,
        template,
        n,
        instance,
        instance_code,
        instance_report,
        fixed_point,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbering::encode_formula;

    fn pos() -> CodecScheme {
        CodecScheme::positional()
    }

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn diagonalize_w_equals_w() {
        let r = diagonalize(&f("w=w"), Var::W, &pos()).unwrap();
        assert!(r.verified);
        let t = r.term();
        assert_eq!(r.alpha, Formula::equals(t.clone(), t));
        let theta = f("sub(y,y)=sub(y,y)");
        assert_eq!(r.n, encode_formula(&theta, &pos()).unwrap());
        assert!(!r.alpha_code_report.materializable);
        assert_eq!(
            r.alpha_code_report.digit_length,
            r.witness_code.digit_length(32)
        );
        assert!(!verify_fixed_point(&r.tampered(), &r.d, r.var, &pos()));
    }

    #[test]
    fn arity_and_scheme_errors() {
        assert_eq!(
            diagonalize(&f("0=0"), Var::X, &pos()),
            Err(Error::Arity { found: 0 })
        );
        assert_eq!(
            diagonalize(&f("x=y"), Var::X, &pos()),
            Err(Error::Arity { found: 2 })
        );
        assert_eq!(
            diagonalize(&f("x=0"), Var::Y, &pos()),
            Err(Error::VariableNotFree(Var::Y))
        );
        assert_eq!(
            diagonalize(&f("x=0"), Var::X, &CodecScheme::prime_power()),
            Err(Error::UnsupportedScheme)
        );
    }

    #[test]
    fn non_diagonal_instances_fail() {
        let d = f("x=0");
        assert!(!verify_fixed_point(&f("N[5]=0"), &d, Var::X, &pos()));
        assert!(!verify_fixed_point(
            &f("sub(N[20641],0)=0"),
            &d,
            Var::X,
            &pos()
        ));
        assert!(!verify_fixed_point(&f("0=0"), &d, Var::X, &pos()));
    }

    #[test]
    fn goedel_sentence_shape() {
        let g = goedel_sentence(&pos()).unwrap();
        assert!(g.verified);
        let Formula::Forall(Var::R, body) = &g.alpha else {
            panic!("{}", g.alpha)
        };
        assert!(matches!(&**body, Formula::Not(p) if matches!(**p, Formula::Proves(..))));
        assert_eq!(goedel_sentence(&pos()).unwrap(), g);
        assert_eq!(g.alpha_code_report.symbol_count, g.alpha.symbol_count());
    }

    #[test]
    fn certificates() {
        let c = self_numeral_certificate(&f("0=0"), &pos()).unwrap();
        assert_eq!(c.formula_symbols, BigUint::from(3u32));
        assert_eq!(
            c.numeral_symbols,
            CodeValue::Exact(GoedelNumber::from(1186))
        );
        assert_eq!(c.conclusion, Conclusion::SelfContainmentImpossible);
        let c = self_numeral_certificate(&f("z=0"), &pos()).unwrap();
        assert_eq!(
            c.numeral_symbols,
            CodeValue::Exact(GoedelNumber::from(20642))
        );
        assert_eq!(
            self_numeral_certificate(&f("0=0"), &CodecScheme::prime_power()),
            Err(Error::UnsupportedScheme)
        );
    }

    #[test]
    fn literal_readings() {
        let z = literal_pipeline(Reading::ZFree, &pos()).unwrap();
        let y = literal_pipeline(Reading::YFree, &pos()).unwrap();
        assert_ne!(z.n, y.n);
        for r in [&z, &y] {
            assert!(r.fixed_point);
            assert_eq!(
                r.certificate.conclusion,
                Conclusion::SelfContainmentImpossible
            );
            assert_eq!(
                r.instance_report.digit_length,
                r.instance_code.digit_length(32)
            );
        }
        assert_eq!(literal_pipeline(Reading::ZFree, &pos()).unwrap(), z);
    }
}
