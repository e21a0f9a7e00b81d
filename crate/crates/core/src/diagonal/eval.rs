use num_bigint::BigUint;

use crate::numbering::{
    decode_compressed, sub, sub_code, CodeValue, CodecScheme, GoedelNumber, SchemeKind, SizeReport,
};
use crate::syntax::{Formula, Term, Var};
use crate::{Error, Result};

/// Evaluates a closed term whose `sub` applications name formulas with one
/// free variable. Under a positional scheme the result stays compressed when
/// it is too long to materialize.
pub fn eval_value(t: &Term, scheme: &CodecScheme) -> Result<CodeValue> {
    match t {
        Term::Var(_) => Err(Error::OpenTerm),
        Term::Zero | Term::Numeral(_) => {
            Ok(CodeValue::Exact(GoedelNumber(t.numeral_value().unwrap())))
        }
        Term::Succ(a) => match eval_value(a, scheme)? {
            CodeValue::Exact(n) => Ok(CodeValue::Exact(GoedelNumber(n.0 + 1u32))),
            CodeValue::Compressed(c) => Ok(CodeValue::Compressed(c.incremented())),
        },
        Term::Plus(a, b) => {
            let (a, b) = (eval_exact(a, scheme)?, eval_exact(b, scheme)?);
            Ok(CodeValue::Exact(GoedelNumber(a + b)))
        }
        Term::Times(a, b) => {
            let (a, b) = (eval_exact(a, scheme)?, eval_exact(b, scheme)?);
            Ok(CodeValue::Exact(GoedelNumber(a * b)))
        }
        Term::SubApp(a, b) => {
            let y = eval_value(a, scheme)?;
            let j = eval_exact(b, scheme)?;
            match scheme.kind() {
                SchemeKind::Positional { base } => {
                    let y = y.to_compressed(base);
                    let f = Formula::from_symbols(&decode_compressed(&y, scheme)?)
                        .map_err(crate::error::DecodeFailure::NotAFormula)?;
                    let z = only_free_var(&f)?;
                    Ok(CodeValue::from_compressed(
                        sub_code(&y, z, &j, scheme)?,
                        scheme,
                    ))
                }
                SchemeKind::PrimePower => {
                    let y = y.exact().cloned().ok_or(Error::CapExceeded(None))?;
                    let f = crate::numbering::decode_formula(&y, scheme)?;
                    let z = only_free_var(&f)?;
                    Ok(CodeValue::Exact(sub(&y, z, &j, scheme)?))
                }
            }
        }
    }
}

/// [`eval_value`], materialized.
pub fn eval_sub_term(t: &Term, scheme: &CodecScheme) -> Result<GoedelNumber> {
    match eval_value(t, scheme)? {
        CodeValue::Exact(n) => Ok(n),
        CodeValue::Compressed(c) => Err(Error::CapExceeded(Some(SizeReport::positional(
            c.digit_length(),
            scheme,
        )))),
    }
}

fn eval_exact(t: &Term, scheme: &CodecScheme) -> Result<BigUint> {
    eval_sub_term(t, scheme).map(|n| n.0)
}

/// The unique free variable; a closed formula reports `z`, the customary
/// substitution variable, as not free.
fn only_free_var(f: &Formula) -> Result<Var> {
    let free = f.free_vars();
    match free.len() {
        0 => Err(Error::VariableNotFree(Var::Z)),
        1 => Ok(*free.iter().next().unwrap()),
        found => Err(Error::Arity { found }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn eval(s: &str) -> Result<GoedelNumber> {
        eval_sub_term(&parse_term(s).unwrap(), &CodecScheme::positional())
    }

    #[test]
    fn examples() {
        assert_eq!(eval("N[7]"), Ok(GoedelNumber::from(7)));
        assert_eq!(eval("sub(N[20641],N[2])"), Ok(GoedelNumber::from(2163873)));
        assert_eq!(
            eval("sub(N[1185],N[2])"),
            Err(Error::VariableNotFree(Var::Z))
        );
        assert_eq!(eval("x"), Err(Error::OpenTerm));
        assert_eq!(eval("s0+ss0*ss0"), Ok(GoedelNumber::from(5)));
    }

    #[test]
    fn nested_and_undecodable() {
        // sub(z=0, 0) = 0=0, and 0=0 is closed
        assert_eq!(
            eval("sub(sub(N[20641],0),0)"),
            Err(Error::VariableNotFree(Var::Z))
        );
        assert!(matches!(eval("sub(N[32],0)"), Err(Error::NotDecodable(_))));
        assert!(matches!(eval("sub(N[20],0)"), Err(Error::NotDecodable(_))));
    }

    #[test]
    fn prime_power_eval() {
        let pp = CodecScheme::prime_power();
        let y =
            crate::numbering::encode_formula(&crate::syntax::parse("z=0").unwrap(), &pp).unwrap();
        let t = Term::sub_app(Term::numeral(y.0), Term::numeral(2u32));
        let want = crate::numbering::encode_formula(&crate::syntax::parse("ss0=0").unwrap(), &pp);
        assert_eq!(eval_sub_term(&t, &pp), want);
    }
}
