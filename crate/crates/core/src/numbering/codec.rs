use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

use super::primes::{first_primes, multiplicity};
use super::{CodecScheme, CompressedCode, GoedelNumber, SchemeKind, SizeReport};
use crate::error::DecodeFailure;
use crate::syntax::{Formula, Symbol, SymbolSeq};
use crate::{Error, Result};

/// Encodes a nonempty symbol sequence.
///
/// Numeral runs are encoded arithmetically, never expanded. Codes longer than
/// the scheme's cap fail with [`Error::CapExceeded`] carrying the exact size.
pub fn encode(seq: &SymbolSeq, scheme: &CodecScheme) -> Result<GoedelNumber> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    match scheme.kind() {
        SchemeKind::Positional { .. } => {
            let code = encode_compressed(seq, scheme)?;
            let report = SizeReport::positional(code.digit_length(), scheme);
            if !report.materializable {
                return Err(Error::CapExceeded(Some(report)));
            }
            Ok(code.to_number())
        }
        SchemeKind::PrimePower => {
            let len = seq.len();
            let max = scheme.limits().prime_power_max_symbols;
            let len = match len.to_usize() {
                Some(n) if n <= max => n,
                _ => return Err(Error::CapExceeded(None)),
            };
            let primes = first_primes(len);
            let mut value = BigUint::one();
            let mut i = 0;
            for run in seq {
                let c = scheme.table().code(run.item);
                for _ in 0..run.count.to_usize().unwrap() {
                    value *= Pow::pow(BigUint::from(primes[i]), c);
                    i += 1;
                }
            }
            Ok(GoedelNumber(value))
        }
    }
}

pub fn encode_formula(f: &Formula, scheme: &CodecScheme) -> Result<GoedelNumber> {
    encode(&f.symbols(), scheme)
}

/// The positional code of `seq` as digit runs, whatever its size.
pub fn encode_compressed(seq: &SymbolSeq, scheme: &CodecScheme) -> Result<CompressedCode> {
    let base = scheme.require_base()?;
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let digits = seq.map(|sym| scheme.table().code(sym));
    Ok(CompressedCode::from_digits(base, digits))
}

/// Recovers the symbol sequence named by `n`.
pub fn decode(n: &GoedelNumber, scheme: &CodecScheme) -> Result<SymbolSeq> {
    if n.0.is_zero() {
        return Err(DecodeFailure::ZeroCode.into());
    }
    match scheme.kind() {
        SchemeKind::Positional { base } => {
            decode_compressed(&CompressedCode::from_number(&n.0, base), scheme)
        }
        SchemeKind::PrimePower => {
            let exps = exponents(&n.0, scheme.limits().prime_power_max_symbols)?;
            let mut seq = SymbolSeq::new();
            for e in exps {
                let sym = u32::try_from(e).ok().and_then(|c| scheme.table().symbol(c));
                match sym {
                    Some(sym) => seq.push(sym),
                    None => {
                        let c = u32::try_from(e).unwrap_or(u32::MAX);
                        return Err(DecodeFailure::UnassignedCode(c).into());
                    }
                }
            }
            Ok(seq)
        }
    }
}

/// Decodes positional digit runs without materializing them.
pub fn decode_compressed(code: &CompressedCode, scheme: &CodecScheme) -> Result<SymbolSeq> {
    scheme.require_base()?;
    if code.is_zero() {
        return Err(DecodeFailure::ZeroCode.into());
    }
    let mut seq = SymbolSeq::new();
    let mut position = 0usize;
    for run in code.digits() {
        if run.item == 0 {
            return Err(DecodeFailure::ZeroDigit(position).into());
        }
        let sym = scheme
            .table()
            .symbol(run.item)
            .ok_or(DecodeFailure::UnassignedCode(run.item))?;
        seq.push_run(sym, &run.count);
        position = position.saturating_add(run.count.to_usize().unwrap_or(usize::MAX));
    }
    Ok(seq)
}

/// Decodes `n` and reads it as a formula in canonical form.
pub fn decode_formula(n: &GoedelNumber, scheme: &CodecScheme) -> Result<Formula> {
    let seq = decode(n, scheme)?;
    Formula::from_symbols(&seq).map_err(|e| DecodeFailure::NotAFormula(e).into())
}

/// Exponents of consecutive primes, rejecting gaps.
fn exponents(n: &BigUint, max_len: usize) -> Result<Vec<u64>> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    for p in first_primes(max_len) {
        if rest.is_one() {
            return Ok(out);
        }
        let (e, m) = multiplicity(&rest, &BigUint::from(p));
        if e == 0 {
            return Err(DecodeFailure::ExponentGap(p).into());
        }
        out.push(e);
        rest = m;
    }
    if rest.is_one() {
        Ok(out)
    } else {
        Err(DecodeFailure::TooLong(max_len).into())
    }
}

/// Codes a proof. Positional: the lines' digit blocks joined by the proof
/// separator, so a one-line proof has its formula's code. Prime power:
/// `2^g(line1) * 3^g(line2) * ...`.
pub fn encode_proof(lines: &[Formula], scheme: &CodecScheme) -> Result<GoedelNumber> {
    if lines.is_empty() {
        return Err(Error::EmptySequence);
    }
    match scheme.kind() {
        SchemeKind::Positional { .. } => {
            let mut seq = SymbolSeq::new();
            for (i, line) in lines.iter().enumerate() {
                if i > 0 {
                    seq.push(Symbol::ProofSep);
                }
                seq.extend_runs(&line.symbols());
            }
            encode(&seq, scheme)
        }
        SchemeKind::PrimePower => {
            if lines.len() > scheme.limits().prime_power_max_symbols {
                return Err(Error::CapExceeded(None));
            }
            let max_bits = scheme.limits().max_bits;
            let mut bits = 0u64;
            let mut value = BigUint::one();
            for (line, p) in lines.iter().zip(first_primes(lines.len())) {
                let g = encode_formula(line, scheme)?;
                let e =
                    g.0.to_u64()
                        .filter(|e| *e <= max_bits)
                        .ok_or(Error::CapExceeded(None))?;
                bits = bits.saturating_add(e.saturating_mul(u64::from(32 - p.leading_zeros())));
                if bits > max_bits {
                    return Err(Error::CapExceeded(None));
                }
                value *= Pow::pow(BigUint::from(p), e);
            }
            Ok(GoedelNumber(value))
        }
    }
}

/// Reads a proof code back into its lines.
pub fn decode_proof(r: &GoedelNumber, scheme: &CodecScheme) -> Result<Vec<Formula>> {
    if r.0.is_zero() {
        return Err(DecodeFailure::ZeroCode.into());
    }
    match scheme.kind() {
        SchemeKind::Positional { .. } => {
            let seq = decode(r, scheme)?;
            seq.split(Symbol::ProofSep)
                .iter()
                .map(|piece| {
                    if piece.is_empty() {
                        return Err(DecodeFailure::NotAProof("empty line").into());
                    }
                    Formula::from_symbols(piece).map_err(|e| DecodeFailure::NotAFormula(e).into())
                })
                .collect()
        }
        SchemeKind::PrimePower => {
            let exps = exponents(&r.0, scheme.limits().prime_power_max_symbols)?;
            exps.into_iter()
                .map(|e| decode_formula(&GoedelNumber::from(e), scheme))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn pinned_positional_codes() {
        let pos = CodecScheme::positional();
        assert_eq!(
            encode_formula(&f("0=0"), &pos).unwrap(),
            GoedelNumber::from(1185)
        );
        assert_eq!(
            encode_formula(&f("z=0"), &pos).unwrap(),
            GoedelNumber::from(20641)
        );
        assert_eq!(
            encode_formula(&f("z=z"), &pos).unwrap(),
            GoedelNumber::from(20660)
        );
        let zero: SymbolSeq = [Symbol::Zero].into_iter().collect();
        assert_eq!(encode(&zero, &pos).unwrap(), GoedelNumber::from(1));
    }

    #[test]
    fn pinned_prime_power_code() {
        let pp = CodecScheme::prime_power();
        assert_eq!(
            encode_formula(&f("0=0"), &pp).unwrap(),
            GoedelNumber::from(2430)
        );
        assert_eq!(
            decode_formula(&GoedelNumber::from(2430), &pp).unwrap(),
            f("0=0")
        );
    }

    #[test]
    fn decode_examples() {
        let pos = CodecScheme::positional();
        assert_eq!(
            decode_formula(&GoedelNumber::from(1185), &pos).unwrap(),
            f("0=0")
        );
        let one = decode(&GoedelNumber::from(1), &pos).unwrap();
        assert_eq!(one, [Symbol::Zero].into_iter().collect());
        assert!(matches!(
            decode(&GoedelNumber::from(32), &pos),
            Err(Error::NotDecodable(DecodeFailure::ZeroDigit(1)))
        ));
        assert!(matches!(
            decode(&GoedelNumber::from(25), &pos),
            Err(Error::NotDecodable(DecodeFailure::UnassignedCode(25)))
        ));
        assert!(matches!(
            decode(&GoedelNumber::from(0), &pos),
            Err(Error::NotDecodable(_))
        ));
    }

    #[test]
    fn prime_power_rejects_gaps() {
        let pp = CodecScheme::prime_power();
        // 2^1 * 5^1 skips 3
        assert!(matches!(
            decode(&GoedelNumber::from(10), &pp),
            Err(Error::NotDecodable(DecodeFailure::ExponentGap(3)))
        ));
        // exponent 27 is out of range
        assert!(decode(&GoedelNumber::from(1 << 27), &pp).is_err());
    }

    #[test]
    fn empty_sequence_has_no_code() {
        assert_eq!(
            encode(&SymbolSeq::new(), &CodecScheme::positional()),
            Err(Error::EmptySequence)
        );
    }

    #[test]
    fn huge_numerals_hit_the_cap() {
        let big = crate::syntax::Term::numeral(BigUint::from(10u32).pow(60u32));
        let g = Formula::equals(big, crate::syntax::Term::Zero);
        match encode_formula(&g, &CodecScheme::positional()) {
            Err(Error::CapExceeded(Some(report))) => {
                assert!(!report.materializable);
                assert_eq!(report.digit_length, BigUint::from(10u32).pow(60u32) + 3u32);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn proof_codes() {
        let pos = CodecScheme::positional();
        let one_line = [f("0=0")];
        assert_eq!(
            encode_proof(&one_line, &pos).unwrap(),
            GoedelNumber::from(1185)
        );
        let lines = [f("0=0"), f("0=0->(0=0->0=0)"), f("0=0->0=0")];
        let r = encode_proof(&lines, &pos).unwrap();
        assert_eq!(decode_proof(&r, &pos).unwrap(), lines);

        let pp = CodecScheme::prime_power();
        let r = encode_proof(&one_line, &pp).unwrap();
        assert_eq!(r.0, BigUint::from(2u32).pow(2430u32));
        assert_eq!(decode_proof(&r, &pp).unwrap(), one_line);
    }
}
