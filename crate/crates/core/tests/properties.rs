use godel_core::diagonal::{self_numeral_certificate, Conclusion};
use godel_core::numbering::{
    decode_formula, encode_formula, encode_size, sub, CodecScheme, GoedelNumber,
};
use godel_core::syntax::{lex_symbols, parse, Formula, Term, Var};
use godel_core::Error;
use num_bigint::BigUint;
use proptest::prelude::*;

fn var() -> impl Strategy<Value = Var> {
    prop::sample::select(Var::ALL.to_vec())
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        var().prop_map(Term::Var),
        Just(Term::Zero),
        (0u32..40).prop_map(Term::numeral),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::plus(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::times(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::sub_app(a, b)),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        4 => (term(), term()).prop_map(|(a, b)| Formula::equals(a, b)),
        1 => (term(), term()).prop_map(|(a, b)| Formula::proves(a, b)),
    ];
    atom.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (var(), inner.clone()).prop_map(|(v, f)| Formula::exists(v, f)),
            (var(), inner).prop_map(|(v, f)| Formula::forall(v, f)),
        ]
    })
}

/// Counts symbols in fully expanded text with a greedy tokenizer of its own.
fn naive_symbol_count(text: &str) -> usize {
    const MULTI: [&str; 3] = ["<->", "->", "sub"];
    let mut rest = text;
    let mut n = 0;
    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[1..];
            continue;
        }
        let step = MULTI
            .iter()
            .find(|m| rest.starts_with(**m))
            .map_or(c.len_utf8(), |m| m.len());
        rest = &rest[step..];
        n += 1;
    }
    n
}

fn positional() -> CodecScheme {
    CodecScheme::positional()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_and_symbols_round_trip(f in formula()) {
        prop_assert_eq!(parse(&f.render()).unwrap(), f.clone());
        prop_assert_eq!(Formula::from_symbols(&f.symbols()).unwrap(), f.clone());
        prop_assert_eq!(lex_symbols(&f.render()).unwrap(), f.symbols());
    }

    #[test]
    fn positional_codec_round_trip(f in formula()) {
        let code = encode_formula(&f, &positional()).unwrap();
        prop_assert_eq!(decode_formula(&code, &positional()).unwrap(), f);
    }

    #[test]
    fn prime_power_codec_round_trip(f in formula()) {
        let pp = CodecScheme::prime_power();
        match encode_formula(&f, &pp) {
            Ok(code) => prop_assert_eq!(decode_formula(&code, &pp).unwrap(), f),
            Err(Error::CapExceeded(_)) => prop_assert!(f.symbol_count() > BigUint::from(64u32)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn substitution_is_idempotent(f in formula(), v in var(), k in 0u32..100) {
        let t = Term::numeral(k);
        let once = f.substitute(v, &t).unwrap();
        prop_assert_eq!(once.substitute(v, &t).unwrap(), once.clone());
        prop_assert!(!once.free_vars().contains(&v));
    }

    #[test]
    fn numeral_substitution_adds_k_per_occurrence(f in formula(), v in var(), k in 0u32..1000) {
        let base = f.symbol_count();
        let occurrences = f.substitute(v, &Term::numeral(1u32)).unwrap().symbol_count() - &base;
        let grown = f.substitute(v, &Term::numeral(k)).unwrap().symbol_count();
        prop_assert_eq!(grown, base + occurrences * k);
    }

    #[test]
    fn compressed_counts_match_expansion(f in formula(), v in var(), k in 0u32..10_000) {
        let g = f.substitute(v, &Term::numeral(k)).unwrap();
        let text = g.render_with(u64::MAX);
        prop_assert_eq!(BigUint::from(naive_symbol_count(&text)), g.symbol_count());
    }

    #[test]
    fn sub_agrees_with_tree_substitution(f in formula(), v in var(), j in 0u32..=1000) {
        for scheme in [positional(), CodecScheme::prime_power()] {
            let Ok(y) = encode_formula(&f, &scheme) else { continue };
            let got = sub(&y, v, &BigUint::from(j), &scheme);
            if f.free_vars().contains(&v) {
                let want = encode_formula(&f.substitute(v, &Term::numeral(j)).unwrap(), &scheme);
                match want {
                    Ok(want) => prop_assert_eq!(got.unwrap(), want),
                    Err(Error::CapExceeded(_)) => prop_assert!(got.is_err()),
                    Err(e) => prop_assert!(false, "{e}"),
                }
            } else {
                prop_assert_eq!(got, Err(Error::VariableNotFree(v)));
            }
        }
    }

    #[test]
    fn size_calculus_is_exact(f in formula()) {
        let report = encode_size(&f, &positional()).unwrap();
        let code = encode_formula(&f, &positional()).unwrap();
        prop_assert!(report.materializable);
        prop_assert_eq!(report.digit_length, BigUint::from(code.0.to_radix_be(32).len()));
    }

    #[test]
    fn own_numeral_never_fits(f in formula()) {
        let c = self_numeral_certificate(&f, &positional()).unwrap();
        prop_assert_eq!(c.conclusion, Conclusion::SelfContainmentImpossible);
        let code = encode_formula(&f, &positional()).unwrap();
        prop_assert_eq!(c.numeral_symbols.exact().unwrap(), &GoedelNumber(code.0 + 1u32));
    }
}
