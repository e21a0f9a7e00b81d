use godel_core::numbering::{decode_formula, decode_proof, CodecScheme};
use godel_core::proofsys::{check_proof, enumerate_provable, proves, Proof};
use num_bigint::BigUint;

#[test]
fn enumerations_are_prefixes_and_sound() {
    let scheme = CodecScheme::positional();
    let big = enumerate_provable(&BigUint::from(40_000u32), &scheme).unwrap();
    for bound in [0u32, 1184, 1185, 20_000, 40_000] {
        let small = enumerate_provable(&BigUint::from(bound), &scheme).unwrap();
        let cut = big
            .iter()
            .take_while(|p| p.r.0 <= BigUint::from(bound))
            .count();
        assert_eq!(small, big[..cut]);
    }
    for pair in &big {
        assert!(proves(&pair.r, &pair.s, &scheme));
        decode_formula(&pair.s, &scheme).unwrap();
        let proof = Proof::new(decode_proof(&pair.r, &scheme).unwrap()).unwrap();
        assert!(check_proof(&proof, &scheme).is_valid());
    }
}

#[test]
fn enumerator_rejects_unbounded_ranges() {
    let huge = BigUint::from(u64::MAX) + 1u32;
    assert!(enumerate_provable(&huge, &CodecScheme::positional()).is_err());
}
