use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{enumerable, proof_pair, ProvablePair};
use crate::numbering::{CodecScheme, GoedelNumber, SchemeKind};
use crate::Result;

/// All pairs `(r, s)` with `r <= max_code`, ascending in `r`.
pub fn enumerate_provable(max_code: &BigUint, scheme: &CodecScheme) -> Result<Vec<ProvablePair>> {
    let hi = enumerable(max_code)?;
    Ok(enumerate_provable_range(1, hi, scheme))
}

/// All pairs with `lo <= r <= hi`, ascending in `r`. Disjoint ranges can be
/// scanned independently and concatenated.
///
/// Under a positional scheme, codes containing a digit that names no symbol
/// are skipped a whole digit block at a time.
pub fn enumerate_provable_range(lo: u64, hi: u64, scheme: &CodecScheme) -> Vec<ProvablePair> {
    let mut out = Vec::new();
    let mut r = lo.max(1);
    while r <= hi {
        if let SchemeKind::Positional { base } = scheme.kind() {
            if let Some(next) = skip_invalid(r, u64::from(base), scheme) {
                r = next;
                continue;
            }
        }
        if let Some(pair) = proof_pair(&GoedelNumber::from(r), scheme) {
            out.push(pair);
        }
        r += 1;
    }
    out
}

/// The least code above `r` that can still decode, if `r` itself cannot.
fn skip_invalid(r: u64, base: u64, scheme: &CodecScheme) -> Option<u64> {
    let mut place = 1u64;
    let mut rest = r;
    let mut skip = None;
    while rest > 0 {
        let digit = (rest % base) as u32;
        if scheme.table().symbol(digit).is_none() {
            // most significant bad digit wins
            skip = Some((r / place + 1).saturating_mul(place));
        }
        rest /= base;
        place = place.saturating_mul(base);
    }
    skip
}
