//! Multi-threaded drivers. Results are identical to the sequential library
//! calls; only the work is split.

use godel_core::diagonal::gamma_prefix;
use godel_core::numbering::CodecScheme;
use godel_core::proofsys::{enumerate_provable_range, ProvablePair};
use godel_core::syntax::Formula;
use godel_core::{Error, Result};
use num_bigint::BigUint;
use rayon::prelude::*;

const CHUNK: u64 = 1 << 15;

/// Parallel form of `enumerate_provable`: disjoint ranges, merged in order.
pub fn enumerate_provable_par(
    max_code: &BigUint,
    scheme: &CodecScheme,
) -> Result<Vec<ProvablePair>> {
    let hi = u64::try_from(max_code).map_err(|_| Error::CapExceeded(None))?;
    let chunks: Vec<(u64, u64)> = (0..=hi / CHUNK)
        .map(|i| (i * CHUNK, (i * CHUNK + CHUNK - 1).min(hi)))
        .collect();
    let parts: Vec<Vec<ProvablePair>> = chunks
        .into_par_iter()
        .map(|(lo, hi)| enumerate_provable_range(lo, hi, scheme))
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Parallel form of `gamma_divergence`, one row per task.
pub fn gamma_divergence_par(
    s: &[Formula],
    k_max: usize,
    z: &Formula,
    scheme: &CodecScheme,
) -> Result<Vec<(usize, BigUint)>> {
    (1..=k_max)
        .into_par_iter()
        .map(|k| gamma_prefix(k, s, z, scheme).map(|g| (k, g.report.symbol_count)))
        .collect()
}
