use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

/// The first `n` primes, by trial division against the primes found so far.
pub fn first_primes(n: usize) -> Vec<u32> {
    let mut primes: Vec<u32> = Vec::with_capacity(n);
    let mut candidate = 2u32;
    while primes.len() < n {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| candidate % p != 0)
        {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// `(e, m)` with `n = p^e * m` and `p` not dividing `m`.
///
/// Strips `p^(2^k)` blocks recursively, so exponents in the millions cost a
/// logarithmic number of big divisions.
pub(crate) fn multiplicity(n: &BigUint, p: &BigUint) -> (u64, BigUint) {
    let (q, r) = n.div_rem(p);
    if !r.is_zero() {
        return (0, n.clone());
    }
    // n/p = (p^2)^e * m with p^2 not dividing m
    let (e, m) = multiplicity(&q, &(p * p));
    let (q2, r2) = m.div_rem(p);
    if r2.is_zero() {
        (2 * e + 2, q2)
    } else {
        (2 * e + 1, m)
    }
}
