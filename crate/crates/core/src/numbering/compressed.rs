use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use super::GoedelNumber;
use crate::runs::RunSeq;

/// A natural number held as run-length encoded base-`base` digits, most
/// significant first, without leading zeros.
///
/// Under a positional scheme the digits of a code are the symbol codes, so
/// this is the natural representation of codes too long to materialize: the
/// code of a formula containing `N[10^60]` is a run of 10^60 `2` digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompressedCode {
    base: u32,
    digits: RunSeq<u32>,
}

impl CompressedCode {
    /// From digit runs; leading zeros are stripped.
    pub fn from_digits(base: u32, digits: RunSeq<u32>) -> Self {
        let digits = if digits.runs().first().is_some_and(|r| r.item == 0) {
            let mut trimmed = RunSeq::new();
            for run in digits.runs().iter().skip(1) {
                trimmed.push_run(run.item, &run.count);
            }
            trimmed
        } else {
            digits
        };
        CompressedCode { base, digits }
    }

    pub fn from_number(n: &BigUint, base: u32) -> Self {
        if n.is_zero() {
            return CompressedCode {
                base,
                digits: RunSeq::new(),
            };
        }
        let digits = n.to_radix_be(base).into_iter().map(u32::from).collect();
        CompressedCode { base, digits }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &RunSeq<u32> {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digit_length(&self) -> BigUint {
        self.digits.len()
    }

    /// Expands to a big integer. Callers check the size first.
    pub fn to_number(&self) -> GoedelNumber {
        let base = BigUint::from(self.base);
        let mut acc = BigUint::zero();
        for run in &self.digits {
            // run of c copies of d: d * (b^c - 1) / (b - 1)
            let c = usize::try_from(&run.count).expect("run too long to materialize");
            let shift: BigUint = Pow::pow(&base, c);
            let block = if run.item == 0 {
                BigUint::zero()
            } else {
                (&shift - 1u32) / (self.base - 1) * run.item
            };
            acc = acc * shift + block;
        }
        GoedelNumber(acc)
    }

    /// `self + 1`, carrying through trailing runs of the top digit.
    pub fn incremented(&self) -> CompressedCode {
        let top = self.base - 1;
        let runs = self.digits.runs();
        let mut keep = runs.len();
        while keep > 0 && runs[keep - 1].item == top {
            keep -= 1;
        }
        let carried: BigUint = runs[keep..].iter().map(|r| &r.count).sum();
        let mut out = RunSeq::new();
        for run in &runs[..keep.saturating_sub(1)] {
            out.push_run(run.item, &run.count);
        }
        if keep == 0 {
            out.push(1);
        } else {
            let last = &runs[keep - 1];
            out.push_run(last.item, &(&last.count - 1u32));
            out.push(last.item + 1);
        }
        out.push_run(0, &carried);
        CompressedCode {
            base: self.base,
            digits: out,
        }
    }
}

impl PartialOrd for CompressedCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order; both sides must share a base.
impl Ord for CompressedCode {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.base, other.base);
        let by_len = self.digit_length().cmp(&other.digit_length());
        if by_len != Ordering::Equal {
            return by_len;
        }
        let (a, b) = (self.digits.runs(), other.digits.runs());
        let (mut i, mut j) = (0, 0);
        let (mut left_a, mut left_b) = (BigUint::zero(), BigUint::zero());
        loop {
            if left_a.is_zero() {
                match a.get(i) {
                    Some(r) => left_a = r.count.clone(),
                    None => return Ordering::Equal,
                }
            }
            if left_b.is_zero() {
                left_b = b[j].count.clone();
            }
            match a[i].item.cmp(&b[j].item) {
                Ordering::Equal => {}
                other => return other,
            }
            let step = (&left_a).min(&left_b).clone();
            left_a -= &step;
            left_b -= &step;
            if left_a.is_zero() {
                i += 1;
            }
            if left_b.is_zero() {
                j += 1;
            }
        }
    }
}

impl fmt::Display for CompressedCode {
    /// Run notation, e.g. `[1 5 2x1000 1]_32`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, run) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if run.count.is_one() {
                write!(f, "{}", run.item)?;
            } else {
                write!(f, "{}x{}", run.item, run.count)?;
            }
        }
        write!(f, "]_{}", self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: u64) -> CompressedCode {
        CompressedCode::from_number(&BigUint::from(n), 32)
    }

    #[test]
    fn number_round_trip() {
        for n in [1u64, 31, 32, 1185, 1 << 40, 0x7fff_ffff] {
            assert_eq!(code(n).to_number().0, BigUint::from(n));
        }
    }

    #[test]
    fn increment_carries() {
        for n in [0u64, 30, 31, 1023, 1185, 32 * 32 * 32 - 1] {
            assert_eq!(code(n).incremented(), code(n + 1), "n = {n}");
        }
    }

    #[test]
    fn ordering_matches_numbers() {
        let values = [1u64, 2, 31, 32, 33, 1024, 1185, 20641, 20660, 99999];
        for a in values {
            for b in values {
                assert_eq!(code(a).cmp(&code(b)), a.cmp(&b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn long_runs_stay_compressed() {
        let mut digits = RunSeq::new();
        digits.push(1);
        digits.push_run(2, &BigUint::from(10u32).pow(60u32));
        digits.push(1);
        let c = CompressedCode::from_digits(32, digits);
        assert_eq!(c.digit_length(), BigUint::from(10u32).pow(60u32) + 2u32);
        assert!(c.incremented() > c);
    }
}
