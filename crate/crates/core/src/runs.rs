use alloc::vec::Vec;
use core::slice;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `count` consecutive copies of `item`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Run<T> {
    pub item: T,
    pub count: BigUint,
}

/// A run-length encoded sequence.
///
/// Adjacent runs always carry distinct items and no run is empty, so two
/// sequences are equal exactly when their expansions are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunSeq<T> {
    runs: Vec<Run<T>>,
}

impl<T> Default for RunSeq<T> {
    fn default() -> Self {
        Self { runs: Vec::new() }
    }
}

impl<T: Copy + Eq> RunSeq<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a single item.
    pub fn push(&mut self, item: T) {
        if let Some(last) = self.runs.last_mut() {
            if last.item == item {
                last.count += 1u32;
                return;
            }
        }
        self.runs.push(Run {
            item,
            count: BigUint::one(),
        });
    }

    /// Appends `count` copies of `item`.
    pub fn push_run(&mut self, item: T, count: &BigUint) {
        if count.is_zero() {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.item == item {
                last.count += count;
                return;
            }
        }
        self.runs.push(Run {
            item,
            count: count.clone(),
        });
    }

    pub fn extend_runs(&mut self, other: &RunSeq<T>) {
        for run in &other.runs {
            self.push_run(run.item, &run.count);
        }
    }

    pub fn runs(&self) -> &[Run<T>] {
        &self.runs
    }

    pub fn iter(&self) -> slice::Iter<'_, Run<T>> {
        self.runs.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Length of the expanded sequence.
    pub fn len(&self) -> BigUint {
        self.runs.iter().map(|r| &r.count).sum()
    }

    /// Maps every item, re-merging runs that collide.
    pub fn map<U: Copy + Eq>(&self, mut f: impl FnMut(T) -> U) -> RunSeq<U> {
        let mut out = RunSeq::new();
        for run in &self.runs {
            out.push_run(f(run.item), &run.count);
        }
        out
    }

    /// Like [`RunSeq::map`] but fallible.
    pub fn try_map<U: Copy + Eq, E>(
        &self,
        mut f: impl FnMut(T) -> Result<U, E>,
    ) -> Result<RunSeq<U>, E> {
        let mut out = RunSeq::new();
        for run in &self.runs {
            out.push_run(f(run.item)?, &run.count);
        }
        Ok(out)
    }

    /// Splits on every occurrence of `sep`. Runs of the separator longer
    /// than one produce empty pieces, as repeated separators would.
    pub fn split(&self, sep: T) -> Vec<RunSeq<T>> {
        let mut pieces = Vec::new();
        let mut cur = RunSeq::new();
        for run in &self.runs {
            if run.item == sep {
                let mut n = run.count.clone();
                while !n.is_zero() {
                    pieces.push(core::mem::take(&mut cur));
                    n -= 1u32;
                }
            } else {
                cur.push_run(run.item, &run.count);
            }
        }
        pieces.push(cur);
        pieces
    }
}

impl<T: Copy + Eq> FromIterator<T> for RunSeq<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut out = RunSeq::new();
        for item in iter {
            out.push(item);
        }
        out
    }
}

impl<'a, T> IntoIterator for &'a RunSeq<T> {
    type Item = &'a Run<T>;
    type IntoIter = slice::Iter<'a, Run<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.runs.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn merges_adjacent() {
        let seq: RunSeq<u8> = vec![1, 1, 2, 2, 2, 1].into_iter().collect();
        assert_eq!(seq.runs().len(), 3);
        assert_eq!(seq.len(), BigUint::from(6u32));
    }

    #[test]
    fn split_on_separator() {
        let seq: RunSeq<u8> = vec![1, 9, 2, 2, 9, 9, 3].into_iter().collect();
        let parts = seq.split(9);
        assert_eq!(parts.len(), 4);
        assert!(parts[2].is_empty());
        assert_eq!(parts[1].len(), BigUint::from(2u32));
    }
}
