//! Goedel numbering.
//!
//! Two schemes are supported. [`SchemeKind::Positional`] reads the symbol
//! codes of a sequence as the digits of a base-`base` number (most
//! significant first); since no symbol has code 0 the digit string, and so
//! the sequence, is recovered from the number. [`SchemeKind::PrimePower`]
//! is the classical `2^c1 * 3^c2 * 5^c3 * ...`.
//!
//! Positional codes admit a size calculus: a code has exactly one digit per
//! symbol, so its length is known from the compressed formula, and numerals
//! contribute runs of identical digits whose value has a geometric-series
//! closed form. Codes beyond [`Limits::max_bits`] are never materialized;
//! operations report a [`SizeReport`] instead.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::{Error, Result};

mod codec;
mod compressed;
mod primes;
mod sub;
mod table;

pub use codec::{
    decode, decode_compressed, decode_formula, decode_proof, encode, encode_compressed,
    encode_formula, encode_proof,
};
pub use compressed::CompressedCode;
pub use primes::first_primes;
pub use sub::{code_of, encode_size, numeral_of, sub, sub_code};
pub use table::SymbolTable;

/// A natural number naming a symbol sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GoedelNumber(pub BigUint);

impl GoedelNumber {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for GoedelNumber {
    fn from(n: u64) -> Self {
        GoedelNumber(n.into())
    }
}

impl From<BigUint> for GoedelNumber {
    fn from(n: BigUint) -> Self {
        GoedelNumber(n)
    }
}

impl FromStr for GoedelNumber {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        s.parse().map(GoedelNumber)
    }
}

impl fmt::Display for GoedelNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact size of a code, whether or not it can be materialized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SizeReport {
    pub symbol_count: BigUint,
    /// Length of the code in digits of the scheme's base.
    pub digit_length: BigUint,
    /// Whether `digit_length` is within the materialization cap.
    pub materializable: bool,
}

impl SizeReport {
    pub(crate) fn positional(symbols: BigUint, scheme: &CodecScheme) -> SizeReport {
        let materializable = symbols <= BigUint::from(scheme.cap_digits());
        SizeReport {
            digit_length: symbols.clone(),
            symbol_count: symbols,
            materializable,
        }
    }
}

impl fmt::Display for SizeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "symbols={} digits={} materializable={}",
            self.symbol_count, self.digit_length, self.materializable
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeKind {
    Positional { base: u32 },
    PrimePower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Codes longer than this many bits are not materialized.
    pub max_bits: u64,
    /// Longest sequence (and longest proof) the prime-power scheme encodes.
    pub prime_power_max_symbols: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_bits: 1 << 20,
            prime_power_max_symbols: 64,
        }
    }
}

/// A numbering strategy with its symbol table and size limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodecScheme {
    kind: SchemeKind,
    table: SymbolTable,
    limits: Limits,
}

impl CodecScheme {
    /// Base-32 digit concatenation with the standard table.
    pub fn positional() -> Self {
        Self::positional_base(32).unwrap()
    }

    /// The base must exceed every symbol code and fit a byte.
    pub fn positional_base(base: u32) -> Result<Self> {
        let table = SymbolTable::standard();
        if base <= table.max_code() || base > 256 {
            return Err(Error::Scheme("positional base must lie in 27..=256"));
        }
        Ok(CodecScheme {
            kind: SchemeKind::Positional { base },
            table,
            limits: Limits::default(),
        })
    }

    pub fn prime_power() -> Self {
        CodecScheme {
            kind: SchemeKind::PrimePower,
            table: SymbolTable::standard(),
            limits: Limits::default(),
        }
    }

    pub fn with_table(mut self, table: SymbolTable) -> Result<Self> {
        if let SchemeKind::Positional { base } = self.kind {
            if base <= table.max_code() {
                return Err(Error::Scheme(
                    "positional base must exceed every symbol code",
                ));
            }
        }
        self.table = table;
        Ok(self)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// `Some(base)` for positional schemes.
    pub fn base(&self) -> Option<u32> {
        match self.kind {
            SchemeKind::Positional { base } => Some(base),
            SchemeKind::PrimePower => None,
        }
    }

    pub(crate) fn require_base(&self) -> Result<u32> {
        self.base().ok_or(Error::UnsupportedScheme)
    }

    /// Largest materializable digit count under a positional scheme.
    pub fn cap_digits(&self) -> u64 {
        match self.kind {
            SchemeKind::Positional { base } => {
                let bits_per_digit = u64::from(32 - (base - 1).leading_zeros());
                self.limits.max_bits / bits_per_digit
            }
            SchemeKind::PrimePower => 0,
        }
    }
}

impl Default for CodecScheme {
    fn default() -> Self {
        Self::positional()
    }
}

/// An exact natural number that may be too large to hold expanded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CodeValue {
    Exact(GoedelNumber),
    /// Digits in the positional base of the scheme that produced it.
    Compressed(CompressedCode),
}

impl CodeValue {
    /// Picks the exact form whenever the scheme's cap allows.
    pub fn from_compressed(code: CompressedCode, scheme: &CodecScheme) -> CodeValue {
        if code.digit_length() <= BigUint::from(scheme.cap_digits()) {
            CodeValue::Exact(code.to_number())
        } else {
            CodeValue::Compressed(code)
        }
    }

    pub fn exact(&self) -> Option<&GoedelNumber> {
        match self {
            CodeValue::Exact(n) => Some(n),
            CodeValue::Compressed(_) => None,
        }
    }

    pub fn to_compressed(&self, base: u32) -> CompressedCode {
        match self {
            CodeValue::Exact(n) => CompressedCode::from_number(&n.0, base),
            CodeValue::Compressed(c) => c.clone(),
        }
    }

    /// Number of base-`base` digits.
    pub fn digit_length(&self, base: u32) -> BigUint {
        self.to_compressed(base).digit_length()
    }

    /// Numeric equality across representations.
    pub fn same_value(&self, other: &CodeValue, base: u32) -> bool {
        match (self, other) {
            (CodeValue::Exact(a), CodeValue::Exact(b)) => a == b,
            _ => self.to_compressed(base) == other.to_compressed(base),
        }
    }
}

impl fmt::Display for CodeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeValue::Exact(n) => write!(f, "{n}"),
            CodeValue::Compressed(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_in_digits() {
        assert_eq!(CodecScheme::positional().cap_digits(), (1 << 20) / 5);
        assert!(CodecScheme::positional_base(26).is_err());
        assert!(CodecScheme::positional_base(27).is_ok());
    }
}
