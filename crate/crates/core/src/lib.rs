//! Arithmetization of first-order arithmetic.
//!
//! The crate covers four layers, each usable on its own:
//!
//! * [`syntax`]: terms and formulas with run-length compressed unary numerals,
//!   a lenient text parser, a canonical printer and free-variable analysis.
//! * [`numbering`]: Goedel codecs (positional digit concatenation and prime
//!   powers), the code-level `sub` function and a size calculus for codes far
//!   too large to hold in memory.
//! * [`proofsys`]: a Hilbert calculus over Robinson arithmetic, the decidable
//!   proof predicate `P(r, s)` and a bounded enumerator of provable pairs.
//! * [`diagonal`]: diagonal fixed points, the Goedel sentence, literal
//!   self-reference certificates and the growing conjunction prefixes.
//!
//! Everything is `no_std` with `alloc`; IO and the command line live in the
//! companion `godel` crate.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod diagonal;
mod error;
pub mod numbering;
pub mod proofsys;
mod runs;
pub mod syntax;

pub use error::{DecodeFailure, Error};
pub use runs::{Run, RunSeq};

/// Crate-wide result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
