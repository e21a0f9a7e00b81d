use crate::syntax::{Symbol, Var};
use crate::{Error, Result};

/// Bijection between the alphabet and symbol codes in `1..=MAX_CODE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    codes: [u32; 25],
    by_code: [Option<Symbol>; (SymbolTable::MAX_CODE + 1) as usize],
}

impl SymbolTable {
    pub const MAX_CODE: u32 = 26;

    /// The standard assignment: `0 s + * = ( ) , ~ & | -> <-> E A P sub`
    /// get 1 to 17, the variables `x y z r w u v` get 18 to 24, and the proof
    /// separator gets 26. Code 25 is unused.
    pub fn standard() -> Self {
        Self::from_fn(|sym| match sym {
            Symbol::Zero => 1,
            Symbol::Succ => 2,
            Symbol::Plus => 3,
            Symbol::Times => 4,
            Symbol::Equals => 5,
            Symbol::LParen => 6,
            Symbol::RParen => 7,
            Symbol::Comma => 8,
            Symbol::Not => 9,
            Symbol::And => 10,
            Symbol::Or => 11,
            Symbol::Implies => 12,
            Symbol::Iff => 13,
            Symbol::Exists => 14,
            Symbol::Forall => 15,
            Symbol::Proves => 16,
            Symbol::Sub => 17,
            Symbol::Var(Var::X) => 18,
            Symbol::Var(Var::Y) => 19,
            Symbol::Var(Var::Z) => 20,
            Symbol::Var(Var::R) => 21,
            Symbol::Var(Var::W) => 22,
            Symbol::Var(Var::U) => 23,
            Symbol::Var(Var::V) => 24,
            Symbol::ProofSep => 26,
        })
        .expect("standard table is a bijection")
    }

    /// Builds a table from an assignment; it must be injective and use codes
    /// in `1..=MAX_CODE` only.
    pub fn from_fn(code: impl Fn(Symbol) -> u32) -> Result<Self> {
        let mut codes = [0; 25];
        let mut by_code = [None; (Self::MAX_CODE + 1) as usize];
        for (i, sym) in Symbol::ALL.into_iter().enumerate() {
            let c = code(sym);
            if c == 0 || c > Self::MAX_CODE {
                return Err(Error::Scheme("symbol codes must lie in 1..=26"));
            }
            if by_code[c as usize].is_some() {
                return Err(Error::Scheme("symbol table is not injective"));
            }
            by_code[c as usize] = Some(sym);
            codes[i] = c;
        }
        Ok(SymbolTable { codes, by_code })
    }

    pub fn code(&self, sym: Symbol) -> u32 {
        let i = Symbol::ALL.iter().position(|s| *s == sym).unwrap();
        self.codes[i]
    }

    pub fn symbol(&self, code: u32) -> Option<Symbol> {
        self.by_code.get(code as usize).copied().flatten()
    }

    pub fn max_code(&self) -> u32 {
        self.codes.iter().copied().max().unwrap_or(0)
    }
}

impl Default for SymbolTable {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_is_bijective() {
        let t = SymbolTable::standard();
        for sym in Symbol::ALL {
            assert_eq!(t.symbol(t.code(sym)), Some(sym));
        }
        assert_eq!(t.symbol(0), None);
        assert_eq!(t.symbol(25), None);
        assert_eq!(t.code(Symbol::ProofSep), 26);
    }

    #[test]
    fn rejects_collisions() {
        assert!(SymbolTable::from_fn(|_| 3).is_err());
        assert!(SymbolTable::from_fn(|_| 0).is_err());
    }
}
