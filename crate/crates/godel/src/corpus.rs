//! Seeded random formulas for sweeps and round-trip checks.

use godel_core::syntax::{Formula, Term, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shape limits for generated formulas.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub formula_depth: u32,
    pub term_depth: u32,
    pub max_numeral: u32,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            formula_depth: 4,
            term_depth: 3,
            max_numeral: 200,
        }
    }
}

impl Shape {
    /// Small enough that most formulas stay within 64 symbols.
    pub fn small() -> Self {
        Shape {
            formula_depth: 2,
            term_depth: 2,
            max_numeral: 6,
        }
    }
}

pub fn random_term(rng: &mut impl Rng, depth: u32, shape: &Shape) -> Term {
    let pick = if depth == 0 {
        rng.random_range(0..3)
    } else {
        rng.random_range(0..8)
    };
    match pick {
        0 => Term::Var(Var::ALL[rng.random_range(0..Var::ALL.len())]),
        1 => Term::Zero,
        2 => Term::numeral(rng.random_range(0..=shape.max_numeral)),
        3 | 4 => Term::succ(random_term(rng, depth - 1, shape)),
        5 => Term::plus(
            random_term(rng, depth - 1, shape),
            random_term(rng, depth - 1, shape),
        ),
        6 => Term::times(
            random_term(rng, depth - 1, shape),
            random_term(rng, depth - 1, shape),
        ),
        _ => Term::sub_app(
            random_term(rng, depth - 1, shape),
            random_term(rng, depth - 1, shape),
        ),
    }
}

pub fn random_formula<R: Rng>(rng: &mut R, depth: u32, shape: &Shape) -> Formula {
    let atom = |rng: &mut R| {
        let a = random_term(rng, shape.term_depth, shape);
        let b = random_term(rng, shape.term_depth, shape);
        if rng.random_ratio(1, 5) {
            Formula::proves(a, b)
        } else {
            Formula::equals(a, b)
        }
    };
    if depth == 0 {
        return atom(rng);
    }
    match rng.random_range(0..9) {
        0 | 1 => atom(rng),
        2 => Formula::not(random_formula(rng, depth - 1, shape)),
        3 => Formula::and(
            random_formula(rng, depth - 1, shape),
            random_formula(rng, depth - 1, shape),
        ),
        4 => Formula::or(
            random_formula(rng, depth - 1, shape),
            random_formula(rng, depth - 1, shape),
        ),
        5 => Formula::implies(
            random_formula(rng, depth - 1, shape),
            random_formula(rng, depth - 1, shape),
        ),
        6 => Formula::iff(
            random_formula(rng, depth - 1, shape),
            random_formula(rng, depth - 1, shape),
        ),
        7 => {
            let v = Var::ALL[rng.random_range(0..Var::ALL.len())];
            Formula::exists(v, random_formula(rng, depth - 1, shape))
        }
        _ => {
            let v = Var::ALL[rng.random_range(0..Var::ALL.len())];
            Formula::forall(v, random_formula(rng, depth - 1, shape))
        }
    }
}

/// `n` formulas from a fixed seed.
pub fn corpus(seed: u64, n: usize, shape: Shape) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| random_formula(&mut rng, shape.formula_depth, &shape))
        .collect()
}

/// `n` formulas of at most `max_symbols` symbols, by rejection.
pub fn bounded_corpus(seed: u64, n: usize, max_symbols: u32, shape: Shape) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let f = random_formula(&mut rng, shape.formula_depth, &shape);
        if f.symbol_count() <= max_symbols.into() {
            out.push(f);
        }
    }
    out
}
