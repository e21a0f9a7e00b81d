use super::emit::Bound;
use super::{Formula, Term, Var};

/// Finds a closed term `t` with `pattern[v := t] == target`.
///
/// Returns `Some(None)` when `v` has no free occurrence in `pattern` and the
/// two formulas are already equal (any `t` works), `Some(Some(t))` for the
/// forced witness, and `None` when `target` is not an instance. Successor
/// chains in the pattern are peeled off numerals in the target, so
/// `sv = 0` matches `sss0 = 0` with `v := ss0`.
pub fn match_instance(pattern: &Formula, v: Var, target: &Formula) -> Option<Option<Term>> {
    let mut m = Matcher {
        v,
        binding: None,
        bound: Bound::default(),
    };
    if !m.formula(pattern, target) {
        return None;
    }
    let binding = m.binding;
    // Confirm against plain substitution so normal-form corner cases can
    // never produce a false match.
    let check = match &binding {
        Some(t) => pattern.replace_free(v, t),
        None => pattern.clone(),
    };
    (check == *target).then_some(binding)
}

struct Matcher {
    v: Var,
    binding: Option<Term>,
    bound: Bound,
}

impl Matcher {
    fn term(&mut self, p: &Term, x: &Term) -> bool {
        match p {
            Term::Var(w) if *w == self.v && !self.bound.contains(*w) => {
                if !x.is_closed() {
                    return false;
                }
                match &self.binding {
                    Some(b) => b == x,
                    None => {
                        self.binding = Some(x.clone());
                        true
                    }
                }
            }
            Term::Var(_) | Term::Zero | Term::Numeral(_) => p == x,
            Term::Succ(a) => match x.predecessor() {
                Some(px) => self.term(a, &px),
                None => false,
            },
            Term::Plus(a, b) => match x {
                Term::Plus(c, d) => self.term(a, c) && self.term(b, d),
                _ => false,
            },
            Term::Times(a, b) => match x {
                Term::Times(c, d) => self.term(a, c) && self.term(b, d),
                _ => false,
            },
            Term::SubApp(a, b) => match x {
                Term::SubApp(c, d) => self.term(a, c) && self.term(b, d),
                _ => false,
            },
        }
    }

    fn formula(&mut self, p: &Formula, x: &Formula) -> bool {
        match (p, x) {
            (Formula::Equals(a, b), Formula::Equals(c, d))
            | (Formula::Proves(a, b), Formula::Proves(c, d)) => self.term(a, c) && self.term(b, d),
            (Formula::Not(a), Formula::Not(c)) => self.formula(a, c),
            (Formula::And(a, b), Formula::And(c, d))
            | (Formula::Or(a, b), Formula::Or(c, d))
            | (Formula::Implies(a, b), Formula::Implies(c, d))
            | (Formula::Iff(a, b), Formula::Iff(c, d)) => self.formula(a, c) && self.formula(b, d),
            (Formula::Exists(w, a), Formula::Exists(w2, c))
            | (Formula::Forall(w, a), Formula::Forall(w2, c))
                if w == w2 =>
            {
                self.bound.push(*w);
                let ok = self.formula(a, c);
                self.bound.pop(*w);
                ok
            }
            _ => false,
        }
    }
}
