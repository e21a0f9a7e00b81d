//! A Hilbert-style calculus for Robinson arithmetic and the proof predicate.
//!
//! Proofs are bare sequences of formulas. A line is justified when it is an
//! instance of an axiom schema, follows from two earlier lines by modus
//! ponens, or is the generalization of an earlier line. Justifications are
//! not stored; [`check_proof`] recovers them by exhaustive search.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::numbering::{
    decode_proof, encode_formula, sub_code, CodecScheme, CompressedCode, GoedelNumber, SchemeKind,
};
use crate::syntax::{match_instance, Formula, Term, Var};
use crate::{Error, Result};

mod enumerate;

pub use enumerate::{enumerate_provable, enumerate_provable_range};

/// Axiom schemas, in the order [`is_axiom`] tries them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomSchema {
    /// `A -> (B -> A)`
    K,
    /// `(A -> (B -> C)) -> ((A -> B) -> (A -> C))`
    S,
    /// `(~A -> ~B) -> (B -> A)`
    CP,
    /// `~(st = 0)`
    Q1,
    /// `st = su -> t = u`
    Q2,
    /// `~(t = 0) -> Ev(t = sv)`, `v` not in `t`
    Q3,
    /// `t + 0 = t`
    Q4,
    /// `t + su = s(t + u)`
    Q5,
    /// `t * 0 = 0`
    Q6,
    /// `t * su = t * u + t`
    Q7,
    /// `t = t`, `t` closed
    EqRefl,
    /// `t = u -> (phi[v := t] -> phi[v := u])`, `t`, `u` closed
    EqSub,
    /// `Av phi -> phi[v := t]`, `t` closed
    UnivInst,
    /// `sub(a, b) = k` when the substitution function gives `k`
    SubEval,
}

impl AxiomSchema {
    pub const ALL: [AxiomSchema; 14] = [
        AxiomSchema::K,
        AxiomSchema::S,
        AxiomSchema::CP,
        AxiomSchema::Q1,
        AxiomSchema::Q2,
        AxiomSchema::Q3,
        AxiomSchema::Q4,
        AxiomSchema::Q5,
        AxiomSchema::Q6,
        AxiomSchema::Q7,
        AxiomSchema::EqRefl,
        AxiomSchema::EqSub,
        AxiomSchema::UnivInst,
        AxiomSchema::SubEval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomSchema::K => "K",
            AxiomSchema::S => "S",
            AxiomSchema::CP => "CP",
            AxiomSchema::Q1 => "Q1",
            AxiomSchema::Q2 => "Q2",
            AxiomSchema::Q3 => "Q3",
            AxiomSchema::Q4 => "Q4",
            AxiomSchema::Q5 => "Q5",
            AxiomSchema::Q6 => "Q6",
            AxiomSchema::Q7 => "Q7",
            AxiomSchema::EqRefl => "EqRefl",
            AxiomSchema::EqSub => "EqSub",
            AxiomSchema::UnivInst => "UnivInst",
            AxiomSchema::SubEval => "SubEval",
        }
    }

    /// Whether `f` is an instance of this schema.
    pub fn matches(self, f: &Formula, scheme: &CodecScheme) -> bool {
        match self {
            AxiomSchema::K => is_k(f),
            AxiomSchema::S => is_s(f),
            AxiomSchema::CP => is_cp(f),
            AxiomSchema::Q1 => is_q1(f),
            AxiomSchema::Q2 => is_q2(f),
            AxiomSchema::Q3 => is_q3(f),
            AxiomSchema::Q4 => is_q4(f),
            AxiomSchema::Q5 => is_q5(f),
            AxiomSchema::Q6 => is_q6(f),
            AxiomSchema::Q7 => is_q7(f),
            AxiomSchema::EqRefl => is_eq_refl(f),
            AxiomSchema::EqSub => is_eq_sub(f),
            AxiomSchema::UnivInst => is_univ_inst(f),
            AxiomSchema::SubEval => is_sub_eval(f, scheme),
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first schema `f` instantiates, if any.
pub fn is_axiom(f: &Formula, scheme: &CodecScheme) -> Option<AxiomSchema> {
    AxiomSchema::ALL.into_iter().find(|a| a.matches(f, scheme))
}

fn implies(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Implies(a, b) => Some((a, b)),
        _ => None,
    }
}

fn not(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(a) => Some(a),
        _ => None,
    }
}

fn equation(f: &Formula) -> Option<(&Term, &Term)> {
    match f {
        Formula::Equals(a, b) => Some((a, b)),
        _ => None,
    }
}

fn is_k(f: &Formula) -> bool {
    let check = || {
        let (a, rest) = implies(f)?;
        let (_, a2) = implies(rest)?;
        Some(a == a2)
    };
    check().unwrap_or(false)
}

fn is_s(f: &Formula) -> bool {
    let check = || {
        let (left, right) = implies(f)?;
        let (a, bc) = implies(left)?;
        let (b, c) = implies(bc)?;
        let (ab, ac) = implies(right)?;
        let (a2, b2) = implies(ab)?;
        let (a3, c2) = implies(ac)?;
        Some(a == a2 && a == a3 && b == b2 && c == c2)
    };
    check().unwrap_or(false)
}

fn is_cp(f: &Formula) -> bool {
    let check = || {
        let (left, right) = implies(f)?;
        let (na, nb) = implies(left)?;
        let (b, a) = implies(right)?;
        Some(not(na)? == a && not(nb)? == b)
    };
    check().unwrap_or(false)
}

fn is_q1(f: &Formula) -> bool {
    let check = || {
        let (l, r) = equation(not(f)?)?;
        Some(l.predecessor().is_some() && *r == Term::Zero)
    };
    check().unwrap_or(false)
}

fn is_q2(f: &Formula) -> bool {
    let check = || {
        let (hyp, concl) = implies(f)?;
        let (st, su) = equation(hyp)?;
        let (t, u) = equation(concl)?;
        Some(st.predecessor()? == *t && su.predecessor()? == *u)
    };
    check().unwrap_or(false)
}

fn is_q3(f: &Formula) -> bool {
    let check = || {
        let (hyp, concl) = implies(f)?;
        let (t, zero) = equation(not(hyp)?)?;
        let Formula::Exists(v, body) = concl else {
            return None;
        };
        let (t2, sv) = equation(body)?;
        Some(
            *zero == Term::Zero
                && t == t2
                && !t.contains_var(*v)
                && sv.predecessor()? == Term::Var(*v),
        )
    };
    check().unwrap_or(false)
}

fn is_q4(f: &Formula) -> bool {
    match f {
        Formula::Equals(Term::Plus(t, zero), t2) => **zero == Term::Zero && **t == *t2,
        _ => false,
    }
}

fn is_q5(f: &Formula) -> bool {
    let check = || {
        let (Term::Plus(t, su), rhs) = equation(f)? else {
            return None;
        };
        let u = su.predecessor()?;
        Some(rhs.predecessor()? == Term::plus((**t).clone(), u))
    };
    check().unwrap_or(false)
}

fn is_q6(f: &Formula) -> bool {
    match f {
        Formula::Equals(Term::Times(_, zero), rhs) => **zero == Term::Zero && *rhs == Term::Zero,
        _ => false,
    }
}

fn is_q7(f: &Formula) -> bool {
    let check = || {
        let (Term::Times(t, su), rhs) = equation(f)? else {
            return None;
        };
        let u = su.predecessor()?;
        Some(*rhs == Term::plus(Term::times((**t).clone(), u), (**t).clone()))
    };
    check().unwrap_or(false)
}

fn is_eq_refl(f: &Formula) -> bool {
    matches!(f, Formula::Equals(a, b) if a == b && a.is_closed())
}

fn is_eq_sub(f: &Formula) -> bool {
    let check = || {
        let (hyp, rest) = implies(f)?;
        let (t, u) = equation(hyp)?;
        let (a, b) = implies(rest)?;
        if !t.is_closed() || !u.is_closed() {
            return None;
        }
        let v = Var::ALL.into_iter().find(|v| !f.mentions(*v))?;
        let phi = EqSubWalk { t, u, v }.formula(a, b)?;
        Some(phi.replace_free(v, t) == *a && phi.replace_free(v, u) == *b)
    };
    check().unwrap_or(false)
}

/// Rebuilds a `phi` with `a = phi[v := t]` and `b = phi[v := u]`, placing `v`
/// wherever the two sides differ.
struct EqSubWalk<'a> {
    t: &'a Term,
    u: &'a Term,
    v: Var,
}

impl EqSubWalk<'_> {
    fn term(&self, a: &Term, b: &Term) -> Option<Term> {
        if a == b {
            return Some(a.clone());
        }
        if a == self.t && b == self.u {
            return Some(Term::Var(self.v));
        }
        let two =
            |x: &Term, y: &Term, p: &Term, q: &Term| Some((self.term(x, p)?, self.term(y, q)?));
        match (a, b) {
            (Term::Plus(x, y), Term::Plus(p, q)) => two(x, y, p, q).map(|(l, r)| Term::plus(l, r)),
            (Term::Times(x, y), Term::Times(p, q)) => {
                two(x, y, p, q).map(|(l, r)| Term::times(l, r))
            }
            (Term::SubApp(x, y), Term::SubApp(p, q)) => {
                two(x, y, p, q).map(|(l, r)| Term::sub_app(l, r))
            }
            _ => {
                let inner = self.term(&a.predecessor()?, &b.predecessor()?)?;
                Some(Term::Succ(inner.into()))
            }
        }
    }

    fn formula(&self, a: &Formula, b: &Formula) -> Option<Formula> {
        Some(match (a, b) {
            (Formula::Equals(x, y), Formula::Equals(p, q)) => {
                Formula::equals(self.term(x, p)?, self.term(y, q)?)
            }
            (Formula::Proves(x, y), Formula::Proves(p, q)) => {
                Formula::proves(self.term(x, p)?, self.term(y, q)?)
            }
            (Formula::Not(x), Formula::Not(p)) => Formula::not(self.formula(x, p)?),
            (Formula::And(x, y), Formula::And(p, q)) => {
                Formula::and(self.formula(x, p)?, self.formula(y, q)?)
            }
            (Formula::Or(x, y), Formula::Or(p, q)) => {
                Formula::or(self.formula(x, p)?, self.formula(y, q)?)
            }
            (Formula::Implies(x, y), Formula::Implies(p, q)) => {
                Formula::implies(self.formula(x, p)?, self.formula(y, q)?)
            }
            (Formula::Iff(x, y), Formula::Iff(p, q)) => {
                Formula::iff(self.formula(x, p)?, self.formula(y, q)?)
            }
            (Formula::Exists(v, x), Formula::Exists(w, p)) if v == w => {
                Formula::exists(*v, self.formula(x, p)?)
            }
            (Formula::Forall(v, x), Formula::Forall(w, p)) if v == w => {
                Formula::forall(*v, self.formula(x, p)?)
            }
            _ => return None,
        })
    }
}

fn is_univ_inst(f: &Formula) -> bool {
    match f {
        Formula::Implies(a, b) => match &**a {
            Formula::Forall(v, body) => match_instance(body, *v, b).is_some(),
            _ => false,
        },
        _ => false,
    }
}

fn is_sub_eval(f: &Formula, scheme: &CodecScheme) -> bool {
    let check = || {
        let (Term::SubApp(a, b), k) = equation(f)? else {
            return None;
        };
        let (a, j, k) = (a.numeral_value()?, b.numeral_value()?, k.numeral_value()?);
        let y = GoedelNumber(a);
        let body = crate::numbering::decode_formula(&y, scheme).ok()?;
        let free = body.free_vars();
        if free.len() != 1 {
            return None;
        }
        let z = *free.iter().next()?;
        match scheme.kind() {
            SchemeKind::Positional { base } => {
                let got = sub_code(&CompressedCode::from_number(&y.0, base), z, &j, scheme).ok()?;
                Some(got == CompressedCode::from_number(&k, base))
            }
            SchemeKind::PrimePower => {
                let got = crate::numbering::sub(&y, z, &j, scheme).ok()?;
                Some(got.0 == k)
            }
        }
    };
    check().unwrap_or(false)
}

/// A nonempty sequence of formulas.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Proof {
    lines: Vec<Formula>,
}

impl Proof {
    pub fn new(lines: Vec<Formula>) -> Result<Proof> {
        if lines.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Proof { lines })
    }

    pub fn lines(&self) -> &[Formula] {
        &self.lines
    }

    pub fn conclusion(&self) -> &Formula {
        self.lines.last().expect("proofs are nonempty")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    /// A first line that is not an axiom.
    NotAnAxiom,
    /// A later line that is neither an axiom nor derived from earlier lines.
    Unjustified,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::NotAnAxiom => "not-an-axiom",
            Reason::Unjustified => "unjustified",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// `line` counts from 1.
    Invalid {
        line: usize,
        reason: Reason,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        *self == Verdict::Valid
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid { line, reason } => write!(f, "invalid {line}: {reason}"),
        }
    }
}

/// How a proof line is justified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom(AxiomSchema),
    /// From lines `minor` and `major = minor -> line`, 0-based.
    ModusPonens {
        minor: usize,
        major: usize,
    },
    /// From line `premise`, 0-based.
    Generalization {
        premise: usize,
    },
}

/// Justifies line `i` of `lines` from the lines before it.
pub fn justify(lines: &[Formula], i: usize, scheme: &CodecScheme) -> Option<Justification> {
    let line = &lines[i];
    if let Some(a) = is_axiom(line, scheme) {
        return Some(Justification::Axiom(a));
    }
    let earlier = &lines[..i];
    for (major, m) in earlier.iter().enumerate() {
        if let Formula::Implies(a, b) = m {
            if **b == *line {
                if let Some(minor) = earlier.iter().position(|x| x == &**a) {
                    return Some(Justification::ModusPonens { minor, major });
                }
            }
        }
    }
    if let Formula::Forall(_, body) = line {
        if let Some(premise) = earlier.iter().position(|x| x == &**body) {
            return Some(Justification::Generalization { premise });
        }
    }
    None
}

pub fn check_proof(p: &Proof, scheme: &CodecScheme) -> Verdict {
    for i in 0..p.lines.len() {
        if justify(&p.lines, i, scheme).is_none() {
            let reason = if i == 0 {
                Reason::NotAnAxiom
            } else {
                Reason::Unjustified
            };
            return Verdict::Invalid {
                line: i + 1,
                reason,
            };
        }
    }
    Verdict::Valid
}

/// `(r, s)` with `r` the code of a proof of the formula coded by `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProvablePair {
    pub r: GoedelNumber,
    pub s: GoedelNumber,
}

/// The pair for proof code `r`, if `r` codes a valid proof.
pub fn proof_pair(r: &GoedelNumber, scheme: &CodecScheme) -> Option<ProvablePair> {
    let lines = decode_proof(r, scheme).ok()?;
    let proof = Proof::new(lines).ok()?;
    if !check_proof(&proof, scheme).is_valid() {
        return None;
    }
    let s = encode_formula(proof.conclusion(), scheme).ok()?;
    Some(ProvablePair { r: r.clone(), s })
}

/// The proof predicate: whether `r` codes a valid proof whose last line has
/// code `s`. Total; undecodable codes give `false`.
pub fn proves(r: &GoedelNumber, s: &GoedelNumber, scheme: &CodecScheme) -> bool {
    proof_pair(r, scheme).is_some_and(|pair| pair.s == *s)
}

/// The proof code of `p`.
pub fn proof_code(p: &Proof, scheme: &CodecScheme) -> Result<GoedelNumber> {
    crate::numbering::encode_proof(&p.lines, scheme)
}

/// Largest bound the enumerator accepts.
pub(crate) fn enumerable(max_code: &BigUint) -> Result<u64> {
    u64::try_from(max_code).map_err(|_| Error::CapExceeded(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use alloc::string::ToString;
    use alloc::vec;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn pos() -> CodecScheme {
        CodecScheme::positional()
    }

    #[test]
    fn axiom_examples() {
        assert_eq!(is_axiom(&f("0=0"), &pos()), Some(AxiomSchema::EqRefl));
        assert_eq!(
            is_axiom(&f("0=0 -> (0=0 -> 0=0)"), &pos()),
            Some(AxiomSchema::K)
        );
        assert_eq!(is_axiom(&f("0=s0"), &pos()), None);
    }

    #[test]
    fn schema_instances() {
        let cases = [
            (
                "(0=0->(x=0->y=0))->((0=0->x=0)->(0=0->y=0))",
                AxiomSchema::S,
            ),
            ("(~x=0->~y=0)->(y=0->x=0)", AxiomSchema::CP),
            ("~(sx=0)", AxiomSchema::Q1),
            ("~(ss0=0)", AxiomSchema::Q1),
            ("sx=sss0->x=ss0", AxiomSchema::Q2),
            ("~(x=0)->Ey(x=sy)", AxiomSchema::Q3),
            ("x+0=x", AxiomSchema::Q4),
            ("x+ss0=s(x+s0)", AxiomSchema::Q5),
            ("x*0=0", AxiomSchema::Q6),
            ("x*sy=x*y+x", AxiomSchema::Q7),
            ("s0=s0", AxiomSchema::EqRefl),
            ("ss0=s0+s0->(sss0=x->s(s0+s0)=x)", AxiomSchema::EqSub),
            ("Ax(x=x)->ss0=ss0", AxiomSchema::UnivInst),
            ("sub(N[20641],ss0)=N[2163873]", AxiomSchema::SubEval),
        ];
        for (text, schema) in cases {
            assert_eq!(is_axiom(&f(text), &pos()), Some(schema), "{text}");
        }
    }

    #[test]
    fn near_misses_are_rejected() {
        for text in [
            "~(x=0)->Ex(x=sx)",
            "x=x",
            "x+0=y",
            "sub(N[20641],ss0)=N[2163872]",
            "sub(N[1185],ss0)=N[1185]",
            "0=s0->(x=0->x=s0)->x=0",
            "Ax(x=x)->y=y",
            "x*sy=x+x*y",
        ] {
            assert_eq!(is_axiom(&f(text), &pos()), None, "{text}");
        }
    }

    #[test]
    fn eq_sub_requires_matching_sites() {
        assert!(is_eq_sub(&f("0=s0->(0+x=0->s0+x=s0)")));
        assert!(is_eq_sub(&f("0=s0->(0+x=0->s0+x=0)")));
        assert!(!is_eq_sub(&f("0=s0->(0+x=0->ss0+x=0)")));
        assert!(!is_eq_sub(&f("x=0->(x=x->0=0)")));
    }

    #[test]
    fn pinned_proofs() {
        let one = Proof::new(vec![f("0=0")]).unwrap();
        assert_eq!(check_proof(&one, &pos()), Verdict::Valid);
        let mp = Proof::new(vec![f("0=0"), f("0=0 -> (0=0 -> 0=0)"), f("0=0 -> 0=0")]).unwrap();
        assert_eq!(check_proof(&mp, &pos()), Verdict::Valid);
        let bad = Proof::new(vec![f("0=s0")]).unwrap();
        let verdict = check_proof(&bad, &pos());
        assert_eq!(
            verdict,
            Verdict::Invalid {
                line: 1,
                reason: Reason::NotAnAxiom
            }
        );
        assert_eq!(verdict.to_string(), "invalid 1: not-an-axiom");
    }

    #[test]
    fn generalization_and_unjustified_lines() {
        let gen = Proof::new(vec![f("x+0=x"), f("Ax(x+0=x)")]).unwrap();
        assert_eq!(check_proof(&gen, &pos()), Verdict::Valid);
        let gap = Proof::new(vec![f("0=0"), f("s0=0")]).unwrap();
        assert_eq!(
            check_proof(&gap, &pos()),
            Verdict::Invalid {
                line: 2,
                reason: Reason::Unjustified
            }
        );
        assert_eq!(Proof::new(vec![]), Err(Error::EmptySequence));
    }

    #[test]
    fn proof_predicate() {
        let n = |k: u64| GoedelNumber::from(k);
        assert!(proves(&n(1185), &n(1185), &pos()));
        assert!(!proves(&n(1), &n(1185), &pos()));
        assert!(!proves(&n(1185), &n(1), &pos()));
        assert!(!proves(&n(0), &n(0), &pos()));

        let mp = Proof::new(vec![f("0=0"), f("0=0 -> (0=0 -> 0=0)"), f("0=0 -> 0=0")]).unwrap();
        let r = proof_code(&mp, &pos()).unwrap();
        let s = encode_formula(&f("0=0 -> 0=0"), &pos()).unwrap();
        assert!(proves(&r, &s, &pos()));

        let pp = CodecScheme::prime_power();
        let r = proof_code(&Proof::new(vec![f("0=0")]).unwrap(), &pp).unwrap();
        assert!(proves(&r, &n(2430), &pp));
    }
}
