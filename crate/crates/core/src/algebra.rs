//! Finite interval algebras, term evaluation, and the truth-table decision
//! procedure for equality of terms.
//!
//! Equality in a canonical cube category is decided by exhaustive evaluation
//! over a finite algebra generating the same equational theory as the real
//! interval: the two-element chain for most languages, and the three-element
//! Kleene chain `{0 < u < 1}` once reversal, both connections and contraction
//! are all available.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::{Language, Signature};
use crate::term::Term;

/// Index of an element in an algebra's carrier.
pub type Element = u8;

/// Largest number of assignments an exhaustive check will enumerate.
pub const MAX_ASSIGNMENTS: usize = 10_000_000;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("algebra {algebra} has no table for `{symbol}`")]
    MissingOperation { algebra: String, symbol: &'static str },
    #[error("{0} theory requires the full language L(wec,∨∧′), got {1}")]
    TheoryNeedsFullLanguage(Theory, Language),
    #[error("{carrier}^{arity} assignments exceed the limit of {MAX_ASSIGNMENTS}")]
    TooManyAssignments { carrier: usize, arity: usize },
    #[error("free algebra requires a cartesian language, got {0}")]
    NotCartesian(Language),
    #[error("free algebra exceeded {0} elements")]
    FreeAlgebraTooLarge(usize),
    #[error("variable x{index} is unassigned (environment has {len} entries)")]
    Unassigned { index: usize, len: usize },
    #[error("invalid algebra: {0}")]
    Invalid(String),
    #[error("reading algebra file: {0}")]
    Io(#[from] std::io::Error),
    #[error("parsing algebra file: {0}")]
    Json(#[from] serde_json::Error),
}

/// A finite algebra with constants 0 and 1 and optional ∨, ∧, ′ tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    elements: Vec<String>,
    zero: Element,
    one: Element,
    join: Option<Vec<Element>>,
    meet: Option<Vec<Element>>,
    rev: Option<Vec<Element>>,
}

/// On-disk form of a custom algebra. Tables are indexed by element names.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default)]
    pub name: Option<String>,
    pub carrier: Vec<String>,
    pub zero: String,
    pub one: String,
    #[serde(default)]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub meet: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub rev: Option<Vec<String>>,
}

fn chain_tables(n: usize) -> (Vec<Element>, Vec<Element>, Vec<Element>) {
    let mut join = Vec::with_capacity(n * n);
    let mut meet = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            join.push(a.max(b) as Element);
            meet.push(a.min(b) as Element);
        }
    }
    let rev = (0..n).map(|a| (n - 1 - a) as Element).collect();
    (join, meet, rev)
}

impl FiniteAlgebra {
    /// The Boolean chain `{0 < 1}`.
    pub fn two() -> Self {
        let (join, meet, rev) = chain_tables(2);
        Self {
            name: "TWO".into(),
            elements: vec!["0".into(), "1".into()],
            zero: 0,
            one: 1,
            join: Some(join),
            meet: Some(meet),
            rev: Some(rev),
        }
    }

    /// The Kleene chain `{0 < u < 1}` with `u′ = u`.
    pub fn three() -> Self {
        let (join, meet, rev) = chain_tables(3);
        Self {
            name: "THREE".into(),
            elements: vec!["0".into(), "u".into(), "1".into()],
            zero: 0,
            one: 2,
            join: Some(join),
            meet: Some(meet),
            rev: Some(rev),
        }
    }

    /// The de Morgan diamond `{0, u, v, 1}` with `u′ = u`, `v′ = v`,
    /// `u ∧ v = 0` and `u ∨ v = 1`.
    pub fn diamond() -> Self {
        // 0 = bottom, 1 = u, 2 = v, 3 = top; order as bit sets {u}, {v}.
        let bits = [0b00u8, 0b01, 0b10, 0b11];
        let of = |b: u8| bits.iter().position(|&x| x == b).unwrap() as Element;
        let mut join = Vec::new();
        let mut meet = Vec::new();
        for a in bits {
            for b in bits {
                join.push(of(a | b));
                meet.push(of(a & b));
            }
        }
        Self {
            name: "DIAMOND".into(),
            elements: vec!["0".into(), "u".into(), "v".into(), "1".into()],
            zero: 0,
            one: 3,
            join: Some(join),
            meet: Some(meet),
            rev: Some(vec![3, 1, 2, 0]),
        }
    }

    pub fn from_description(desc: AlgebraFile) -> Result<Self, AlgebraError> {
        let n = desc.carrier.len();
        if n < 2 || n > Element::MAX as usize {
            return Err(AlgebraError::Invalid(format!("carrier size {n} out of range")));
        }
        let index: HashMap<&str, Element> =
            desc.carrier.iter().enumerate().map(|(i, s)| (s.as_str(), i as Element)).collect();
        if index.len() != n {
            return Err(AlgebraError::Invalid("duplicate carrier element".into()));
        }
        let look = |s: &str| {
            index.get(s).copied().ok_or_else(|| AlgebraError::Invalid(format!("`{s}` is not in the carrier")))
        };
        let zero = look(&desc.zero)?;
        let one = look(&desc.one)?;
        if zero == one {
            return Err(AlgebraError::Invalid("zero and one coincide".into()));
        }
        let binary = |t: &Option<Vec<Vec<String>>>, what: &str| -> Result<Option<Vec<Element>>, AlgebraError> {
            let Some(rows) = t else { return Ok(None) };
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(AlgebraError::Invalid(format!("{what} table is not {n}×{n}")));
            }
            rows.iter().flatten().map(|s| look(s)).collect::<Result<Vec<_>, _>>().map(Some)
        };
        let join = binary(&desc.join, "join")?;
        let meet = binary(&desc.meet, "meet")?;
        let rev = match &desc.rev {
            None => None,
            Some(r) if r.len() != n => return Err(AlgebraError::Invalid(format!("rev table has {} entries, expected {n}", r.len()))),
            Some(r) => Some(r.iter().map(|s| look(s)).collect::<Result<Vec<_>, _>>()?),
        };
        Ok(Self {
            name: desc.name.unwrap_or_else(|| "custom".into()),
            elements: desc.carrier,
            zero,
            one,
            join,
            meet,
            rev,
        })
    }

    pub fn load(path: &Path) -> Result<Self, AlgebraError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_description(serde_json::from_str(&text)?)
    }

    pub fn to_description(&self) -> AlgebraFile {
        let name = |e: &Element| self.elements[*e as usize].clone();
        let square = |t: &Vec<Element>| t.chunks(self.size()).map(|row| row.iter().map(name).collect()).collect();
        AlgebraFile {
            name: Some(self.name.clone()),
            carrier: self.elements.clone(),
            zero: name(&self.zero),
            one: name(&self.one),
            join: self.join.as_ref().map(square),
            meet: self.meet.as_ref().map(square),
            rev: self.rev.as_ref().map(|r| r.iter().map(name).collect()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_name(&self, e: Element) -> &str {
        &self.elements[e as usize]
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.elements.iter().position(|s| s == name).map(|i| i as Element)
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn one(&self) -> Element {
        self.one
    }

    /// Whether the algebra interprets every symbol of `sig`.
    pub fn supports(&self, sig: Signature) -> bool {
        (!sig.has_join() || self.join.is_some())
            && (!sig.has_meet() || self.meet.is_some())
            && (!sig.has_reversal() || self.rev.is_some())
    }

    fn missing(&self, symbol: &'static str) -> AlgebraError {
        AlgebraError::MissingOperation { algebra: self.name.clone(), symbol }
    }

    pub fn join(&self, a: Element, b: Element) -> Result<Element, AlgebraError> {
        let t = self.join.as_ref().ok_or_else(|| self.missing("∨"))?;
        Ok(t[a as usize * self.size() + b as usize])
    }

    pub fn meet(&self, a: Element, b: Element) -> Result<Element, AlgebraError> {
        let t = self.meet.as_ref().ok_or_else(|| self.missing("∧"))?;
        Ok(t[a as usize * self.size() + b as usize])
    }

    pub fn rev(&self, a: Element) -> Result<Element, AlgebraError> {
        let t = self.rev.as_ref().ok_or_else(|| self.missing("′"))?;
        Ok(t[a as usize])
    }

    /// `size^arity`, refusing anything beyond [`MAX_ASSIGNMENTS`].
    pub fn assignment_count(&self, arity: usize) -> Result<usize, AlgebraError> {
        let too_many = || AlgebraError::TooManyAssignments { carrier: self.size(), arity };
        let n = u32::try_from(arity).ok().and_then(|a| self.size().checked_pow(a)).ok_or_else(too_many)?;
        if n > MAX_ASSIGNMENTS {
            return Err(too_many());
        }
        Ok(n)
    }

    /// The assignment with the given index; `x1` is the most significant digit.
    pub fn assignment(&self, arity: usize, mut index: usize) -> Vec<Element> {
        let k = self.size();
        let mut env = vec![0; arity];
        for slot in env.iter_mut().rev() {
            *slot = (index % k) as Element;
            index /= k;
        }
        env
    }

    pub fn assignment_index(&self, env: &[Element]) -> usize {
        env.iter().fold(0, |acc, &e| acc * self.size() + e as usize)
    }

    /// Function table of `t` over all assignments of `x1..x{arity}`.
    pub fn table(&self, t: &Term, arity: usize) -> Result<Table, AlgebraError> {
        let n = self.assignment_count(arity)?;
        self.table_inner(t, arity, n).map(Table)
    }

    fn table_inner(&self, t: &Term, arity: usize, n: usize) -> Result<Vec<Element>, AlgebraError> {
        Ok(match t {
            Term::Zero => vec![self.zero; n],
            Term::One => vec![self.one; n],
            Term::Var(i) => {
                if *i == 0 || *i > arity {
                    return Err(AlgebraError::Unassigned { index: *i, len: arity });
                }
                let stride = self.size().pow((arity - i) as u32);
                (0..n).map(|a| ((a / stride) % self.size()) as Element).collect()
            }
            Term::Rev(a) => {
                let a = self.table_inner(a, arity, n)?;
                a.into_iter().map(|x| self.rev(x)).collect::<Result<_, _>>()?
            }
            Term::Join(a, b) | Term::Meet(a, b) => {
                let a = self.table_inner(a, arity, n)?;
                let b = self.table_inner(b, arity, n)?;
                let is_join = matches!(t, Term::Join(..));
                a.into_iter()
                    .zip(b)
                    .map(|(x, y)| if is_join { self.join(x, y) } else { self.meet(x, y) })
                    .collect::<Result<_, _>>()?
            }
        })
    }

    /// First assignment (in index order) on which `s` and `t` differ.
    pub fn counterexample(&self, s: &Term, t: &Term, arity: usize) -> Result<Option<Vec<Element>>, AlgebraError> {
        let a = self.table(s, arity)?;
        let b = self.table(t, arity)?;
        Ok(a.0.iter().zip(&b.0).position(|(x, y)| x != y).map(|i| self.assignment(arity, i)))
    }

    pub fn format_assignment(&self, env: &[Element]) -> String {
        env.iter()
            .enumerate()
            .map(|(i, e)| format!("x{}↦{}", i + 1, self.element_name(*e)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Evaluates `t` under `env`, where `env[i]` is the value of `x{i+1}`.
pub fn eval(t: &Term, alg: &FiniteAlgebra, env: &[Element]) -> Result<Element, AlgebraError> {
    match t {
        Term::Zero => Ok(alg.zero),
        Term::One => Ok(alg.one),
        Term::Var(i) => env
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or(AlgebraError::Unassigned { index: *i, len: env.len() }),
        Term::Rev(a) => alg.rev(eval(a, alg, env)?),
        Term::Join(a, b) => alg.join(eval(a, alg, env)?, eval(b, alg, env)?),
        Term::Meet(a, b) => alg.meet(eval(a, alg, env)?, eval(b, alg, env)?),
    }
}

/// A function `carrier^m → carrier`, listed in assignment-index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Table(pub Vec<Element>);

impl Table {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// Which equational theory a cube category is the syntactic category of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    /// The theory of the real interval `[0,1]` in the given language.
    Canonical,
    DeMorgan,
    Boolean,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Canonical => "canonical",
            Theory::DeMorgan => "demorgan",
            Theory::Boolean => "boolean",
        })
    }
}

impl FromStr for Theory {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "canonical" | "kleene" => Ok(Theory::Canonical),
            "demorgan" | "dm" => Ok(Theory::DeMorgan),
            "boolean" | "ba" => Ok(Theory::Boolean),
            other => Err(format!("unknown theory `{other}` (expected canonical, demorgan or boolean)")),
        }
    }
}

/// Whether the canonical theory of `lang` differs from that of the
/// two-element chain. This happens exactly when reversal, both connections
/// and contraction are present: then `x ∧ x′` and `x ∧ 0` are both terms,
/// they agree on `{0,1}` but not at `x = ½`.
pub fn needs_kleene_chain(lang: Language) -> bool {
    lang.signature == Signature::FULL && lang.rules.contraction()
}

/// The finite algebra whose truth tables decide equality in `(lang, theory)`.
pub fn decision_algebra(lang: Language, theory: Theory) -> Result<FiniteAlgebra, AlgebraError> {
    match theory {
        Theory::Canonical if needs_kleene_chain(lang) => Ok(FiniteAlgebra::three()),
        Theory::Canonical => Ok(FiniteAlgebra::two()),
        Theory::DeMorgan if lang.is_full() => Ok(FiniteAlgebra::diamond()),
        Theory::Boolean if lang.is_full() => Ok(FiniteAlgebra::two()),
        _ => Err(AlgebraError::TheoryNeedsFullLanguage(theory, lang)),
    }
}

/// Decides `s = t` over `x1..x{arity}` in the given theory.
pub fn terms_equal(s: &Term, t: &Term, arity: usize, lang: Language, theory: Theory) -> Result<bool, AlgebraError> {
    let alg = decision_algebra(lang, theory)?;
    Ok(alg.counterexample(s, t, arity)?.is_none())
}

/// Elements of a finitely generated free algebra, each with a witness term.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    pub algebra: FiniteAlgebra,
    pub generators: usize,
    /// Sorted by table.
    pub elements: Vec<(Table, Term)>,
}

impl FreeAlgebra {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Table) -> bool {
        self.elements.binary_search_by(|(k, _)| k.cmp(t)).is_ok()
    }
}

/// Default cap on free algebra size.
pub const MAX_FREE_ELEMENTS: usize = 200_000;

/// Closure of the `m` projections and the constants under the signature's
/// operations, inside the functions `carrier^m → carrier`.
pub fn free_algebra(lang: Language, theory: Theory, m: usize) -> Result<FreeAlgebra, AlgebraError> {
    if !lang.rules.is_cartesian() {
        return Err(AlgebraError::NotCartesian(lang));
    }
    let alg = decision_algebra(lang, theory)?;
    let sig = lang.signature;
    let mut seeds = vec![Term::Zero, Term::One];
    seeds.extend((1..=m).map(Term::Var));
    let mut elements: Vec<(Table, Term)> = Vec::new();
    let mut index: HashMap<Table, usize> = HashMap::new();
    let mut push = |table: Table, term: Term, elements: &mut Vec<(Table, Term)>| -> Result<(), AlgebraError> {
        if !index.contains_key(&table) {
            if elements.len() >= MAX_FREE_ELEMENTS {
                return Err(AlgebraError::FreeAlgebraTooLarge(MAX_FREE_ELEMENTS));
            }
            index.insert(table.clone(), elements.len());
            elements.push((table, term));
        }
        Ok(())
    };
    for s in seeds {
        let t = alg.table(&s, m)?;
        push(t, s, &mut elements)?;
    }
    let mut next = 0;
    while next < elements.len() {
        let (a, ta) = elements[next].clone();
        if sig.has_reversal() {
            let t = Table(a.0.iter().map(|&x| alg.rev(x)).collect::<Result<_, _>>()?);
            push(t, Term::rev(ta.clone()), &mut elements)?;
        }
        for j in 0..=next {
            let (b, tb) = elements[j].clone();
            for (enabled, is_join) in [(sig.has_join(), true), (sig.has_meet(), false)] {
                if !enabled {
                    continue;
                }
                let op = |x: Element, y: Element| if is_join { alg.join(x, y) } else { alg.meet(x, y) };
                let mk = |l: &Term, r: &Term| if is_join { Term::join(l.clone(), r.clone()) } else { Term::meet(l.clone(), r.clone()) };
                let ab = Table(a.0.iter().zip(&b.0).map(|(&x, &y)| op(x, y)).collect::<Result<_, _>>()?);
                push(ab, mk(&ta, &tb), &mut elements)?;
                let ba = Table(b.0.iter().zip(&a.0).map(|(&x, &y)| op(x, y)).collect::<Result<_, _>>()?);
                push(ba, mk(&tb, &ta), &mut elements)?;
            }
        }
        next += 1;
    }
    elements.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(FreeAlgebra { algebra: alg, generators: m, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::StructuralRules;
    use crate::term::parse_term;

    fn full() -> Language {
        Language::FULL
    }

    #[test]
    fn builtin_tables() {
        let d = FiniteAlgebra::diamond();
        let (u, v) = (d.element("u").unwrap(), d.element("v").unwrap());
        assert_eq!(d.meet(u, v).unwrap(), d.zero());
        assert_eq!(d.join(u, v).unwrap(), d.one());
        assert_eq!(d.rev(u).unwrap(), u);
        assert_eq!(d.rev(d.zero()).unwrap(), d.one());
        let t = FiniteAlgebra::three();
        let u = t.element("u").unwrap();
        assert_eq!(t.rev(u).unwrap(), u);
        assert_ne!(t.zero(), t.one());
    }

    #[test]
    fn eval_examples() {
        let three = FiniteAlgebra::three();
        assert_eq!(eval(&Term::rev(Term::Zero), &three, &[]).unwrap(), three.one());
        let two = FiniteAlgebra::two();
        let t = Term::meet(Term::Var(1), Term::rev(Term::Var(1)));
        assert_eq!(eval(&t, &two, &[1]).unwrap(), 0);
        let u = three.element("u").unwrap();
        let t = Term::join(Term::Var(1), Term::rev(Term::Var(1)));
        assert_eq!(eval(&t, &three, &[u]).unwrap(), u);
    }

    #[test]
    fn eval_missing_table() {
        let mut desc = FiniteAlgebra::two().to_description();
        desc.join = None;
        let alg = FiniteAlgebra::from_description(desc).unwrap();
        let t = Term::join(Term::Zero, Term::One);
        assert!(matches!(eval(&t, &alg, &[]), Err(AlgebraError::MissingOperation { symbol: "∨", .. })));
        assert!(!alg.supports(Signature::JOIN));
        assert!(alg.supports(Signature::MEET));
    }

    #[test]
    fn table_agrees_with_eval() {
        let alg = FiniteAlgebra::diamond();
        let t = parse_term("(x1 ∨ x2′) ∧ x3 ∨ 0′", 3, Signature::FULL).unwrap();
        let table = alg.table(&t, 3).unwrap();
        for i in 0..table.len() {
            let env = alg.assignment(3, i);
            assert_eq!(alg.assignment_index(&env), i);
            assert_eq!(table.0[i], eval(&t, &alg, &env).unwrap());
        }
    }

    #[test]
    fn decision_algebra_selection() {
        let l = Language::new(StructuralRules::W, Signature::EMPTY);
        assert_eq!(decision_algebra(l, Theory::Canonical).unwrap().name(), "TWO");
        assert_eq!(decision_algebra(full(), Theory::Canonical).unwrap().name(), "THREE");
        assert_eq!(decision_algebra(full(), Theory::DeMorgan).unwrap().name(), "DIAMOND");
        assert_eq!(decision_algebra(full(), Theory::Boolean).unwrap().name(), "TWO");
        assert!(matches!(decision_algebra(l, Theory::DeMorgan), Err(AlgebraError::TheoryNeedsFullLanguage(..))));
        assert!(matches!(decision_algebra(l, Theory::Boolean), Err(AlgebraError::TheoryNeedsFullLanguage(..))));
        let ec = Language::new(StructuralRules::EC, Signature::FULL);
        assert_eq!(decision_algebra(ec, Theory::Canonical).unwrap().name(), "THREE");
    }

    #[test]
    fn terms_equal_examples() {
        let wj = Language::new(StructuralRules::W, Signature::JOIN);
        let s = parse_term("x1 ∨ (x2 ∨ x3)", 3, Signature::JOIN).unwrap();
        let t = parse_term("(x1 ∨ x2) ∨ x3", 3, Signature::JOIN).unwrap();
        assert!(terms_equal(&s, &t, 3, wj, Theory::Canonical).unwrap());
        let s = parse_term("x1 ∨ 0", 1, Signature::JOIN).unwrap();
        assert!(terms_equal(&s, &Term::Var(1), 1, wj, Theory::Canonical).unwrap());

        let s = parse_term("x1 ∧ x1′", 1, Signature::FULL).unwrap();
        assert!(terms_equal(&s, &Term::Zero, 1, full(), Theory::Boolean).unwrap());
        assert!(!terms_equal(&s, &Term::Zero, 1, full(), Theory::Canonical).unwrap());
        let three = FiniteAlgebra::three();
        let w = three.counterexample(&s, &Term::Zero, 1).unwrap().unwrap();
        assert_eq!(three.format_assignment(&w), "x1↦u");
    }

    #[test]
    fn assignment_cap() {
        let three = FiniteAlgebra::three();
        assert!(three.assignment_count(14).is_ok());
        assert!(matches!(three.assignment_count(15), Err(AlgebraError::TooManyAssignments { .. })));
        assert!(matches!(three.assignment_count(usize::MAX), Err(AlgebraError::TooManyAssignments { .. })));
    }

    #[test]
    fn free_algebra_counts() {
        assert_eq!(free_algebra(full(), Theory::Canonical, 1).unwrap().len(), 6);
        assert_eq!(free_algebra(full(), Theory::Boolean, 1).unwrap().len(), 4);
        let lattice = Language::new(StructuralRules::WEC, Signature::LATTICE);
        assert_eq!(free_algebra(lattice, Theory::Canonical, 2).unwrap().len(), 6);
        let w = Language::new(StructuralRules::W, Signature::LATTICE);
        assert!(matches!(free_algebra(w, Theory::Canonical, 1), Err(AlgebraError::NotCartesian(_))));
    }

    #[test]
    fn free_algebra_witnesses_evaluate_to_their_tables() {
        let fa = free_algebra(full(), Theory::Canonical, 2).unwrap();
        for (table, term) in &fa.elements {
            assert_eq!(&fa.algebra.table(term, 2).unwrap(), table);
        }
    }

    #[test]
    fn custom_algebra_validation() {
        let desc: AlgebraFile = serde_json::from_str(
            r#"{"carrier":["0","1"],"zero":"0","one":"1","rev":["1","0"],"join":[["0","1"],["1"]]}"#,
        )
        .unwrap();
        assert!(matches!(FiniteAlgebra::from_description(desc), Err(AlgebraError::Invalid(_))));
        let desc: AlgebraFile =
            serde_json::from_str(r#"{"carrier":["a","b"],"zero":"a","one":"a"}"#).unwrap();
        assert!(FiniteAlgebra::from_description(desc).is_err());
        let desc: AlgebraFile =
            serde_json::from_str(r#"{"carrier":["a","b"],"zero":"a","one":"b","rev":["b","c"]}"#).unwrap();
        assert!(FiniteAlgebra::from_description(desc).is_err());
        let round = FiniteAlgebra::from_description(FiniteAlgebra::diamond().to_description()).unwrap();
        assert_eq!(round, FiniteAlgebra::diamond());
    }
}
