//! The cubical axiom table and soundness checks against decision algebras.

use serde::Serialize;

use crate::algebra::{decision_algebra, AlgebraError, FiniteAlgebra, Theory};
use crate::language::{Language, Signature, StructuralRules};
use crate::term::{parse_term, Term};

/// One equation of the axiom table together with the least language it
/// can be stated in.
#[derive(Clone, Debug)]
pub struct Axiom {
    pub name: &'static str,
    pub requires: Language,
    pub arity: usize,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn ax(name: &'static str, rules: StructuralRules, sig: Signature, arity: usize, lhs: &'static str, rhs: &'static str) -> Axiom {
    Axiom { name, requires: Language { rules, signature: sig }, arity, lhs, rhs }
}

use StructuralRules as R;
use Signature as S;

/// Equations with `a = b = c` are split into two rows sharing a name.
/// Kleene's inequation `x ∧ x′ ≤ y ∨ y′` is stated as
/// `(x ∧ x′) ∧ (y ∨ y′) = x ∧ x′`.
pub const AXIOMS: &[Axiom] = &[
    ax("∨-associativity", R::NONE, S::JOIN, 3, "x1 ∨ (x2 ∨ x3)", "(x1 ∨ x2) ∨ x3"),
    ax("∨-unit", R::NONE, S::JOIN, 1, "0 ∨ x1", "x1"),
    ax("∨-unit", R::NONE, S::JOIN, 1, "x1 ∨ 0", "x1"),
    ax("∨-absorption", R::W, S::JOIN, 1, "1 ∨ x1", "1"),
    ax("∨-absorption", R::W, S::JOIN, 1, "x1 ∨ 1", "1"),
    ax("∨-symmetry", R::E, S::JOIN, 2, "x1 ∨ x2", "x2 ∨ x1"),
    ax("∨-idempotence", R::EC, S::JOIN, 1, "x1 ∨ x1", "x1"),
    ax("∧-associativity", R::NONE, S::MEET, 3, "x1 ∧ (x2 ∧ x3)", "(x1 ∧ x2) ∧ x3"),
    ax("∧-unit", R::NONE, S::MEET, 1, "1 ∧ x1", "x1"),
    ax("∧-unit", R::NONE, S::MEET, 1, "x1 ∧ 1", "x1"),
    ax("∧-absorption", R::W, S::MEET, 1, "0 ∧ x1", "0"),
    ax("∧-absorption", R::W, S::MEET, 1, "x1 ∧ 0", "0"),
    ax("∧-symmetry", R::E, S::MEET, 2, "x1 ∧ x2", "x2 ∧ x1"),
    ax("∧-idempotence", R::EC, S::MEET, 1, "x1 ∧ x1", "x1"),
    ax("′-involution", R::NONE, S::REV, 1, "x1′′", "x1"),
    ax("′-computation", R::NONE, S::REV, 0, "0′", "1"),
    ax("distributive law 1", R::EC, S::LATTICE, 3, "x1 ∧ (x2 ∨ x3)", "(x1 ∧ x2) ∨ (x1 ∧ x3)"),
    ax("distributive law 2", R::EC, S::LATTICE, 3, "x1 ∨ (x2 ∧ x3)", "(x1 ∨ x2) ∧ (x1 ∨ x3)"),
    ax("lattice-absorption", R::WEC, S::LATTICE, 2, "x1", "x1 ∨ (x1 ∧ x2)"),
    ax("lattice-absorption", R::WEC, S::LATTICE, 2, "x1", "x1 ∧ (x1 ∨ x2)"),
    ax("de Morgan's law", R::NONE, S::FULL, 2, "(x1 ∨ x2)′", "x1′ ∧ x2′"),
    ax("Kleene's law", R::WEC, S::FULL, 2, "(x1 ∧ x1′) ∧ (x2 ∨ x2′)", "x1 ∧ x1′"),
];

/// `x ∨ x′ = 1`, which holds in Boolean algebras only.
pub const HOPF_LAW: Axiom = ax("Hopf law", R::WEC, S::FULL, 1, "x1 ∨ x1′", "1");

impl Axiom {
    pub fn applies_to(&self, lang: Language) -> bool {
        self.requires.is_sublanguage_of(lang)
    }

    pub fn sides(&self) -> (Term, Term) {
        let sig = self.requires.signature;
        (
            parse_term(self.lhs, self.arity, sig).expect("axiom table is well-formed"),
            parse_term(self.rhs, self.arity, sig).expect("axiom table is well-formed"),
        )
    }

    pub fn check(&self, alg: &FiniteAlgebra) -> Result<AxiomResult, AlgebraError> {
        let (l, r) = self.sides();
        let witness = alg.counterexample(&l, &r, self.arity)?;
        Ok(AxiomResult {
            name: self.name.to_string(),
            equation: format!("{} = {}", self.lhs, self.rhs),
            algebra: alg.name().to_string(),
            holds: witness.is_none(),
            witness: witness.map(|w| alg.format_assignment(&w)),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub equation: String,
    pub algebra: String,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SoundnessReport {
    pub language: String,
    pub theory: Theory,
    pub results: Vec<AxiomResult>,
}

impl SoundnessReport {
    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.holds)
    }

    pub fn result(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

/// Checks every applicable axiom over the decision algebra of `(lang, theory)`.
pub fn axiom_soundness(lang: Language, theory: Theory) -> Result<SoundnessReport, AlgebraError> {
    let alg = decision_algebra(lang, theory)?;
    let results = AXIOMS
        .iter()
        .filter(|a| a.applies_to(lang))
        .map(|a| a.check(&alg))
        .collect::<Result<_, _>>()?;
    Ok(SoundnessReport { language: lang.to_string(), theory, results })
}
