//! Cube categories `C(a,b)(T)`: objects are contexts `[n]`, morphisms
//! `[m] → [n]` are `n`-tuples of terms over `x1..xm` obeying the joint
//! occurrence discipline, identified up to equality in the theory `T`.
//!
//! Composition is written diagrammatically: `compose(f, g)` is "`f`, then
//! `g`", i.e. `g` with `f` substituted for its variables.

mod factor;
mod hom;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{decision_algebra, AlgebraError, Element, FiniteAlgebra, Table, Theory};
use crate::language::Language;
use crate::term::{check_discipline, Term};

pub use factor::{FaceSlot, Factorization};
pub use hom::{component_closure, HomBounds, HomEntry, HomSet};

#[derive(Debug, Error)]
pub enum CubeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("not a morphism of {category}: {reason}")]
    InvalidMorphism { category: String, reason: String },
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("factorization is only available without connections or contraction, not in {0}")]
    UnsupportedFactorization(String),
}

/// A tuple of terms `[source] → [target]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub components: Vec<Term>,
}

impl Morphism {
    pub fn new(source: usize, components: Vec<Term>) -> Self {
        Self { source, target: components.len(), components }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, (1..=n).map(Term::Var).collect())
    }

    /// Juxtaposition: `g`'s variables are shifted past `f`'s context.
    pub fn tensor(&self, other: &Morphism) -> Morphism {
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|t| t.shift(self.source)));
        Morphism::new(self.source + other.source, components)
    }

    /// `self` followed by `next`, by substitution. Panics on arity mismatch.
    pub fn then(&self, next: &Morphism) -> Morphism {
        assert_eq!(self.target, next.source, "composing {self} with {next}");
        Morphism::new(self.source, next.components.iter().map(|t| t.substitute(&self.components)).collect())
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "): [{}] → [{}]", self.source, self.target)
    }
}

/// Canonical identity of a morphism: one function table per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemanticKey {
    pub source: usize,
    pub target: usize,
    pub tables: Vec<Table>,
}

impl SemanticKey {
    /// `self` followed by `next`, computed on tables alone.
    pub fn then(&self, next: &SemanticKey, alg: &FiniteAlgebra) -> SemanticKey {
        assert_eq!(self.target, next.source);
        let points = self.tables.first().map_or_else(|| alg.size().pow(self.source as u32), Table::len);
        let mut tables = vec![Vec::with_capacity(points); next.target];
        let mut image: Vec<Element> = vec![0; self.target];
        for a in 0..points {
            for (slot, t) in image.iter_mut().zip(&self.tables) {
                *slot = t.0[a];
            }
            let b = alg.assignment_index(&image);
            for (out, t) in tables.iter_mut().zip(&next.tables) {
                out.push(t.0[b]);
            }
        }
        SemanticKey { source: self.source, target: next.target, tables: tables.into_iter().map(Table).collect() }
    }
}

/// A cube category: a language together with an equational theory.
#[derive(Clone, Debug)]
pub struct CubeCategory {
    language: Language,
    theory: Theory,
    algebra: FiniteAlgebra,
}

impl PartialEq for CubeCategory {
    fn eq(&self, other: &Self) -> bool {
        self.language == other.language && self.theory == other.theory
    }
}

impl CubeCategory {
    pub fn new(language: Language, theory: Theory) -> Result<Self, CubeError> {
        let algebra = decision_algebra(language, theory)?;
        Ok(Self { language, theory, algebra })
    }

    pub fn canonical(language: Language) -> Self {
        Self::new(language, Theory::Canonical).expect("canonical theory exists for every language")
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    fn invalid(&self, reason: String) -> CubeError {
        CubeError::InvalidMorphism { category: self.to_string(), reason }
    }

    pub fn check_morphism(&self, source: usize, target: usize, components: &[Term]) -> Result<(), CubeError> {
        if components.len() != target {
            return Err(self.invalid(format!("{} components for target [{target}]", components.len())));
        }
        for t in components {
            t.check_well_formed(source, self.language.signature).map_err(|e| self.invalid(e.to_string()))?;
        }
        if !check_discipline(components, source, self.language.rules) {
            return Err(self.invalid(format!("variable occurrences violate rules {}", self.language.rules)));
        }
        Ok(())
    }

    pub fn is_morphism(&self, source: usize, target: usize, components: &[Term]) -> bool {
        self.check_morphism(source, target, components).is_ok()
    }

    /// Validated constructor.
    pub fn morphism(&self, source: usize, components: Vec<Term>) -> Result<Morphism, CubeError> {
        self.check_morphism(source, components.len(), &components)?;
        Ok(Morphism::new(source, components))
    }

    pub fn identity(&self, n: usize) -> Morphism {
        Morphism::identity(n)
    }

    pub fn tensor(&self, f: &Morphism, g: &Morphism) -> Morphism {
        f.tensor(g)
    }

    /// `f: [m] → [n]` followed by `g: [n] → [k]`.
    pub fn compose(&self, f: &Morphism, g: &Morphism) -> Result<Morphism, CubeError> {
        if f.target != g.source {
            return Err(CubeError::ArityMismatch(format!("cannot follow {f} by {g}")));
        }
        Ok(f.then(g))
    }

    pub fn key(&self, f: &Morphism) -> Result<SemanticKey, CubeError> {
        let tables = f.components.iter().map(|t| self.algebra.table(t, f.source)).collect::<Result<_, _>>()?;
        Ok(SemanticKey { source: f.source, target: f.target, tables })
    }

    pub fn compose_keys(&self, f: &SemanticKey, g: &SemanticKey) -> Result<SemanticKey, CubeError> {
        if f.target != g.source {
            return Err(CubeError::ArityMismatch(format!("[{}] → [{}] then [{}] → [{}]", f.source, f.target, g.source, g.target)));
        }
        Ok(f.then(g, &self.algebra))
    }

    pub fn morphisms_equal(&self, f: &Morphism, g: &Morphism) -> Result<bool, CubeError> {
        if f.source != g.source || f.target != g.target {
            return Err(CubeError::ArityMismatch(format!("{f} vs {g}")));
        }
        Ok(self.key(f)? == self.key(g)?)
    }

    /// The two endpoints `[0] → [1]` are distinct.
    pub fn interval_is_separated(&self) -> Result<bool, CubeError> {
        let d0 = Morphism::new(0, vec![Term::Zero]);
        let d1 = Morphism::new(0, vec![Term::One]);
        Ok(self.key(&d0)? != self.key(&d1)?)
    }
}

impl fmt::Display for CubeCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.language.rules, self.language.signature)?;
        if self.theory != Theory::Canonical {
            write!(f, "[{}]", self.theory)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::{Signature, StructuralRules};
    use crate::term::parse_term;

    fn cat(r: StructuralRules, s: Signature) -> CubeCategory {
        CubeCategory::canonical(Language::new(r, s))
    }

    fn mor(c: &CubeCategory, source: usize, comps: &[&str]) -> Morphism {
        let terms = comps.iter().map(|s| parse_term(s, source, c.language().signature).unwrap()).collect();
        c.morphism(source, terms).unwrap()
    }

    #[test]
    fn is_morphism_examples() {
        let w = cat(StructuralRules::W, Signature::EMPTY);
        let wec = cat(StructuralRules::WEC, Signature::EMPTY);
        let diag = [Term::Var(1), Term::Var(1)];
        assert!(!w.is_morphism(1, 2, &diag));
        assert!(wec.is_morphism(1, 2, &diag));
        assert!(w.is_morphism(1, 0, &[]));
        for c in Language::all().map(CubeCategory::canonical) {
            assert!(c.is_morphism(0, 1, &[Term::Zero]), "{c}");
        }
        assert!(!w.is_morphism(1, 2, &[Term::Var(1)]));
    }

    #[test]
    fn identity_and_tensor() {
        assert_eq!(Morphism::identity(0).components, vec![]);
        let eta0 = Morphism::new(0, vec![Term::Zero]);
        let eta1 = Morphism::new(0, vec![Term::One]);
        assert_eq!(eta0.tensor(&eta1), Morphism::new(0, vec![Term::Zero, Term::One]));
        let eps = Morphism::new(1, vec![]);
        assert_eq!(Morphism::identity(1).tensor(&eps), Morphism::new(2, vec![Term::Var(1)]));
    }

    #[test]
    fn composition_laws_from_the_menagerie() {
        let w = cat(StructuralRules::W, Signature::EMPTY);
        let eps = Morphism::new(1, vec![]);
        for bit in [false, true] {
            let eta = Morphism::new(0, vec![Term::constant(bit)]);
            // face-degeneracy
            assert!(w.morphisms_equal(&w.compose(&eta, &eps).unwrap(), &Morphism::identity(0)).unwrap());
            // face-diagonal
            let wec = cat(StructuralRules::WEC, Signature::EMPTY);
            let delta = mor(&wec, 1, &["x1", "x1"]);
            let got = wec.compose(&eta, &delta).unwrap();
            assert!(wec.morphisms_equal(&got, &eta.tensor(&eta)).unwrap());
            // face-reversal
            let r = cat(StructuralRules::NONE, Signature::REV);
            let rho = mor(&r, 1, &["x1′"]);
            let other = Morphism::new(0, vec![Term::constant(!bit)]);
            assert!(r.morphisms_equal(&r.compose(&eta, &rho).unwrap(), &other).unwrap());
        }
    }

    #[test]
    fn equality_examples() {
        let we = cat(StructuralRules::WE, Signature::JOIN);
        assert!(we.morphisms_equal(&mor(&we, 2, &["x1 ∨ x2"]), &mor(&we, 2, &["x2 ∨ x1"])).unwrap());

        let lat = cat(StructuralRules::WEC, Signature::LATTICE);
        let delta = mor(&lat, 1, &["x1", "x1"]);
        for mu in ["x1 ∨ x2", "x1 ∧ x2"] {
            let mu = mor(&lat, 2, &[mu]);
            let got = lat.compose(&delta, &mu).unwrap();
            assert!(lat.morphisms_equal(&got, &Morphism::identity(1)).unwrap());
        }
    }

    #[test]
    fn hopf_law_boolean_only() {
        let ba = CubeCategory::new(Language::FULL, Theory::Boolean).unwrap();
        let kleene = CubeCategory::canonical(Language::FULL);
        for (mu, unit) in [("x1 ∨ x2", Term::One), ("x1 ∧ x2", Term::Zero)] {
            let delta = mor(&ba, 1, &["x1", "x1"]);
            let id_rho = Morphism::identity(1).tensor(&mor(&ba, 1, &["x1′"]));
            let mu = mor(&ba, 2, &[mu]);
            let lhs = ba.compose(&ba.compose(&delta, &id_rho).unwrap(), &mu).unwrap();
            let eps = Morphism::new(1, vec![]);
            let rhs = ba.compose(&eps, &Morphism::new(0, vec![unit])).unwrap();
            assert!(ba.morphisms_equal(&lhs, &rhs).unwrap());
            assert!(!kleene.morphisms_equal(&lhs, &rhs).unwrap());
        }
    }

    #[test]
    fn compose_arity_mismatch() {
        let w = cat(StructuralRules::W, Signature::EMPTY);
        let a = Morphism::identity(1);
        let b = Morphism::identity(2);
        assert!(matches!(w.compose(&a, &b), Err(CubeError::ArityMismatch(_))));
        assert!(matches!(w.morphisms_equal(&a, &b), Err(CubeError::ArityMismatch(_))));
    }

    #[test]
    fn key_composition_matches_substitution() {
        let c = CubeCategory::canonical(Language::FULL);
        let f = mor(&c, 2, &["x1 ∧ x2′", "x2", "x1 ∨ x1′"]);
        let g = mor(&c, 3, &["x3 ∨ x1", "(x2 ∧ x1)′"]);
        let by_terms = c.key(&c.compose(&f, &g).unwrap()).unwrap();
        let by_keys = c.compose_keys(&c.key(&f).unwrap(), &c.key(&g).unwrap()).unwrap();
        assert_eq!(by_terms, by_keys);
    }

    #[test]
    fn separated_everywhere() {
        for lang in Language::all() {
            assert!(CubeCategory::canonical(lang).interval_is_separated().unwrap());
        }
        for th in [Theory::DeMorgan, Theory::Boolean] {
            assert!(CubeCategory::new(Language::FULL, th).unwrap().interval_is_separated().unwrap());
        }
    }

    #[test]
    fn morphism_json_shape() {
        let f = Morphism::new(2, vec![Term::join(Term::Var(1), Term::Var(2)), Term::Zero]);
        let js = serde_json::to_value(&f).unwrap();
        assert_eq!(js, serde_json::json!({"source": 2, "target": 2, "components": ["x1 ∨ x2", "0"]}));
        let back: Morphism = serde_json::from_value(js).unwrap();
        assert_eq!(back, f);
    }
}
