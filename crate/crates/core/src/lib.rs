//! Cube categories presented as substructural monoidal algebraic theories.
//!
//! The crate covers the whole pipeline from syntax to homotopy:
//!
//! - [`language`] and [`term`]: the 36 monoidal languages, terms over a
//!   positional context, and the weakening/exchange/contraction discipline.
//! - [`algebra`] and [`axioms`]: finite interval algebras, the truth-table
//!   decision procedure for equality, free algebras, and axiom soundness.
//! - [`cube`]: morphisms of cube categories, composition, semantic keys,
//!   hom-set enumeration and unique factorization.
//! - [`homotopy`]: finite categories, comma categories, nerves and integral
//!   homology via Smith normal form.
//! - [`experiments`]: the slice-category posets that obstruct strictness,
//!   their coslice analysis, and the test/strict-test classification table.

pub mod algebra;
pub mod axioms;
pub mod cube;
pub mod experiments;
pub mod generate;
pub mod homotopy;
pub mod language;
pub mod term;

pub use algebra::{decision_algebra, eval, free_algebra, terms_equal, FiniteAlgebra, Theory};
pub use cube::{CubeCategory, Morphism, SemanticKey};
pub use language::{Language, Signature, StructuralRules};
pub use term::{check_discipline, parse_term, variable_listing, Term};
