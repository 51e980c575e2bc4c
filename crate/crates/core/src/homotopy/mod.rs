//! Finite categories, comma categories, nerves and integer homology.

mod comma;
mod fincat;
mod homology;
mod nerve;
mod snf;

use thiserror::Error;

pub use comma::{comma_over, comma_under, coslice, slice, CommaCategory};
pub use fincat::{object, ArrowData, FinCat, FinCatData, ObjectData};
pub use homology::{
    asphericity, chain_homology, fincat_homology, homology, is_acyclic, Asphericity, HomologyGroup, HomologyResult,
};
pub use nerve::{nerve, ChainComplex, NerveComplex, Simplex};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

#[derive(Debug, Error)]
pub enum HomotopyError {
    #[error("malformed category: {0}")]
    Malformed(String),
    #[error("unit law fails for arrow {0}")]
    UnitLaw(usize),
    #[error("associativity fails for arrows {0}, {1}, {2}")]
    Associativity(usize, usize, usize),
    #[error("category is not directed: {0}")]
    NotDirected(String),
}
