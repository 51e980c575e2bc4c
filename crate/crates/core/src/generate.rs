//! Seeded random generation of discipline-valid terms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraError, FiniteAlgebra};
use crate::language::Language;
use crate::term::Term;

enum Shape {
    Leaf,
    Rev(Box<Shape>),
    Join(Box<Shape>, Box<Shape>),
    Meet(Box<Shape>, Box<Shape>),
}

impl Shape {
    fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Rev(a) => a.leaves(),
            Shape::Join(a, b) | Shape::Meet(a, b) => a.leaves() + b.leaves(),
        }
    }
}

fn random_shape<R: Rng>(lang: Language, depth: usize, rng: &mut R) -> Shape {
    let sig = lang.signature;
    let mut ops: Vec<u8> = Vec::new();
    if sig.has_reversal() {
        ops.push(0);
    }
    if sig.has_join() {
        ops.push(1);
    }
    if sig.has_meet() {
        ops.push(2);
    }
    if depth == 0 || ops.is_empty() || rng.gen_bool(0.3) {
        return Shape::Leaf;
    }
    match *ops.choose(rng).unwrap() {
        0 => Shape::Rev(Box::new(random_shape(lang, depth - 1, rng))),
        1 => Shape::Join(Box::new(random_shape(lang, depth - 1, rng)), Box::new(random_shape(lang, depth - 1, rng))),
        _ => Shape::Meet(Box::new(random_shape(lang, depth - 1, rng)), Box::new(random_shape(lang, depth - 1, rng))),
    }
}

/// Picks a variable listing of length at most `slots` allowed by the rules.
fn random_listing<R: Rng>(lang: Language, arity: usize, slots: usize, rng: &mut R) -> Option<Vec<usize>> {
    let rules = lang.rules;
    let min = if rules.weakening() { 0 } else { arity };
    let max = if arity == 0 {
        0
    } else if rules.contraction() {
        slots
    } else {
        slots.min(arity)
    };
    if min > max {
        return None;
    }
    let len = rng.gen_range(min..=max);
    let mut vars: Vec<usize> = (1..=arity).collect();
    vars.shuffle(rng);
    let mut listing: Vec<usize> = if rules.contraction() {
        let mut l: Vec<usize> = if rules.weakening() { Vec::new() } else { vars.clone() };
        while l.len() < len {
            l.push(rng.gen_range(1..=arity));
        }
        l
    } else {
        vars.truncate(len);
        vars
    };
    if rules.exchange() {
        listing.shuffle(rng);
    } else {
        listing.sort_unstable();
    }
    Some(listing)
}

fn fill<R: Rng>(shape: &Shape, is_var: &mut impl Iterator<Item = bool>, vars: &mut impl Iterator<Item = usize>, rng: &mut R) -> Term {
    match shape {
        Shape::Leaf => {
            if is_var.next().unwrap() {
                Term::Var(vars.next().unwrap())
            } else {
                Term::constant(rng.gen_bool(0.5))
            }
        }
        Shape::Rev(a) => Term::rev(fill(a, is_var, vars, rng)),
        Shape::Join(a, b) => {
            let l = fill(a, is_var, vars, rng);
            Term::join(l, fill(b, is_var, vars, rng))
        }
        Shape::Meet(a, b) => {
            let l = fill(a, is_var, vars, rng);
            Term::meet(l, fill(b, is_var, vars, rng))
        }
    }
}

/// A random term of depth at most `max_depth` over `x1..x{arity}` that
/// satisfies the discipline of `lang`. Returns `None` when no shape tried
/// has enough leaves (e.g. two variables without weakening or a connection).
pub fn random_term<R: Rng>(lang: Language, arity: usize, max_depth: usize, rng: &mut R) -> Option<Term> {
    for _ in 0..64 {
        let shape = random_shape(lang, max_depth, rng);
        let slots = shape.leaves();
        let Some(listing) = random_listing(lang, arity, slots, rng) else {
            continue;
        };
        let mut mask = vec![false; slots];
        let mut positions: Vec<usize> = (0..slots).collect();
        positions.shuffle(rng);
        for &p in &positions[..listing.len()] {
            mask[p] = true;
        }
        return Some(fill(&shape, &mut mask.into_iter(), &mut listing.into_iter(), rng));
    }
    None
}

/// A pair of terms on which two algebras disagree about equality.
#[derive(Clone, Debug, Serialize)]
pub struct Disagreement {
    pub arity: usize,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, Serialize)]
pub struct AgreementReport {
    pub language: String,
    pub seed: u64,
    pub pairs: usize,
    pub equal_pairs: usize,
    pub disagreements: Vec<Disagreement>,
}

/// Samples `pairs` random term pairs of `lang` and compares equality over
/// TWO with equality over THREE.
pub fn two_three_agreement(
    lang: Language,
    pairs: usize,
    max_arity: usize,
    max_depth: usize,
    seed: u64,
) -> Result<AgreementReport, AlgebraError> {
    let (two, three) = (FiniteAlgebra::two(), FiniteAlgebra::three());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report =
        AgreementReport { language: lang.to_string(), seed, pairs: 0, equal_pairs: 0, disagreements: Vec::new() };
    while report.pairs < pairs {
        let arity = rng.gen_range(0..=max_arity);
        let (Some(lhs), Some(rhs)) =
            (random_term(lang, arity, max_depth, &mut rng), random_term(lang, arity, max_depth, &mut rng))
        else {
            continue;
        };
        report.pairs += 1;
        let eq2 = two.counterexample(&lhs, &rhs, arity)?.is_none();
        let eq3 = three.counterexample(&lhs, &rhs, arity)?.is_none();
        report.equal_pairs += usize::from(eq2);
        if eq2 != eq3 {
            report.disagreements.push(Disagreement { arity, lhs, rhs });
        }
    }
    Ok(report)
}
