use std::fmt;

use serde::{Serialize, Serializer};

use super::{slice_subcategory, ExperimentError, HomCache, SliceObject};
use crate::cube::{CubeCategory, SemanticKey};
use crate::homotopy::{
    asphericity, comma_under, fincat_homology, nerve, Asphericity, FinCat, HomologyResult,
};
use crate::language::{Signature, StructuralRules};
use crate::term::Term;

/// The named objects of the obstruction poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ARole {
    Vertex(bool, bool),
    /// `(i, x)`
    ConstantFirst(bool),
    /// `(x, i)`
    ConstantSecond(bool),
    Diagonal,
    AntiDiagonal,
    North,
    South,
}

impl ARole {
    /// The roles present for the given rules and signature, in display order.
    pub fn all(rules: StructuralRules, sig: Signature) -> Vec<ARole> {
        let mut out = Vec::new();
        for i in [false, true] {
            for j in [false, true] {
                out.push(ARole::Vertex(i, j));
            }
        }
        out.extend([false, true].map(ARole::ConstantFirst));
        out.extend([false, true].map(ARole::ConstantSecond));
        out.push(ARole::Diagonal);
        if sig.has_reversal() {
            out.push(ARole::AntiDiagonal);
        }
        out.push(ARole::North);
        if !rules.exchange() {
            out.push(ARole::South);
        }
        out
    }

    pub fn dim(self) -> usize {
        match self {
            ARole::Vertex(..) => 0,
            ARole::North | ARole::South => 2,
            _ => 1,
        }
    }

    pub fn terms(self) -> (Term, Term) {
        let x = Term::Var(1);
        match self {
            ARole::Vertex(i, j) => (Term::constant(i), Term::constant(j)),
            ARole::ConstantFirst(i) => (Term::constant(i), x),
            ARole::ConstantSecond(i) => (x, Term::constant(i)),
            ARole::Diagonal => (x.clone(), x),
            ARole::AntiDiagonal => (x.clone(), Term::rev(x)),
            ARole::North => (x, Term::Var(2)),
            ARole::South => (Term::Var(2), x),
        }
    }

    pub fn object(self, cat: &CubeCategory) -> Result<SliceObject, ExperimentError> {
        let (s, t) = self.terms();
        SliceObject::new(cat, self.dim(), s, t)
    }
}

impl fmt::Display for ARole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |v: bool| u8::from(v);
        match *self {
            ARole::Vertex(i, j) => write!(f, "vertex ({},{})", b(i), b(j)),
            ARole::ConstantFirst(i) => write!(f, "side ({},x)", b(i)),
            ARole::ConstantSecond(i) => write!(f, "side (x,{})", b(i)),
            ARole::Diagonal => f.write_str("diagonal (x,x)"),
            ARole::AntiDiagonal => f.write_str("anti-diagonal (x,x′)"),
            ARole::North => f.write_str("north (x,y)"),
            ARole::South => f.write_str("south (y,x)"),
        }
    }
}

impl Serialize for ARole {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The obstruction poset: a full subcategory of the slice over the square,
/// with its arrows computed from the cube category.
#[derive(Clone, Debug)]
pub struct APoset {
    pub category: FinCat,
    pub roles: Vec<ARole>,
    pub objects: Vec<SliceObject>,
    pub arrow_keys: Vec<SemanticKey>,
}

impl APoset {
    pub fn find(&self, role: ARole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Whether there is an arrow `a → b`.
    pub fn below(&self, a: ARole, b: ARole) -> bool {
        match (self.find(a), self.find(b)) {
            (Some(i), Some(j)) => !self.category.hom(i, j).is_empty(),
            _ => false,
        }
    }

    /// Covering pairs `(lower, upper)` of the order.
    pub fn covers(&self) -> Vec<(ARole, ARole)> {
        let c = &self.category;
        let n = c.object_count();
        let lt = |a: usize, b: usize| a != b && !c.hom(a, b).is_empty();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|m| lt(a, m) && lt(m, b)) {
                    out.push((self.roles[a], self.roles[b]));
                }
            }
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.category.to_dot(name)
    }
}

/// The full subcategory of the slice on the named objects.
pub fn build_a(cat: &CubeCategory) -> Result<APoset, ExperimentError> {
    let lang = cat.language();
    let unsupported = |reason: &str| ExperimentError::Unsupported {
        experiment: "obstruction poset",
        category: cat.to_string(),
        reason: reason.to_string(),
    };
    if lang.signature.has_connection() {
        return Err(unsupported("signature has a connection"));
    }
    if !lang.rules.weakening() {
        return Err(unsupported("the sides need weakening"));
    }
    let roles = ARole::all(lang.rules, lang.signature);
    let objects = roles.iter().map(|r| r.object(cat)).collect::<Result<Vec<_>, _>>()?;
    let cache = HomCache::new(cat, 2, 2)?;
    let sub = slice_subcategory(&cache, objects)?;
    let mut data = sub.category.to_data();
    for (o, r) in data.objects.iter_mut().zip(&roles) {
        o.label = r.to_string();
    }
    Ok(APoset { category: FinCat::build_general(data)?, objects: sub.objects, arrow_keys: sub.arrow_keys, roles })
}

fn expected_betti(cat: &CubeCategory) -> Option<Vec<usize>> {
    let lang = cat.language();
    let reversal = lang.signature == Signature::REV;
    if lang.signature != Signature::EMPTY && !reversal {
        return None;
    }
    let h1 = if reversal { 2 } else { 1 };
    match lang.rules {
        r if r == StructuralRules::W => Some(vec![1, h1, 1]),
        r if r == StructuralRules::WE => Some(vec![1, h1, 0]),
        _ => None,
    }
}

fn require_obstruction_category(cat: &CubeCategory, experiment: &'static str) -> Result<Vec<usize>, ExperimentError> {
    expected_betti(cat).ok_or_else(|| ExperimentError::Unsupported {
        experiment,
        category: cat.to_string(),
        reason: "needs rules w or we and signature ∅ or ′".into(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AHomologyReport {
    pub category: String,
    pub objects: usize,
    pub is_poset: bool,
    pub f_vector: Vec<usize>,
    pub homology: HomologyResult,
    pub expected_betti: Vec<usize>,
    pub boundary_squares_to_zero: bool,
    pub euler_consistent: bool,
    pub asphericity: Asphericity,
    pub pass: bool,
}

pub fn verify_a_homotopy(cat: &CubeCategory) -> Result<AHomologyReport, ExperimentError> {
    let expected_betti = require_obstruction_category(cat, "obstruction homology")?;
    let a = build_a(cat)?;
    let n = nerve(&a.category, None)?;
    let homology = crate::homotopy::homology(&n);
    let boundary_squares_to_zero = n.chain_complex().boundary_squares_to_zero();
    let euler_consistent = homology.euler_from_betti() == n.euler_characteristic();
    let is_poset = a.category.is_poset();
    let pass = is_poset
        && homology.betti() == expected_betti
        && !homology.has_torsion()
        && boundary_squares_to_zero
        && euler_consistent;
    Ok(AHomologyReport {
        category: cat.to_string(),
        objects: a.category.object_count(),
        is_poset,
        f_vector: n.f_vector(),
        asphericity: asphericity(&a.category)?,
        homology,
        expected_betti,
        boundary_squares_to_zero,
        euler_consistent,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseReport {
    pub category: String,
    pub terminal: Option<ARole>,
    pub diagonal_under_north: bool,
    pub homology: HomologyResult,
    pub acyclic: bool,
    pub asphericity: Asphericity,
    pub pass: bool,
}

/// With contraction the northern hemisphere becomes terminal.
pub fn contraction_collapse(cat: &CubeCategory) -> Result<CollapseReport, ExperimentError> {
    if !cat.language().rules.contraction() {
        return Err(ExperimentError::Unsupported {
            experiment: "contraction collapse",
            category: cat.to_string(),
            reason: "rules lack contraction".into(),
        });
    }
    let a = build_a(cat)?;
    let terminal = a.category.terminal_object().map(|t| a.roles[t]);
    let homology = fincat_homology(&a.category)?;
    let acyclic = homology.is_acyclic();
    Ok(CollapseReport {
        category: cat.to_string(),
        diagonal_under_north: a.below(ARole::Diagonal, ARole::North),
        asphericity: asphericity(&a.category)?,
        pass: terminal == Some(ARole::North) && acyclic,
        terminal,
        homology,
        acyclic,
    })
}

/// A map `[n] → [1]` read off its function table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Unary {
    Const(bool),
    Var(usize, bool),
}

fn classify_unary(cat: &CubeCategory, key: &SemanticKey) -> Option<Unary> {
    let alg = cat.algebra();
    let n = key.source;
    let mut candidates = vec![(Term::Zero, Unary::Const(false)), (Term::One, Unary::Const(true))];
    for j in 1..=n {
        candidates.push((Term::Var(j), Unary::Var(j, false)));
        candidates.push((Term::rev(Term::Var(j)), Unary::Var(j, true)));
    }
    candidates.into_iter().find(|(t, _)| alg.table(t, n).is_ok_and(|tab| tab == key.tables[0])).map(|(_, u)| u)
}

/// The role the initial object of the coslice under `obj` should have.
fn expected_initial(cat: &CubeCategory, obj: &SliceObject) -> Option<ARole> {
    let exchange = cat.language().rules.exchange();
    Some(match (classify_unary(cat, &obj.s_key)?, classify_unary(cat, &obj.t_key)?) {
        (Unary::Const(i), Unary::Const(j)) => ARole::Vertex(i, j),
        (Unary::Const(i), Unary::Var(..)) => ARole::ConstantFirst(i),
        (Unary::Var(..), Unary::Const(i)) => ARole::ConstantSecond(i),
        (Unary::Var(j, p), Unary::Var(l, q)) if j == l => {
            if p == q {
                ARole::Diagonal
            } else {
                ARole::AntiDiagonal
            }
        }
        (Unary::Var(j, _), Unary::Var(l, _)) => {
            if exchange || j < l {
                ARole::North
            } else {
                ARole::South
            }
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CosliceCase {
    pub object: SliceObject,
    pub comma_objects: usize,
    pub expected: Option<ARole>,
    pub initial: Option<ARole>,
    /// The map from the slice object to the initial object.
    pub leg: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosliceReport {
    pub category: String,
    pub max_dim: usize,
    pub total: usize,
    pub passed: usize,
    pub cases: Vec<CosliceCase>,
    pub pass: bool,
}

impl CosliceReport {
    pub fn failures(&self) -> impl Iterator<Item = &CosliceCase> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

/// For each slice object of dimension at most `max_dim`, finds the initial
/// object of the comma category of maps from it into the obstruction poset.
pub fn coslice_initial_check(cat: &CubeCategory, max_dim: usize) -> Result<CosliceReport, ExperimentError> {
    require_obstruction_category(cat, "coslice check")?;
    if max_dim > 3 {
        return Err(ExperimentError::DimensionBound(max_dim));
    }
    let a = build_a(cat)?;
    let cache = HomCache::new(cat, max_dim, 2)?;
    let mut cases = Vec::new();
    for d in 0..=max_dim {
        let maps = &cache.hom(d, 1).entries;
        for s in maps {
            for t in maps {
                let obj = SliceObject::from_keys(&cache, s.key.clone(), t.key.clone());
                let target = (s.key.clone(), t.key.clone());
                let mut legs = Vec::new();
                for (i, ao) in a.objects.iter().enumerate() {
                    for g in &cache.hom(d, ao.dim).entries {
                        if ao.pull_back(&cache, &g.key) == target {
                            legs.push((i, g.key.clone()));
                        }
                    }
                }
                let b = comma_under(&a.category, legs, |g, h| cache.then(g, &a.arrow_keys[h]))?;
                let init = b.category.initial_object();
                let expected = expected_initial(cat, &obj);
                let initial = init.map(|i| a.roles[b.base_object[i]]);
                cases.push(CosliceCase {
                    leg: init.map(|i| super::components_label(cache.witness(&b.legs[i]))),
                    comma_objects: b.category.object_count(),
                    pass: initial.is_some() && initial == expected,
                    object: obj,
                    expected,
                    initial,
                });
            }
        }
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    Ok(CosliceReport {
        category: cat.to_string(),
        max_dim,
        total: cases.len(),
        passed,
        pass: passed == cases.len(),
        cases,
    })
}
