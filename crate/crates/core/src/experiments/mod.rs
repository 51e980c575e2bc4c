//! Obstruction posets for strict test categories, rebuilt from the slice
//! over the square `□¹ × □¹`, and the classification table they support.

mod obstruction;
mod table2;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cube::{CubeCategory, CubeError, HomSet, Morphism, SemanticKey};
use crate::homotopy::{ArrowData, FinCat, FinCatData, HomotopyError, ObjectData};
use crate::term::Term;

pub use obstruction::{
    build_a, contraction_collapse, coslice_initial_check, verify_a_homotopy, AHomologyReport, APoset, ARole,
    CollapseReport, CosliceCase, CosliceReport,
};
pub use table2::{render_table2, table2_report, Evidence, RuleBasis, Table2Row, Verdict};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
    #[error("{experiment} does not apply to {category}: {reason}")]
    Unsupported { experiment: &'static str, category: String, reason: String },
    #[error("slice dimension bound {0} exceeds 3")]
    DimensionBound(usize),
}

/// Hom-sets of a cube category between objects up to a fixed dimension.
pub struct HomCache<'a> {
    cat: &'a CubeCategory,
    sets: HashMap<(usize, usize), HomSet>,
}

impl<'a> HomCache<'a> {
    pub fn new(cat: &'a CubeCategory, max_source: usize, max_target: usize) -> Result<Self, ExperimentError> {
        let mut sets = HashMap::new();
        for m in 0..=max_source {
            for n in 0..=max_target {
                sets.insert((m, n), cat.enumerate_hom(m, n)?);
            }
        }
        Ok(HomCache { cat, sets })
    }

    pub fn category(&self) -> &'a CubeCategory {
        self.cat
    }

    pub fn hom(&self, m: usize, n: usize) -> &HomSet {
        &self.sets[&(m, n)]
    }

    pub fn then(&self, f: &SemanticKey, g: &SemanticKey) -> SemanticKey {
        f.then(g, self.cat.algebra())
    }

    pub fn witness(&self, key: &SemanticKey) -> &Morphism {
        &self.hom(key.source, key.target).find(key).expect("key enumerated").witness
    }
}

/// An object of the slice over the square: a dimension and two
/// independent maps `[dim] → [1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SliceObject {
    pub dim: usize,
    pub s: Term,
    pub t: Term,
    #[serde(skip)]
    pub s_key: SemanticKey,
    #[serde(skip)]
    pub t_key: SemanticKey,
}

impl SliceObject {
    pub fn new(cat: &CubeCategory, dim: usize, s: Term, t: Term) -> Result<Self, ExperimentError> {
        let s_key = cat.key(&cat.morphism(dim, vec![s.clone()])?)?;
        let t_key = cat.key(&cat.morphism(dim, vec![t.clone()])?)?;
        Ok(SliceObject { dim, s, t, s_key, t_key })
    }

    fn from_keys(cache: &HomCache<'_>, s_key: SemanticKey, t_key: SemanticKey) -> Self {
        let s = cache.witness(&s_key).components[0].clone();
        let t = cache.witness(&t_key).components[0].clone();
        SliceObject { dim: s_key.source, s, t, s_key, t_key }
    }

    /// The object `g` pulls this one back to.
    pub fn pull_back(&self, cache: &HomCache<'_>, g: &SemanticKey) -> (SemanticKey, SemanticKey) {
        (cache.then(g, &self.s_key), cache.then(g, &self.t_key))
    }

    fn lookup_key(&self) -> (SemanticKey, SemanticKey) {
        (self.s_key.clone(), self.t_key.clone())
    }
}

impl fmt::Display for SliceObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]: ({}, {})", self.dim, self.s, self.t)
    }
}

/// The full subcategory of the slice over the square on objects of
/// dimension at most `n`, with each arrow's underlying cube map.
#[derive(Clone, Debug)]
pub struct SliceFragment {
    pub category: FinCat,
    pub objects: Vec<SliceObject>,
    pub arrow_keys: Vec<SemanticKey>,
}

impl SliceFragment {
    pub fn find(&self, obj: &SliceObject) -> Option<usize> {
        self.objects.iter().position(|o| o.s_key == obj.s_key && o.t_key == obj.t_key)
    }
}

pub fn build_slice_fragment(cat: &CubeCategory, n: usize) -> Result<SliceFragment, ExperimentError> {
    if n > 3 {
        return Err(ExperimentError::DimensionBound(n));
    }
    let cache = HomCache::new(cat, n, n.max(1))?;
    let mut objects = Vec::new();
    for d in 0..=n {
        let maps = cache.hom(d, 1);
        for s in &maps.entries {
            for t in &maps.entries {
                objects.push(SliceObject::from_keys(&cache, s.key.clone(), t.key.clone()));
            }
        }
    }
    slice_subcategory(&cache, objects)
}

/// The full subcategory of the slice on `objects`: every cube map `g` with
/// `g ; s = s′` and `g ; t = t′` is an arrow. The cache must cover the
/// dimensions involved.
pub fn slice_subcategory(cache: &HomCache<'_>, objects: Vec<SliceObject>) -> Result<SliceFragment, ExperimentError> {
    let index: HashMap<(SemanticKey, SemanticKey), usize> =
        objects.iter().enumerate().map(|(i, o)| (o.lookup_key(), i)).collect();
    let mut dims: Vec<usize> = objects.iter().map(|o| o.dim).collect();
    dims.sort_unstable();
    dims.dedup();

    let mut arrows = Vec::new();
    let mut arrow_keys = Vec::new();
    let mut by_target_key: HashMap<(usize, SemanticKey), usize> = HashMap::new();
    for (target, o) in objects.iter().enumerate() {
        for &d in &dims {
            for g in &cache.hom(d, o.dim).entries {
                let Some(&source) = index.get(&o.pull_back(cache, &g.key)) else { continue };
                by_target_key.insert((target, g.key.clone()), arrows.len());
                arrows.push(ArrowData { label: components_label(&g.witness), source, target });
                arrow_keys.push(g.key.clone());
            }
        }
    }
    let cat = cache.category();
    let identities = objects
        .iter()
        .enumerate()
        .map(|(i, o)| by_target_key[&(i, cat.key(&Morphism::identity(o.dim)).expect("identity"))])
        .collect();
    let mut outgoing = vec![Vec::new(); objects.len()];
    for (g, a) in arrows.iter().enumerate() {
        outgoing[a.source].push(g);
    }
    let mut composition = Vec::new();
    for (f, af) in arrows.iter().enumerate() {
        for &g in &outgoing[af.target] {
            let key = cache.then(&arrow_keys[f], &arrow_keys[g]);
            composition.push([f, g, by_target_key[&(arrows[g].target, key)]]);
        }
    }
    let data = FinCatData {
        objects: objects.iter().map(|o| ObjectData { label: o.to_string(), dim: o.dim }).collect(),
        arrows,
        identities,
        composition,
    };
    Ok(SliceFragment { category: FinCat::build_general(data)?, objects, arrow_keys })
}

fn components_label(f: &Morphism) -> String {
    let parts: Vec<String> = f.components.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
