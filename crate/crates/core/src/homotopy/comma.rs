use std::collections::HashMap;
use std::hash::Hash;

use super::fincat::{ArrowData, FinCatData, ObjectData};
use super::{FinCat, HomotopyError};

/// A comma category over a base category, keeping for each object its base
/// object and leg, and for each arrow the base arrow it came from.
#[derive(Clone, Debug)]
pub struct CommaCategory<L> {
    pub category: FinCat,
    pub base_object: Vec<usize>,
    pub legs: Vec<L>,
    pub base_arrow: Vec<usize>,
}

/// Objects are `(a, leg)` pairs; an arrow `(a, l) → (b, m)` is a base arrow
/// `h: a → b` with `act(l, h) == m`. `act` must be a functorial action:
/// identities act trivially and `act(act(l, h), k) == act(l, h then k)`.
pub fn comma_under<L, F>(c: &FinCat, legs: Vec<(usize, L)>, act: F) -> Result<CommaCategory<L>, HomotopyError>
where
    L: Clone + Eq + Hash,
    F: Fn(&L, usize) -> L,
{
    comma(c, legs, |l, h| (c.arrow(h).target, act(l, h)), true)
}

/// Objects are `(a, leg)` pairs; an arrow `(a, l) → (b, m)` is a base arrow
/// `h: a → b` with `act(h, m) == l`.
pub fn comma_over<L, F>(c: &FinCat, legs: Vec<(usize, L)>, act: F) -> Result<CommaCategory<L>, HomotopyError>
where
    L: Clone + Eq + Hash,
    F: Fn(usize, &L) -> L,
{
    comma(c, legs, |m, h| (c.arrow(h).source, act(h, m)), false)
}

fn comma<L, F>(c: &FinCat, legs: Vec<(usize, L)>, step: F, forward: bool) -> Result<CommaCategory<L>, HomotopyError>
where
    L: Clone + Eq + Hash,
    F: Fn(&L, usize) -> (usize, L),
{
    let mut index: HashMap<(usize, L), usize> = HashMap::with_capacity(legs.len());
    for (i, (a, l)) in legs.iter().enumerate() {
        if index.insert((*a, l.clone()), i).is_some() {
            return Err(HomotopyError::Malformed(format!("duplicate comma object {i}")));
        }
    }
    let mut arrows = Vec::new();
    let mut base_arrow = Vec::new();
    let mut arrow_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for (i, (a, l)) in legs.iter().enumerate() {
        for b in 0..c.object_count() {
            let hs = if forward { c.hom(*a, b) } else { c.hom(b, *a) };
            for &h in hs {
                let Some(&j) = index.get(&step(l, h)) else { continue };
                let (source, target) = if forward { (i, j) } else { (j, i) };
                arrow_index.insert((source, target, h), arrows.len());
                base_arrow.push(h);
                arrows.push(ArrowData { label: c.arrow(h).label.clone(), source, target });
            }
        }
    }
    let mut identities = Vec::with_capacity(legs.len());
    for (i, (a, _)) in legs.iter().enumerate() {
        let id = arrow_index
            .get(&(i, i, c.identity(*a)))
            .ok_or_else(|| HomotopyError::Malformed(format!("identity does not act trivially on comma object {i}")))?;
        identities.push(*id);
    }
    let mut composition = Vec::new();
    let mut outgoing = vec![Vec::new(); legs.len()];
    for (g, ag) in arrows.iter().enumerate() {
        outgoing[ag.source].push(g);
    }
    for (f, af) in arrows.iter().enumerate() {
        for &g in &outgoing[af.target] {
            let h = c.compose(base_arrow[f], base_arrow[g]).expect("base arrows compose");
            let fg = arrow_index
                .get(&(af.source, arrows[g].target, h))
                .ok_or_else(|| HomotopyError::Malformed("comma arrows not closed under composition".into()))?;
            composition.push([f, g, *fg]);
        }
    }
    let objects = legs
        .iter()
        .enumerate()
        .map(|(i, (a, _))| ObjectData { label: format!("{}#{i}", c.object(*a).label), dim: c.object(*a).dim })
        .collect();
    let category = FinCat::build_general(FinCatData { objects, arrows, identities, composition })?;
    let (base_object, legs) = legs.into_iter().unzip();
    Ok(CommaCategory { category, base_object, legs, base_arrow })
}

/// The slice over `x`: arrows into `x`, with commuting triangles.
pub fn slice(c: &FinCat, x: usize) -> Result<CommaCategory<usize>, HomotopyError> {
    let legs = (0..c.object_count()).flat_map(|a| c.hom(a, x).iter().map(move |&f| (a, f))).collect();
    comma_over(c, legs, |h, &m| c.compose(h, m).expect("composable"))
}

/// The coslice under `x`: arrows out of `x`, with commuting triangles.
pub fn coslice(c: &FinCat, x: usize) -> Result<CommaCategory<usize>, HomotopyError> {
    let legs = (0..c.object_count()).flat_map(|b| c.hom(x, b).iter().map(move |&f| (b, f))).collect();
    comma_under(c, legs, |&l, h| c.compose(l, h).expect("composable"))
}
