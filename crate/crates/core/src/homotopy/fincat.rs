use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::HomotopyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectData {
    pub label: String,
    #[serde(default)]
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowData {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// Serialized form of a finite category. `composition` lists triples
/// `[f, g, h]` meaning "`f` then `g` is `h`", one for every composable pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCatData {
    pub objects: Vec<ObjectData>,
    pub arrows: Vec<ArrowData>,
    pub identities: Vec<usize>,
    pub composition: Vec<[usize; 3]>,
}

/// A validated finite category with dimension-labelled objects.
#[derive(Clone, Debug)]
pub struct FinCat {
    objects: Vec<ObjectData>,
    arrows: Vec<ArrowData>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    homs: Vec<Vec<Vec<usize>>>,
    directed: bool,
}

impl FinCat {
    /// Builds a category and requires it to be directed: no non-identity
    /// endomorphisms and no non-identity isomorphisms.
    pub fn build(data: FinCatData) -> Result<Self, HomotopyError> {
        let c = Self::build_general(data)?;
        c.require_directed()?;
        Ok(c)
    }

    /// Builds a category, checking unit and associativity laws only.
    pub fn build_general(data: FinCatData) -> Result<Self, HomotopyError> {
        let FinCatData { objects, arrows, identities, composition } = data;
        let n = objects.len();
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(HomotopyError::Malformed(format!("arrow {i} has an endpoint out of range")));
            }
        }
        if identities.len() != n {
            return Err(HomotopyError::Malformed(format!("{} identities for {n} objects", identities.len())));
        }
        for (x, &id) in identities.iter().enumerate() {
            let a = arrows.get(id).ok_or_else(|| HomotopyError::Malformed(format!("identity {id} out of range")))?;
            if a.source != x || a.target != x {
                return Err(HomotopyError::Malformed(format!("identity of object {x} is not an endomorphism of it")));
            }
        }
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.source][a.target].push(i);
        }
        let mut compose = HashMap::with_capacity(composition.len());
        for [f, g, h] in composition {
            let (Some(af), Some(ag), Some(ah)) = (arrows.get(f), arrows.get(g), arrows.get(h)) else {
                return Err(HomotopyError::Malformed(format!("composition entry [{f}, {g}, {h}] out of range")));
            };
            if af.target != ag.source {
                return Err(HomotopyError::Malformed(format!("arrows {f} and {g} are not composable")));
            }
            if ah.source != af.source || ah.target != ag.target {
                return Err(HomotopyError::Malformed(format!("composite of {f} and {g} has wrong endpoints")));
            }
            if compose.insert((f, g), h).is_some_and(|old| old != h) {
                return Err(HomotopyError::Malformed(format!("arrows {f} and {g} have two composites")));
            }
        }
        let c = FinCat { objects, arrows, identities, compose, homs, directed: false };
        c.check_laws()?;
        let directed = c.find_undirected().is_none();
        Ok(FinCat { directed, ..c })
    }

    fn check_laws(&self) -> Result<(), HomotopyError> {
        for f in 0..self.arrows.len() {
            let (s, t) = (self.arrows[f].source, self.arrows[f].target);
            for b in 0..self.objects.len() {
                for &g in &self.homs[t][b] {
                    if !self.compose.contains_key(&(f, g)) {
                        return Err(HomotopyError::Malformed(format!("missing composite of arrows {f} and {g}")));
                    }
                }
            }
            if self.compose[&(self.identities[s], f)] != f || self.compose[&(f, self.identities[t])] != f {
                return Err(HomotopyError::UnitLaw(f));
            }
        }
        for (&(f, g), &fg) in &self.compose {
            let t = self.arrows[g].target;
            for b in 0..self.objects.len() {
                for &h in &self.homs[t][b] {
                    if self.compose[&(fg, h)] != self.compose[&(f, self.compose[&(g, h)])] {
                        return Err(HomotopyError::Associativity(f, g, h));
                    }
                }
            }
        }
        Ok(())
    }

    fn find_undirected(&self) -> Option<String> {
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source == a.target && self.identities[a.source] != i {
                return Some(format!("non-identity endomorphism `{}` of `{}`", a.label, self.objects[a.source].label));
            }
            if a.source != a.target && !self.homs[a.target][a.source].is_empty() {
                return Some(format!(
                    "arrows both ways between `{}` and `{}`",
                    self.objects[a.source].label, self.objects[a.target].label
                ));
            }
        }
        None
    }

    pub fn require_directed(&self) -> Result<(), HomotopyError> {
        match self.find_undirected() {
            Some(why) => Err(HomotopyError::NotDirected(why)),
            None => Ok(()),
        }
    }

    /// The poset generated by `less` (pairs `a < b`), closed transitively.
    #[allow(clippy::needless_range_loop)]
    pub fn from_poset(objects: Vec<ObjectData>, less: &[(usize, usize)]) -> Result<Self, HomotopyError> {
        let n = objects.len();
        let mut rel = vec![vec![false; n]; n];
        for &(a, b) in less {
            if a >= n || b >= n {
                return Err(HomotopyError::Malformed(format!("relation ({a}, {b}) out of range")));
            }
            rel[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, row) in rel.iter_mut().enumerate() {
            if row[i] {
                return Err(HomotopyError::NotDirected(format!("cycle through `{}`", objects[i].label)));
            }
            row[i] = true;
        }
        Self::build(poset_data(objects, &rel))
    }

    pub fn to_data(&self) -> FinCatData {
        let mut composition: Vec<[usize; 3]> = self.compose.iter().map(|(&(f, g), &h)| [f, g, h]).collect();
        composition.sort_unstable();
        FinCatData {
            objects: self.objects.clone(),
            arrows: self.arrows.clone(),
            identities: self.identities.clone(),
            composition,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> &[ObjectData] {
        &self.objects
    }

    pub fn object(&self, x: usize) -> &ObjectData {
        &self.objects[x]
    }

    pub fn arrow(&self, f: usize) -> &ArrowData {
        &self.arrows[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.arrows[f].source] == f
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a][b]
    }

    /// `f` then `g`, if composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_poset(&self) -> bool {
        self.homs.iter().flatten().all(|h| h.len() <= 1) && self.directed
    }

    pub fn max_dim(&self) -> usize {
        self.objects.iter().map(|o| o.dim).max().unwrap_or(0)
    }

    /// An object receiving exactly one arrow from every object.
    pub fn terminal_object(&self) -> Option<usize> {
        (0..self.objects.len()).find(|&t| (0..self.objects.len()).all(|a| self.homs[a][t].len() == 1))
    }

    /// An object sending exactly one arrow to every object.
    pub fn initial_object(&self) -> Option<usize> {
        (0..self.objects.len()).find(|&i| (0..self.objects.len()).all(|b| self.homs[i][b].len() == 1))
    }

    pub fn find_object(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.label == label)
    }

    /// The full subcategory on `keep`, with objects renumbered in that order.
    pub fn full_subcategory(&self, keep: &[usize]) -> Result<(FinCat, Vec<usize>), HomotopyError> {
        let mut new_obj = vec![usize::MAX; self.objects.len()];
        for (i, &x) in keep.iter().enumerate() {
            new_obj[x] = i;
        }
        let mut arrow_map = vec![usize::MAX; self.arrows.len()];
        let mut arrows = Vec::new();
        let mut origin = Vec::new();
        for &a in keep {
            for &b in keep {
                for &f in &self.homs[a][b] {
                    arrow_map[f] = arrows.len();
                    origin.push(f);
                    let d = &self.arrows[f];
                    arrows.push(ArrowData { label: d.label.clone(), source: new_obj[a], target: new_obj[b] });
                }
            }
        }
        let mut composition = Vec::new();
        for &f in &origin {
            let t = self.arrows[f].target;
            for &b in keep {
                for &g in &self.homs[t][b] {
                    composition.push([arrow_map[f], arrow_map[g], arrow_map[self.compose[&(f, g)]]]);
                }
            }
        }
        let data = FinCatData {
            objects: keep.iter().map(|&x| self.objects[x].clone()).collect(),
            arrows,
            identities: keep.iter().map(|&x| arrow_map[self.identities[x]]).collect(),
            composition,
        };
        Ok((FinCat::build_general(data)?, origin))
    }

    /// Same category with objects listed in the order `perm` (new index `i`
    /// holds old object `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<FinCat, HomotopyError> {
        Ok(self.full_subcategory(perm)?.0)
    }

    /// Graphviz rendering of the non-identity arrows, one rank per dimension.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(s, "  rankdir=BT;");
        for (i, o) in self.objects.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", o.label.replace('"', "'"));
        }
        for d in 0..=self.max_dim() {
            let ids: Vec<String> =
                self.objects.iter().enumerate().filter(|(_, o)| o.dim == d).map(|(i, _)| format!("n{i}")).collect();
            if !ids.is_empty() {
                let _ = writeln!(s, "  {{ rank=same; {} }}", ids.join("; "));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if !self.is_identity(i) {
                let _ = writeln!(s, "  n{} -> n{};", a.source, a.target);
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Data for the poset with reflexive, transitive relation matrix `rel`.
pub(crate) fn poset_data(objects: Vec<ObjectData>, rel: &[Vec<bool>]) -> FinCatData {
    let n = objects.len();
    let mut arrows = Vec::new();
    let mut id_of = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        for b in 0..n {
            if rel[a][b] {
                id_of[a][b] = arrows.len();
                arrows.push(ArrowData {
                    label: format!("{} ≤ {}", objects[a].label, objects[b].label),
                    source: a,
                    target: b,
                });
            }
        }
    }
    let mut composition = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !rel[a][b] {
                continue;
            }
            for c in 0..n {
                if rel[b][c] {
                    composition.push([id_of[a][b], id_of[b][c], id_of[a][c]]);
                }
            }
        }
    }
    let identities = (0..n).map(|a| id_of[a][a]).collect();
    FinCatData { objects, arrows, identities, composition }
}

pub fn object(label: impl Into<String>, dim: usize) -> ObjectData {
    ObjectData { label: label.into(), dim }
}
