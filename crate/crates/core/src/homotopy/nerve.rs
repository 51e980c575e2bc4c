use std::collections::HashMap;

use serde::Serialize;

use super::snf::IntMatrix;
use super::{FinCat, HomotopyError};

/// A nondegenerate simplex: a chain of composable non-identity arrows.
/// A 0-simplex has no arrows and a single object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Simplex {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.arrows.len()
    }
}

#[derive(Clone, Debug)]
pub struct NerveComplex {
    simplices: Vec<Vec<Simplex>>,
    /// `faces[k][i]` lists the indices (in dimension `k - 1`) of the faces
    /// `d_0, ..., d_k` of simplex `i` in dimension `k`.
    faces: Vec<Vec<Vec<usize>>>,
}

/// Nondegenerate simplices of the nerve up to `max_dim`; defaults to the
/// longest chain, which is exact.
pub fn nerve(c: &FinCat, max_dim: Option<usize>) -> Result<NerveComplex, HomotopyError> {
    c.require_directed()?;
    let n = c.object_count();
    let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for f in 0..c.arrow_count() {
        if !c.is_identity(f) {
            out_arrows[c.arrow(f).source].push(f);
        }
    }
    let cap = max_dim.unwrap_or(usize::MAX);
    let mut simplices: Vec<Vec<Simplex>> = vec![(0..n).map(|x| Simplex { objects: vec![x], arrows: vec![] }).collect()];
    let mut frontier = simplices[0].clone();
    while simplices.len() <= cap && !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            let last = *s.objects.last().unwrap();
            for &f in &out_arrows[last] {
                let mut t = s.clone();
                t.arrows.push(f);
                t.objects.push(c.arrow(f).target);
                next.push(t);
            }
        }
        if next.is_empty() {
            break;
        }
        simplices.push(next.clone());
        frontier = next;
    }

    let mut faces = vec![Vec::new()];
    for k in 1..simplices.len() {
        let index: HashMap<&Simplex, usize> = simplices[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let row = simplices[k]
            .iter()
            .map(|s| {
                (0..=k)
                    .map(|i| {
                        let face = face_of(c, s, i);
                        *index.get(&face).expect("faces of a chain are chains")
                    })
                    .collect()
            })
            .collect();
        faces.push(row);
    }
    Ok(NerveComplex { simplices, faces })
}

/// The `i`-th face: drop the first object, compose at an inner object, or
/// drop the last object.
fn face_of(c: &FinCat, s: &Simplex, i: usize) -> Simplex {
    let k = s.dim();
    let mut objects = s.objects.clone();
    objects.remove(i);
    let arrows = if i == 0 {
        s.arrows[1..].to_vec()
    } else if i == k {
        s.arrows[..k - 1].to_vec()
    } else {
        let mut a = s.arrows[..i - 1].to_vec();
        a.push(c.compose(s.arrows[i - 1], s.arrows[i]).expect("composable chain"));
        a.extend_from_slice(&s.arrows[i + 1..]);
        a
    };
    Simplex { objects, arrows }
}

impl NerveComplex {
    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self, k: usize, i: usize) -> &[usize] {
        &self.faces[k][i]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    pub fn chain_complex(&self) -> ChainComplex {
        let ranks = self.f_vector();
        let mut boundaries = vec![IntMatrix::zeros(0, ranks[0])];
        for k in 1..ranks.len() {
            let mut m = IntMatrix::zeros(ranks[k - 1], ranks[k]);
            for (j, fs) in self.faces[k].iter().enumerate() {
                for (i, &face) in fs.iter().enumerate() {
                    m.add_to(face, j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(m);
        }
        ChainComplex { ranks, boundaries }
    }
}

/// Free chain groups with boundary matrices; `boundaries[k]` maps
/// `C_k → C_{k-1}` (columns index `C_k`), and `boundaries[0]` is the zero
/// map to the trivial group.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Whether `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.boundaries.len()).all(|k| self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero())
    }
}
