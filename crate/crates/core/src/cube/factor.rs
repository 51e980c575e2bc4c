//! Unique factorization in cube categories without connections or
//! contraction: degeneracies, then a symmetry, then reversals, then faces.

use serde::Serialize;

use super::{CubeCategory, CubeError, Morphism};
use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FaceSlot {
    Const(bool),
    /// 1-based index into the variables that survive the degeneracies.
    Var(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    pub source: usize,
    pub target: usize,
    /// Source variables removed by degeneracies, increasing, 1-based.
    pub dropped: Vec<usize>,
    /// `permutation[r]` is the survivor (1-based, in source order) placed at slot `r + 1`.
    pub permutation: Vec<usize>,
    pub reversed: Vec<bool>,
    pub face: Vec<FaceSlot>,
}

impl Factorization {
    pub fn survivors(&self) -> usize {
        self.permutation.len()
    }

    pub fn degeneracy(&self) -> Morphism {
        let kept = (1..=self.source).filter(|v| !self.dropped.contains(v)).map(Term::Var).collect();
        Morphism::new(self.source, kept)
    }

    pub fn symmetry(&self) -> Morphism {
        Morphism::new(self.survivors(), self.permutation.iter().map(|&p| Term::Var(p)).collect())
    }

    pub fn reversal(&self) -> Morphism {
        let comps = self
            .reversed
            .iter()
            .enumerate()
            .map(|(r, &rev)| if rev { Term::rev(Term::Var(r + 1)) } else { Term::Var(r + 1) })
            .collect();
        Morphism::new(self.survivors(), comps)
    }

    pub fn face_map(&self) -> Morphism {
        let comps = self
            .face
            .iter()
            .map(|s| match *s {
                FaceSlot::Const(b) => Term::constant(b),
                FaceSlot::Var(r) => Term::Var(r),
            })
            .collect();
        Morphism::new(self.survivors(), comps)
    }

    pub fn recompose(&self) -> Morphism {
        self.degeneracy().then(&self.symmetry()).then(&self.reversal()).then(&self.face_map())
    }

    /// Isomorphisms are exactly the composites of symmetries and reversals.
    pub fn is_iso(&self) -> bool {
        self.dropped.is_empty() && self.face.iter().all(|s| matches!(s, FaceSlot::Var(_)))
    }

    /// Whether the blocks are in the normal form `factorize` produces, for
    /// a category with or without exchange and reversal.
    pub fn is_canonical(&self, exchange: bool, reversal: bool) -> bool {
        let k = self.survivors();
        let dropped_ok = self.dropped.windows(2).all(|w| w[0] < w[1])
            && self.dropped.iter().all(|&d| (1..=self.source).contains(&d))
            && self.source - self.dropped.len() == k;
        let mut seen = vec![false; k + 1];
        let perm_ok = self.permutation.iter().all(|&p| (1..=k).contains(&p) && !std::mem::replace(&mut seen[p], true))
            && (exchange || self.permutation.iter().enumerate().all(|(i, &p)| p == i + 1));
        let rev_ok = self.reversed.len() == k && (reversal || self.reversed.iter().all(|r| !r));
        let vars: Vec<usize> = self
            .face
            .iter()
            .filter_map(|s| match s {
                FaceSlot::Var(r) => Some(*r),
                FaceSlot::Const(_) => None,
            })
            .collect();
        let face_ok = self.face.len() == self.target && vars == (1..=k).collect::<Vec<_>>();
        dropped_ok && perm_ok && rev_ok && face_ok
    }
}

/// `Rev^k(atom)` with parity of `k`.
fn strip(t: &Term) -> Option<(&Term, bool)> {
    match t {
        Term::Rev(a) => strip(a).map(|(atom, p)| (atom, !p)),
        Term::Var(_) | Term::Zero | Term::One => Some((t, false)),
        Term::Join(..) | Term::Meet(..) => None,
    }
}

impl CubeCategory {
    pub fn supports_factorization(&self) -> bool {
        !self.language().signature.has_connection() && !self.language().rules.contraction()
    }

    pub fn factorize(&self, f: &Morphism) -> Result<Factorization, CubeError> {
        if !self.supports_factorization() {
            return Err(CubeError::UnsupportedFactorization(self.to_string()));
        }
        self.check_morphism(f.source, f.target, &f.components)?;
        let mut used: Vec<(usize, bool)> = Vec::new();
        let mut face = Vec::with_capacity(f.target);
        for t in &f.components {
            let (atom, parity) = strip(t).expect("no connections in signature");
            match atom {
                Term::Zero => face.push(FaceSlot::Const(parity)),
                Term::One => face.push(FaceSlot::Const(!parity)),
                Term::Var(v) => {
                    used.push((*v, parity));
                    face.push(FaceSlot::Var(used.len()));
                }
                _ => unreachable!(),
            }
        }
        let mut survivors: Vec<usize> = used.iter().map(|u| u.0).collect();
        survivors.sort_unstable();
        let dropped = (1..=f.source).filter(|v| survivors.binary_search(v).is_err()).collect();
        let permutation = used.iter().map(|(v, _)| survivors.binary_search(v).unwrap() + 1).collect();
        let reversed = used.iter().map(|u| u.1).collect();
        Ok(Factorization { source: f.source, target: f.target, dropped, permutation, reversed, face })
    }

    /// Every block quadruple in normal form for `[m] → [n]`. In a category
    /// with unique factorization these are in bijection with the hom-set.
    pub fn canonical_factorizations(&self, m: usize, n: usize) -> Result<Vec<Factorization>, CubeError> {
        if !self.supports_factorization() {
            return Err(CubeError::UnsupportedFactorization(self.to_string()));
        }
        let lang = self.language();
        let (exchange, reversal) = (lang.rules.exchange(), lang.signature.has_reversal());
        let mut out = Vec::new();
        for k in 0..=m.min(n) {
            if !lang.rules.weakening() && k != m {
                continue;
            }
            for kept in subsets(m, k) {
                let dropped: Vec<usize> = (1..=m).filter(|v| !kept.contains(v)).collect();
                let perms = if exchange { permutations(k) } else { vec![(1..=k).collect()] };
                for permutation in perms {
                    for rev_bits in 0..(if reversal { 1usize << k } else { 1 }) {
                        let reversed: Vec<bool> = (0..k).map(|i| rev_bits >> i & 1 == 1).collect();
                        for var_slots in subsets(n, k) {
                            let consts = n - k;
                            for cbits in 0..(1usize << consts) {
                                let mut face = Vec::with_capacity(n);
                                let (mut r, mut c) = (0, 0);
                                for pos in 1..=n {
                                    if var_slots.contains(&pos) {
                                        r += 1;
                                        face.push(FaceSlot::Var(r));
                                    } else {
                                        face.push(FaceSlot::Const(cbits >> c & 1 == 1));
                                        c += 1;
                                    }
                                }
                                out.push(Factorization {
                                    source: m,
                                    target: n,
                                    dropped: dropped.clone(),
                                    permutation: permutation.clone(),
                                    reversed: reversed.clone(),
                                    face,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Increasing `k`-subsets of `1..=n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `1..=k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=k).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
