use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::nerve::{nerve, ChainComplex, NerveComplex};
use super::snf::smith_normal_form;
use super::{FinCat, HomotopyError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

fn as_strings<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            b => parts.push(format!("ℤ^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("ℤ/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
    pub chain_ranks: Vec<usize>,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    pub fn euler_from_betti(&self) -> i64 {
        alternating(&self.betti())
    }

    pub fn euler_from_chains(&self) -> i64 {
        alternating(&self.chain_ranks)
    }

    /// Reduced homology vanishes in every computed degree.
    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().enumerate().all(|(k, g)| if k == 0 { g.betti == 1 && g.torsion.is_empty() } else { g.is_trivial() })
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().enumerate().map(|(k, g)| format!("H{k}={g}")).collect();
        f.write_str(&parts.join(", "))
    }
}

fn alternating(v: &[usize]) -> i64 {
    v.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// Integer homology of a chain complex. The top degree is computed as if
/// the next boundary were zero, so it is exact only for an untruncated nerve.
pub fn chain_homology(cc: &ChainComplex) -> HomologyResult {
    let forms: Vec<_> = cc.boundaries.iter().map(smith_normal_form).collect();
    let top = cc.ranks.len();
    let groups = (0..top)
        .map(|k| {
            let rank_out = forms[k].rank();
            let (rank_in, torsion) = match forms.get(k + 1) {
                Some(s) => (s.rank(), s.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()),
                None => (0, Vec::new()),
            };
            HomologyGroup { betti: cc.ranks[k] - rank_out - rank_in, torsion }
        })
        .collect();
    HomologyResult { groups, chain_ranks: cc.ranks.clone() }
}

pub fn homology(n: &NerveComplex) -> HomologyResult {
    chain_homology(&n.chain_complex())
}

/// Homology of the full nerve of `c`.
pub fn fincat_homology(c: &FinCat) -> Result<HomologyResult, HomotopyError> {
    Ok(homology(&nerve(c, None)?))
}

/// Whether reduced homology vanishes through degree `max_dim`.
pub fn is_acyclic(c: &FinCat, max_dim: Option<usize>) -> Result<bool, HomotopyError> {
    let n = nerve(c, max_dim.map(|d| d + 1))?;
    let mut h = homology(&n);
    if let Some(d) = max_dim {
        h.groups.truncate(d + 1);
    }
    Ok(h.is_acyclic())
}

/// Homology sees non-asphericity; only a contractibility certificate sees
/// asphericity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Asphericity {
    NonAspheric { degree: usize, group: String },
    Contractible { extreme: String, object: String },
    Inconclusive,
}

impl fmt::Display for Asphericity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Asphericity::NonAspheric { degree, group } => {
                write!(f, "non-aspheric (reduced H{degree} = {group})")
            }
            Asphericity::Contractible { extreme, object } => write!(f, "contractible ({extreme} object {object})"),
            Asphericity::Inconclusive => f.write_str("inconclusive (acyclic, no contractibility certificate)"),
        }
    }
}

pub fn asphericity(c: &FinCat) -> Result<Asphericity, HomotopyError> {
    if let Some(t) = c.terminal_object() {
        return Ok(Asphericity::Contractible { extreme: "terminal".into(), object: c.object(t).label.clone() });
    }
    if let Some(i) = c.initial_object() {
        return Ok(Asphericity::Contractible { extreme: "initial".into(), object: c.object(i).label.clone() });
    }
    let h = fincat_homology(c)?;
    for (k, g) in h.groups.iter().enumerate() {
        let reduced = if k == 0 {
            HomologyGroup { betti: g.betti.saturating_sub(1), torsion: g.torsion.clone() }
        } else {
            g.clone()
        };
        if !reduced.is_trivial() {
            return Ok(Asphericity::NonAspheric { degree: k, group: reduced.to_string() });
        }
    }
    Ok(Asphericity::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::fincat::object;
    use crate::homotopy::snf::IntMatrix;

    fn objs(n: usize) -> Vec<crate::homotopy::ObjectData> {
        (0..n).map(|i| object(i.to_string(), 0)).collect()
    }

    #[test]
    fn point() {
        let c = FinCat::from_poset(objs(1), &[]).unwrap();
        let h = fincat_homology(&c).unwrap();
        assert_eq!(h.betti(), vec![1]);
        assert!(is_acyclic(&c, None).unwrap());
    }

    #[test]
    fn circle() {
        let c = FinCat::from_poset(objs(4), &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let h = fincat_homology(&c).unwrap();
        assert_eq!(h.betti(), vec![1, 1]);
        assert_eq!(h.to_string(), "H0=ℤ, H1=ℤ");
        assert!(!is_acyclic(&c, None).unwrap());
        assert!(matches!(asphericity(&c).unwrap(), Asphericity::NonAspheric { degree: 1, .. }));
    }

    #[test]
    fn two_sphere_as_suspension_of_circle() {
        // two minima, two middles, two maxima, each level over both below
        let less = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)];
        let c = FinCat::from_poset(objs(6), &less).unwrap();
        let h = fincat_homology(&c).unwrap();
        assert_eq!(h.betti(), vec![1, 0, 1]);
        assert_eq!(h.euler_from_betti(), h.euler_from_chains());
    }

    #[test]
    fn discrete_points() {
        let c = FinCat::from_poset(objs(3), &[]).unwrap();
        assert_eq!(fincat_homology(&c).unwrap().betti(), vec![3]);
        assert!(matches!(asphericity(&c).unwrap(), Asphericity::NonAspheric { degree: 0, .. }));
    }

    #[test]
    fn cone_is_contractible() {
        let c = FinCat::from_poset(objs(5), &[(0, 4), (1, 4), (2, 4), (3, 4), (0, 2), (1, 2)]).unwrap();
        assert!(is_acyclic(&c, None).unwrap());
        assert!(matches!(asphericity(&c).unwrap(), Asphericity::Contractible { .. }));
    }

    #[test]
    fn torsion_from_projective_plane_like_complex() {
        // C_1 = ℤ → C_0 = 0 and C_2 = ℤ with ∂ = 2: H1 = ℤ/2
        let cc = ChainComplex {
            ranks: vec![1, 1, 1],
            boundaries: vec![
                IntMatrix::zeros(0, 1),
                IntMatrix::from_rows(&[vec![0]]),
                IntMatrix::from_rows(&[vec![2]]),
            ],
        };
        let h = chain_homology(&cc);
        assert_eq!(h.groups[1].torsion, vec![BigInt::from(2)]);
        assert_eq!(h.groups[1].to_string(), "ℤ/2");
        assert_eq!(h.betti(), vec![1, 0, 0]);
        assert!(h.has_torsion());
    }

    #[test]
    fn truncated_acyclicity() {
        let less = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)];
        let c = FinCat::from_poset(objs(6), &less).unwrap();
        assert!(is_acyclic(&c, Some(1)).unwrap());
        assert!(!is_acyclic(&c, Some(2)).unwrap());
    }
}
