//! Hom-set enumeration, deduplicated by semantic key.
//!
//! Cartesian categories take the `n`-fold product of the free algebra on
//! `m` generators. Otherwise each target component is allotted a set of
//! source variables, and for every variable set the realizable function
//! tables are computed by a closure that runs to a semantic fixed point.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{CubeCategory, CubeError, Morphism, SemanticKey};
use crate::algebra::{free_algebra, FiniteAlgebra, Table};
use crate::language::Language;
use crate::term::Term;

#[derive(Clone, Copy, Debug)]
pub struct HomBounds {
    pub max_arity: usize,
    pub max_morphisms: usize,
}

impl Default for HomBounds {
    fn default() -> Self {
        Self { max_arity: 6, max_morphisms: 2_000_000 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomEntry {
    pub key: SemanticKey,
    pub witness: Morphism,
}

/// `hom([source], [target])`, sorted by key.
#[derive(Clone, Debug, Serialize)]
pub struct HomSet {
    pub source: usize,
    pub target: usize,
    pub entries: Vec<HomEntry>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> {
        self.entries.iter().map(|e| &e.witness)
    }

    pub fn find(&self, key: &SemanticKey) -> Option<&HomEntry> {
        self.entries.binary_search_by(|e| e.key.cmp(key)).ok().map(|i| &self.entries[i])
    }
}

fn pointwise(alg: &FiniteAlgebra, a: &Table, b: &Table, is_join: bool) -> Table {
    Table(
        a.0.iter()
            .zip(&b.0)
            .map(|(&x, &y)| if is_join { alg.join(x, y) } else { alg.meet(x, y) }.expect("signature checked"))
            .collect(),
    )
}

struct Realizable {
    items: Vec<(Table, Term)>,
    index: HashMap<Table, usize>,
}

impl Realizable {
    fn new() -> Self {
        Self { items: Vec::new(), index: HashMap::new() }
    }

    fn push(&mut self, table: Table, term: Term) {
        if !self.index.contains_key(&table) {
            self.index.insert(table.clone(), self.items.len());
            self.items.push((table, term));
        }
    }
}

fn max_bit(s: u32) -> u32 {
    31 - s.leading_zeros()
}

/// Whether a term over `left` may be followed by one over `right` in a
/// single listing, given the language's rules.
fn splits_ok(lang: Language, left: u32, right: u32) -> bool {
    if !lang.rules.contraction() && left & right != 0 {
        return false;
    }
    if !lang.rules.exchange() && left != 0 && right != 0 && max_bit(left) >= right.trailing_zeros() {
        return false;
    }
    true
}

/// For every variable set `S ⊆ {x1..xm}` (as a bitmask, bit `i` for
/// `x{i+1}`), the function tables of terms whose variables are exactly `S`,
/// each used according to the rules, with one witness per table.
pub fn component_closure(lang: Language, alg: &FiniteAlgebra, m: usize) -> Result<Vec<Vec<(Table, Term)>>, CubeError> {
    let sig = lang.signature;
    let subsets = 1usize << m;
    let mut done: Vec<Vec<(Table, Term)>> = vec![Vec::new(); subsets];
    let mut order: Vec<u32> = (0..subsets as u32).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let ops: Vec<bool> = [(sig.has_join(), true), (sig.has_meet(), false)]
        .into_iter()
        .filter_map(|(on, j)| on.then_some(j))
        .collect();
    let mk = |is_join: bool, a: &Term, b: &Term| {
        if is_join {
            Term::join(a.clone(), b.clone())
        } else {
            Term::meet(a.clone(), b.clone())
        }
    };
    for s in order {
        let mut r = Realizable::new();
        if s == 0 {
            r.push(alg.table(&Term::Zero, m)?, Term::Zero);
            r.push(alg.table(&Term::One, m)?, Term::One);
        } else if s.count_ones() == 1 {
            let v = Term::Var(s.trailing_zeros() as usize + 1);
            r.push(alg.table(&v, m)?, v);
        }
        // splits into two proper parts
        let mut s1 = (s.wrapping_sub(1)) & s;
        while s1 != 0 {
            for s2 in sub_masks(s) {
                if s2 == s || s1 | s2 != s || !splits_ok(lang, s1, s2) {
                    continue;
                }
                for &is_join in &ops {
                    for (ta, a) in &done[s1 as usize] {
                        for (tb, b) in &done[s2 as usize] {
                            r.push(pointwise(alg, ta, tb, is_join), mk(is_join, a, b));
                        }
                    }
                }
            }
            s1 = (s1.wrapping_sub(1)) & s;
        }
        // closure with partners over subsets T where S ∪ T = S
        let partners: Vec<u32> = sub_masks(s).filter(|&t| t != s && splits_ok(lang, s, t) && splits_ok(lang, t, s)).collect();
        let self_pairs = splits_ok(lang, s, s);
        let mut next = 0;
        while next < r.items.len() {
            let (te, e) = r.items[next].clone();
            if sig.has_reversal() {
                let t = Table(te.0.iter().map(|&x| alg.rev(x).expect("signature checked")).collect());
                r.push(t, Term::rev(e.clone()));
            }
            for &is_join in &ops {
                for &t in &partners {
                    for (tb, b) in &done[t as usize] {
                        r.push(pointwise(alg, &te, tb, is_join), mk(is_join, &e, b));
                        r.push(pointwise(alg, tb, &te, is_join), mk(is_join, b, &e));
                    }
                }
                if self_pairs {
                    for j in 0..=next {
                        let (tb, b) = r.items[j].clone();
                        r.push(pointwise(alg, &te, &tb, is_join), mk(is_join, &e, &b));
                        r.push(pointwise(alg, &tb, &te, is_join), mk(is_join, &b, &e));
                    }
                }
            }
            next += 1;
        }
        done[s as usize] = r.items;
    }
    Ok(done)
}

/// All submasks of `s`, including `0` and `s`.
fn sub_masks(s: u32) -> impl Iterator<Item = u32> {
    let mut cur = Some(s);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & s) };
        Some(c)
    })
}

impl CubeCategory {
    pub fn enumerate_hom(&self, m: usize, n: usize) -> Result<HomSet, CubeError> {
        self.enumerate_hom_bounded(m, n, HomBounds::default())
    }

    pub fn enumerate_hom_bounded(&self, m: usize, n: usize, bounds: HomBounds) -> Result<HomSet, CubeError> {
        if m > bounds.max_arity || n > bounds.max_arity {
            return Err(CubeError::BoundExceeded(format!("hom([{m}],[{n}]) exceeds arity bound {}", bounds.max_arity)));
        }
        if self.language().rules.is_cartesian() {
            self.cartesian_hom(m, n, bounds)
        } else {
            self.allocated_hom(m, n, bounds)
        }
    }

    fn cartesian_hom(&self, m: usize, n: usize, bounds: HomBounds) -> Result<HomSet, CubeError> {
        let fa = free_algebra(self.language(), self.theory(), m)?;
        let total = u32::try_from(n).ok().and_then(|n| fa.len().checked_pow(n));
        if total.is_none_or(|t| t > bounds.max_morphisms) {
            return Err(CubeError::BoundExceeded(format!(
                "|hom([{m}],[{n}])| = {}^{n} exceeds {}",
                fa.len(),
                bounds.max_morphisms
            )));
        }
        let mut entries = Vec::with_capacity(total.unwrap_or(0));
        let mut idx = vec![0usize; n];
        loop {
            let tables = idx.iter().map(|&i| fa.elements[i].0.clone()).collect();
            let comps = idx.iter().map(|&i| fa.elements[i].1.clone()).collect();
            entries.push(HomEntry { key: SemanticKey { source: m, target: n, tables }, witness: Morphism::new(m, comps) });
            // odometer, last component fastest so entries stay sorted
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(HomSet { source: m, target: n, entries });
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < fa.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn allocated_hom(&self, m: usize, n: usize, bounds: HomBounds) -> Result<HomSet, CubeError> {
        let lang = self.language();
        let closure = component_closure(lang, self.algebra(), m)?;
        let full: u32 = if m == 0 { 0 } else { (1u32 << m) - 1 };
        let mut found: BTreeMap<Vec<Table>, Vec<Term>> = BTreeMap::new();
        let mut alloc = Vec::with_capacity(n);
        allocate(lang, &closure, full, n, 0, &mut alloc, &mut |choice: &[u32]| {
            let lists: Vec<&Vec<(Table, Term)>> = choice.iter().map(|&s| &closure[s as usize]).collect();
            if lists.iter().any(|l| l.is_empty()) {
                return Ok(());
            }
            let mut idx = vec![0usize; n];
            loop {
                let key: Vec<Table> = idx.iter().zip(&lists).map(|(&i, l)| l[i].0.clone()).collect();
                if !found.contains_key(&key) {
                    if found.len() >= bounds.max_morphisms {
                        return Err(CubeError::BoundExceeded(format!("|hom([{m}],[{n}])| exceeds {}", bounds.max_morphisms)));
                    }
                    let terms = idx.iter().zip(&lists).map(|(&i, l)| l[i].1.clone()).collect();
                    found.insert(key, terms);
                }
                let mut pos = n;
                loop {
                    if pos == 0 {
                        return Ok(());
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < lists[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        })?;
        let entries = found
            .into_iter()
            .map(|(tables, comps)| HomEntry {
                key: SemanticKey { source: m, target: n, tables },
                witness: Morphism::new(m, comps),
            })
            .collect();
        Ok(HomSet { source: m, target: n, entries })
    }
}

/// Depth-first over allotments of variable sets to target components.
fn allocate(
    lang: Language,
    closure: &[Vec<(Table, Term)>],
    full: u32,
    n: usize,
    used: u32,
    alloc: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]) -> Result<(), CubeError>,
) -> Result<(), CubeError> {
    if alloc.len() == n {
        if !lang.rules.weakening() && used != full {
            return Ok(());
        }
        return visit(alloc);
    }
    for s in 0..=full {
        if closure[s as usize].is_empty() {
            continue;
        }
        if !lang.rules.contraction() && s & used != 0 {
            continue;
        }
        if !lang.rules.exchange() && s != 0 && used != 0 && max_bit(used) >= s.trailing_zeros() {
            continue;
        }
        alloc.push(s);
        allocate(lang, closure, full, n, used | s, alloc, visit)?;
        alloc.pop();
    }
    Ok(())
}
