//! Independent brute-force term enumeration over small chains, shared by
//! the oracle and acceptance targets.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

/// A small interval algebra on `0..size` as a chain, with `rev(x) = top - x`.
#[derive(Clone, Copy)]
pub struct Chain {
    pub size: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum T {
    V(usize),
    C(u8),
    J(Box<T>, Box<T>),
    M(Box<T>, Box<T>),
    R(Box<T>),
}

impl Chain {
    pub fn top(self) -> u8 {
        self.size - 1
    }

    pub fn eval(self, t: &T, env: &[u8]) -> u8 {
        match t {
            T::V(i) => env[i - 1],
            T::C(c) => *c * self.top(),
            T::J(a, b) => self.eval(a, env).max(self.eval(b, env)),
            T::M(a, b) => self.eval(a, env).min(self.eval(b, env)),
            T::R(a) => self.top() - self.eval(a, env),
        }
    }

    pub fn envs(self, arity: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..arity {
            out = out.into_iter().flat_map(|e| (0..self.size).map(move |x| [e.clone(), vec![x]].concat())).collect();
        }
        out
    }

    pub fn table(self, t: &T, arity: usize) -> Vec<u8> {
        self.envs(arity).iter().map(|e| self.eval(t, e)).collect()
    }
}

pub fn listing(t: &T, out: &mut Vec<usize>) {
    match t {
        T::V(i) => out.push(*i),
        T::C(_) => {}
        T::J(a, b) | T::M(a, b) => {
            listing(a, out);
            listing(b, out);
        }
        T::R(a) => listing(a, out),
    }
}

/// The occurrence discipline, written out independently: without
/// contraction no variable repeats, without weakening every variable
/// occurs, without exchange occurrences go in increasing order.
pub fn allowed(ts: &[&T], arity: usize, w: bool, e: bool, c: bool) -> bool {
    let mut seq = Vec::new();
    for t in ts {
        listing(t, &mut seq);
    }
    let distinct: HashSet<usize> = seq.iter().copied().collect();
    (c || distinct.len() == seq.len())
        && (w || distinct.len() == arity)
        && (e || seq.windows(2).all(|p| p[0] < p[1]))
}

/// All terms of depth at most `depth` in the given operations.
pub fn terms(arity: usize, depth: usize, join: bool, meet: bool, rev: bool) -> Vec<T> {
    let mut all: Vec<T> = (1..=arity).map(T::V).chain([T::C(0), T::C(1)]).collect();
    for _ in 0..depth {
        let prev = all.clone();
        let mut next = prev.clone();
        if rev {
            next.extend(prev.iter().map(|a| T::R(Box::new(a.clone()))));
        }
        for a in &prev {
            for b in &prev {
                if join {
                    next.push(T::J(Box::new(a.clone()), Box::new(b.clone())));
                }
                if meet {
                    next.push(T::M(Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        }
        let set: HashSet<T> = next.into_iter().collect();
        all = set.into_iter().collect();
    }
    all
}

/// Distinct table tuples of hom([m], [n]) from syntax up to `depth`.
pub fn hom_by_syntax(alg: Chain, rules: (bool, bool, bool), sig: (bool, bool, bool), m: usize, n: usize, depth: usize) -> usize {
    let pool = terms(m, depth, sig.0, sig.1, sig.2);
    let mut tuples: Vec<Vec<&T>> = vec![vec![]];
    for _ in 0..n {
        tuples = tuples.into_iter().flat_map(|tp| pool.iter().map(move |t| [tp.clone(), vec![t]].concat())).collect();
    }
    let tables: HashSet<Vec<Vec<u8>>> = tuples
        .iter()
        .filter(|tp| allowed(tp, m, rules.0, rules.1, rules.2))
        .map(|tp| tp.iter().map(|t| alg.table(t, m)).collect())
        .collect();
    tables.len()
}

/// Under all three structural rules every term is allowed, so the hom-set
/// is the closure of the projections and constants under the operations.
pub fn hom_by_closure(alg: Chain, sig: (bool, bool, bool), m: usize) -> usize {
    let envs = alg.envs(m);
    let mut set: BTreeSet<Vec<u8>> = (0..m).map(|i| envs.iter().map(|e| e[i]).collect()).collect();
    set.insert(vec![0; envs.len()]);
    set.insert(vec![alg.top(); envs.len()]);
    loop {
        let cur: Vec<Vec<u8>> = set.iter().cloned().collect();
        let before = set.len();
        for a in &cur {
            if sig.2 {
                set.insert(a.iter().map(|x| alg.top() - x).collect());
            }
            for b in &cur {
                if sig.0 {
                    set.insert(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
                }
                if sig.1 {
                    set.insert(a.iter().zip(b).map(|(x, y)| *x.min(y)).collect());
                }
            }
        }
        if set.len() == before {
            return set.len();
        }
    }
}

/// Syntax counts at increasing depth until two consecutive depths agree.
pub fn saturated(alg: Chain, rules: (bool, bool, bool), sig: (bool, bool, bool), m: usize, n: usize) -> usize {
    let mut last = hom_by_syntax(alg, rules, sig, m, n, 0);
    for d in 1..=4 {
        let c = hom_by_syntax(alg, rules, sig, m, n, d);
        if c == last {
            return c;
        }
        last = c;
    }
    panic!("no saturation by depth 4");
}

pub const TWO: Chain = Chain { size: 2 };
pub const THREE: Chain = Chain { size: 3 };

