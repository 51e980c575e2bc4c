use cubical::algebra::{decision_algebra, free_algebra, FiniteAlgebra, Table, Theory};
use cubical::cube::{CubeCategory, Morphism};
use cubical::generate::random_term;
use cubical::homotopy::{fincat_homology, is_acyclic, object, smith_normal_form, FinCat, IntMatrix};
use cubical::term::{check_discipline, parse_term_unchecked, Term};
use cubical::{Language, Signature, StructuralRules};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn any_term(max_var: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![(1..=max_var).prop_map(Term::Var), Just(Term::Zero), Just(Term::One)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            inner.prop_map(Term::rev),
        ]
    })
}

fn any_language() -> impl Strategy<Value = Language> {
    (0..6usize, 0..6usize).prop_map(|(r, s)| Language::new(StructuralRules::ALL[r], Signature::ALL[s]))
}

/// Bareiss fraction-free determinant.
fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows).prop_map(move |r| {
        if rows == 0 {
            IntMatrix::zeros(0, cols)
        } else {
            IntMatrix::from_rows(&r)
        }
    })
}

/// A random poset on `n` points: `i < j` only for `i < j` in index order.
fn random_poset() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=7usize).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        (Just(n), prop::collection::vec(any::<bool>(), k)).prop_map(move |(n, bits)| {
            (n, pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| *p).collect())
        })
    })
}

fn labelled(n: usize) -> Vec<cubical::homotopy::ObjectData> {
    (0..n).map(|i| object(format!("p{i}"), 0)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_then_parsing_is_identity(t in any_term(4)) {
        let printed = t.to_string();
        prop_assert_eq!(parse_term_unchecked(&printed).unwrap(), t);
    }

    #[test]
    fn ascii_spelling_parses_to_the_same_term(t in any_term(3)) {
        let ascii = t.to_string().replace('∨', "\\/").replace('∧', "/\\").replace('′', "'");
        prop_assert_eq!(parse_term_unchecked(&ascii).unwrap(), t);
    }

    #[test]
    fn more_rules_accept_more_tuples(ts in prop::collection::vec(any_term(3), 0..3), arity in 0..4usize) {
        let ts: Vec<Term> = ts.into_iter().filter(|t| t.max_var() <= arity).collect();
        for r in StructuralRules::ALL {
            if !check_discipline(&ts, arity, r) {
                continue;
            }
            for bigger in StructuralRules::ALL {
                if r.is_subset_of(bigger) {
                    prop_assert!(check_discipline(&ts, arity, bigger), "{r} ⊆ {bigger}");
                }
            }
        }
    }

    #[test]
    fn generated_terms_belong_to_their_language(lang in any_language(), arity in 0..4usize, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_term(lang, arity, 3, &mut rng) {
            prop_assert!(t.is_well_formed(arity, lang.signature));
            prop_assert!(check_discipline(std::slice::from_ref(&t), arity, lang.rules));
            prop_assert!(t.depth() <= 3);
        }
    }

    #[test]
    fn equality_over_three_implies_equality_over_two(lang in any_language(), arity in 0..3usize, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (Some(s), Some(t)) = (random_term(lang, arity, 3, &mut rng), random_term(lang, arity, 3, &mut rng)) else {
            return Ok(());
        };
        let three = FiniteAlgebra::three().counterexample(&s, &t, arity).unwrap().is_none();
        let two = FiniteAlgebra::two().counterexample(&s, &t, arity).unwrap().is_none();
        prop_assert!(!three || two, "{s} = {t} over THREE only");
    }

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(a in (0..5usize, 0..5usize).prop_flat_map(|(r, c)| matrix(r, c))) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(determinant(&s.u).abs().is_one());
        prop_assert!(determinant(&s.v).abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                prop_assert!(i == j || s.d.get(i, j).is_zero());
            }
        }
        for w in s.invariant_factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(s.invariant_factors.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn homology_ignores_object_order((n, less) in random_poset(), seed in any::<u64>()) {
        let c = FinCat::from_poset(labelled(n), &less).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let d = c.relabel(&perm).unwrap();
        let (h1, h2) = (fincat_homology(&c).unwrap(), fincat_homology(&d).unwrap());
        prop_assert_eq!(&h1.groups, &h2.groups);
        prop_assert_eq!(h1.euler_from_betti(), h1.euler_from_chains());
    }

    #[test]
    fn posets_with_a_top_or_bottom_are_acyclic((n, less) in random_poset(), top in any::<bool>()) {
        let mut less = less;
        // add an extreme point with index n
        for i in 0..n {
            less.push(if top { (i, n) } else { (n, i) });
        }
        let c = FinCat::from_poset(labelled(n + 1), &less).unwrap();
        prop_assert!(is_acyclic(&c, Some(3)).unwrap());
    }

    #[test]
    fn tensor_is_functorial(seed in any::<u64>(), lang_ix in 0..4usize) {
        let langs = [
            Language::new(StructuralRules::W, Signature::REV),
            Language::new(StructuralRules::WE, Signature::LATTICE),
            Language::new(StructuralRules::EC, Signature::JOIN),
            Language::FULL,
        ];
        let c = CubeCategory::canonical(langs[lang_ix]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pick = |m: usize, n: usize, rng: &mut ChaCha8Rng| {
            let h = c.enumerate_hom(m, n).unwrap();
            let i = rand::Rng::gen_range(rng, 0..h.len());
            h.entries[i].witness.clone()
        };
        let (f, g) = (pick(1, 1, &mut rng), pick(1, 2, &mut rng));
        let (f2, g2) = (pick(1, 1, &mut rng), pick(1, 1, &mut rng));
        let lhs = c.tensor(&c.compose(&f, &g).unwrap(), &c.compose(&f2, &g2).unwrap());
        let rhs = c.compose(&c.tensor(&f, &f2), &c.tensor(&g, &g2)).unwrap();
        prop_assert!(c.morphisms_equal(&lhs, &rhs).unwrap());
        prop_assert!(c.is_morphism(lhs.source, lhs.target, &lhs.components));
    }
}

#[test]
fn free_algebras_are_closed_and_witnessed() {
    for sig in Signature::ALL {
        let lang = Language::new(StructuralRules::WEC, sig);
        let theories: &[Theory] =
            if lang.is_full() { &[Theory::Canonical, Theory::DeMorgan, Theory::Boolean] } else { &[Theory::Canonical] };
        for &theory in theories {
            let alg = decision_algebra(lang, theory).unwrap();
            for m in 0..=2 {
                let fa = free_algebra(lang, theory, m).unwrap();
                for (table, term) in &fa.elements {
                    assert_eq!(&alg.table(term, m).unwrap(), table);
                }
                let apply = |op: &dyn Fn(u8, u8) -> u8, a: &Table, b: &Table| {
                    Table(a.0.iter().zip(&b.0).map(|(&x, &y)| op(x, y)).collect())
                };
                for (a, _) in &fa.elements {
                    if sig.has_reversal() {
                        assert!(fa.contains(&Table(a.0.iter().map(|&x| alg.rev(x).unwrap()).collect())));
                    }
                    for (b, _) in &fa.elements {
                        if sig.has_join() {
                            assert!(fa.contains(&apply(&|x, y| alg.join(x, y).unwrap(), a, b)));
                        }
                        if sig.has_meet() {
                            assert!(fa.contains(&apply(&|x, y| alg.meet(x, y).unwrap(), a, b)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn composites_of_valid_morphisms_stay_valid() {
    for lang in Language::all() {
        let c = CubeCategory::canonical(lang);
        for (m, n, k) in [(1, 1, 1), (2, 1, 2), (1, 2, 1), (2, 2, 1)] {
            let (Ok(fs), Ok(gs)) = (c.enumerate_hom(m, n), c.enumerate_hom(n, k)) else { continue };
            for f in fs.morphisms().take(40) {
                for g in gs.morphisms().take(40) {
                    let h: Morphism = c.compose(f, g).unwrap();
                    assert!(c.is_morphism(h.source, h.target, &h.components), "{lang}: {f} ; {g}");
                }
            }
        }
    }
}
