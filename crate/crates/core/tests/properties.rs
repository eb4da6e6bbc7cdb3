use std::sync::OnceLock;

use hemiring::congruence::{
    all_congruences, bourne_congruence, is_congruence_simple, principal_congruence,
};
use hemiring::constructions::{enumerate_hemirings, enumerate_semilattices, HemiringConstraints};
use hemiring::hemiring::check_hemiring_axioms;
use hemiring::hom::{canonical_form, hom_search, is_isomorphic};
use hemiring::ideal::{all_ideals, is_subtractive, Side};
use hemiring::lattice::{
    build_e_m, build_f_m, e_ab, is_distributive_lattice, try_lattice, FiniteSemilattice,
};
use hemiring::semimodule::{
    end_semiring, left_ideal_semimodule, trace_ideal, FiniteLeftSemimodule,
};
use hemiring::{FiniteHemiring, OpTable};
use proptest::prelude::*;

fn hemirings() -> &'static [FiniteHemiring] {
    static CELL: OnceLock<Vec<FiniteHemiring>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut all: Vec<FiniteHemiring> = enumerate_hemirings(3, HemiringConstraints::default())
            .unwrap()
            .entries
            .into_iter()
            .map(|e| e.algebra)
            .collect();
        let idem = HemiringConstraints {
            additively_idempotent: true,
            require_identity: false,
        };
        all.extend(
            enumerate_hemirings(4, idem)
                .unwrap()
                .entries
                .into_iter()
                .filter(|e| e.algebra.order() == 4)
                .map(|e| e.algebra),
        );
        all
    })
}

fn semilattices() -> &'static [FiniteSemilattice] {
    static CELL: OnceLock<Vec<FiniteSemilattice>> = OnceLock::new();
    CELL.get_or_init(|| {
        enumerate_semilattices(5)
            .unwrap()
            .entries
            .into_iter()
            .map(|e| e.algebra)
            .collect()
    })
}

fn small(max: usize) -> Vec<&'static FiniteHemiring> {
    hemirings().iter().filter(|h| h.order() <= max).collect()
}

fn table(n: usize) -> impl Strategy<Value = OpTable> {
    proptest::collection::vec(0..n, n * n).prop_map(move |v| OpTable::new(n, &v).unwrap())
}

fn random_pair() -> impl Strategy<Value = (OpTable, OpTable)> {
    (1usize..=3).prop_flat_map(|n| (table(n), table(n)))
}

fn permutation_fixing_zero(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|rest| {
            let mut p = vec![0];
            p.extend(rest);
            p
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn constructor_agrees_with_validator((add, mul) in random_pair()) {
        let report = check_hemiring_axioms(&add, &mul, 0, None).unwrap();
        let built = FiniteHemiring::new(add, mul, 0, None);
        prop_assert_eq!(report.is_ok(), built.is_ok());
        if let Ok(h) = built {
            prop_assert!(h.revalidate().is_ok());
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(i in 0usize..1000, seed in any::<u64>()) {
        let all = hemirings();
        let r = &all[i % all.len()];
        prop_assert!(is_isomorphic(r, r).is_some());
        // a relabeling fixing zero is isomorphic both ways
        let n = r.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            let j = 1 + (s as usize) % k;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(k, j);
        }
        let q = r.permuted(&perm);
        let f = is_isomorphic(r, &q);
        let g = is_isomorphic(&q, r);
        prop_assert!(f.is_some() && g.is_some());
        prop_assert!(f.unwrap().is_homomorphism(r, &q));
        prop_assert_eq!(canonical_form(r).unwrap(), canonical_form(&q).unwrap());
    }

    #[test]
    fn isomorphism_is_transitive(i in 0usize..1000, p in permutation_fixing_zero(3), q in permutation_fixing_zero(3)) {
        let order3 = small(3).into_iter().filter(|h| h.order() == 3).collect::<Vec<_>>();
        let r = order3[i % order3.len()];
        let (a, b) = (r.permuted(&p), r.permuted(&q));
        let f = is_isomorphic(r, &a).unwrap();
        let g = is_isomorphic(&a, &b).unwrap();
        prop_assert!(f.then(&g).is_homomorphism(r, &b));
        prop_assert!(is_isomorphic(r, &b).is_some());
    }

    #[test]
    fn homomorphisms_compose(i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let pool = small(3);
        let (r, s, t) = (pool[i % pool.len()], pool[j % pool.len()], pool[k % pool.len()]);
        let rs = hom_search(r, s, false, false);
        let st = hom_search(s, t, false, false);
        let rt = hom_search(r, t, false, false);
        for f in &rs {
            for g in &st {
                prop_assert!(rt.contains(&f.then(g)));
            }
        }
    }
}

#[test]
fn natural_order_top_is_the_infinite_element() {
    for r in hemirings().iter().filter(|h| h.is_additively_idempotent()) {
        let order = r.natural_order().unwrap();
        assert_eq!(order.top(), r.infinite_element());
        assert!(r.infinite_element().is_some());
    }
}

#[test]
fn finite_semirings_are_dedekind_finite() {
    for r in hemirings().iter().filter(|h| h.is_semiring()) {
        assert!(r.is_dedekind_finite());
    }
}

#[test]
fn principal_congruences_are_least() {
    for r in hemirings() {
        let all = all_congruences(r).unwrap();
        for c in &all {
            c.check_compatible(r).unwrap();
        }
        for a in r.elements() {
            for b in a + 1..r.order() {
                let p = principal_congruence(r, a, b);
                assert!(all.contains(&p));
                for c in all.iter().filter(|c| c.related(a, b)) {
                    assert!(p.refines(c));
                }
            }
        }
        assert_eq!(is_congruence_simple(r), all.len() <= 2);
    }
}

#[test]
fn kernels_are_subtractive() {
    let pool = small(3);
    for r in &pool {
        for s in &pool {
            for f in hom_search(r, s, false, false) {
                assert!(is_subtractive(r, &f.kernel(r, s)));
            }
        }
    }
}

#[test]
fn bourne_congruence_collapses_its_ideal() {
    for r in hemirings().iter().filter(|h| h.is_additively_idempotent()) {
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            for i in all_ideals(r, side).unwrap() {
                let c = bourne_congruence(r, &i).unwrap();
                assert!(i.elements().all(|x| c.related(x, r.zero())));
            }
        }
    }
}

#[test]
fn e_ab_identities_hold_on_small_semilattices() {
    for m in semilattices().iter().filter(|m| m.order() <= 4) {
        let e = build_e_m(m);
        for f in e.carrier() {
            for a in m.elements() {
                for b in m.elements() {
                    let eab = e_ab(m, a, b);
                    assert_eq!(f.compose(&eab), e_ab(m, a, f.apply(b)));
                    for c in m.elements() {
                        for d in m.elements() {
                            let lhs = e_ab(m, c, d).compose(f).compose(&eab);
                            let rhs = if m.leq(f.apply(b), c) {
                                e_ab(m, a, m.zero())
                            } else {
                                e_ab(m, a, d)
                            };
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn f_m_is_an_ideal_and_equals_e_m_exactly_for_distributive_lattices() {
    for m in semilattices() {
        let e = build_e_m(m);
        assert!(e.as_hemiring().revalidate().is_ok());
        assert!(e.as_hemiring().is_additively_idempotent());
        for f in e.carrier() {
            assert!(m.is_monotone(f.as_slice()));
        }
        let f_m = build_f_m(&e);
        f_m.as_subset(&e).validate(e.as_hemiring()).unwrap();
        assert!(try_lattice(m).is_some());
        assert_eq!(f_m.is_everything(&e), is_distributive_lattice(m));
    }
}

#[test]
fn module_invariants_on_small_semirings() {
    for r in small(3).into_iter().filter(|h| h.is_semiring()) {
        let regular = FiniteLeftSemimodule::regular(r);
        let end = end_semiring(&regular).unwrap();
        assert!(end.hemiring.revalidate().is_ok());
        assert_eq!(
            end.hemiring.one(),
            end.index_of(&(0..r.order()).collect::<Vec<_>>())
        );
        assert!(trace_ideal(r, &regular).unwrap().is_whole());
        for i in all_ideals(r, Side::Left).unwrap() {
            let module = left_ideal_semimodule(r, &i).unwrap();
            trace_ideal(r, &module).unwrap().validate(r).unwrap();
        }
    }
}
