//! Homomorphism and isomorphism search, invariant fingerprints and canonical
//! forms.

use alloc::vec::Vec;

use crate::congruence::{all_congruences_bounded, quotient, Congruence};
use crate::error::{guard, Result};
use crate::hemiring::FiniteHemiring;
use crate::ideal::{all_ideals_bounded, is_simple, IdealSubset, Side};
use crate::lattice::FiniteSemilattice;
use crate::search::MapSearch;
use crate::table::{Element, OpTable};

/// A map between carriers, `map[x]` being the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomMap {
    /// Images indexed by source element.
    pub map: Vec<Element>,
}

impl HomMap {
    /// Image of `x`.
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomMap) -> HomMap {
        HomMap {
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }

    /// Distinct sources have distinct images.
    pub fn is_injective(&self) -> bool {
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Every target element is hit.
    pub fn is_surjective(&self, target_order: usize) -> bool {
        let mut hit = alloc::vec![false; target_order];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Whether the map preserves addition, multiplication and zero.
    pub fn is_homomorphism(&self, r: &FiniteHemiring, s: &FiniteHemiring) -> bool {
        self.map.len() == r.order()
            && self.map[r.zero()] == s.zero()
            && r.elements().all(|a| {
                r.elements().all(|b| {
                    self.map[r.add(a, b)] == s.add(self.map[a], self.map[b])
                        && self.map[r.mul(a, b)] == s.mul(self.map[a], self.map[b])
                })
            })
    }

    /// `f⁻¹(0)`, a two-sided ideal of the source.
    pub fn kernel(&self, r: &FiniteHemiring, s: &FiniteHemiring) -> IdealSubset {
        let members = self.map.iter().map(|&v| v == s.zero()).collect();
        let _ = r;
        IdealSubset::from_mask(members, Side::TwoSided)
    }

    /// Image of a subset.
    pub fn image_of(&self, subset: &IdealSubset, target_order: usize) -> Vec<bool> {
        let mut out = alloc::vec![false; target_order];
        for x in subset.elements() {
            out[self.map[x]] = true;
        }
        out
    }
}

fn base_search<'a>(r: &'a FiniteHemiring, s: &'a FiniteHemiring) -> MapSearch<'a> {
    MapSearch::new(r.order(), s.order())
        .preserve(r.add_table(), s.add_table())
        .preserve(r.mul_table(), s.mul_table())
        .fix(r.zero(), s.zero())
}

/// Every homomorphism `r -> s` preserving `+`, `·` and `0` (and `1` when
/// `unital`), optionally only the surjective ones. Sorted.
pub fn hom_search(
    r: &FiniteHemiring,
    s: &FiniteHemiring,
    surjective: bool,
    unital: bool,
) -> Vec<HomMap> {
    let mut search = base_search(r, s);
    if unital {
        match (r.one(), s.one()) {
            (Some(a), Some(b)) => search = search.fix(a, b),
            _ => return Vec::new(),
        }
    }
    if surjective {
        search = search.surjective();
    }
    let mut out = Vec::new();
    search.for_each(|m| {
        out.push(HomMap { map: m.to_vec() });
        true
    });
    out.sort();
    out
}

/// Per-element isomorphism invariants.
pub fn element_signature(r: &FiniteHemiring, x: Element) -> Vec<usize> {
    let n = r.order();
    let count = |p: &dyn Fn(Element) -> bool| r.elements().filter(|&y| p(y)).count();
    let mut additive_period = 1;
    let mut acc = x;
    while additive_period <= n {
        let next = r.add(acc, x);
        if next == x {
            break;
        }
        acc = next;
        additive_period += 1;
    }
    alloc::vec![
        (x != r.zero()) as usize,
        (Some(x) != r.find_identity()) as usize,
        (r.add(x, x) == x) as usize,
        (r.mul(x, x) == x) as usize,
        count(&|y| r.add(x, y) == x),
        count(&|y| r.add(x, y) == y),
        count(&|y| r.mul(x, y) == r.zero()),
        count(&|y| r.mul(y, x) == r.zero()),
        count(&|y| r.mul(x, y) == x),
        count(&|y| r.mul(y, x) == x),
        count(&|y| r.add(y, y) == x),
        count(&|y| r.mul(y, y) == x),
        count(&|y| r.mul(x, y) == r.mul(y, x)),
        additive_period,
    ]
}

/// Sorted multiset of element signatures; equal for isomorphic algebras.
pub fn fingerprint(r: &FiniteHemiring) -> Vec<Vec<usize>> {
    let mut sigs: Vec<Vec<usize>> = r.elements().map(|x| element_signature(r, x)).collect();
    sigs.sort();
    sigs
}

/// An isomorphism `r -> s`, if one exists. Candidates are pruned by
/// element signatures before backtracking.
pub fn is_isomorphic(r: &FiniteHemiring, s: &FiniteHemiring) -> Option<HomMap> {
    if r.order() != s.order() {
        return None;
    }
    let rs: Vec<Vec<usize>> = r.elements().map(|x| element_signature(r, x)).collect();
    let ss: Vec<Vec<usize>> = s.elements().map(|x| element_signature(s, x)).collect();
    let (mut a, mut b) = (rs.clone(), ss.clone());
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let mut search = base_search(r, s).injective();
    for x in r.elements() {
        search = search.restrict(x, s.elements().filter(|&y| ss[y] == rs[x]));
    }
    search.first().map(|map| HomMap { map })
}

/// Whether two semilattices are isomorphic.
pub fn semilattices_isomorphic(m: &FiniteSemilattice, n: &FiniteSemilattice) -> bool {
    m.order() == n.order()
        && MapSearch::new(m.order(), n.order())
            .preserve(m.join_table(), n.join_table())
            .fix(m.zero(), n.zero())
            .injective()
            .first()
            .is_some()
}

/// Upper bound on labelings tried by [`canonical_labeling`].
pub const CANONICAL_LABELING_LIMIT: usize = 1 << 20;

/// Relabeling that minimizes the permuted tables lexicographically among
/// labelings that sort elements by `signature`. Returns old-to-new indices.
///
/// Isomorphic structures with the same invariant signatures receive equal
/// relabeled tables.
pub fn canonical_labeling(tables: &[&OpTable], signature: &[Vec<usize>]) -> Result<Vec<Element>> {
    let n = signature.len();
    let mut classes: Vec<(Vec<usize>, Vec<Element>)> = Vec::new();
    let mut order: Vec<Element> = (0..n).collect();
    order.sort_by(|&a, &b| signature[a].cmp(&signature[b]).then(a.cmp(&b)));
    for x in order {
        match classes.last_mut() {
            Some((sig, members)) if *sig == signature[x] => members.push(x),
            _ => classes.push((signature[x].clone(), alloc::vec![x])),
        }
    }
    let mut labelings: usize = 1;
    for (_, members) in &classes {
        for k in 1..=members.len() {
            labelings = labelings.saturating_mul(k);
        }
    }
    guard("canonical labelings", labelings, CANONICAL_LABELING_LIMIT)?;

    // slot `p` of the new order receives one old element of the class that
    // owns `p`
    let mut slot_class = Vec::with_capacity(n);
    for (ci, (_, members)) in classes.iter().enumerate() {
        slot_class.extend(core::iter::repeat_n(ci, members.len()));
    }
    let mut best: Option<(Vec<Vec<Element>>, Vec<Element>)> = None;
    let mut new_to_old = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    fn rec(
        classes: &[(Vec<usize>, Vec<Element>)],
        slot_class: &[usize],
        tables: &[&OpTable],
        new_to_old: &mut Vec<Element>,
        used: &mut [bool],
        best: &mut Option<(Vec<Vec<Element>>, Vec<Element>)>,
    ) {
        let n = slot_class.len();
        if new_to_old.len() == n {
            let mut old_to_new = alloc::vec![0; n];
            for (new, &old) in new_to_old.iter().enumerate() {
                old_to_new[old] = new;
            }
            let permuted: Vec<Vec<Element>> = tables
                .iter()
                .map(|t| t.permuted(&old_to_new).entries().collect())
                .collect();
            if best.as_ref().is_none_or(|(b, _)| permuted < *b) {
                *best = Some((permuted, old_to_new));
            }
            return;
        }
        let class = &classes[slot_class[new_to_old.len()]].1;
        for &x in class {
            if used[x] {
                continue;
            }
            used[x] = true;
            new_to_old.push(x);
            rec(classes, slot_class, tables, new_to_old, used, best);
            new_to_old.pop();
            used[x] = false;
        }
    }
    rec(
        &classes,
        &slot_class,
        tables,
        &mut new_to_old,
        &mut used,
        &mut best,
    );
    Ok(best.expect("at least one labeling").1)
}

/// The canonical representative of the isomorphism class of `r`; zero
/// becomes element 0 and the identity (if any) is recorded.
pub fn canonical_form(r: &FiniteHemiring) -> Result<FiniteHemiring> {
    let sig: Vec<Vec<usize>> = r.elements().map(|x| element_signature(r, x)).collect();
    let perm = canonical_labeling(&[r.add_table(), r.mul_table()], &sig)?;
    let mut c = r.permuted(&perm);
    if c.one().is_none() {
        if let Some(one) = c.find_identity() {
            c = FiniteHemiring::from_parts(
                c.add_table().clone(),
                c.mul_table().clone(),
                c.zero(),
                Some(one),
            );
        }
    }
    Ok(c)
}

/// Per-element invariants of a semilattice: zero flag, down-set and up-set
/// sizes, number of covers.
pub fn semilattice_signature(m: &FiniteSemilattice, x: Element) -> Vec<usize> {
    let down = m.elements().filter(|&y| m.leq(y, x)).count();
    let up = m.elements().filter(|&y| m.leq(x, y)).count();
    let joins_to_x = m
        .elements()
        .flat_map(|a| m.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| m.join(a, b) == x)
        .count();
    alloc::vec![(x != m.zero()) as usize, down, up, joins_to_x]
}

/// Canonical representative of a semilattice; zero becomes 0.
pub fn canonical_semilattice(m: &FiniteSemilattice) -> Result<FiniteSemilattice> {
    let sig: Vec<Vec<usize>> = m.elements().map(|x| semilattice_signature(m, x)).collect();
    let perm = canonical_labeling(&[m.join_table()], &sig)?;
    Ok(m.permuted(&perm))
}

/// All two-sided ideals `I ≠ R` of `r` map to proper subsets under `f`.
fn preserves_properness(f: &HomMap, ideals: &[IdealSubset], s_order: usize) -> bool {
    ideals
        .iter()
        .filter(|i| !i.is_whole())
        .all(|i| f.image_of(i, s_order).iter().any(|&hit| !hit))
}

/// A surjective homomorphism with kernel `{0}` taking every proper ideal to
/// a proper ideal, if one exists.
pub fn strong_semiisomorphism_search(
    r: &FiniteHemiring,
    s: &FiniteHemiring,
    ideal_limit: usize,
) -> Result<Option<HomMap>> {
    let ideals = all_ideals_bounded(r, Side::TwoSided, ideal_limit)?;
    let mut found = None;
    base_search(r, s).surjective().for_each(|m| {
        let f = HomMap { map: m.to_vec() };
        let kernel_trivial = r
            .elements()
            .all(|x| x == r.zero() || f.apply(x) != s.zero());
        if kernel_trivial && preserves_properness(&f, &ideals, s.order()) {
            found = Some(f);
            return false;
        }
        true
    });
    Ok(found)
}

/// For a semiring: a maximal congruence not identifying `1` and `0` whose
/// factor is simple and additively idempotent, with the projection, if the
/// projection is a strong semiisomorphism.
pub fn strong_semiisomorphism_to_simple(
    r: &FiniteHemiring,
    limit: usize,
) -> Result<Option<(FiniteHemiring, HomMap)>> {
    let Some(one) = r.one() else { return Ok(None) };
    let congruences = all_congruences_bounded(r, limit)?;
    let candidates: Vec<&Congruence> = congruences
        .iter()
        .filter(|c| !c.related(one, r.zero()))
        .collect();
    let ideals = all_ideals_bounded(r, Side::TwoSided, limit)?;
    for c in &candidates {
        let maximal = !candidates.iter().any(|d| d != c && c.refines(d));
        if !maximal {
            continue;
        }
        let q = quotient(r, c)?;
        if !(q.is_additively_idempotent() && is_simple(&q)) {
            continue;
        }
        let f = HomMap {
            map: c.blocks().to_vec(),
        };
        let kernel_trivial = r
            .elements()
            .all(|x| x == r.zero() || !c.related(x, r.zero()));
        if kernel_trivial && preserves_properness(&f, &ideals, q.order()) {
            return Ok(Some((q, f)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean_b, chain_semiring, integers_mod, two_zero_mult};
    use crate::lattice::build_e_m;

    #[test]
    fn unital_endomorphisms_of_b_are_the_identity() {
        let b = boolean_b();
        let homs = hom_search(&b, &b, false, true);
        assert_eq!(
            homs,
            alloc::vec![HomMap {
                map: alloc::vec![0, 1]
            }]
        );
        // the zero map is a non-unital homomorphism as well
        assert_eq!(hom_search(&b, &b, false, false).len(), 2);
    }

    #[test]
    fn e_of_two_chain_is_boolean() {
        let e = build_e_m(&FiniteSemilattice::chain(2));
        let iso = is_isomorphic(e.as_hemiring(), &boolean_b()).unwrap();
        assert!(iso.is_homomorphism(e.as_hemiring(), &boolean_b()));
        assert!(iso.is_injective());
    }

    #[test]
    fn z2_does_not_map_onto_b() {
        assert!(hom_search(&integers_mod(2), &boolean_b(), true, false).is_empty());
        assert!(is_isomorphic(&boolean_b(), &two_zero_mult()).is_none());
    }

    #[test]
    fn commutative_zerosumfree_semiring_maps_to_b() {
        let c = chain_semiring(4);
        assert!(c.is_commutative() && c.is_zerosumfree());
        assert!(!hom_search(&c, &boolean_b(), true, true).is_empty());
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let c = chain_semiring(4);
        let shuffled = c.permuted(&[0, 3, 1, 2]);
        assert_eq!(
            canonical_form(&c).unwrap(),
            canonical_form(&shuffled).unwrap()
        );
        assert!(is_isomorphic(&c, &shuffled).is_some());
        assert_ne!(
            canonical_form(&c).unwrap(),
            canonical_form(&integers_mod(4)).unwrap()
        );
    }

    #[test]
    fn identity_qualifies_as_strong_semiisomorphism() {
        let b = boolean_b();
        let f = strong_semiisomorphism_search(&b, &b, 40).unwrap().unwrap();
        assert_eq!(f.map, alloc::vec![0, 1]);
        assert!(strong_semiisomorphism_search(&integers_mod(2), &b, 40)
            .unwrap()
            .is_none());
    }

    #[test]
    fn kernel_of_projection() {
        let z4 = integers_mod(4);
        let z2 = integers_mod(2);
        let homs = hom_search(&z4, &z2, true, true);
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].kernel(&z4, &z2).to_vec(), alloc::vec![0, 2]);
    }
}
