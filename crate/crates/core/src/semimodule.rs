//! Finite left semimodules, their homomorphisms and endomorphism semirings,
//! trace ideals, minimal left ideals and the double centralizer check.
//!
//! Conventions: `D = End(_R I)` acts on `I` from the right by `i·d = d(i)`,
//! so the product in `D` is `d1 * d2 = d2 ∘ d1`. `End(I_D)` consists of the
//! additive maps commuting with every `d ∈ D`, composed as left operators
//! (`g1 * g2 = g1 ∘ g2`). The natural map sends `r` to `i ↦ ri`.

use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::hemiring::{Axiom, FiniteHemiring};
use crate::hom::HomMap;
use crate::ideal::{additive_closure, all_ideals, is_simple, IdealSubset, Side};
use crate::search::MapSearch;
use crate::table::{Element, OpTable};

/// Cap on the number of homomorphisms collected by one enumeration.
pub const DEFAULT_HOM_LIMIT: usize = 1 << 16;

/// A finite left semimodule over a finite hemiring.
#[derive(Clone, Debug)]
pub struct FiniteLeftSemimodule<'r> {
    ring: &'r FiniteHemiring,
    add: OpTable,
    zero: Element,
    /// `action[r * order + m] = r·m`.
    action: Vec<Element>,
    /// Ring elements of each carrier element, for left ideals.
    embedding: Option<Vec<Element>>,
}

fn violation(axiom: Axiom, witness: [Element; 3]) -> AlgebraError {
    AlgebraError::AxiomViolation { axiom, witness }
}

impl<'r> FiniteLeftSemimodule<'r> {
    /// Validates `(add, zero)` and the action table (`|R|` rows of length
    /// `add.order()`).
    pub fn new(
        ring: &'r FiniteHemiring,
        add: OpTable,
        zero: Element,
        action: Vec<Element>,
    ) -> Result<Self> {
        let n = add.order();
        if action.len() != ring.order() * n {
            return Err(AlgebraError::DimensionMismatch {
                expected: ring.order() * n,
                found: action.len(),
            });
        }
        if let Some(&bad) = action.iter().find(|&&x| x >= n) {
            return Err(AlgebraError::ElementOutOfRange {
                element: bad,
                order: n,
            });
        }
        let m = FiniteLeftSemimodule {
            ring,
            add,
            zero,
            action,
            embedding: None,
        };
        m.validate()?;
        Ok(m)
    }

    /// Checks the monoid and action laws.
    pub fn validate(&self) -> Result<()> {
        let (r, n) = (self.ring, self.order());
        if self.zero >= n {
            return Err(AlgebraError::ElementOutOfRange {
                element: self.zero,
                order: n,
            });
        }
        for a in 0..n {
            if self.add(self.zero, a) != a {
                return Err(violation(Axiom::AdditiveIdentity, [self.zero, a, a]));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(violation(Axiom::AdditiveCommutativity, [a, b, b]));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(violation(Axiom::AdditiveAssociativity, [a, b, c]));
                    }
                }
            }
        }
        for s in r.elements() {
            if self.act(s, self.zero) != self.zero {
                return Err(violation(Axiom::ZeroAbsorbing, [s, self.zero, self.zero]));
            }
            for m in 0..n {
                if self.act(r.zero(), m) != self.zero {
                    return Err(violation(Axiom::ZeroAbsorbing, [r.zero(), m, m]));
                }
                for t in r.elements() {
                    if self.act(r.mul(s, t), m) != self.act(s, self.act(t, m)) {
                        return Err(violation(Axiom::MultiplicativeAssociativity, [s, t, m]));
                    }
                    if self.act(r.add(s, t), m) != self.add(self.act(s, m), self.act(t, m)) {
                        return Err(violation(Axiom::RightDistributivity, [s, t, m]));
                    }
                }
                for p in 0..n {
                    if self.act(s, self.add(m, p)) != self.add(self.act(s, m), self.act(s, p)) {
                        return Err(violation(Axiom::LeftDistributivity, [s, m, p]));
                    }
                }
            }
        }
        if let Some(one) = r.one() {
            if let Some(m) = (0..n).find(|&m| self.act(one, m) != m) {
                return Err(violation(Axiom::MultiplicativeIdentity, [one, m, m]));
            }
        }
        Ok(())
    }

    /// `_R R`.
    pub fn regular(ring: &'r FiniteHemiring) -> Self {
        let whole = IdealSubset::whole(ring.order(), Side::Left);
        left_ideal_semimodule(ring, &whole).expect("R is a left ideal of itself")
    }

    /// The one-element semimodule.
    pub fn zero_module(ring: &'r FiniteHemiring) -> Self {
        FiniteLeftSemimodule {
            ring,
            add: OpTable::from_fn(1, |_, _| 0),
            zero: 0,
            action: alloc::vec![0; ring.order()],
            embedding: None,
        }
    }

    /// The base hemiring.
    pub fn ring(&self) -> &'r FiniteHemiring {
        self.ring
    }

    /// Carrier size.
    pub fn order(&self) -> usize {
        self.add.order()
    }

    /// The zero.
    pub fn zero(&self) -> Element {
        self.zero
    }

    /// `m + p`.
    pub fn add(&self, m: Element, p: Element) -> Element {
        self.add.get(m, p)
    }

    /// The addition table.
    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    /// `r·m`.
    pub fn act(&self, r: Element, m: Element) -> Element {
        self.action[r * self.order() + m]
    }

    /// The self-map `m ↦ r·m`.
    pub fn action_map(&self, r: Element) -> Vec<Element> {
        (0..self.order()).map(|m| self.act(r, m)).collect()
    }

    /// For a left ideal module: the ring element of each carrier element.
    pub fn embedding(&self) -> Option<&[Element]> {
        self.embedding.as_deref()
    }
}

/// A left ideal `I` of `R` as a left `R`-semimodule, carrier indexed by
/// position in `I`'s sorted members.
pub fn left_ideal_semimodule<'r>(
    r: &'r FiniteHemiring,
    ideal: &IdealSubset,
) -> Result<FiniteLeftSemimodule<'r>> {
    let members = ideal.to_vec();
    let position = |x: Element| {
        members
            .binary_search(&x)
            .map_err(|_| AlgebraError::NotClosed("left ideal"))
    };
    let add = r.add_table().restricted(&members)?;
    let zero = position(r.zero())?;
    let mut action = Vec::with_capacity(r.order() * members.len());
    for s in r.elements() {
        for &x in &members {
            action.push(position(r.mul(s, x))?);
        }
    }
    let mut m = FiniteLeftSemimodule::new(r, add, zero, action)?;
    m.embedding = Some(members);
    Ok(m)
}

/// An `R`-linear map between semimodules.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemimoduleHom {
    /// Images indexed by source element.
    pub map: Vec<Element>,
}

/// All additive, zero-preserving, `R`-equivariant maps `m -> n`, sorted.
pub fn hom_semimodules(
    m: &FiniteLeftSemimodule,
    n: &FiniteLeftSemimodule,
) -> Result<Vec<SemimoduleHom>> {
    hom_semimodules_bounded(m, n, DEFAULT_HOM_LIMIT)
}

/// As [`hom_semimodules`], failing once more than `limit` maps are found.
pub fn hom_semimodules_bounded(
    m: &FiniteLeftSemimodule,
    n: &FiniteLeftSemimodule,
    limit: usize,
) -> Result<Vec<SemimoduleHom>> {
    let mut search = MapSearch::new(m.order(), n.order())
        .preserve(m.add_table(), n.add_table())
        .fix(m.zero(), n.zero());
    for r in m.ring().elements() {
        search = search.commute(m.action_map(r), n.action_map(r));
    }
    let mut maps = search.collect(limit)?;
    maps.sort();
    Ok(maps.into_iter().map(|map| SemimoduleHom { map }).collect())
}

/// A semiring of self-maps with its tables; carrier index `k` is `maps[k]`.
#[derive(Clone, Debug)]
pub struct OperatorSemiring {
    /// Sorted maps.
    pub maps: Vec<Vec<Element>>,
    /// Tables: pointwise addition and the documented composition order.
    pub hemiring: FiniteHemiring,
}

impl OperatorSemiring {
    fn build(maps: Vec<Vec<Element>>, add: &OpTable, zero: Element, right_operators: bool) -> Self {
        let index = |f: &Vec<Element>| maps.binary_search(f).expect("closed under the operations");
        let k = maps.len();
        let order = add.order();
        let sum = OpTable::from_fn(k, |f, g| {
            index(
                &(0..order)
                    .map(|x| add.get(maps[f][x], maps[g][x]))
                    .collect(),
            )
        });
        let product = OpTable::from_fn(k, |f, g| {
            let (outer, inner) = if right_operators {
                (&maps[g], &maps[f])
            } else {
                (&maps[f], &maps[g])
            };
            index(&inner.iter().map(|&x| outer[x]).collect())
        });
        let zero_map = index(&alloc::vec![zero; order]);
        let id = index(&(0..order).collect());
        OperatorSemiring {
            hemiring: FiniteHemiring::from_parts(sum, product, zero_map, Some(id)),
            maps,
        }
    }

    /// Carrier index of a map.
    pub fn index_of(&self, f: &[Element]) -> Option<Element> {
        self.maps.binary_search_by(|g| g.as_slice().cmp(f)).ok()
    }
}

/// `End(_R M)` acting on the right: `d1 * d2 = d2 ∘ d1`.
pub fn end_semiring(m: &FiniteLeftSemimodule) -> Result<OperatorSemiring> {
    let maps = hom_semimodules(m, m)?.into_iter().map(|h| h.map).collect();
    Ok(OperatorSemiring::build(maps, m.add_table(), m.zero(), true))
}

/// Outcome of the double centralizer computation for a left ideal.
#[derive(Clone, Debug)]
pub struct DoubleCentralizerReport {
    /// Whether `R` is simple (the hypothesis under which `iso` is expected).
    pub ring_simple: bool,
    /// `|I|`.
    pub ideal_order: usize,
    /// `D = End(_R I)`.
    pub d: OperatorSemiring,
    /// `End(I_D)`.
    pub end_over_d: OperatorSemiring,
    /// `r ↦ (i ↦ ri)` as carrier indices of `End(I_D)`.
    pub natural_map: HomMap,
    /// The natural map preserves both operations, zero and one.
    pub is_homomorphism: bool,
    /// Natural map injective.
    pub injective: bool,
    /// Natural map surjective.
    pub surjective: bool,
    /// Both.
    pub iso: bool,
}

/// Builds `D`, `End(I_D)` and the natural map for a left ideal `I` of `R`.
/// Runs whether or not `R` is simple; the report records which.
pub fn double_centralizer_check(
    r: &FiniteHemiring,
    ideal: &IdealSubset,
) -> Result<DoubleCentralizerReport> {
    let module = left_ideal_semimodule(r, ideal)?;
    let d = end_semiring(&module)?;
    let mut search = MapSearch::new(module.order(), module.order())
        .preserve(module.add_table(), module.add_table())
        .fix(module.zero(), module.zero());
    for map in &d.maps {
        search = search.commute(map.clone(), map.clone());
    }
    let mut maps = search.collect(DEFAULT_HOM_LIMIT)?;
    maps.sort();
    let end_over_d = OperatorSemiring::build(maps, module.add_table(), module.zero(), false);
    let natural_map = HomMap {
        map: r
            .elements()
            .map(|s| {
                end_over_d
                    .index_of(&module.action_map(s))
                    .expect("left multiplications commute with D")
            })
            .collect(),
    };
    let target = &end_over_d.hemiring;
    let is_homomorphism = natural_map.is_homomorphism(r, target)
        && r.one()
            .is_none_or(|o| Some(natural_map.apply(o)) == target.one());
    let injective = natural_map.is_injective();
    let surjective = natural_map.is_surjective(target.order());
    Ok(DoubleCentralizerReport {
        ring_simple: is_simple(r),
        ideal_order: module.order(),
        d,
        end_over_d,
        natural_map,
        is_homomorphism,
        injective,
        surjective,
        iso: injective && surjective,
    })
}

/// `tr(P)`: the additive closure of the images of all `P -> _R R`.
pub fn trace_ideal(r: &FiniteHemiring, p: &FiniteLeftSemimodule) -> Result<IdealSubset> {
    let regular = FiniteLeftSemimodule::regular(r);
    let homs = hom_semimodules(p, &regular)?;
    let images = homs.iter().flat_map(|h| h.map.iter().copied());
    Ok(IdealSubset::from_mask(
        additive_closure(r, images),
        Side::TwoSided,
    ))
}

/// Whether `tr(P) = R`.
pub fn is_generator(r: &FiniteHemiring, p: &FiniteLeftSemimodule) -> Result<bool> {
    Ok(trace_ideal(r, p)?.is_whole())
}

/// The nonzero left ideals minimal under inclusion.
pub fn minimal_left_ideals(r: &FiniteHemiring) -> Result<Vec<IdealSubset>> {
    let nonzero: Vec<IdealSubset> = all_ideals(r, Side::Left)?
        .into_iter()
        .filter(|i| !i.is_zero(r))
        .collect();
    Ok(nonzero
        .iter()
        .filter(|i| !nonzero.iter().any(|j| j != *i && j.is_subset(i)))
        .cloned()
        .collect())
}

/// The least idempotent `e ∈ I` with `Re = I`, if any. Other idempotents
/// may generate the same ideal.
pub fn idempotent_generated(r: &FiniteHemiring, ideal: &IdealSubset) -> Option<Element> {
    ideal.elements().find(|&e| {
        r.mul(e, e) == e && {
            let mut re = alloc::vec![false; r.order()];
            for s in r.elements() {
                re[r.mul(s, e)] = true;
            }
            re.as_slice() == ideal.mask()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean_b, matrix_semiring, two_zero_mult};
    use crate::hom::is_isomorphic;
    use crate::ideal::generated_ideal;
    use crate::lattice::{build_e_m, FiniteSemilattice};

    /// All maps `m -> n`, filtered by the homomorphism conditions.
    fn naive_homs(m: &FiniteLeftSemimodule, n: &FiniteLeftSemimodule) -> Vec<Vec<Element>> {
        let (a, b) = (m.order(), n.order());
        let mut out = Vec::new();
        for code in 0..b.pow(a as u32) {
            let f: Vec<Element> = (0..a).map(|x| (code / b.pow(x as u32)) % b).collect();
            let ok = f[m.zero()] == n.zero()
                && (0..a).all(|x| (0..a).all(|y| f[m.add(x, y)] == n.add(f[x], f[y])))
                && m.ring()
                    .elements()
                    .all(|r| (0..a).all(|x| f[m.act(r, x)] == n.act(r, f[x])));
            if ok {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn homs_match_naive_filter() {
        let e = build_e_m(&FiniteSemilattice::chain(3));
        let r = e.as_hemiring();
        let regular = FiniteLeftSemimodule::regular(r);
        for i in minimal_left_ideals(r).unwrap() {
            let m = left_ideal_semimodule(r, &i).unwrap();
            let found: Vec<Vec<Element>> = hom_semimodules(&m, &regular)
                .unwrap()
                .into_iter()
                .map(|h| h.map)
                .collect();
            assert_eq!(found, naive_homs(&m, &regular));
        }
    }

    #[test]
    fn regular_boolean_module() {
        let b = boolean_b();
        let reg = FiniteLeftSemimodule::regular(&b);
        let end = end_semiring(&reg).unwrap();
        assert!(end.hemiring.revalidate().is_ok());
        assert!(is_isomorphic(&end.hemiring, &b).is_some());
        assert!(is_generator(&b, &reg).unwrap());
        let zero = FiniteLeftSemimodule::zero_module(&b);
        assert_eq!(hom_semimodules(&zero, &reg).unwrap().len(), 1);
        assert!(trace_ideal(&b, &zero).unwrap().is_zero(&b));
    }

    #[test]
    fn invalid_action_is_rejected() {
        let b = boolean_b();
        // 1·m = 0 breaks unitality
        let err = FiniteLeftSemimodule::new(
            &b,
            OpTable::from_fn(2, |x, y| x | y),
            0,
            alloc::vec![0, 0, 0, 0],
        );
        assert!(err.is_err());
    }

    #[test]
    fn column_ideal_of_boolean_matrices() {
        let m = matrix_semiring(&boolean_b(), 2).unwrap();
        let r = m.as_hemiring();
        let e11 = m.unit(0, 0).unwrap();
        let column = generated_ideal(r, &[e11], Side::Left);
        assert_eq!(column.len(), 4);
        let module = left_ideal_semimodule(r, &column).unwrap();
        let d = end_semiring(&module).unwrap();
        assert!(is_isomorphic(&d.hemiring, &boolean_b()).is_some());
        let report = double_centralizer_check(r, &column).unwrap();
        assert!(report.ring_simple && report.is_homomorphism && report.iso);

        let minimal = minimal_left_ideals(r).unwrap();
        assert!(minimal.iter().any(|i| i.mask() == column.mask()));
        let e22 = m.unit(1, 1).unwrap();
        let other = generated_ideal(r, &[e22], Side::Left);
        assert!(minimal.iter().any(|i| i.mask() == other.mask()));
        assert!(idempotent_generated(r, &column).is_some());
    }

    #[test]
    fn boolean_double_centralizer() {
        let b = boolean_b();
        let report = double_centralizer_check(&b, &IdealSubset::whole(2, Side::Left)).unwrap();
        assert!(report.iso);
        assert_eq!(report.natural_map.map, alloc::vec![0, 1]);
    }

    #[test]
    fn zero_multiplication_has_no_generating_idempotent() {
        let two = two_zero_mult();
        let minimal = minimal_left_ideals(&two).unwrap();
        assert_eq!(minimal.len(), 1);
        assert!(minimal[0].is_whole());
        assert_eq!(idempotent_generated(&two, &minimal[0]), None);
    }

    #[test]
    fn e_c3_minimal_ideals_have_iso_natural_maps() {
        let e = build_e_m(&FiniteSemilattice::chain(3));
        let r = e.as_hemiring();
        let mut checked = 0;
        for i in minimal_left_ideals(r).unwrap() {
            if idempotent_generated(r, &i).is_some() {
                let report = double_centralizer_check(r, &i).unwrap();
                assert!(report.iso && report.is_homomorphism);
                assert!(is_generator(r, &left_ideal_semimodule(r, &i).unwrap()).unwrap());
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}
