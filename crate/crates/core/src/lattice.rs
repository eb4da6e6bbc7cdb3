//! Finite semilattices with zero, their lattices of meets, the maps
//! `e_{a,b}`, and the endomorphism semiring `E_M` with its subhemiring `F_M`.

use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::hemiring::{Axiom, FiniteHemiring};
use crate::ideal::{additive_closure, IdealSubset, Side};
use crate::search::MapSearch;
use crate::table::{index_of, Element, OpTable, PartialOrder};

/// A finite idempotent commutative monoid `(M, ∨, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSemilattice {
    join: OpTable,
    zero: Element,
}

/// First semilattice law that fails, with a witness triple.
pub fn semilattice_violation(join: &OpTable, zero: Element) -> Option<(Axiom, [Element; 3])> {
    let n = join.order();
    if zero >= n {
        return Some((Axiom::AdditiveIdentity, [zero, zero, zero]));
    }
    let j = |a, b| join.get(a, b);
    if let Some(a) = (0..n).find(|&a| j(a, a) != a) {
        return Some((Axiom::AdditiveIdempotency, [a, a, a]));
    }
    for a in 0..n {
        for b in 0..n {
            if j(a, b) != j(b, a) {
                return Some((Axiom::AdditiveCommutativity, [a, b, b]));
            }
            for c in 0..n {
                if j(j(a, b), c) != j(a, j(b, c)) {
                    return Some((Axiom::AdditiveAssociativity, [a, b, c]));
                }
            }
        }
    }
    (0..n)
        .find(|&a| j(zero, a) != a)
        .map(|a| (Axiom::AdditiveIdentity, [zero, a, a]))
}

/// Whether `join` is associative, commutative and idempotent with `zero`
/// neutral.
pub fn is_semilattice(join: &OpTable, zero: Element) -> bool {
    semilattice_violation(join, zero).is_none()
}

impl FiniteSemilattice {
    /// Validates and wraps a join table.
    pub fn new(join: OpTable, zero: Element) -> Result<Self> {
        match semilattice_violation(&join, zero) {
            Some((axiom, witness)) => Err(AlgebraError::AxiomViolation { axiom, witness }),
            None => Ok(FiniteSemilattice { join, zero }),
        }
    }

    pub(crate) fn from_parts(join: OpTable, zero: Element) -> Self {
        FiniteSemilattice { join, zero }
    }

    /// Builds a semilattice from an order relation given as `leq(a, b)` on
    /// `0..n`, whose joins must exist.
    pub fn from_order(n: usize, leq: impl Fn(Element, Element) -> bool) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let upper: Vec<Element> = (0..n).filter(|&u| leq(a, u) && leq(b, u)).collect();
                let least = upper
                    .iter()
                    .copied()
                    .find(|&l| upper.iter().all(|&u| leq(l, u)))
                    .ok_or(AlgebraError::NotClosed("missing join"))?;
                entries.push(least);
            }
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|x| leq(z, x)))
            .ok_or(AlgebraError::NotClosed("missing least element"))?;
        Self::new(OpTable::new(n, &entries)?, zero)
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        FiniteSemilattice {
            join: OpTable::from_fn(n, |a, b| a.max(b)),
            zero: 0,
        }
    }

    /// The diamond: zero, three pairwise incomparable atoms `1, 2, 3`, top `4`.
    pub fn diamond() -> Self {
        Self::from_order(5, |a, b| a == b || a == 0 || b == 4).expect("diamond is a lattice")
    }

    /// The pentagon: `0 < 1 < 2 < 4` and `0 < 3 < 4` with `3` incomparable
    /// to `1, 2`.
    pub fn pentagon() -> Self {
        Self::from_order(5, |a, b| a == b || a == 0 || b == 4 || (a == 1 && b == 2))
            .expect("pentagon is a lattice")
    }

    /// Subsets of a `k`-element set under union, indexed by bitmask.
    pub fn boolean(k: u32) -> Self {
        FiniteSemilattice {
            join: OpTable::from_fn(1 << k, |a, b| a | b),
            zero: 0,
        }
    }

    /// Carrier size.
    pub fn order(&self) -> usize {
        self.join.order()
    }

    /// The zero (least element).
    pub fn zero(&self) -> Element {
        self.zero
    }

    /// `a ∨ b`.
    #[inline]
    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join.get(a, b)
    }

    /// The join table.
    pub fn join_table(&self) -> &OpTable {
        &self.join
    }

    /// All elements.
    pub fn elements(&self) -> core::ops::Range<Element> {
        0..self.order()
    }

    /// `a <= b` iff `a ∨ b = b`.
    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.join(a, b) == b
    }

    /// The induced partial order.
    pub fn induced_order(&self) -> PartialOrder {
        PartialOrder::from_join(&self.join).expect("validated semilattice")
    }

    /// Join of all elements.
    pub fn top(&self) -> Element {
        self.elements().fold(self.zero, |acc, x| self.join(acc, x))
    }

    /// Join of a set of elements (zero for the empty set).
    pub fn join_all(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter().fold(self.zero, |acc, x| self.join(acc, x))
    }

    /// Relabels along `perm` (old index to new index).
    pub fn permuted(&self, perm: &[Element]) -> Self {
        FiniteSemilattice {
            join: self.join.permuted(perm),
            zero: perm[self.zero],
        }
    }

    /// Whether `f` preserves zero and joins.
    pub fn is_endomorphism(&self, f: &[Element]) -> bool {
        f.len() == self.order()
            && f[self.zero] == self.zero
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| f[self.join(a, b)] == self.join(f[a], f[b]))
            })
    }

    /// Whether `f` is monotone for the induced order.
    pub fn is_monotone(&self, f: &[Element]) -> bool {
        self.elements().all(|a| {
            self.elements()
                .all(|b| !self.leq(a, b) || self.leq(f[a], f[b]))
        })
    }
}

/// A semilattice whose induced order also has all binary meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    base: FiniteSemilattice,
    meet: OpTable,
}

/// Adds meets to `m` when every pair has a greatest lower bound.
pub fn try_lattice(m: &FiniteSemilattice) -> Option<FiniteLattice> {
    let order = m.induced_order();
    let n = m.order();
    let mut entries = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            entries.push(order.meet(a, b)?);
        }
    }
    Some(FiniteLattice {
        base: m.clone(),
        meet: OpTable::new(n, &entries).expect("meets are elements"),
    })
}

impl FiniteLattice {
    /// The join semilattice.
    pub fn base(&self) -> &FiniteSemilattice {
        &self.base
    }

    /// `a ∧ b`.
    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet.get(a, b)
    }

    /// A triple with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_witness(&self) -> Option<[Element; 3]> {
        let m = &self.base;
        for x in m.elements() {
            for y in m.elements() {
                for z in m.elements() {
                    let lhs = self.meet(x, m.join(y, z));
                    let rhs = m.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Meet distributes over join.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Absorption: `a ∧ (a ∨ b) = a = a ∨ (a ∧ b)`.
    pub fn satisfies_absorption(&self) -> bool {
        let m = &self.base;
        m.elements().all(|a| {
            m.elements()
                .all(|b| self.meet(a, m.join(a, b)) == a && m.join(a, self.meet(a, b)) == a)
        })
    }
}

/// Whether `m` is a distributive lattice.
pub fn is_distributive_lattice(m: &FiniteSemilattice) -> bool {
    try_lattice(m).is_some_and(|l| l.is_distributive())
}

/// A zero- and join-preserving self-map of a semilattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endo(Vec<Element>);

impl Endo {
    /// Wraps a map after checking the endomorphism laws.
    pub fn new(m: &FiniteSemilattice, map: Vec<Element>) -> Result<Self> {
        if !m.is_endomorphism(&map) {
            return Err(AlgebraError::NotClosed(
                "map does not preserve zero and joins",
            ));
        }
        Ok(Endo(map))
    }

    /// Image of `x`.
    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.0[x]
    }

    /// The map as a slice.
    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endo) -> Endo {
        Endo(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// Pointwise join.
    pub fn join(&self, other: &Endo, m: &FiniteSemilattice) -> Endo {
        Endo(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| m.join(a, b))
                .collect(),
        )
    }
}

/// `e_{a,b}(x) = 0` if `x ∨ a = a`, and `b` otherwise.
pub fn e_ab(m: &FiniteSemilattice, a: Element, b: Element) -> Endo {
    Endo(
        m.elements()
            .map(|x| if m.join(x, a) == a { m.zero() } else { b })
            .collect(),
    )
}

/// Every endomorphism of `m`, sorted by map vector.
pub fn endo_enumerate(m: &FiniteSemilattice) -> Vec<Endo> {
    let mut out = Vec::new();
    MapSearch::new(m.order(), m.order())
        .preserve(m.join_table(), m.join_table())
        .fix(m.zero(), m.zero())
        .for_each(|f| {
            out.push(Endo(f.to_vec()));
            true
        });
    out.sort();
    out
}

/// `E_M`: the endomorphisms of a semilattice under pointwise join and
/// composition `(fg)(x) = f(g(x))`.
#[derive(Clone, Debug)]
pub struct EndoSemiring {
    semilattice: FiniteSemilattice,
    carrier: Vec<Endo>,
    hemiring: FiniteHemiring,
}

/// Builds `E_M`. Carrier indices follow the sorted map vectors.
pub fn build_e_m(m: &FiniteSemilattice) -> EndoSemiring {
    let carrier = endo_enumerate(m);
    let index = |f: &Endo| {
        carrier
            .binary_search(f)
            .expect("closed under the operations")
    };
    let k = carrier.len();
    let add = OpTable::from_fn(k, |f, g| index(&carrier[f].join(&carrier[g], m)));
    let mul = OpTable::from_fn(k, |f, g| index(&carrier[f].compose(&carrier[g])));
    let zero = index(&Endo(alloc::vec![m.zero(); m.order()]));
    let one = index(&Endo(m.elements().collect()));
    EndoSemiring {
        semilattice: m.clone(),
        hemiring: FiniteHemiring::from_parts(add, mul, zero, Some(one)),
        carrier,
    }
}

impl EndoSemiring {
    /// The underlying semilattice.
    pub fn semilattice(&self) -> &FiniteSemilattice {
        &self.semilattice
    }

    /// Endomorphisms by carrier index.
    pub fn carrier(&self) -> &[Endo] {
        &self.carrier
    }

    /// The semiring tables.
    pub fn as_hemiring(&self) -> &FiniteHemiring {
        &self.hemiring
    }

    /// Carrier index of `f`.
    pub fn index_of(&self, f: &Endo) -> Option<Element> {
        self.carrier.binary_search(f).ok()
    }

    /// Carrier index of `e_{a,b}`.
    pub fn e_index(&self, a: Element, b: Element) -> Element {
        self.index_of(&e_ab(&self.semilattice, a, b))
            .expect("e_{a,b} is an endomorphism")
    }

    /// Distinct carrier indices of all `e_{a,b}`, sorted.
    pub fn generator_indices(&self) -> Vec<Element> {
        let m = &self.semilattice;
        let mut gens: Vec<Element> = m
            .elements()
            .flat_map(|a| m.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.e_index(a, b))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }
}

/// A subhemiring of `E_M`, as sorted carrier indices plus its own tables.
#[derive(Clone, Debug)]
pub struct EndoSubhemiring {
    members: Vec<Element>,
    hemiring: FiniteHemiring,
}

impl EndoSubhemiring {
    /// Wraps a subset of `E_M` closed under both operations.
    pub fn new(e: &EndoSemiring, mut members: Vec<Element>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let hemiring = e.as_hemiring().subhemiring(&members)?;
        Ok(EndoSubhemiring { members, hemiring })
    }

    /// `E_M` indices of the members.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    /// Tables of the subhemiring, indexed by position in `members`.
    pub fn as_hemiring(&self) -> &FiniteHemiring {
        &self.hemiring
    }

    /// Membership in `E_M` coordinates.
    pub fn as_subset(&self, e: &EndoSemiring) -> IdealSubset {
        IdealSubset::from_elements(e.as_hemiring().order(), &self.members, Side::TwoSided)
    }

    /// Whether every member of `E_M` lies here.
    pub fn is_everything(&self, e: &EndoSemiring) -> bool {
        self.members.len() == e.carrier().len()
    }
}

/// `F_M`: the additive closure of all `e_{a,b}` inside `E_M`.
pub fn build_f_m(e: &EndoSemiring) -> EndoSubhemiring {
    let mask = additive_closure(e.as_hemiring(), e.generator_indices());
    let members: Vec<Element> = (0..mask.len()).filter(|&i| mask[i]).collect();
    EndoSubhemiring::new(e, members).expect("F_M is an ideal of E_M, hence closed")
}

/// For `e_{a,b} ∘ f = e_{c,b}`: returns `c`, the join of `{x : f(x) <= a}`.
pub fn left_absorption_point(m: &FiniteSemilattice, a: Element, f: &Endo) -> Element {
    let c = m.join_all(m.elements().filter(|&x| m.leq(f.apply(x), a)));
    debug_assert!(m
        .elements()
        .all(|b| e_ab(m, a, b).compose(f) == e_ab(m, c, b)));
    c
}

/// Whether a subset of `E_M` contains every `e_{a,b}`.
pub fn is_dense(e: &EndoSemiring, members: &[bool]) -> bool {
    e.generator_indices().into_iter().all(|g| members[g])
}

/// `(R, +, 0)` as a semilattice, for additively idempotent `r`.
pub fn additive_reduct(r: &FiniteHemiring) -> Result<FiniteSemilattice> {
    FiniteSemilattice::new(r.add_table().clone(), r.zero())
}

/// Subset test helper used by callers that hold `E_M` indices.
pub fn mask_of(e: &EndoSemiring, members: &[Element]) -> Vec<bool> {
    index_of(e.carrier().len(), members)
        .into_iter()
        .map(|p| p.is_some())
        .collect()
}
