//! Congruences as normalized partitions, principal-congruence closure and the
//! congruence-simpleness decider.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{guard, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::ideal::{IdealSubset, Side};
use crate::lattice::EndoSemiring;
use crate::table::{Element, OpTable};
use crate::unionfind::UnionFind;

/// Default carrier bound for [`all_congruences`].
pub const DEFAULT_CONGRUENCE_LIMIT: usize = 40;

/// An equivalence relation on `0..order`, stored as block ids numbered by
/// first occurrence so that equal relations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    blocks: Vec<usize>,
}

impl Congruence {
    /// Normalizes an arbitrary block assignment.
    pub fn from_blocks(raw: &[usize]) -> Self {
        let mut label = alloc::collections::BTreeMap::new();
        let blocks = raw
            .iter()
            .map(|b| {
                let next = label.len();
                *label.entry(*b).or_insert(next)
            })
            .collect();
        Congruence { blocks }
    }

    /// The equality relation.
    pub fn diagonal(order: usize) -> Self {
        Congruence {
            blocks: (0..order).collect(),
        }
    }

    /// The all relation.
    pub fn universal(order: usize) -> Self {
        Congruence {
            blocks: alloc::vec![0; order],
        }
    }

    fn from_union_find(mut uf: UnionFind) -> Self {
        Congruence {
            blocks: uf.blocks(),
        }
    }

    /// Carrier size.
    pub fn order(&self) -> usize {
        self.blocks.len()
    }

    /// Block id of `x`.
    pub fn block(&self, x: Element) -> usize {
        self.blocks[x]
    }

    /// Block id per element.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Whether `a` and `b` are related.
    pub fn related(&self, a: Element, b: Element) -> bool {
        self.blocks[a] == self.blocks[b]
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    /// Equality relation?
    pub fn is_diagonal(&self) -> bool {
        self.block_count() == self.order()
    }

    /// All relation?
    pub fn is_universal(&self) -> bool {
        self.block_count() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let mut image = alloc::vec![usize::MAX; self.block_count()];
        self.blocks.iter().zip(&other.blocks).all(|(&b, &o)| {
            if image[b] == usize::MAX {
                image[b] = o;
            }
            image[b] == o
        })
    }

    /// Smallest equivalence containing both.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let n = self.order();
        let mut uf = UnionFind::new(n);
        let mut first_self = alloc::vec![usize::MAX; n];
        let mut first_other = alloc::vec![usize::MAX; n];
        for x in 0..n {
            for (first, b) in [
                (&mut first_self, self.blocks[x]),
                (&mut first_other, other.blocks[x]),
            ] {
                if first[b] == usize::MAX {
                    first[b] = x;
                } else {
                    uf.union(first[b], x);
                }
            }
        }
        Self::from_union_find(uf)
    }

    /// Intersection.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let raw: Vec<usize> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| a * other.order() + b)
            .collect();
        Congruence::from_blocks(&raw)
    }

    /// Members of each block, blocks in id order.
    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut out = alloc::vec![Vec::new(); self.block_count()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Checks compatibility with both operations; on failure returns a pair
    /// of translates of related elements that are not related.
    pub fn check_compatible(&self, r: &FiniteHemiring) -> Result<()> {
        self.check_compatible_on(r, Side::TwoSided)
    }

    /// Compatibility with addition and with multiplication by arbitrary
    /// elements on the given side (`Left`: `zx ≡ zy`).
    pub fn check_compatible_on(&self, r: &FiniteHemiring, side: Side) -> Result<()> {
        let n = self.order();
        let mut rep = alloc::vec![usize::MAX; self.block_count()];
        let fail = |a: Element, b: Element| Err(AlgebraError::NotCongruence(a, b));
        for x in 0..n {
            let b = self.blocks[x];
            if rep[b] == usize::MAX {
                rep[b] = x;
                continue;
            }
            let y = rep[b];
            for z in 0..n {
                let pairs = [
                    (true, r.add(x, z), r.add(y, z)),
                    (side.left(), r.mul(z, x), r.mul(z, y)),
                    (side.right(), r.mul(x, z), r.mul(y, z)),
                ];
                for (active, u, v) in pairs {
                    if active && !self.related(u, v) {
                        return fail(u, v);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Merges `pending` pairs and all their translates until the partition is a
/// congruence. With `stop_universal`, returns as soon as one block remains.
/// Closes `uf` under the congruence rules. With `universal` given, stops as
/// soon as the relation becomes universal or merges a pair already known to
/// generate the universal congruence; returns whether it did.
fn close(
    r: &FiniteHemiring,
    uf: &mut UnionFind,
    mut pending: Vec<(Element, Element)>,
    universal: Option<&[bool]>,
) -> bool {
    let n = r.order();
    while let Some((x, y)) = pending.pop() {
        if !uf.union(x, y) {
            continue;
        }
        if let Some(known) = universal {
            if uf.components() == 1 || known[x * n + y] {
                return true;
            }
        }
        for c in r.elements() {
            pending.push((r.add(x, c), r.add(y, c)));
            pending.push((r.mul(c, x), r.mul(c, y)));
            pending.push((r.mul(x, c), r.mul(y, c)));
        }
    }
    uf.components() == 1
}

/// Smallest congruence containing every pair in `pairs`.
pub fn generated_congruence(r: &FiniteHemiring, pairs: &[(Element, Element)]) -> Congruence {
    let mut uf = UnionFind::new(r.order());
    close(r, &mut uf, pairs.to_vec(), None);
    Congruence::from_union_find(uf)
}

/// Smallest congruence containing `(a, b)`.
pub fn principal_congruence(r: &FiniteHemiring, a: Element, b: Element) -> Congruence {
    generated_congruence(r, &[(a, b)])
}

/// First pair `a < b` whose principal congruence is proper.
fn first_proper_principal(r: &FiniteHemiring) -> Option<(Element, Element)> {
    let n = r.order();
    let mut known = alloc::vec![false; n * n];
    for a in r.elements() {
        for b in a + 1..n {
            let mut uf = UnionFind::new(n);
            if !close(r, &mut uf, alloc::vec![(a, b)], Some(&known)) {
                return Some((a, b));
            }
            known[a * n + b] = true;
            known[b * n + a] = true;
        }
    }
    None
}

/// Whether the diagonal and the universal relation are the only congruences.
///
/// Any congruence other than the diagonal contains some principal congruence
/// `Θ(a, b)` with `a ≠ b`, so it suffices that all of those are universal.
pub fn is_congruence_simple(r: &FiniteHemiring) -> bool {
    first_proper_principal(r).is_none()
}

/// A pair whose principal congruence is proper, if any.
pub fn nontrivial_congruence_witness(r: &FiniteHemiring) -> Option<(Element, Element, Congruence)> {
    first_proper_principal(r).map(|(a, b)| (a, b, principal_congruence(r, a, b)))
}

/// The full congruence lattice with the default size guard.
pub fn all_congruences(r: &FiniteHemiring) -> Result<Vec<Congruence>> {
    all_congruences_bounded(r, DEFAULT_CONGRUENCE_LIMIT)
}

/// Every congruence, obtained by closing the principal congruences under
/// joins; sorted.
pub fn all_congruences_bounded(r: &FiniteHemiring, limit: usize) -> Result<Vec<Congruence>> {
    guard("carrier for congruence enumeration", r.order(), limit)?;
    let principals: BTreeSet<Congruence> = r
        .elements()
        .flat_map(|a| (a + 1..r.order()).map(move |b| (a, b)))
        .map(|(a, b)| principal_congruence(r, a, b))
        .collect();
    let mut all: BTreeSet<Congruence> = BTreeSet::new();
    all.insert(Congruence::diagonal(r.order()));
    let mut frontier: Vec<Congruence> = all.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for p in &principals {
            let j = c.join(p);
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    Ok(all.into_iter().collect())
}

/// The factor algebra; its identity is the class of the identity.
pub fn quotient(r: &FiniteHemiring, c: &Congruence) -> Result<FiniteHemiring> {
    c.check_compatible(r)?;
    let k = c.block_count();
    let mut rep = alloc::vec![usize::MAX; k];
    for x in r.elements() {
        if rep[c.block(x)] == usize::MAX {
            rep[c.block(x)] = x;
        }
    }
    let add = OpTable::from_fn(k, |a, b| c.block(r.add(rep[a], rep[b])));
    let mul = OpTable::from_fn(k, |a, b| c.block(r.mul(rep[a], rep[b])));
    Ok(FiniteHemiring::from_parts(
        add,
        mul,
        c.block(r.zero()),
        r.one().map(|o| c.block(o)),
    ))
}

/// The Bourne relation of `ideal`: `x ≡ y` iff `x + a = y + b` for some
/// members `a, b`, transitively closed. It is validated against addition and
/// the multiplications on the ideal's side, so one-sided ideals give
/// one-sided congruences.
pub fn bourne_congruence(r: &FiniteHemiring, ideal: &IdealSubset) -> Result<Congruence> {
    let n = r.order();
    // Elements 0..n, sums n..2n; x is linked to every x + a.
    let mut uf = UnionFind::new(2 * n);
    for x in r.elements() {
        for a in ideal.elements() {
            uf.union(x, n + r.add(x, a));
        }
    }
    let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let c = Congruence::from_blocks(&raw);
    c.check_compatible_on(r, ideal.side())?;
    Ok(c)
}

/// The relation `f τ g` iff `f(x) ∨ a = g(x) ∨ a` for all `x` and some fixed
/// `a` of the underlying semilattice, on the carrier of `E_M`.
pub fn tau_congruence(e: &EndoSemiring) -> Result<Congruence> {
    let m = e.semilattice();
    let maps = e.carrier();
    let k = maps.len();
    let related = |f: usize, g: usize| {
        m.elements().any(|a| {
            m.elements()
                .all(|x| m.join(maps[f].apply(x), a) == m.join(maps[g].apply(x), a))
        })
    };
    let mut uf = UnionFind::new(k);
    let mut matrix = alloc::vec![false; k * k];
    for f in 0..k {
        for g in 0..k {
            if related(f, g) {
                matrix[f * k + g] = true;
                uf.union(f, g);
            }
        }
    }
    let c = Congruence::from_union_find(uf);
    // the closure must not have added pairs
    for f in 0..k {
        for g in 0..k {
            if c.related(f, g) && !matrix[f * k + g] {
                return Err(AlgebraError::NotCongruence(f, g));
            }
        }
    }
    c.check_compatible(e.as_hemiring())?;
    Ok(c)
}
