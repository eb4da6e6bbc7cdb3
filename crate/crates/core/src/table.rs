//! Dense operation tables and partial orders over `0..order`.

use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};

/// An element of a finite carrier, identified by its index.
pub type Element = usize;

/// Largest carrier the packed `u16` layout can hold.
pub const MAX_ORDER: usize = u16::MAX as usize;

/// A binary operation on `0..order`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpTable {
    order: usize,
    entries: Vec<u16>,
}

impl OpTable {
    /// Builds a table from a row-major entry list, checking every index.
    pub fn new(order: usize, entries: &[usize]) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(AlgebraError::InvalidOrder(order));
        }
        if entries.len() != order * order {
            return Err(AlgebraError::DimensionMismatch {
                expected: order * order,
                found: entries.len(),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= order) {
            return Err(AlgebraError::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        Ok(OpTable {
            order,
            entries: entries.iter().map(|&e| e as u16).collect(),
        })
    }

    /// Builds a table from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        let mut flat = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(AlgebraError::DimensionMismatch {
                    expected: order,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::new(order, &flat)
    }

    /// Tabulates `op` over all pairs.
    ///
    /// Panics if `op` returns an index outside `0..order`; callers use it for
    /// operations that are closed by construction.
    pub fn from_fn(order: usize, mut op: impl FnMut(Element, Element) -> Element) -> Self {
        assert!(order > 0 && order <= MAX_ORDER, "order {order} unsupported");
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = op(a, b);
                assert!(v < order, "table entry {v} out of range {order}");
                entries.push(v as u16);
            }
        }
        OpTable { order, entries }
    }

    /// Carrier size.
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// `a op b`.
    #[inline]
    pub fn get(&self, a: Element, b: Element) -> Element {
        self.entries[a * self.order + b] as usize
    }

    /// Row `a` as element indices.
    pub fn row(&self, a: Element) -> impl Iterator<Item = Element> + '_ {
        self.entries[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&e| e as usize)
    }

    /// Row-major entries.
    pub fn entries(&self) -> impl Iterator<Item = Element> + '_ {
        self.entries.iter().map(|&e| e as usize)
    }

    /// Relabels the carrier along `perm` (old index to new index).
    pub fn permuted(&self, perm: &[Element]) -> OpTable {
        debug_assert_eq!(perm.len(), self.order);
        let n = self.order;
        let mut entries = alloc::vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[perm[a] * n + perm[b]] = perm[self.get(a, b)] as u16;
            }
        }
        OpTable { order: n, entries }
    }

    /// Restricts the table to `members` (sorted, closed under the operation);
    /// the result is indexed by position in `members`.
    pub fn restricted(&self, members: &[Element]) -> Result<OpTable> {
        let position = index_of(self.order, members);
        let k = members.len();
        let mut entries = Vec::with_capacity(k * k);
        for &a in members {
            for &b in members {
                match position[self.get(a, b)] {
                    Some(p) => entries.push(p),
                    None => return Err(AlgebraError::NotClosed("restricted table")),
                }
            }
        }
        OpTable::new(k, &entries)
    }

    /// Whether `a op b == b op a` for all pairs.
    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.get(a, b) == self.get(b, a)))
    }
}

/// Inverse lookup for a subset: `position[x] = Some(i)` iff `members[i] == x`.
pub(crate) fn index_of(order: usize, members: &[Element]) -> Vec<Option<usize>> {
    let mut position = alloc::vec![None; order];
    for (i, &m) in members.iter().enumerate() {
        position[m] = Some(i);
    }
    position
}

/// A partial order on `0..order` stored as a boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    order: usize,
    leq: Vec<bool>,
}

impl PartialOrder {
    /// Wraps a relation after checking reflexivity, antisymmetry and
    /// transitivity. On failure returns the offending triple.
    pub fn new(order: usize, leq: Vec<bool>) -> core::result::Result<Self, [Element; 3]> {
        assert_eq!(leq.len(), order * order);
        let po = PartialOrder { order, leq };
        for a in 0..order {
            if !po.leq(a, a) {
                return Err([a, a, a]);
            }
            for b in 0..order {
                if a != b && po.leq(a, b) && po.leq(b, a) {
                    return Err([a, b, a]);
                }
                if !po.leq(a, b) {
                    continue;
                }
                for c in 0..order {
                    if po.leq(b, c) && !po.leq(a, c) {
                        return Err([a, b, c]);
                    }
                }
            }
        }
        Ok(po)
    }

    /// The order `a <= b` iff `a join b == b` induced by an idempotent table.
    pub(crate) fn from_join(join: &OpTable) -> core::result::Result<Self, [Element; 3]> {
        let n = join.order();
        let leq = (0..n * n)
            .map(|i| join.get(i / n, i % n) == i % n)
            .collect();
        Self::new(n, leq)
    }

    /// Carrier size.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `a <= b`.
    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a * self.order + b]
    }

    /// Whether every pair is comparable.
    pub fn is_total(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// The greatest element, if any.
    pub fn top(&self) -> Option<Element> {
        (0..self.order).find(|&t| (0..self.order).all(|x| self.leq(x, t)))
    }

    /// The least element, if any.
    pub fn bottom(&self) -> Option<Element> {
        (0..self.order).find(|&b| (0..self.order).all(|x| self.leq(b, x)))
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: Element, b: Element) -> Option<Element> {
        let lower: Vec<Element> = (0..self.order)
            .filter(|&x| self.leq(x, a) && self.leq(x, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&x| self.leq(x, g)))
    }

    /// `(|down-set|, |up-set|)` per element; an isomorphism invariant.
    pub fn rank_profile(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .map(|x| {
                let down = (0..self.order).filter(|&y| self.leq(y, x)).count();
                let up = (0..self.order).filter(|&y| self.leq(x, y)).count();
                (down, up)
            })
            .collect()
    }
}
