//! The table-backed hemiring type, axiom validation and structural predicates.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{AlgebraError, Result};
use crate::table::{index_of, Element, OpTable, PartialOrder};

/// The laws checked by [`check_hemiring_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `(a + b) + c = a + (b + c)`
    AdditiveAssociativity,
    /// `a + b = b + a`
    AdditiveCommutativity,
    /// `0 + a = a`
    AdditiveIdentity,
    /// `(ab)c = a(bc)`
    MultiplicativeAssociativity,
    /// `a(b + c) = ab + ac`
    LeftDistributivity,
    /// `(a + b)c = ac + bc`
    RightDistributivity,
    /// `0a = 0 = a0`
    ZeroAbsorbing,
    /// `1a = a = a1`
    MultiplicativeIdentity,
    /// `a + a = a`; checked for semilattices only.
    AdditiveIdempotency,
}

impl Axiom {
    /// Stable snake-case name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveAssociativity => "additive_associativity",
            Axiom::AdditiveCommutativity => "additive_commutativity",
            Axiom::AdditiveIdentity => "additive_identity",
            Axiom::MultiplicativeAssociativity => "multiplicative_associativity",
            Axiom::LeftDistributivity => "left_distributivity",
            Axiom::RightDistributivity => "right_distributivity",
            Axiom::ZeroAbsorbing => "zero_absorbing",
            Axiom::MultiplicativeIdentity => "multiplicative_identity",
            Axiom::AdditiveIdempotency => "additive_idempotency",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of every axiom check, with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// One entry per checked law; `None` means the law holds.
    pub checks: Vec<(Axiom, Option<[Element; 3]>)>,
}

impl AxiomReport {
    /// Whether every law holds.
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|(_, w)| w.is_none())
    }

    /// First failing law and its witness.
    pub fn first_failure(&self) -> Option<(Axiom, [Element; 3])> {
        self.checks
            .iter()
            .find_map(|&(axiom, w)| w.map(|w| (axiom, w)))
    }
}

fn find_triple(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<[Element; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn find_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<[Element; 3]> {
    find_triple(n, |a, b, c| c == 0 && bad(a, b)).map(|[a, b, _]| [a, b, b])
}

/// Checks the hemiring laws on a pair of tables, plus the identity law when
/// `one` is given.
///
/// Witnesses are triples `(a, b, c)`; laws with fewer variables repeat the
/// last one.
pub fn check_hemiring_axioms(
    add: &OpTable,
    mul: &OpTable,
    zero: Element,
    one: Option<Element>,
) -> Result<AxiomReport> {
    let n = add.order();
    if mul.order() != n {
        return Err(AlgebraError::DimensionMismatch {
            expected: n,
            found: mul.order(),
        });
    }
    for e in core::iter::once(zero).chain(one) {
        if e >= n {
            return Err(AlgebraError::ElementOutOfRange {
                element: e,
                order: n,
            });
        }
    }
    let s = |a, b| add.get(a, b);
    let p = |a, b| mul.get(a, b);
    let mut checks = Vec::with_capacity(8);
    checks.push((
        Axiom::AdditiveAssociativity,
        find_triple(n, |a, b, c| s(s(a, b), c) != s(a, s(b, c))),
    ));
    checks.push((
        Axiom::AdditiveCommutativity,
        find_pair(n, |a, b| s(a, b) != s(b, a)),
    ));
    checks.push((
        Axiom::AdditiveIdentity,
        (0..n)
            .find(|&a| s(zero, a) != a || s(a, zero) != a)
            .map(|a| [zero, a, a]),
    ));
    checks.push((
        Axiom::MultiplicativeAssociativity,
        find_triple(n, |a, b, c| p(p(a, b), c) != p(a, p(b, c))),
    ));
    checks.push((
        Axiom::LeftDistributivity,
        find_triple(n, |a, b, c| p(a, s(b, c)) != s(p(a, b), p(a, c))),
    ));
    checks.push((
        Axiom::RightDistributivity,
        find_triple(n, |a, b, c| p(s(a, b), c) != s(p(a, c), p(b, c))),
    ));
    checks.push((
        Axiom::ZeroAbsorbing,
        (0..n)
            .find(|&a| p(zero, a) != zero || p(a, zero) != zero)
            .map(|a| [zero, a, a]),
    ));
    if let Some(one) = one {
        checks.push((
            Axiom::MultiplicativeIdentity,
            (0..n)
                .find(|&a| p(one, a) != a || p(a, one) != a)
                .map(|a| [one, a, a]),
        ));
    }
    Ok(AxiomReport { checks })
}

/// A finite hemiring; a semiring when `one` is present.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteHemiring {
    add: OpTable,
    mul: OpTable,
    zero: Element,
    one: Option<Element>,
}

impl FiniteHemiring {
    /// Validates the tables and builds the algebra.
    pub fn new(add: OpTable, mul: OpTable, zero: Element, one: Option<Element>) -> Result<Self> {
        let report = check_hemiring_axioms(&add, &mul, zero, one)?;
        if let Some((axiom, witness)) = report.first_failure() {
            return Err(AlgebraError::AxiomViolation { axiom, witness });
        }
        Ok(FiniteHemiring {
            add,
            mul,
            zero,
            one,
        })
    }

    /// Validates the tables and records the multiplicative identity if the
    /// table has one.
    pub fn with_detected_identity(add: OpTable, mul: OpTable, zero: Element) -> Result<Self> {
        let mut r = Self::new(add, mul, zero, None)?;
        r.one = r.find_identity();
        Ok(r)
    }

    /// Skips validation; for builders whose tables are correct by construction
    /// and re-validated in tests.
    pub(crate) fn from_parts(
        add: OpTable,
        mul: OpTable,
        zero: Element,
        one: Option<Element>,
    ) -> Self {
        debug_assert_eq!(add.order(), mul.order());
        FiniteHemiring {
            add,
            mul,
            zero,
            one,
        }
    }

    /// Re-runs the axiom checks on this value.
    pub fn revalidate(&self) -> AxiomReport {
        check_hemiring_axioms(&self.add, &self.mul, self.zero, self.one)
            .expect("tables share an order by construction")
    }

    /// Carrier size.
    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    /// Additive identity.
    #[inline]
    pub fn zero(&self) -> Element {
        self.zero
    }

    /// Multiplicative identity, if recorded.
    #[inline]
    pub fn one(&self) -> Option<Element> {
        self.one
    }

    /// `a + b`.
    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add.get(a, b)
    }

    /// `a * b`.
    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul.get(a, b)
    }

    /// The addition table.
    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    /// The multiplication table.
    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    /// All elements.
    pub fn elements(&self) -> core::ops::Range<Element> {
        0..self.order()
    }

    /// Whether a multiplicative identity is recorded.
    pub fn is_semiring(&self) -> bool {
        self.one.is_some()
    }

    /// Searches the multiplication table for a two-sided identity.
    pub fn find_identity(&self) -> Option<Element> {
        self.elements().find(|&e| {
            self.elements()
                .all(|a| self.mul(e, a) == a && self.mul(a, e) == a)
        })
    }

    /// Same tables with the identity dropped (the hemiring reduct).
    pub fn forget_identity(&self) -> Self {
        FiniteHemiring {
            one: None,
            ..self.clone()
        }
    }

    /// Relabels the carrier along `perm` (old index to new index).
    pub fn permuted(&self, perm: &[Element]) -> Self {
        FiniteHemiring {
            add: self.add.permuted(perm),
            mul: self.mul.permuted(perm),
            zero: perm[self.zero],
            one: self.one.map(|o| perm[o]),
        }
    }

    /// The subhemiring on `members` (sorted, containing zero, closed under
    /// both operations), reindexed by position. The identity is kept when it
    /// is a member.
    pub fn subhemiring(&self, members: &[Element]) -> Result<Self> {
        let position = index_of(self.order(), members);
        let zero =
            position[self.zero].ok_or(AlgebraError::NotClosed("subhemiring must contain zero"))?;
        let add = self.add.restricted(members)?;
        let mul = self.mul.restricted(members)?;
        let one = self.one.and_then(|o| position[o]);
        Ok(FiniteHemiring {
            add,
            mul,
            zero,
            one,
        })
    }

    /// `x + x = x` for all `x`.
    pub fn is_additively_idempotent(&self) -> bool {
        self.elements().all(|x| self.add(x, x) == x)
    }

    /// The order `r <= s` iff `r + s = s`; defined only for additively
    /// idempotent algebras.
    pub fn natural_order(&self) -> Result<PartialOrder> {
        if let Some(x) = self.elements().find(|&x| self.add(x, x) != x) {
            return Err(AlgebraError::NotAdditivelyIdempotent(x));
        }
        PartialOrder::from_join(&self.add).map_err(|w| AlgebraError::AxiomViolation {
            axiom: Axiom::AdditiveAssociativity,
            witness: w,
        })
    }

    /// The additively absorbing element, if one exists.
    pub fn infinite_element(&self) -> Option<Element> {
        self.elements()
            .find(|&x| self.elements().all(|y| self.add(y, x) == x))
    }

    /// `x + y = 0` implies `x = y = 0`.
    pub fn is_zerosumfree(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .all(|y| self.add(x, y) != self.zero || (x == self.zero && y == self.zero))
        })
    }

    /// `ab = 1` implies `ba = 1`; vacuous without an identity.
    pub fn is_dedekind_finite(&self) -> bool {
        let Some(one) = self.one else { return true };
        self.elements().all(|a| {
            self.elements()
                .all(|b| self.mul(a, b) != one || self.mul(b, a) == one)
        })
    }

    /// Two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: Element) -> Option<Element> {
        let one = self.one?;
        self.elements()
            .find(|&b| self.mul(a, b) == one && self.mul(b, a) == one)
    }

    /// Every nonzero element has a two-sided inverse.
    pub fn is_division_semiring(&self) -> Result<bool> {
        if self.one.is_none() {
            return Err(AlgebraError::MissingIdentity);
        }
        Ok(self
            .elements()
            .filter(|&a| a != self.zero)
            .all(|a| self.inverse(a).is_some()))
    }

    /// Additively idempotent with a total natural order.
    pub fn is_aic(&self) -> bool {
        self.natural_order().map(|o| o.is_total()).unwrap_or(false)
    }

    /// Additively idempotent, the natural order has all binary meets, and
    /// `ab <= a meet b` for all `a, b`.
    pub fn is_lattice_ordered(&self) -> bool {
        let Ok(order) = self.natural_order() else {
            return false;
        };
        for a in self.elements() {
            for b in self.elements() {
                match order.meet(a, b) {
                    Some(m) if order.leq(self.mul(a, b), m) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Commutative multiplication.
    pub fn is_commutative(&self) -> bool {
        self.mul.is_commutative()
    }

    /// The additive monoid is a group.
    pub fn is_ring(&self) -> bool {
        self.elements()
            .all(|x| self.elements().any(|y| self.add(x, y) == self.zero))
    }

    /// Not a ring.
    pub fn is_proper(&self) -> bool {
        !self.is_ring()
    }

    /// `xy = 0` for all `x, y`.
    pub fn has_zero_multiplication(&self) -> bool {
        self.mul.entries().all(|e| e == self.zero)
    }

    /// Elements with `ee = e`, in index order.
    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Number of additively idempotent elements.
    pub fn additive_idempotent_count(&self) -> usize {
        self.elements().filter(|&x| self.add(x, x) == x).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean_b, integers_mod, two_zero_mult};
    use alloc::vec;

    #[test]
    fn boolean_semifield_passes_every_axiom() {
        let b = boolean_b();
        let report = check_hemiring_axioms(b.add_table(), b.mul_table(), 0, Some(1)).unwrap();
        assert!(report.is_ok());
        assert_eq!(report.checks.len(), 8);
    }

    #[test]
    fn zero_multiplication_hemiring_has_no_identity() {
        let two = two_zero_mult();
        assert!(two.revalidate().is_ok());
        assert_eq!(two.find_identity(), None);
        let err = FiniteHemiring::new(two.add_table().clone(), two.mul_table().clone(), 0, Some(1));
        assert!(matches!(
            err,
            Err(AlgebraError::AxiomViolation {
                axiom: Axiom::MultiplicativeIdentity,
                ..
            })
        ));
    }

    #[test]
    fn non_commutative_addition_reports_witness() {
        let add = OpTable::from_rows(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        let mul = OpTable::from_fn(3, |_, _| 0);
        let report = check_hemiring_axioms(&add, &mul, 0, None).unwrap();
        assert_eq!(
            report.checks[1],
            (Axiom::AdditiveCommutativity, Some([1, 2, 2]))
        );
        let mismatch = check_hemiring_axioms(&add, &OpTable::from_fn(2, |_, _| 0), 0, None);
        assert!(matches!(
            mismatch,
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn boolean_predicates() {
        let b = boolean_b();
        assert!(b.is_additively_idempotent());
        assert_eq!(b.infinite_element(), Some(1));
        assert!(b.is_zerosumfree());
        assert_eq!(b.is_division_semiring(), Ok(true));
        assert!(b.is_aic());
        assert!(b.is_lattice_ordered());
        let order = b.natural_order().unwrap();
        assert!(order.leq(0, 1) && !order.leq(1, 0));
    }

    #[test]
    fn two_element_field_is_not_idempotent() {
        let z2 = integers_mod(2);
        assert!(!z2.is_additively_idempotent());
        assert_eq!(
            z2.natural_order(),
            Err(AlgebraError::NotAdditivelyIdempotent(1))
        );
        assert_eq!(z2.infinite_element(), None);
        assert!(!z2.is_zerosumfree());
        assert!(z2.is_ring());
        assert_eq!(z2.is_division_semiring(), Ok(true));
        assert_eq!(
            two_zero_mult().is_division_semiring(),
            Err(AlgebraError::MissingIdentity)
        );
    }

    #[test]
    fn subhemiring_keeps_identity_when_member() {
        let z4 = integers_mod(4);
        let even = z4.subhemiring(&[0, 2]).unwrap();
        assert_eq!(even.order(), 2);
        assert_eq!(even.one(), None);
        assert!(even.has_zero_multiplication());
        assert!(z4.subhemiring(&[0, 1]).is_err());
    }
}
