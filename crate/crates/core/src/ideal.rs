//! One- and two-sided ideals, the ideal-simpleness decider, subtractive
//! ideals and the left radical.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::congruence::is_congruence_simple;
use crate::error::{guard, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::table::Element;

/// Default carrier bound for [`all_ideals`].
pub const DEFAULT_IDEAL_LIMIT: usize = 40;
/// Default carrier bound for [`radical_left`].
pub const DEFAULT_RADICAL_LIMIT: usize = 24;

/// Which multiplications an ideal absorbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `RI ⊆ I`
    Left,
    /// `IR ⊆ I`
    Right,
    /// both
    TwoSided,
}

impl Side {
    pub(crate) fn left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    pub(crate) fn right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }
}

/// A subset of the carrier, stored as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdealSubset {
    members: Vec<bool>,
    side: Side,
}

impl IdealSubset {
    /// Wraps a mask without validation; see [`IdealSubset::validate`].
    pub fn from_mask(members: Vec<bool>, side: Side) -> Self {
        IdealSubset { members, side }
    }

    /// Wraps a list of members without validation.
    pub fn from_elements(order: usize, elements: &[Element], side: Side) -> Self {
        let mut members = alloc::vec![false; order];
        for &x in elements {
            members[x] = true;
        }
        IdealSubset { members, side }
    }

    /// The whole carrier.
    pub fn whole(order: usize, side: Side) -> Self {
        IdealSubset {
            members: alloc::vec![true; order],
            side,
        }
    }

    /// Declared side.
    pub fn side(&self) -> Side {
        self.side
    }

    /// Membership test.
    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.members[x]
    }

    /// Membership mask.
    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    /// Members in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    /// Members as a vector.
    pub fn to_vec(&self) -> Vec<Element> {
        self.elements().collect()
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    /// No members at all (never true for a validated ideal).
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether this is the whole carrier.
    pub fn is_whole(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    /// Whether the only member is zero.
    pub fn is_zero(&self, r: &FiniteHemiring) -> bool {
        self.elements().all(|x| x == r.zero())
    }

    /// Inclusion.
    pub fn is_subset(&self, other: &IdealSubset) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    /// Same members, different declared side.
    pub fn with_side(&self, side: Side) -> Self {
        IdealSubset {
            members: self.members.clone(),
            side,
        }
    }

    /// Checks that zero is a member and the set is closed under addition and
    /// the declared multiplications.
    pub fn validate(&self, r: &FiniteHemiring) -> Result<()> {
        if !self.contains(r.zero()) {
            return Err(AlgebraError::NotClosed("ideal must contain zero"));
        }
        for x in self.elements() {
            for y in self.elements() {
                if !self.contains(r.add(x, y)) {
                    return Err(AlgebraError::NotClosed(
                        "ideal must be closed under addition",
                    ));
                }
            }
            for s in r.elements() {
                if self.side.left() && !self.contains(r.mul(s, x)) {
                    return Err(AlgebraError::NotClosed(
                        "left ideal must absorb left products",
                    ));
                }
                if self.side.right() && !self.contains(r.mul(x, s)) {
                    return Err(AlgebraError::NotClosed(
                        "right ideal must absorb right products",
                    ));
                }
            }
        }
        Ok(())
    }

    /// `I + J = {i + j}`, an ideal of the common side.
    pub fn sum(&self, other: &IdealSubset, r: &FiniteHemiring) -> IdealSubset {
        let mut members = alloc::vec![false; r.order()];
        for x in self.elements() {
            for y in other.elements() {
                members[r.add(x, y)] = true;
            }
        }
        IdealSubset {
            members,
            side: self.side,
        }
    }
}

/// Closure of `seed` under addition (with zero adjoined).
pub fn additive_closure(r: &FiniteHemiring, seed: impl IntoIterator<Item = Element>) -> Vec<bool> {
    closure(r, seed, false, false)
}

fn closure(
    r: &FiniteHemiring,
    seed: impl IntoIterator<Item = Element>,
    left: bool,
    right: bool,
) -> Vec<bool> {
    let mut members = alloc::vec![false; r.order()];
    let mut list = Vec::new();
    let mut queue = Vec::new();
    let push =
        |x: Element, members: &mut Vec<bool>, list: &mut Vec<Element>, queue: &mut Vec<Element>| {
            if !members[x] {
                members[x] = true;
                list.push(x);
                queue.push(x);
            }
        };
    push(r.zero(), &mut members, &mut list, &mut queue);
    for x in seed {
        push(x, &mut members, &mut list, &mut queue);
    }
    while let Some(x) = queue.pop() {
        let mut i = 0;
        while i < list.len() {
            let y = list[i];
            push(r.add(x, y), &mut members, &mut list, &mut queue);
            i += 1;
        }
        for s in r.elements() {
            if left {
                push(r.mul(s, x), &mut members, &mut list, &mut queue);
            }
            if right {
                push(r.mul(x, s), &mut members, &mut list, &mut queue);
            }
        }
    }
    members
}

/// The smallest ideal of the given side containing `seed`.
pub fn generated_ideal(r: &FiniteHemiring, seed: &[Element], side: Side) -> IdealSubset {
    IdealSubset {
        members: closure(r, seed.iter().copied(), side.left(), side.right()),
        side,
    }
}

/// The two-sided ideal `IJ`: additive closure of all products `ij`.
pub fn ideal_product(r: &FiniteHemiring, i: &IdealSubset, j: &IdealSubset) -> IdealSubset {
    let products: Vec<Element> = i
        .elements()
        .flat_map(|x| j.elements().map(move |y| r.mul(x, y)))
        .collect();
    IdealSubset {
        members: additive_closure(r, products),
        side: Side::TwoSided,
    }
}

/// All ideals of the given side with the default size guard.
pub fn all_ideals(r: &FiniteHemiring, side: Side) -> Result<Vec<IdealSubset>> {
    all_ideals_bounded(r, side, DEFAULT_IDEAL_LIMIT)
}

/// Every ideal of the given side: the principal ideals closed under sums.
/// Sorted by membership mask.
pub fn all_ideals_bounded(
    r: &FiniteHemiring,
    side: Side,
    limit: usize,
) -> Result<Vec<IdealSubset>> {
    guard("carrier for ideal enumeration", r.order(), limit)?;
    let principals: BTreeSet<IdealSubset> = r
        .elements()
        .map(|x| generated_ideal(r, &[x], side))
        .collect();
    let mut all: BTreeSet<IdealSubset> = principals.clone();
    let mut frontier: Vec<IdealSubset> = all.iter().cloned().collect();
    while let Some(i) = frontier.pop() {
        for p in &principals {
            let s = i.sum(p, r);
            if all.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    Ok(all.into_iter().collect())
}

/// Whether `{0}` and the whole carrier are the only two-sided ideals.
pub fn is_ideal_simple(r: &FiniteHemiring) -> bool {
    nontrivial_ideal_witness(r).is_none()
}

/// A nonzero element generating a proper ideal, if any.
pub fn nontrivial_ideal_witness(r: &FiniteHemiring) -> Option<(Element, IdealSubset)> {
    r.elements().filter(|&x| x != r.zero()).find_map(|x| {
        let i = generated_ideal(r, &[x], Side::TwoSided);
        (!i.is_whole()).then_some((x, i))
    })
}

/// Congruence-simple and ideal-simple.
pub fn is_simple(r: &FiniteHemiring) -> bool {
    is_ideal_simple(r) && is_congruence_simple(r)
}

/// `x + y ∈ I` and `y ∈ I` imply `x ∈ I`.
pub fn is_subtractive(r: &FiniteHemiring, ideal: &IdealSubset) -> bool {
    r.elements()
        .all(|x| ideal.contains(x) || ideal.elements().all(|y| !ideal.contains(r.add(x, y))))
}

/// Intersection of the maximal proper left ideals (maximal subsemimodules of
/// the regular left semimodule), with the default size guard.
pub fn radical_left(r: &FiniteHemiring) -> Result<IdealSubset> {
    radical_left_bounded(r, DEFAULT_RADICAL_LIMIT)
}

/// See [`radical_left`].
pub fn radical_left_bounded(r: &FiniteHemiring, limit: usize) -> Result<IdealSubset> {
    guard("carrier for radical", r.order(), limit)?;
    let ideals = all_ideals_bounded(r, Side::Left, limit)?;
    let proper: Vec<&IdealSubset> = ideals.iter().filter(|i| !i.is_whole()).collect();
    let mut radical = IdealSubset::whole(r.order(), Side::Left);
    for i in &proper {
        let maximal = !proper.iter().any(|j| j != i && i.is_subset(j));
        if maximal {
            for (slot, &m) in radical.members.iter_mut().zip(&i.members) {
                *slot &= m;
            }
        }
    }
    Ok(radical)
}

/// `J = {a | ra ≠ 1 for all r}` for an additively idempotent chain semiring.
pub fn aic_max_ideal(r: &FiniteHemiring) -> Result<IdealSubset> {
    let one = r.one().ok_or(AlgebraError::MissingIdentity)?;
    let order = r.natural_order()?;
    if !order.is_total() {
        return Err(AlgebraError::NotClosed("natural order is not a chain"));
    }
    let members = r
        .elements()
        .map(|a| r.elements().all(|s| r.mul(s, a) != one))
        .collect();
    Ok(IdealSubset {
        members,
        side: Side::Left,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean_b, chain_semiring, integers_mod, two_zero_mult};
    use alloc::vec;

    #[test]
    fn zero_seed_generates_zero_ideal() {
        let b = boolean_b();
        let z = generated_ideal(&b, &[0], Side::TwoSided);
        assert_eq!(z.to_vec(), vec![0]);
        assert!(z.validate(&b).is_ok());
        assert!(generated_ideal(&b, &[1], Side::Left).is_whole());
    }

    #[test]
    fn boolean_is_simple_with_zero_radical() {
        let b = boolean_b();
        assert!(is_ideal_simple(&b));
        assert!(is_simple(&b));
        assert_eq!(radical_left(&b).unwrap().to_vec(), vec![0]);
        assert_eq!(aic_max_ideal(&b).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn chain_semiring_has_proper_ideals() {
        // max/min on a 3-chain: the down-set {0, 1} is an ideal
        let c = chain_semiring(3);
        assert!(!is_ideal_simple(&c));
        let ideals = all_ideals(&c, Side::TwoSided).unwrap();
        assert_eq!(ideals.len(), 3);
        for i in &ideals {
            assert!(i.validate(&c).is_ok());
        }
        let j = aic_max_ideal(&c).unwrap();
        assert_eq!(j.to_vec(), vec![0, 1]);
        assert_eq!(radical_left(&c).unwrap(), j);
    }

    #[test]
    fn subtractive_ideals() {
        let z4 = integers_mod(4);
        let even = generated_ideal(&z4, &[2], Side::TwoSided);
        assert_eq!(even.to_vec(), vec![0, 2]);
        assert!(is_subtractive(&z4, &even));
        let c = chain_semiring(3);
        let low = generated_ideal(&c, &[1], Side::TwoSided);
        // 2 + 1 = 2 is not in {0, 1}, so subtractivity holds; the top ideal too
        assert!(is_subtractive(&c, &low));
    }

    #[test]
    fn validation_catches_missing_closure() {
        let z4 = integers_mod(4);
        let bad = IdealSubset::from_elements(4, &[0, 1], Side::TwoSided);
        assert!(bad.validate(&z4).is_err());
        let no_zero = IdealSubset::from_elements(4, &[2], Side::TwoSided);
        assert!(no_zero.validate(&z4).is_err());
    }

    #[test]
    fn zero_multiplication_ideals_are_additive_submonoids() {
        let two = two_zero_mult();
        assert!(is_ideal_simple(&two));
        assert!(aic_max_ideal(&two).is_err());
        let product = ideal_product(
            &two,
            &IdealSubset::whole(2, Side::TwoSided),
            &IdealSubset::whole(2, Side::TwoSided),
        );
        assert!(product.is_zero(&two));
    }
}
