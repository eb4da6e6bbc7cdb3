use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::congruence::Congruence;
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::ideal::{generated_ideal, IdealSubset, Side};
use crate::table::Element;

/// The corner `eRe` of an idempotent `e`, with `e` as identity. Corner
/// elements are indexed by position in the sorted list of members.
#[derive(Clone, Debug)]
pub struct CornerSemiring {
    e: Element,
    members: Vec<Element>,
    hemiring: FiniteHemiring,
}

/// Builds `eRe`.
pub fn corner(r: &FiniteHemiring, e: Element) -> Result<CornerSemiring> {
    if e >= r.order() {
        return Err(AlgebraError::ElementOutOfRange {
            element: e,
            order: r.order(),
        });
    }
    if r.mul(e, e) != e {
        return Err(AlgebraError::NotIdempotent(e));
    }
    let mut members: Vec<Element> = r.elements().map(|x| r.mul(r.mul(e, x), e)).collect();
    members.sort_unstable();
    members.dedup();
    let sub = r.forget_identity().subhemiring(&members)?;
    let one = members.binary_search(&e).ok();
    let hemiring = FiniteHemiring::from_parts(
        sub.add_table().clone(),
        sub.mul_table().clone(),
        sub.zero(),
        one,
    );
    Ok(CornerSemiring {
        e,
        members,
        hemiring,
    })
}

impl CornerSemiring {
    /// The idempotent.
    pub fn idempotent(&self) -> Element {
        self.e
    }

    /// Elements of the ambient algebra lying in the corner, sorted.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    /// The corner's own tables.
    pub fn as_hemiring(&self) -> &FiniteHemiring {
        &self.hemiring
    }

    /// Corner index of an ambient element of the form `exe`.
    pub fn position(&self, x: Element) -> Option<Element> {
        self.members.binary_search(&x).ok()
    }

    /// Ambient element for a corner index.
    pub fn lift(&self, i: Element) -> Element {
        self.members[i]
    }
}

/// Whether the two-sided ideal generated by `e` is everything.
pub fn is_full_idempotent(r: &FiniteHemiring, e: Element) -> bool {
    generated_ideal(r, &[e], Side::TwoSided).is_whole()
}

/// All full idempotents, ascending.
pub fn full_idempotents(r: &FiniteHemiring) -> Vec<Element> {
    r.idempotents()
        .into_iter()
        .filter(|&e| is_full_idempotent(r, e))
        .collect()
}

/// `RIR` for an ideal `I` of the corner, as an ideal of `R`.
pub fn corner_ideal_extension(
    r: &FiniteHemiring,
    c: &CornerSemiring,
    i: &IdealSubset,
) -> IdealSubset {
    let lifted: Vec<Element> = i.elements().map(|x| c.lift(x)).collect();
    generated_ideal(r, &lifted, Side::TwoSided)
}

/// `eJe` for an ideal `J` of `R`, in corner coordinates.
pub fn corner_ideal_restriction(
    r: &FiniteHemiring,
    c: &CornerSemiring,
    j: &IdealSubset,
) -> IdealSubset {
    let e = c.idempotent();
    let mut mask = alloc::vec![false; c.members().len()];
    for x in j.elements() {
        let p = c
            .position(r.mul(r.mul(e, x), e))
            .expect("exe lies in the corner");
        mask[p] = true;
    }
    IdealSubset::from_mask(mask, Side::TwoSided)
}

/// `Θ = {(a, b) : (eras e, erbs e) ∈ Γ for all r, s}` for a congruence `Γ`
/// of the corner. Elements are grouped by the vector of `Γ`-classes of
/// `e r a s e` over all `(r, s)`.
pub fn corner_congruence_extension(
    r: &FiniteHemiring,
    c: &CornerSemiring,
    gamma: &Congruence,
) -> Congruence {
    let e = c.idempotent();
    let er: Vec<Element> = r.elements().map(|x| r.mul(e, x)).collect();
    let se: Vec<Element> = r.elements().map(|x| r.mul(x, e)).collect();
    let mut classes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let blocks: Vec<usize> = r
        .elements()
        .map(|a| {
            let mut sig = Vec::with_capacity(r.order() * r.order());
            for &left in &er {
                let la = r.mul(left, a);
                for &right in &se {
                    let x = r.mul(la, right);
                    sig.push(gamma.block(c.position(x).expect("e r a s e lies in the corner")));
                }
            }
            let next = classes.len();
            *classes.entry(sig).or_insert(next)
        })
        .collect();
    Congruence::from_blocks(&blocks)
}

/// `Θ ∩ (eRe)²` in corner coordinates.
pub fn corner_congruence_restriction(theta: &Congruence, c: &CornerSemiring) -> Congruence {
    let blocks: Vec<usize> = c.members().iter().map(|&x| theta.block(x)).collect();
    Congruence::from_blocks(&blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::all_congruences;
    use crate::constructions::{boolean_b, integers_mod, matrix_semiring, two_zero_mult};
    use crate::hom::is_isomorphic;
    use crate::ideal::all_ideals;

    #[test]
    fn corner_at_one_is_everything() {
        let r = integers_mod(6);
        let c = corner(&r, 1).unwrap();
        assert_eq!(c.members().len(), 6);
        assert!(is_full_idempotent(&r, 1));
        assert!(is_isomorphic(c.as_hemiring(), &r).is_some());
    }

    #[test]
    fn corner_at_zero_is_trivial() {
        let r = boolean_b();
        let c = corner(&r, 0).unwrap();
        assert_eq!(c.members(), &[0]);
        assert!(!is_full_idempotent(&r, 0));
    }

    #[test]
    fn non_idempotent_is_rejected() {
        assert_eq!(
            corner(&integers_mod(4), 2).unwrap_err(),
            AlgebraError::NotIdempotent(2)
        );
        assert!(corner(&two_zero_mult(), 1).is_err());
    }

    #[test]
    fn e11_corner_of_boolean_matrices() {
        let m = matrix_semiring(&boolean_b(), 2).unwrap();
        let r = m.as_hemiring();
        let e = m.unit(0, 0).unwrap();
        let c = corner(r, e).unwrap();
        assert!(c.as_hemiring().revalidate().is_ok());
        assert!(is_isomorphic(c.as_hemiring(), &boolean_b()).is_some());
        assert!(is_full_idempotent(r, e));

        let corner_ideals = all_ideals(c.as_hemiring(), Side::TwoSided).unwrap();
        let ideals = all_ideals(r, Side::TwoSided).unwrap();
        assert_eq!((corner_ideals.len(), ideals.len()), (2, 2));
        for i in &corner_ideals {
            let lifted = corner_ideal_extension(r, &c, i);
            assert_eq!(corner_ideal_restriction(r, &c, &lifted).mask(), i.mask());
        }

        let corner_congs = all_congruences(c.as_hemiring()).unwrap();
        assert_eq!(all_congruences(r).unwrap().len(), 2);
        for g in &corner_congs {
            let theta = corner_congruence_extension(r, &c, g);
            theta.check_compatible(r).unwrap();
            assert_eq!(&corner_congruence_restriction(&theta, &c), g);
            if g.is_diagonal() {
                assert!(theta.is_diagonal());
            }
        }
    }
}
