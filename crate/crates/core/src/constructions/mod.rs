//! Builders for concrete algebras and catalogs of small ones.

mod corner;
mod enumerate;
mod fields;
mod matrix;

pub use corner::{
    corner, corner_congruence_extension, corner_congruence_restriction, corner_ideal_extension,
    corner_ideal_restriction, full_idempotents, is_full_idempotent, CornerSemiring,
};
pub use enumerate::{
    enumerate_commutative_monoids, enumerate_hemirings, enumerate_semilattices, Catalog,
    CatalogEntry, CatalogKind, HemiringConstraints, HEMIRING_IDEMPOTENT_MAX_ORDER,
    HEMIRING_MAX_ORDER, SEMILATTICE_DEFAULT_ORDER, SEMILATTICE_MAX_ORDER,
};
pub use fields::{finite_field, SUPPORTED_FIELDS};
pub use matrix::{matrix_semiring, matrix_semiring_bounded, MatrixSemiring, DEFAULT_MATRIX_BOUND};

use crate::hemiring::FiniteHemiring;
use crate::table::OpTable;

/// The Boolean semifield `B = {0, 1}` with `1 + 1 = 1`.
pub fn boolean_b() -> FiniteHemiring {
    FiniteHemiring::from_parts(
        OpTable::from_fn(2, |a, b| a | b),
        OpTable::from_fn(2, |a, b| a & b),
        0,
        Some(1),
    )
}

/// The hemiring `2 = {0, 1}` with `1 + 1 = 1` and zero multiplication.
pub fn two_zero_mult() -> FiniteHemiring {
    FiniteHemiring::from_parts(
        OpTable::from_fn(2, |a, b| a | b),
        OpTable::from_fn(2, |_, _| 0),
        0,
        None,
    )
}

/// The ring `Z/n`.
pub fn integers_mod(n: usize) -> FiniteHemiring {
    FiniteHemiring::from_parts(
        OpTable::from_fn(n, |a, b| (a + b) % n),
        OpTable::from_fn(n, |a, b| (a * b) % n),
        0,
        Some(1 % n),
    )
}

/// The chain `0 < 1 < ... < n-1` with `+ = max` and `· = min`; `n - 1` is the
/// identity.
pub fn chain_semiring(n: usize) -> FiniteHemiring {
    FiniteHemiring::from_parts(
        OpTable::from_fn(n, |a, b| a.max(b)),
        OpTable::from_fn(n, |a, b| a.min(b)),
        0,
        Some(n - 1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::is_isomorphic;

    #[test]
    fn constants_validate() {
        for r in [
            boolean_b(),
            two_zero_mult(),
            integers_mod(1),
            integers_mod(6),
            chain_semiring(5),
        ] {
            assert!(r.revalidate().is_ok());
        }
        let b = boolean_b();
        assert_eq!((b.add(1, 1), b.mul(1, 1)), (1, 1));
        let two = two_zero_mult();
        assert_eq!((two.add(1, 1), two.mul(1, 1)), (1, 0));
        assert!(is_isomorphic(&b, &two).is_none());
    }
}
