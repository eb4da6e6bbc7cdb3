//! Error type shared by every constructor and decider.

use crate::hemiring::Axiom;
use crate::table::Element;

/// Errors raised by constructors and deciders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    /// Two tables that must share a carrier have different orders.
    #[error("dimension mismatch: expected order {expected}, found {found}")]
    DimensionMismatch {
        /// Order of the reference table.
        expected: usize,
        /// Order of the offending table.
        found: usize,
    },
    /// A table entry or a named element lies outside `0..order`.
    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange {
        /// Offending index.
        element: usize,
        /// Carrier size.
        order: usize,
    },
    /// The carrier is empty or too large for the packed table layout.
    #[error("unsupported carrier order {0}")]
    InvalidOrder(usize),
    /// A hemiring (or semilattice, semimodule) axiom fails.
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation {
        /// The violated law.
        axiom: Axiom,
        /// Elements exhibiting the failure.
        witness: [Element; 3],
    },
    /// The natural order is only defined for additively idempotent algebras.
    #[error("not additively idempotent: {0} + {0} != {0}")]
    NotAdditivelyIdempotent(Element),
    /// The operation needs a multiplicative identity.
    #[error("operation requires a multiplicative identity")]
    MissingIdentity,
    /// The supplied element is not multiplicatively idempotent.
    #[error("element {0} is not idempotent")]
    NotIdempotent(Element),
    /// A subset that should be closed under the operations is not.
    #[error("subset is not closed: {0}")]
    NotClosed(&'static str),
    /// A partition fails to be compatible with the operations.
    #[error("partition is not a congruence: pair ({0}, {1}) breaks compatibility")]
    NotCongruence(Element, Element),
    /// Requested size exceeds a configured guard.
    #[error("size guard: {what} is {size}, limit {limit}")]
    SizeGuard {
        /// What was measured.
        what: &'static str,
        /// Measured size.
        size: usize,
        /// Configured bound.
        limit: usize,
    },
    /// Only a fixed list of finite field orders is supported.
    #[error("unsupported field order {0}")]
    UnsupportedField(usize),
}

/// Crate-wide result alias.
pub type Result<T, E = AlgebraError> = core::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(AlgebraError::SizeGuard { what, size, limit })
    } else {
        Ok(())
    }
}
