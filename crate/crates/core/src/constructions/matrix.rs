use alloc::vec::Vec;

use crate::error::{guard, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::table::{Element, OpTable};

/// Largest matrix carrier built by default (`9^4`).
pub const DEFAULT_MATRIX_BOUND: usize = 6561;

/// `M_n(R)` over a packed carrier: the matrix with entries `a_k` (row-major,
/// `k = i*n + j`) has index `Σ a_k |R|^k`.
#[derive(Clone, Debug)]
pub struct MatrixSemiring {
    base: FiniteHemiring,
    n: usize,
    hemiring: FiniteHemiring,
}

/// `M_n(R)` with the default carrier bound.
pub fn matrix_semiring(r: &FiniteHemiring, n: usize) -> Result<MatrixSemiring> {
    matrix_semiring_bounded(r, n, DEFAULT_MATRIX_BOUND)
}

/// `M_n(R)`, refusing carriers larger than `bound`.
pub fn matrix_semiring_bounded(
    r: &FiniteHemiring,
    n: usize,
    bound: usize,
) -> Result<MatrixSemiring> {
    if n == 0 {
        return Err(AlgebraError::InvalidOrder(0));
    }
    let size = u32::try_from(n * n)
        .ok()
        .and_then(|e| r.order().checked_pow(e))
        .unwrap_or(usize::MAX);
    guard("matrix carrier", size, bound)?;
    let shape = Shape { q: r.order(), n };
    let unpacked: Vec<Vec<Element>> = (0..size).map(|x| shape.unpack(x)).collect();
    let add = OpTable::from_fn(size, |a, b| {
        let (x, y) = (&unpacked[a], &unpacked[b]);
        shape.pack(x.iter().zip(y).map(|(&s, &t)| r.add(s, t)))
    });
    let mul = OpTable::from_fn(size, |a, b| {
        let (x, y) = (&unpacked[a], &unpacked[b]);
        shape.pack((0..n * n).map(|k| {
            let (i, j) = (k / n, k % n);
            (0..n).fold(r.zero(), |acc, l| {
                r.add(acc, r.mul(x[i * n + l], y[l * n + j]))
            })
        }))
    });
    let zero = shape.pack(core::iter::repeat_n(r.zero(), n * n));
    let one = r
        .one()
        .map(|o| shape.pack((0..n * n).map(|k| if k / n == k % n { o } else { r.zero() })));
    Ok(MatrixSemiring {
        base: r.clone(),
        n,
        hemiring: FiniteHemiring::from_parts(add, mul, zero, one),
    })
}

#[derive(Clone, Copy)]
struct Shape {
    q: usize,
    n: usize,
}

impl Shape {
    fn unpack(self, mut x: Element) -> Vec<Element> {
        (0..self.n * self.n)
            .map(|_| {
                let d = x % self.q;
                x /= self.q;
                d
            })
            .collect()
    }

    fn pack(self, entries: impl DoubleEndedIterator<Item = Element>) -> Element {
        entries.rev().fold(0, |acc, e| acc * self.q + e)
    }
}

impl MatrixSemiring {
    fn shape(&self) -> Shape {
        Shape {
            q: self.base.order(),
            n: self.n,
        }
    }

    /// The coefficient algebra.
    pub fn base(&self) -> &FiniteHemiring {
        &self.base
    }

    /// Matrix dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The packed tables.
    pub fn as_hemiring(&self) -> &FiniteHemiring {
        &self.hemiring
    }

    /// Row-major entries of a packed matrix.
    pub fn unpack(&self, x: Element) -> Vec<Element> {
        self.shape().unpack(x)
    }

    /// Packs row-major entries.
    pub fn pack(&self, entries: &[Element]) -> Result<Element> {
        if entries.len() != self.n * self.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n * self.n,
                found: entries.len(),
            });
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= self.base.order()) {
            return Err(AlgebraError::ElementOutOfRange {
                element: e,
                order: self.base.order(),
            });
        }
        Ok(self.shape().pack(entries.iter().copied()))
    }

    /// The matrix unit `E_ij` (0-based), which needs an identity in the base.
    pub fn unit(&self, i: usize, j: usize) -> Result<Element> {
        let one = self.base.one().ok_or(AlgebraError::MissingIdentity)?;
        if i >= self.n || j >= self.n {
            return Err(AlgebraError::ElementOutOfRange {
                element: i.max(j),
                order: self.n,
            });
        }
        let k = i * self.n + j;
        let entries: Vec<Element> = (0..self.n * self.n)
            .map(|l| if l == k { one } else { self.base.zero() })
            .collect();
        self.pack(&entries)
    }

    /// The scalar matrix `diag(a, ..., a)`.
    pub fn scalar(&self, a: Element) -> Element {
        let z = self.base.zero();
        self.shape()
            .pack((0..self.n * self.n).map(|k| if k / self.n == k % self.n { a } else { z }))
    }
}
