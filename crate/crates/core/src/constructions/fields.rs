use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::table::OpTable;

/// Field orders accepted by [`finite_field`].
pub const SUPPORTED_FIELDS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// `(p, k, modulus)`; the modulus lists coefficients from `x^0` up to the
/// monic leading term.
fn presentation(q: usize) -> Option<(usize, usize, &'static [usize])> {
    match q {
        2 | 3 | 5 | 7 => Some((q, 1, &[0, 1])),
        4 => Some((2, 2, &[1, 1, 1])),
        8 => Some((2, 3, &[1, 1, 0, 1])),
        9 => Some((3, 2, &[1, 0, 1])),
        _ => None,
    }
}

fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn pack(coeffs: &[usize], p: usize) -> usize {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul(a: &[usize], b: &[usize], p: usize, modulus: &[usize]) -> Vec<usize> {
    let k = modulus.len() - 1;
    let mut prod = alloc::vec![0; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce with the monic modulus, highest degree first
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let slot = deg - k + i;
            prod[slot] = (prod[slot] + (p - c) * m) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// `GF(q)` for `q` in [`SUPPORTED_FIELDS`]. Elements are base-`p`
/// coefficient vectors of polynomials in a fixed root of the modulus
/// (`x²+x+1`, `x³+x+1`, `x²+1` for 4, 8, 9); `0` and `1` keep their indices.
pub fn finite_field(q: usize) -> Result<FiniteHemiring> {
    let (p, k, modulus) = presentation(q).ok_or(AlgebraError::UnsupportedField(q))?;
    let add = OpTable::from_fn(q, |a, b| {
        let (x, y) = (digits(a, p, k), digits(b, p, k));
        let sum: Vec<usize> = x.iter().zip(&y).map(|(s, t)| (s + t) % p).collect();
        pack(&sum, p)
    });
    let mul = OpTable::from_fn(q, |a, b| {
        if k == 1 {
            (a * b) % p
        } else {
            pack(&poly_mul(&digits(a, p, k), &digits(b, p, k), p, modulus), p)
        }
    });
    Ok(FiniteHemiring::from_parts(add, mul, 0, Some(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::integers_mod;

    #[test]
    fn prime_fields_are_integers_mod_p() {
        for p in [2, 3, 5, 7] {
            assert_eq!(finite_field(p).unwrap(), integers_mod(p));
        }
        assert_eq!(finite_field(6), Err(AlgebraError::UnsupportedField(6)));
    }

    #[test]
    fn every_supported_field_is_a_field() {
        for q in SUPPORTED_FIELDS {
            let f = finite_field(q).unwrap();
            assert!(f.revalidate().is_ok(), "GF({q})");
            assert!(f.is_commutative());
            assert!(f.is_division_semiring().unwrap(), "GF({q})");
        }
    }

    #[test]
    fn gf4_multiplicative_group_is_cyclic_of_order_3() {
        let f = finite_field(4).unwrap();
        // brute force: some nonzero element has multiplicative order 3
        let order_of = |x: usize| {
            let mut acc = x;
            let mut n = 1;
            while acc != 1 {
                acc = f.mul(acc, x);
                n += 1;
            }
            n
        };
        assert!((1..4).any(|x| order_of(x) == 3));
        assert!((1..4).all(|x| 3 % order_of(x) == 0));
    }
}
