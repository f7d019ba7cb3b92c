//! Exact rational linear algebra kernel.
//!
//! Everything downstream builds on this module; it contains no floating
//! point and no tolerance parameters. Rationals are arbitrary-precision
//! [`num_rational::BigRational`] values, always reduced with positive
//! denominator.

mod intmat;
mod ldlt;
mod matrix;
mod poly;

pub use intmat::{column_hnf, column_hnf_with_transform, hnf_column_basis, integer_kernel, IMatrix};
pub use ldlt::{ldlt, LdltError};
pub use matrix::QMatrix;
pub use poly::{charpoly, rational_roots, CharpolyError, IntPoly};

use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Shorthand constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(Int::from(numer), Int::from(denom))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Inner product of two rational vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: dimension mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Squared Euclidean norm of a rational vector.
pub fn norm_sq(a: &[Rat]) -> Rat {
    dot(a, a)
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Least common multiple of the denominators of all entries.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rat>>(entries: I) -> Int {
    let mut l = Int::one();
    for r in entries {
        l = num_integer::lcm(l, r.denom().clone());
    }
    l
}

/// Exact floor of the square root of a nonnegative rational.
pub fn floor_sqrt(r: &Rat) -> Int {
    assert!(!r.is_negative(), "floor_sqrt of negative value");
    // floor(sqrt(p/q)) = floor(sqrt(floor(p*q)/q^2)) = isqrt(p*q) / q
    let scaled = (r.numer() * r.denom()).sqrt();
    scaled / r.denom()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_helpers() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        let v = vec![rat(1, 2), rat(1, 3)];
        assert_eq!(norm_sq(&v), rat(13, 36));
        assert_eq!(denominator_lcm(v.iter()), Int::from(6));
    }

    #[test]
    fn floor_sqrt_examples() {
        assert_eq!(floor_sqrt(&rint(9)), Int::from(3));
        assert_eq!(floor_sqrt(&rint(8)), Int::from(2));
        assert_eq!(floor_sqrt(&rat(1, 4)), Int::from(0));
        assert_eq!(floor_sqrt(&rat(9, 4)), Int::from(1));
    }
}
