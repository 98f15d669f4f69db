//! Scalar abstraction for the convex-geometry kernel.
//!
//! All geometric routines (hulls, faces, volumes, the simplex solver) are
//! written against [`Scalar`], an ordered field. The toolkit instantiates it
//! with [`num_rational::BigRational`] so every certificate is exact; `f64`
//! satisfies the same bounds and is useful for quick numeric experiments.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt::{Debug, Display};

/// An ordered field with enough structure for exact polyhedral geometry.
pub trait Scalar:
    Num + Signed + PartialOrd + Clone + Debug + Display + 'static
{
    fn from_int(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Rescale a nonzero direction vector to its canonical representative,
    /// preserving orientation. Exact rationals rescale to the primitive
    /// integer vector; floats rescale to unit max-norm.
    fn canonicalize_direction(dir: &mut [Self]);

    /// The exact integer value, when the scalar is an exact integer.
    fn to_integer(&self) -> Option<BigInt>;
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn canonicalize_direction(dir: &mut [Self]) {
        // lcm of denominators clears fractions, gcd of numerators reduces.
        let mut lcm = BigInt::one();
        for x in dir.iter() {
            if !x.is_zero() {
                lcm = lcm.lcm(x.denom());
            }
        }
        let mut gcd = BigInt::zero();
        for x in dir.iter() {
            if !x.is_zero() {
                let scaled = x.numer() * (&lcm / x.denom());
                gcd = gcd.gcd(&scaled);
            }
        }
        if gcd.is_zero() {
            return; // zero vector, leave untouched
        }
        let factor = BigRational::new(lcm, gcd);
        for x in dir.iter_mut() {
            *x = &*x * &factor;
        }
    }

    fn to_integer(&self) -> Option<BigInt> {
        if self.denom().is_one() {
            Some(self.numer().clone())
        } else {
            None
        }
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn canonicalize_direction(dir: &mut [Self]) {
        let max = dir.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        if max > 0.0 {
            for x in dir.iter_mut() {
                *x /= max;
            }
        }
    }

    fn to_integer(&self) -> Option<BigInt> {
        if self.fract() == 0.0 && self.is_finite() {
            Some(BigInt::from(*self as i64))
        } else {
            None
        }
    }
}

/// Total comparison; scalars used here are never NaN.
pub fn scmp<S: Scalar>(a: &S, b: &S) -> Ordering {
    a.partial_cmp(b).expect("scalars must be comparable")
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// Inner product of an integer vector with a scalar vector.
pub fn dot_int<S: Scalar>(a: &[i64], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + S::from_int(*x) * y.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_direction_is_primitive_integer() {
        let mut v = vec![
            BigRational::from_ratio(1, 2),
            BigRational::from_ratio(-3, 4),
            BigRational::zero(),
        ];
        BigRational::canonicalize_direction(&mut v);
        assert_eq!(v[0], BigRational::from_int(2));
        assert_eq!(v[1], BigRational::from_int(-3));
        assert_eq!(v[2], BigRational::zero());
    }

    #[test]
    fn canonical_direction_keeps_orientation() {
        let mut v = vec![BigRational::from_int(-4), BigRational::from_int(6)];
        BigRational::canonicalize_direction(&mut v);
        assert_eq!(v[0], BigRational::from_int(-2));
        assert_eq!(v[1], BigRational::from_int(3));
    }

    #[test]
    fn float_direction_unit_norm() {
        let mut v = vec![3.0f64, -4.0];
        f64::canonicalize_direction(&mut v);
        assert_eq!(v, vec![0.75, -1.0]);
    }
}
