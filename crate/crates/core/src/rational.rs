//! Exact rational scalars and small numeric helpers.
//!
//! Coefficients throughout the crate are arbitrary-precision rationals,
//! always stored in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Binomial coefficient C(n, k), zero when k < 0 or k > n. n may be any
/// non-negative integer that fits in i64.
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || k > n || n < 0 {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Returns `v` if the rational is an exact integer.
pub fn as_integer(x: &Rat) -> Option<Int> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// Least common multiple of denominators, used to clear a slice of
/// rationals to integers.
pub fn denominator_lcm<'a>(xs: impl Iterator<Item = &'a Rat>) -> Int {
    let mut l = Int::one();
    for x in xs {
        let d = x.denom();
        let g = num_integer::Integer::gcd(&l, d);
        l = l / g * d;
    }
    l.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), Int::from(6));
        assert_eq!(binomial(5, 0), Int::from(1));
        assert_eq!(binomial(3, 5), Int::from(0));
        assert_eq!(binomial(-1, 0), Int::from(0));
        assert_eq!(binomial(10, 5), Int::from(252));
    }

    #[test]
    fn clears_denominators() {
        let xs = [rat_frac(1, 6), rat_frac(3, 4), rat(2)];
        assert_eq!(denominator_lcm(xs.iter()), Int::from(12));
    }
}
