use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Nat;

/// Number of `k`-subsets of an `m`-set.
///
/// Negative arguments follow the subset-counting convention: there is exactly
/// one empty subset of anything, and no non-empty subset of a negative-size
/// set. This is what makes `binom(n - hk + h, k)` vanish once the top goes
/// negative; the signed extension `C(-1, 1) = -1` would not.
pub fn binom(m: i64, k: i64) -> Nat {
    if k < 0 {
        return Nat::zero();
    }
    if k == 0 {
        return Nat::one();
    }
    if m < 0 || k > m {
        return Nat::zero();
    }
    let k = k.min(m - k) as u64;
    let m = m as u64;
    let mut acc = BigUint::one();
    // acc * (m - k + i) is always divisible by i at step i.
    for i in 1..=k {
        acc *= m - k + i;
        acc /= i;
    }
    acc
}

/// Same as [`binom`] but drops the sign of the generalized binomial for a
/// negative top, i.e. returns `|C(m, k)| = C(k - m - 1, k)`. Only used to
/// inject a convention bug for sensitivity testing.
pub(crate) fn binom_unsigned_extension(m: i64, k: i64) -> Nat {
    if m < 0 && k > 0 {
        binom(k - m - 1, k)
    } else {
        binom(m, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> Nat {
        (1..=n).fold(Nat::one(), |acc, i| acc * i)
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(4, 2), Nat::from(6u32));
        assert_eq!(binom(-1, 1), Nat::zero());
        assert_eq!(binom(-1, 0), Nat::one());
        assert_eq!(binom(0, 0), Nat::one());
        assert_eq!(binom(3, 4), Nat::zero());
        assert_eq!(binom(5, -1), Nat::zero());
        assert_eq!(binom(-7, -2), Nat::zero());
    }

    #[test]
    fn matches_factorial_quotient() {
        for m in 0..40u64 {
            for k in 0..=m {
                let expected = factorial(m) / (factorial(k) * factorial(m - k));
                assert_eq!(binom(m as i64, k as i64), expected, "C({m}, {k})");
            }
        }
    }

    #[test]
    fn large_values_are_exact() {
        let expected: Nat = "100891344545564193334812497256".parse().unwrap();
        assert_eq!(binom(100, 50), expected);
    }

    #[test]
    fn unsigned_extension_only_changes_negative_tops() {
        assert_eq!(binom_unsigned_extension(-1, 1), Nat::one());
        assert_eq!(binom_unsigned_extension(-2, 2), Nat::from(3u32));
        assert_eq!(binom_unsigned_extension(6, 3), binom(6, 3));
        assert_eq!(binom_unsigned_extension(-4, 0), Nat::one());
    }
}
