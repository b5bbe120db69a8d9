use std::fmt;
use std::sync::RwLock;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Mutation, Nat};
use crate::error::{Error, Result};

/// The delayed-recurrence families `a(n) = a(n-1) + a(n-h-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeqKind {
    /// `h+1` leading ones, indexed from 1.
    Fibonacci,
    /// `h+1` then `h` ones, indexed from 1.
    Lucas,
    /// Fibonacci kind extended down to index `-h` (requires `h >= 2`).
    ExtendedFibonacci,
    /// Lucas kind extended down to index `-h` (requires `h >= 2`); takes the
    /// negative value `-h` at index `-h + 1`.
    ExtendedLucas,
}

impl SeqKind {
    pub fn is_extended(self) -> bool {
        matches!(self, SeqKind::ExtendedFibonacci | SeqKind::ExtendedLucas)
    }

    pub fn first_index(self, h: u32) -> i64 {
        if self.is_extended() {
            -i64::from(h)
        } else {
            1
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::Fibonacci => "F",
            SeqKind::Lucas => "L",
            SeqKind::ExtendedFibonacci => "Fbar",
            SeqKind::ExtendedLucas => "Lbar",
        })
    }
}

/// A lazily extended `h`-parameterized sequence.
///
/// Terms are cached in an append-only prefix behind a lock, so one instance can
/// be shared between threads.
#[derive(Debug)]
pub struct HSequence {
    kind: SeqKind,
    h: u32,
    mutation: Option<Mutation>,
    cache: RwLock<Vec<BigInt>>,
}

impl HSequence {
    pub fn new(kind: SeqKind, h: u32) -> Result<Self> {
        Self::with_mutation(kind, h, None)
    }

    pub(crate) fn with_mutation(kind: SeqKind, h: u32, mutation: Option<Mutation>) -> Result<Self> {
        if kind.is_extended() && h < 2 {
            return Err(Error::InvalidArgument(format!(
                "the extended {kind} sequence needs h >= 2, got h = {h}"
            )));
        }
        Ok(Self {
            kind,
            h,
            mutation,
            cache: RwLock::new(Vec::new()),
        })
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn first_index(&self) -> i64 {
        self.kind.first_index(self.h)
    }

    fn base(&self, n: i64) -> Option<BigInt> {
        let h = i64::from(self.h);
        match self.kind {
            SeqKind::Fibonacci => {
                if n == 1 && self.mutation == Some(Mutation::FibonacciBase) {
                    Some(BigInt::from(2))
                } else {
                    (n <= h + 1).then(BigInt::one)
                }
            }
            SeqKind::Lucas => {
                if n == 1 {
                    let lead = if self.mutation == Some(Mutation::LucasBase) {
                        h
                    } else {
                        h + 1
                    };
                    Some(BigInt::from(lead))
                } else {
                    (n <= h + 1).then(BigInt::one)
                }
            }
            SeqKind::ExtendedFibonacci => match n {
                n if n == -h => Some(BigInt::one()),
                n if n <= 0 => Some(BigInt::zero()),
                _ => None,
            },
            SeqKind::ExtendedLucas => match n {
                n if n == -h => Some(BigInt::from(h + 1)),
                n if n == -h + 1 => Some(BigInt::from(-h)),
                n if n <= 0 => Some(BigInt::zero()),
                _ => None,
            },
        }
    }

    /// The term at index `n`, which may be negative for the Lucas extension.
    pub fn term(&self, n: i64) -> Result<BigInt> {
        let first = self.first_index();
        if n < first {
            return Err(Error::IndexOutOfRange {
                what: "sequence",
                index: n,
                min: first,
                max: i64::MAX,
            });
        }
        let slot = (n - first) as usize;
        {
            let cache = self.cache.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = cache.get(slot) {
                return Ok(v.clone());
            }
        }
        let mut cache = self.cache.write().unwrap_or_else(|e| e.into_inner());
        let lag = self.h as usize + 1;
        while cache.len() <= slot {
            let j = cache.len();
            let value = match self.base(first + j as i64) {
                Some(v) => v,
                None => &cache[j - 1] + &cache[j - lag],
            };
            cache.push(value);
        }
        Ok(cache[slot].clone())
    }

    /// The term at index `n` as a natural number; fails on negative terms.
    pub fn nat(&self, n: i64) -> Result<Nat> {
        let value = self.term(n)?;
        match value.sign() {
            Sign::Minus => Err(Error::InvalidArgument(format!(
                "{}^({}) at index {n} is negative ({value})",
                self.kind, self.h
            ))),
            _ => Ok(value.magnitude().clone()),
        }
    }

    /// Terms `from..=to`.
    pub fn terms(&self, from: i64, to: i64) -> Result<Vec<BigInt>> {
        (from..=to).map(|n| self.term(n)).collect()
    }
}

/// `(A * B)(n) = sum_{i=1..n} A(i) B(n - i + 1)`.
pub fn convolve(a: &HSequence, b: &HSequence, n: i64) -> Result<Nat> {
    if a.h != b.h {
        return Err(Error::ParameterMismatch {
            left: a.h,
            right: b.h,
        });
    }
    if n < 1 {
        return Err(Error::IndexOutOfRange {
            what: "convolution",
            index: n,
            min: 1,
            max: i64::MAX,
        });
    }
    let mut acc = BigInt::zero();
    for i in 1..=n {
        acc += a.term(i)? * b.term(n - i + 1)?;
    }
    acc.to_biguint()
        .ok_or_else(|| Error::InvalidArgument(format!("convolution at {n} is negative")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(kind: SeqKind, h: u32, from: i64, to: i64) -> Vec<i64> {
        let s = HSequence::new(kind, h).unwrap();
        s.terms(from, to)
            .unwrap()
            .into_iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn fibonacci_rows() {
        assert_eq!(
            row(SeqKind::Fibonacci, 1, 1, 10),
            [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        );
        assert_eq!(row(SeqKind::Fibonacci, 0, 1, 6), [1, 2, 4, 8, 16, 32]);
        assert_eq!(
            row(SeqKind::Fibonacci, 2, 1, 13),
            [1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60]
        );
        assert_eq!(row(SeqKind::Fibonacci, 4, 3, 3), [1]);
    }

    #[test]
    fn lucas_rows() {
        assert_eq!(row(SeqKind::Lucas, 1, 1, 8), [2, 1, 3, 4, 7, 11, 18, 29]);
        assert_eq!(row(SeqKind::Lucas, 2, 1, 7), [3, 1, 1, 4, 5, 6, 10]);
        assert_eq!(row(SeqKind::Lucas, 4, 1, 1), [5]);
        assert_eq!(row(SeqKind::Lucas, 3, 12, 12), [34]);
        assert_eq!(row(SeqKind::Lucas, 0, 1, 5), [1, 2, 4, 8, 16]);
    }

    #[test]
    fn extended_base_cases() {
        assert_eq!(row(SeqKind::ExtendedFibonacci, 2, -2, 0), [1, 0, 0]);
        assert_eq!(row(SeqKind::ExtendedLucas, 3, -3, 0), [4, -3, 0, 0]);
        assert_eq!(row(SeqKind::ExtendedFibonacci, 2, 8, 8), [9]);
        assert_eq!(row(SeqKind::ExtendedLucas, 2, 5, 5), [5]);
    }

    #[test]
    fn extended_needs_h_at_least_two() {
        assert!(HSequence::new(SeqKind::ExtendedFibonacci, 1).is_err());
        assert!(HSequence::new(SeqKind::ExtendedLucas, 0).is_err());
    }

    #[test]
    fn index_below_range_is_rejected() {
        let f = HSequence::new(SeqKind::Fibonacci, 3).unwrap();
        assert!(f.term(0).is_err());
        assert!(f.term(-1).is_err());
        let fbar = HSequence::new(SeqKind::ExtendedFibonacci, 3).unwrap();
        assert!(fbar.term(-3).is_ok());
        assert!(fbar.term(-4).is_err());
    }

    #[test]
    fn negative_term_has_no_natural_value() {
        let lbar = HSequence::new(SeqKind::ExtendedLucas, 3).unwrap();
        assert!(lbar.nat(-2).is_err());
        assert_eq!(lbar.nat(-3).unwrap(), Nat::from(4u32));
    }

    #[test]
    fn convolution_values() {
        let f1 = HSequence::new(SeqKind::Fibonacci, 1).unwrap();
        assert_eq!(convolve(&f1, &f1, 6).unwrap(), Nat::from(38u32));
        assert_eq!(convolve(&f1, &f1, 1).unwrap(), Nat::one());
        let f2 = HSequence::new(SeqKind::Fibonacci, 2).unwrap();
        let l2 = HSequence::new(SeqKind::Lucas, 2).unwrap();
        assert_eq!(convolve(&f2, &l2, 6).unwrap(), Nat::from(32u32));
    }

    #[test]
    fn convolution_rejects_mismatched_h_and_bad_index() {
        let f1 = HSequence::new(SeqKind::Fibonacci, 1).unwrap();
        let f2 = HSequence::new(SeqKind::Fibonacci, 2).unwrap();
        assert_eq!(
            convolve(&f1, &f2, 3),
            Err(Error::ParameterMismatch { left: 1, right: 2 })
        );
        assert!(convolve(&f1, &f1, 0).is_err());
    }

    #[test]
    fn shared_instance_extends_from_many_threads() {
        let f = std::sync::Arc::new(HSequence::new(SeqKind::Fibonacci, 1).unwrap());
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let f = f.clone();
                std::thread::spawn(move || f.term(30 + t).unwrap())
            })
            .collect();
        let got: Vec<BigInt> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got[0], BigInt::from(832_040));
        assert_eq!(got[7], BigInt::from(24_157_817));
    }
}
