//! Exact character sums.
//!
//! A character value of a ring with character order m is a power of a
//! primitive m-th root of unity zeta. A sum of such values is stored as the
//! multiplicity of each zeta^e; its value is decided by reducing the
//! multiplicity polynomial modulo the m-th cyclotomic polynomial.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSum {
    m: u32,
    counts: Vec<i64>,
}

impl CyclotomicSum {
    pub fn zero(m: u32) -> Self {
        assert!(m >= 1, "character order must be positive");
        CyclotomicSum {
            m,
            counts: vec![0; m as usize],
        }
    }

    pub fn from_counts(counts: Vec<i64>) -> Self {
        assert!(!counts.is_empty());
        CyclotomicSum {
            m: counts.len() as u32,
            counts,
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Adds `weight` copies of zeta^exponent.
    #[inline]
    pub fn accumulate(&mut self, exponent: u32, weight: i64) {
        self.counts[(exponent % self.m) as usize] += weight;
    }

    pub fn add_assign(&mut self, other: &CyclotomicSum) {
        assert_eq!(self.m, other.m);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// Remainder of the multiplicity polynomial modulo Phi_m.
    fn reduced(&self) -> Vec<i128> {
        let phi = cyclotomic_polynomial(self.m);
        let deg = phi.len() - 1;
        let mut rem: Vec<i128> = self.counts.iter().map(|&c| c as i128).collect();
        for top in (deg..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            // phi is monic
            for (i, &p) in phi.iter().enumerate() {
                rem[top - deg + i] -= c * p as i128;
            }
        }
        rem.truncate(deg.max(1));
        rem
    }

    /// The sum's value if it is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let rem = self.reduced();
        if rem[1..].iter().all(|&c| c == 0) {
            i64::try_from(rem[0]).ok()
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    /// Equality of values, not of representations.
    pub fn same_value(&self, other: &CyclotomicSum) -> bool {
        assert_eq!(self.m, other.m);
        let mut diff = self.clone();
        for (a, b) in diff.counts.iter_mut().zip(&other.counts) {
            *a -= b;
        }
        diff.is_zero()
    }
}

/// Coefficients (constant term first) of the m-th cyclotomic polynomial,
/// computed as (x^m - 1) divided by Phi_d for every proper divisor d.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().insert(m, phi.clone());
    phi
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top];
        quot[top - dd] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[top - dd + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn accumulate_examples() {
        let mut s = CyclotomicSum::zero(4);
        s.accumulate(0, 1);
        assert_eq!(s.as_integer(), Some(1));
        for e in 1..4 {
            s.accumulate(e, 1);
        }
        assert_eq!(s.as_integer(), Some(0));

        let mut s = CyclotomicSum::zero(2);
        s.accumulate(0, 3);
        s.accumulate(1, 1);
        assert_eq!(s.as_integer(), Some(2));
    }

    #[test]
    fn as_integer_examples() {
        let mut s = CyclotomicSum::zero(6);
        s.accumulate(2, 1);
        assert_eq!(s.as_integer(), None);
        assert!(!s.is_zero());
        assert_eq!(CyclotomicSum::from_counts(vec![5, 2]).as_integer(), Some(3));
        assert_eq!(CyclotomicSum::from_counts(vec![16, 0, 0, 0]).as_integer(), Some(16));
        // zeta_4^0 + zeta_4^2 = 0
        assert!(CyclotomicSum::from_counts(vec![1, 0, 1, 0]).is_zero());
    }

    #[test]
    fn invariant_under_phi_multiples() {
        let a = CyclotomicSum::from_counts(vec![3, 1, 4, 1, 5, 9]);
        let mut b = a.clone();
        // add 7 * x * Phi_6 = 7x - 7x^2 + 7x^3
        b.accumulate(1, 7);
        b.accumulate(2, -7);
        b.accumulate(3, 7);
        assert!(a.same_value(&b));
        assert_eq!(a.as_integer(), b.as_integer());
    }

    fn small_primes() -> Vec<u32> {
        (2u32..=97)
            .filter(|&p| (2..p).all(|d| p % d != 0))
            .collect()
    }

    proptest! {
        #[test]
        fn prime_order_closed_form(idx in 0usize..25, seed in proptest::collection::vec(-50i64..50, 97), flat in any::<bool>()) {
            let primes = small_primes();
            let p = primes[idx % primes.len()];
            let mut counts: Vec<i64> = seed[..p as usize].to_vec();
            if flat {
                let c1 = counts[1];
                for c in counts.iter_mut().skip(1) {
                    *c = c1;
                }
            }
            let s = CyclotomicSum::from_counts(counts.clone());
            let constant = counts[1..].iter().all(|&c| c == counts[1]);
            let expected = constant.then(|| counts[0] - counts[1]);
            prop_assert_eq!(s.as_integer(), expected);
        }
    }
}
