//! The two constrained word families, their membership predicates,
//! lexicographic enumeration and exact counting.
//!
//! * `F_n(p,k)`: length `n`, weight `k`, no run of `p` consecutive ones.
//! * `C_n(p,k)`: length `n`, weight `k`, every prefix holds at least `p`
//!   times as many zeros as ones. `p` is an exact nonnegative rational.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::BinaryWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// No `p` consecutive ones, `p >= 2`.
    RunConstrained { p: usize },
    /// Every prefix has `zeros >= p * ones`.
    PrefixConstrained { p: Rational },
}

/// A fully parameterized language: family, length `n`, weight `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LanguageSpec {
    family: Family,
    n: usize,
    k: usize,
}

impl LanguageSpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        match family {
            Family::RunConstrained { p } => {
                if p < 2 {
                    return Err(Error::InvalidParameters(format!(
                        "run-constrained family needs p >= 2, got {p}"
                    )));
                }
                if k > n {
                    return Err(Error::InvalidParameters(format!(
                        "weight {k} exceeds length {n}"
                    )));
                }
            }
            Family::PrefixConstrained { p } => {
                if !p.fits(n, k) {
                    return Err(Error::InvalidParameters(format!(
                        "prefix-constrained family needs (p+1)k <= n, got p={p}, n={n}, k={k}"
                    )));
                }
            }
        }
        Ok(LanguageSpec { family, n, k })
    }

    /// `F_n(p,k)`.
    pub fn run_constrained(n: usize, p: usize, k: usize) -> Result<Self> {
        Self::new(Family::RunConstrained { p }, n, k)
    }

    /// `F_n(2,k)`, the Fibonacci words of weight `k`.
    pub fn fibonacci(n: usize, k: usize) -> Result<Self> {
        Self::run_constrained(n, 2, k)
    }

    /// `C_n(p,k)`.
    pub fn prefix_constrained(n: usize, p: Rational, k: usize) -> Result<Self> {
        Self::new(Family::PrefixConstrained { p }, n, k)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Membership test. Fails only when `w` has the wrong length.
    pub fn contains(&self, w: &BinaryWord) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: w.len(),
            });
        }
        Ok(self.accepts(w))
    }

    /// Membership test for a word already known to have length `n`.
    pub(crate) fn accepts(&self, w: &BinaryWord) -> bool {
        if w.weight() != self.k {
            return false;
        }
        match self.family {
            Family::RunConstrained { p } => {
                let mut run = 0;
                w.bits().all(|b| {
                    run = if b { run + 1 } else { 0 };
                    run < p
                })
            }
            Family::PrefixConstrained { p } => {
                let (mut zeros, mut ones) = (0, 0);
                w.bits().all(|b| {
                    if b {
                        ones += 1;
                    } else {
                        zeros += 1;
                    }
                    p.ratio_satisfied(zeros, ones)
                })
            }
        }
    }

    /// All members in lexicographic order, built by pruned prefix extension.
    pub fn enumerate(&self) -> Vec<BinaryWord> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.n);
        self.extend(&mut prefix, 0, 0, &mut out);
        out
    }

    fn extend(&self, prefix: &mut Vec<bool>, ones: usize, run: usize, out: &mut Vec<BinaryWord>) {
        let pos = prefix.len();
        if pos == self.n {
            if ones == self.k {
                out.push(BinaryWord::from_bits(prefix.iter().copied()));
            }
            return;
        }
        if ones + (self.n - pos) > self.k {
            prefix.push(false);
            self.extend(prefix, ones, 0, out);
            prefix.pop();
        }
        if ones < self.k {
            let zeros = pos - ones;
            let allowed = match self.family {
                Family::RunConstrained { p } => run + 1 < p,
                Family::PrefixConstrained { p } => p.ratio_satisfied(zeros, ones + 1),
            };
            if allowed {
                prefix.push(true);
                self.extend(prefix, ones + 1, run + 1, out);
                prefix.pop();
            }
        }
    }

    /// `|L|` from the closed form when one applies, else by enumeration.
    pub fn cardinality(&self) -> BigUint {
        match self.family {
            Family::RunConstrained { p } => count_run_constrained(self.n, p, self.k),
            Family::PrefixConstrained { p } => match p.to_integer() {
                Some(p) => count_prefix_formula(self.n, p, self.k)
                    .expect("spec invariants guarantee the formula's precondition"),
                None => BigUint::from(self.enumerate().len()),
            },
        }
    }
}

impl fmt::Display for LanguageSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::RunConstrained { p } => write!(f, "F_{}({},{})", self.n, p, self.k),
            Family::PrefixConstrained { p } => write!(f, "C_{}({},{})", self.n, p, self.k),
        }
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `|C_n(p,k)| = C(n,k) - p*C(n,k-1)` for integer `p`.
pub fn count_prefix_formula(n: usize, p: u64, k: usize) -> Result<BigUint> {
    if !Rational::integer(p).fits(n, k) {
        return Err(Error::InvalidParameters(format!(
            "formula needs (p+1)k <= n, got p={p}, n={n}, k={k}"
        )));
    }
    let (n, k) = (n as u64, k as u64);
    let below = if k == 0 {
        BigUint::zero()
    } else {
        binomial(n, k - 1)
    };
    let value = BigInt::from(binomial(n, k)) - BigInt::from(below * p);
    Ok(value
        .to_biguint()
        .expect("C(n,k) >= p*C(n,k-1) whenever (p+1)k <= n"))
}

/// Pfaff-Fuss-Catalan number `C((p+1)n, n) / (pn+1)`.
pub fn fuss_catalan(p: u64, n: u64) -> BigUint {
    binomial((p + 1) * n, n) / (p * n + 1)
}

/// `|F_n(p,k)|` via a dynamic program over (weight so far, current run of ones).
pub fn count_run_constrained(n: usize, p: usize, k: usize) -> BigUint {
    assert!(p >= 1, "run bound must be positive");
    if k > n {
        return BigUint::zero();
    }
    // table[ones][run]
    let mut table = vec![vec![BigUint::zero(); p]; k + 1];
    table[0][0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![vec![BigUint::zero(); p]; k + 1];
        for ones in 0..=k {
            for run in 0..p {
                let c = &table[ones][run];
                if c.is_zero() {
                    continue;
                }
                next[ones][0] += c;
                if ones < k && run + 1 < p {
                    next[ones + 1][run + 1] += c;
                }
            }
        }
        table = next;
    }
    table[k].iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn words(v: &[BinaryWord]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Filters all 2^n words through the membership predicate.
    fn brute(spec: &LanguageSpec) -> Vec<BinaryWord> {
        let n = spec.n();
        (0u64..1 << n)
            .map(|c| BinaryWord::from_bits((0..n).map(|i| c >> (n - 1 - i) & 1 == 1)))
            .filter(|x| spec.contains(x).unwrap())
            .collect()
    }

    #[test]
    fn membership_examples() {
        let f = LanguageSpec::fibonacci(5, 2).unwrap();
        assert!(f.contains(&w("01010")).unwrap());
        assert!(!f.contains(&w("01100")).unwrap());

        let dyck = LanguageSpec::prefix_constrained(6, Rational::integer(1), 3).unwrap();
        assert!(dyck.contains(&w("010101")).unwrap());
        assert!(!dyck.contains(&w("101010")).unwrap());

        let c = LanguageSpec::prefix_constrained(5, rat("3/2"), 2).unwrap();
        assert!(c.contains(&w("00101")).unwrap());
        assert!(!c.contains(&w("01001")).unwrap());

        assert_eq!(
            f.contains(&w("0101")),
            Err(Error::LengthMismatch {
                expected: 5,
                found: 4
            })
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(LanguageSpec::run_constrained(5, 1, 2).is_err());
        assert!(LanguageSpec::run_constrained(3, 2, 4).is_err());
        assert!(LanguageSpec::prefix_constrained(5, Rational::integer(2), 2).is_err());
        assert!(LanguageSpec::prefix_constrained(4, rat("3/2"), 2).is_err());
        assert!(LanguageSpec::prefix_constrained(5, rat("3/2"), 2).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        let f = LanguageSpec::fibonacci(4, 1).unwrap();
        assert_eq!(words(&f.enumerate()), ["0001", "0010", "0100", "1000"]);

        let c = LanguageSpec::prefix_constrained(4, Rational::integer(1), 2).unwrap();
        assert_eq!(words(&c.enumerate()), ["0011", "0101"]);

        let total: usize = (0..=3)
            .map(|k| LanguageSpec::fibonacci(3, k).unwrap().enumerate().len())
            .sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=12 {
            for k in 0..=n {
                for p in 2..=4 {
                    let s = LanguageSpec::run_constrained(n, p, k).unwrap();
                    assert_eq!(s.enumerate(), brute(&s), "{s}");
                }
                for p in ["0", "1/2", "1", "3/2", "2", "5/2", "3", "7/3"] {
                    if let Ok(s) = LanguageSpec::prefix_constrained(n, rat(p), k) {
                        assert_eq!(s.enumerate(), brute(&s), "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_prefix_formula(6, 1, 3).unwrap(), 5u32.into());
        assert_eq!(count_prefix_formula(7, 2, 2).unwrap(), 7u32.into());
        assert_eq!(count_prefix_formula(4, 0, 2).unwrap(), 6u32.into());
        assert!(count_prefix_formula(5, 2, 2).is_err());
    }

    #[test]
    fn fuss_catalan_examples() {
        assert_eq!(fuss_catalan(1, 3), 5u32.into());
        assert_eq!(fuss_catalan(2, 3), 12u32.into());
        assert_eq!(count_prefix_formula(9, 2, 3).unwrap(), 12u32.into());
        for p in 0..5 {
            assert_eq!(fuss_catalan(p, 0), 1u32.into());
        }
        let catalan: Vec<BigUint> = (0..6).map(|n| fuss_catalan(1, n)).collect();
        assert_eq!(catalan, [1u32, 1, 2, 5, 14, 42].map(BigUint::from));
    }

    #[test]
    fn run_constrained_examples() {
        assert_eq!(count_run_constrained(5, 2, 2), 6u32.into());
        for k in 1..=8 {
            assert_eq!(count_run_constrained(2 * k - 1, 2, k), 1u32.into());
        }
        for n in 0..10 {
            assert_eq!(count_run_constrained(n, 2, 0), 1u32.into());
        }
    }

    #[test]
    fn fibonacci_totals_follow_recurrence() {
        let f: Vec<BigUint> = (0..=20)
            .map(|n| (0..=n).map(|k| count_run_constrained(n, 2, k)).sum())
            .collect();
        assert_eq!(f[0], 1u32.into());
        assert_eq!(f[1], 2u32.into());
        for n in 2..=20 {
            assert_eq!(f[n], &f[n - 1] + &f[n - 2]);
        }
    }

    #[test]
    fn integer_rational_agrees_with_integer_p() {
        // p = a/1 parsed from "2a/2" reduces to the same predicate as "a".
        for a in 0..=3u64 {
            let from_ratio = Rational::new(2 * a, 2).unwrap();
            for n in 0..=12 {
                for k in 0..=n {
                    let (Ok(x), Ok(y)) = (
                        LanguageSpec::prefix_constrained(n, from_ratio, k),
                        LanguageSpec::prefix_constrained(n, Rational::integer(a), k),
                    ) else {
                        continue;
                    };
                    for word in brute(
                        &LanguageSpec::prefix_constrained(n, Rational::integer(0), k).unwrap(),
                    ) {
                        assert_eq!(x.contains(&word), y.contains(&word));
                    }
                }
            }
        }
    }

    #[test]
    fn large_sparse_enumeration() {
        let s = LanguageSpec::fibonacci(30, 15).unwrap();
        assert_eq!(s.enumerate().len(), 16);
        assert_eq!(s.cardinality(), 16u32.into());
    }
}
