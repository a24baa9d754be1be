use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An exact nonnegative rational `num / den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    /// Builds `num / den` reduced to lowest terms. Fails when `den == 0`.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidRational(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub const fn integer(value: u64) -> Self {
        Rational { num: value, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The integer value, if this rational is one.
    pub fn to_integer(&self) -> Option<u64> {
        self.is_integer().then_some(self.num)
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }

    /// `zeros >= self * ones`, compared exactly.
    #[inline]
    pub fn ratio_satisfied(&self, zeros: usize, ones: usize) -> bool {
        zeros as u128 * self.den as u128 >= self.num as u128 * ones as u128
    }

    /// `(self + 1) * k <= n`, compared exactly.
    pub fn fits(&self, n: usize, k: usize) -> bool {
        (self.num as u128 + self.den as u128) * k as u128 <= n as u128 * self.den as u128
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let digits = |t: &str| -> Result<u64> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::integer(digits(s)?)),
            Some((a, b)) => Rational::new(digits(a)?, digits(b)?).map_err(|_| bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(
            "3/2".parse::<Rational>().unwrap(),
            Rational::new(3, 2).unwrap()
        );
        assert_eq!("4/2".parse::<Rational>().unwrap(), Rational::integer(2));
        assert_eq!("0/5".parse::<Rational>().unwrap(), Rational::integer(0));
        assert_eq!("7".parse::<Rational>().unwrap().to_integer(), Some(7));
        for bad in ["", "1/0", "-1", "1/", "/2", "1.5", "a", "1/2/3", "+3"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn ceil_and_display() {
        let r = Rational::new(5, 2).unwrap();
        assert_eq!(r.ceil(), 3);
        assert_eq!(r.to_string(), "5/2");
        assert_eq!(Rational::integer(2).ceil(), 2);
        assert_eq!(Rational::integer(0).ceil(), 0);
    }

    #[test]
    fn exact_comparisons() {
        let r = Rational::new(3, 2).unwrap();
        assert!(r.ratio_satisfied(3, 2));
        assert!(!r.ratio_satisfied(1, 1));
        assert!(r.fits(5, 2));
        assert!(!r.fits(4, 2));
    }
}
