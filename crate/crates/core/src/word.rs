//! Fixed-length binary words, their tails, and homogeneous transpositions.
//!
//! Words are packed most-significant-bit first into 64-bit limbs, so the
//! derived ordering on the packed representation is the lexicographic order
//! with `0 < 1` (and a proper prefix ordered before its extensions).

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const LIMB_BITS: usize = 64;

type Limbs = SmallVec<[u64; 1]>;

/// An immutable binary word. Index 0 is the leftmost symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    limbs: Limbs,
    len: usize,
    weight: usize,
}

#[inline]
fn mask(i: usize) -> u64 {
    1u64 << (LIMB_BITS - 1 - i % LIMB_BITS)
}

impl BinaryWord {
    /// The empty word.
    pub fn empty() -> Self {
        Self::zeros(0)
    }

    /// `0^n`.
    pub fn zeros(n: usize) -> Self {
        let mut limbs = Limbs::new();
        limbs.resize(n.div_ceil(LIMB_BITS), 0);
        BinaryWord {
            limbs,
            len: n,
            weight: 0,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut w = Self::zeros(0);
        for b in bits {
            w.push(b);
        }
        w
    }

    /// Parses a word from ASCII `0`/`1` text.
    pub fn parse(text: &str) -> Result<Self> {
        let mut w = Self::zeros(0);
        for (index, c) in text.chars().enumerate() {
            match c {
                '0' => w.push(false),
                '1' => w.push(true),
                found => return Err(Error::InvalidCharacter { index, found }),
            }
        }
        Ok(w)
    }

    fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(LIMB_BITS) {
            self.limbs.push(0);
        }
        if bit {
            self.limbs[self.len / LIMB_BITS] |= mask(self.len);
            self.weight += 1;
        }
        self.len += 1;
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of 1-symbols.
    #[inline]
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// The symbol at `i`. Panics if `i >= len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for word of length {}",
            self.len
        );
        self.limbs[i / LIMB_BITS] & mask(i) != 0
    }

    pub fn bits(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// The leftmost `len` symbols.
    pub fn prefix(&self, len: usize) -> BinaryWord {
        assert!(len <= self.len);
        let mut limbs: Limbs = self.limbs[..len.div_ceil(LIMB_BITS)].into();
        if !len.is_multiple_of(LIMB_BITS) {
            *limbs.last_mut().unwrap() &= !0u64 << (LIMB_BITS - len % LIMB_BITS);
        }
        let weight = limbs.iter().map(|l| l.count_ones() as usize).sum();
        BinaryWord { limbs, len, weight }
    }

    /// The rightmost `len` symbols.
    pub fn suffix(&self, len: usize) -> BinaryWord {
        assert!(len <= self.len);
        let skip = self.len - len;
        let (whole, shift) = (skip / LIMB_BITS, skip % LIMB_BITS);
        let src = &self.limbs[whole..];
        let mut limbs: Limbs = (0..len.div_ceil(LIMB_BITS))
            .map(|i| {
                let hi = src[i] << shift;
                let lo = match src.get(i + 1) {
                    Some(next) if shift > 0 => next >> (LIMB_BITS - shift),
                    _ => 0,
                };
                hi | lo
            })
            .collect();
        if !len.is_multiple_of(LIMB_BITS) {
            *limbs.last_mut().unwrap() &= !0u64 << (LIMB_BITS - len % LIMB_BITS);
        }
        let weight = limbs.iter().map(|l| l.count_ones() as usize).sum();
        BinaryWord { limbs, len, weight }
    }

    /// Length of the longest common suffix of `self` and `other`.
    pub fn common_suffix_len(&self, other: &BinaryWord) -> usize {
        self.bits()
            .rev()
            .zip(other.bits().rev())
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// `self · other`.
    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut w = self.clone();
        for b in other.bits() {
            w.push(b);
        }
        w
    }

    /// `true` when `self` and `other` agree on their last `len` symbols.
    pub fn same_suffix(&self, other: &BinaryWord, len: usize) -> bool {
        len <= self.len
            && len <= other.len
            && self
                .bits()
                .rev()
                .zip(other.bits().rev())
                .take(len)
                .all(|(a, b)| a == b)
    }

    /// The tail of the word: its unique maximal suffix of the form `01^m`.
    /// `None` exactly for the words `1^n`, including the empty word.
    pub fn tail(&self) -> Option<Tail> {
        let ones = self.bits().rev().take_while(|&b| b).count();
        (ones < self.len).then_some(Tail { ones })
    }

    /// Splits the word into the part before its tail and the tail itself.
    /// For a tail-less word the head is the whole word.
    pub fn split_tail(&self) -> (BinaryWord, Option<Tail>) {
        match self.tail() {
            Some(t) => (self.prefix(self.len - t.len()), Some(t)),
            None => (self.clone(), None),
        }
    }

    /// Every homogeneous transposition available on this word: pairs
    /// `(one, zero)` with a 1 at `one`, a 0 at `zero`, and no 1 strictly
    /// between them.
    pub fn homogeneous_moves(&self, order: MoveOrder) -> Vec<Move> {
        let mut moves = Vec::new();
        // a 1 at `one` reaches the zeros back to the previous 1 and forward
        // to the next; this yields the moves already sorted by (one, zero)
        let mut prev_one = None;
        for one in (0..self.len).filter(|&i| self.get(i)) {
            let left = prev_one.map_or(0, |p| p + 1);
            moves.extend((left..one).map(|zero| Move { one, zero }));
            moves.extend(
                (one + 1..self.len)
                    .take_while(|&j| !self.get(j))
                    .map(|zero| Move { one, zero }),
            );
            prev_one = Some(one);
        }
        if order == MoveOrder::ZeroFirst {
            moves.sort_unstable_by_key(|m| (m.zero, m.one));
        }
        moves
    }

    /// Swaps the 1 at `one` with the 0 at `zero`.
    pub fn apply_move(&self, one: usize, zero: usize) -> Result<BinaryWord> {
        let illegal = |reason| Error::IllegalMove {
            word: self.to_string(),
            i: one,
            j: zero,
            reason,
        };
        if one >= self.len || zero >= self.len {
            return Err(illegal("index out of range"));
        }
        if !self.get(one) {
            return Err(illegal("no 1 at the first index"));
        }
        if self.get(zero) {
            return Err(illegal("no 0 at the second index"));
        }
        let mut w = self.clone();
        w.limbs[one / LIMB_BITS] ^= mask(one);
        w.limbs[zero / LIMB_BITS] ^= mask(zero);
        Ok(w)
    }

    /// Returns the single transposition turning `self` into `other`, if the
    /// two words differ in exactly one 1 and one 0.
    pub fn transposition_to(&self, other: &BinaryWord) -> Option<Move> {
        if self.len != other.len {
            return None;
        }
        let mut one = None;
        let mut zero = None;
        for (i, (a, b)) in self.bits().zip(other.bits()).enumerate() {
            match (a, b) {
                (true, false) if one.is_none() => one = Some(i),
                (false, true) if zero.is_none() => zero = Some(i),
                (x, y) if x == y => {}
                _ => return None,
            }
        }
        Some(Move {
            one: one?,
            zero: zero?,
        })
    }

    /// `true` when no 1 lies strictly between the two positions of `mv`.
    pub fn is_homogeneous(&self, mv: Move) -> bool {
        let (lo, hi) = (mv.one.min(mv.zero), mv.one.max(mv.zero));
        (lo + 1..hi).all(|i| !self.get(i))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryWord::parse(s)
    }
}

/// A tail `01^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tail {
    /// `m`, the number of trailing ones.
    pub ones: usize,
}

impl Tail {
    /// Length of the tail, `m + 1`.
    pub fn len(&self) -> usize {
        self.ones + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_word(&self) -> BinaryWord {
        BinaryWord::from_bits(std::iter::once(false).chain(std::iter::repeat_n(true, self.ones)))
    }
}

/// Which index ranks first when ordering candidate moves.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum MoveOrder {
    /// Sort by the position of the 1, then by the position of the 0.
    #[default]
    OneFirst,
    /// Sort by the position of the 0, then by the position of the 1.
    ZeroFirst,
}

/// A transposition of the 1 at `one` with the 0 at `zero`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub one: usize,
    pub zero: usize,
}

impl From<(usize, usize)> for Move {
    fn from((one, zero): (usize, usize)) -> Self {
        Move { one, zero }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn moves(s: &str, order: MoveOrder) -> Vec<(usize, usize)> {
        w(s).homogeneous_moves(order)
            .into_iter()
            .map(|m| (m.one, m.zero))
            .collect()
    }

    #[test]
    fn parse_basic() {
        let x = w("0101");
        assert_eq!(x.len(), 4);
        assert_eq!(x.weight(), 2);
        assert_eq!(x.to_string(), "0101");

        let e = w("");
        assert!(e.is_empty());
        assert_eq!(e.weight(), 0);

        assert_eq!(
            BinaryWord::parse("0a1"),
            Err(Error::InvalidCharacter {
                index: 1,
                found: 'a'
            })
        );
    }

    #[test]
    fn long_words_cross_limbs() {
        let s: String = (0..150)
            .map(|i| if i % 7 == 3 { '1' } else { '0' })
            .collect();
        let x = w(&s);
        assert_eq!(x.to_string(), s);
        assert_eq!(x.weight(), s.matches('1').count());
        for len in [0, 1, 63, 64, 65, 70, 128, 150] {
            assert_eq!(x.suffix(len).to_string(), s[150 - len..]);
            assert_eq!(x.prefix(len).to_string(), s[..len]);
            assert_eq!(x.suffix(len).weight(), s[150 - len..].matches('1').count());
        }
    }

    #[test]
    fn order_is_lexicographic() {
        let mut v = [w("10"), w("01"), w("0"), w("1"), w("00"), w("11"), w("")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["", "0", "00", "01", "1", "10", "11"]);
    }

    #[test]
    fn tails() {
        assert_eq!(w("0001").tail(), Some(Tail { ones: 1 }));
        assert_eq!(w("0110").tail(), Some(Tail { ones: 0 }));
        assert_eq!(w("111").tail(), None);
        assert_eq!(w("").tail(), None);
        assert_eq!(w("0111").tail().unwrap().len(), 4);
        assert_eq!(w("1011").split_tail(), (w("1"), Some(Tail { ones: 2 })));
    }

    #[test]
    fn moves_examples() {
        assert_eq!(moves("0100", MoveOrder::OneFirst), [(1, 0), (1, 2), (1, 3)]);
        assert_eq!(moves("101", MoveOrder::OneFirst), [(0, 1), (2, 1)]);
        assert_eq!(moves("000", MoveOrder::OneFirst), []);
        assert_eq!(
            moves("1001", MoveOrder::ZeroFirst),
            [(0, 1), (3, 1), (0, 2), (3, 2)]
        );
    }

    #[test]
    fn apply_move_examples() {
        assert_eq!(w("0100").apply_move(1, 3).unwrap(), w("0001"));
        assert_eq!(w("10").apply_move(0, 1).unwrap(), w("01"));
        assert!(w("10").apply_move(1, 0).is_err());
        assert!(w("11").apply_move(0, 1).is_err());
        assert!(w("10").apply_move(0, 2).is_err());
    }

    #[test]
    fn transposition_detection() {
        assert_eq!(
            w("1000").transposition_to(&w("0010")),
            Some(Move { one: 0, zero: 2 })
        );
        assert_eq!(w("0101").transposition_to(&w("1010")), None);
        assert_eq!(w("0101").transposition_to(&w("0101")), None);
        assert!(!w("1100").is_homogeneous(Move { one: 0, zero: 2 }));
    }

    #[test]
    fn exhaustive_small_words() {
        for n in 0..=10usize {
            for code in 0u32..(1 << n) {
                let x = BinaryWord::from_bits((0..n).map(|i| code >> (n - 1 - i) & 1 == 1));
                let one = x.homogeneous_moves(MoveOrder::OneFirst);
                let mut zero = x.homogeneous_moves(MoveOrder::ZeroFirst);
                let mut sorted = one.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), one.len());
                zero.sort();
                assert_eq!(sorted, zero);

                // completeness against the pairwise definition
                let mut brute = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let mv = Move { one: i, zero: j };
                        if x.get(i) && !x.get(j) && x.is_homogeneous(mv) {
                            brute.push(mv);
                        }
                    }
                }
                brute.sort();
                assert_eq!(sorted, brute);

                for m in one {
                    let y = x.apply_move(m.one, m.zero).unwrap();
                    assert_eq!(y.len(), x.len());
                    assert_eq!(y.weight(), x.weight());
                    assert_eq!(y.apply_move(m.zero, m.one).unwrap(), x);
                    assert_eq!(x.transposition_to(&y), Some(m));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(s in "[01]{0,200}") {
            let x = w(&s);
            prop_assert_eq!(x.to_string(), s.clone());
            prop_assert_eq!(x.weight(), s.matches('1').count());
        }

        #[test]
        fn tail_reattaches(s in "[01]{0,100}") {
            let x = w(&s);
            let (head, tail) = x.split_tail();
            match tail {
                Some(t) => {
                    prop_assert_eq!(head.concat(&t.to_word()), x);
                }
                None => {
                    prop_assert_eq!(x.weight(), x.len());
                    prop_assert_eq!(head, x);
                }
            }
        }
    }
}
