//! Words in the two letters x, y and their formal Q-linear combinations.
//!
//! A word is bit-packed into a `u128` (one bit per letter, LSB = first
//! letter), so it is `Copy`, hashes cheaply, and works directly as a memo
//! key. Capacity is 128 letters; the heaviest verification paths stay well
//! under half of that even after concatenation.

use crate::lincomb::LinComb;
use std::fmt;

pub const MAX_LEN: u32 = 128;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u128 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u128) -> Letter {
        if b == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word over {x, y}. Letter i sits in bit i; bits at positions >= len are
/// kept zero so derived equality and hashing see a canonical value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u128,
    len: u32,
}

impl Word {
    pub const fn empty() -> Word {
        Word { bits: 0, len: 0 }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(letters.len() as u32 <= MAX_LEN, "word too long");
        let mut bits = 0u128;
        for (i, l) in letters.iter().enumerate() {
            bits |= l.bit() << i;
        }
        Word { bits, len: letters.len() as u32 }
    }

    /// Parse from a string of `x`/`y` characters; empty string (or `"1"`) is
    /// the empty word.
    pub fn parse(s: &str) -> Result<Word, String> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        let mut bits = 0u128;
        let mut len = 0u32;
        for ch in s.chars() {
            let b = match ch {
                'x' => 0u128,
                'y' => 1u128,
                _ => return Err(format!("invalid letter {ch:?} in word (expected x or y)")),
            };
            if len >= MAX_LEN {
                return Err(format!("word longer than {MAX_LEN} letters"));
            }
            bits |= b << len;
            len += 1;
        }
        Ok(Word { bits, len })
    }

    /// x^a
    pub fn x_power(a: u32) -> Word {
        assert!(a <= MAX_LEN);
        Word { bits: 0, len: a }
    }

    /// y^a
    pub fn y_power(a: u32) -> Word {
        assert!(a <= MAX_LEN);
        Word { bits: mask(a), len: a }
    }

    /// z_k = y x^{k-1}, the standard depth-one block (k >= 1).
    pub fn z(k: u32) -> Word {
        assert!(k >= 1, "z_k needs k >= 1");
        Word { bits: 1, len: k }
    }

    pub fn len(self) -> u32 {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn letter(self, i: u32) -> Letter {
        debug_assert!(i < self.len);
        Letter::from_bit((self.bits >> i) & 1)
    }

    pub fn first(self) -> Option<Letter> {
        (self.len > 0).then(|| self.letter(0))
    }

    pub fn last(self) -> Option<Letter> {
        (self.len > 0).then(|| self.letter(self.len - 1))
    }

    /// Number of y letters (the depth of the corresponding index).
    pub fn y_count(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len).map(move |i| self.letter(i))
    }

    pub fn push_front(self, l: Letter) -> Word {
        assert!(self.len < MAX_LEN, "word too long");
        Word { bits: (self.bits << 1) | l.bit(), len: self.len + 1 }
    }

    pub fn push_back(self, l: Letter) -> Word {
        assert!(self.len < MAX_LEN, "word too long");
        Word { bits: self.bits | (l.bit() << self.len), len: self.len + 1 }
    }

    /// Word with the first letter removed.
    pub fn tail(self) -> Word {
        debug_assert!(self.len > 0);
        Word { bits: self.bits >> 1, len: self.len - 1 }
    }

    /// Word with the last letter removed.
    pub fn drop_last(self) -> Word {
        debug_assert!(self.len > 0);
        let len = self.len - 1;
        Word { bits: self.bits & mask(len), len }
    }

    pub fn concat(self, other: Word) -> Word {
        assert!(self.len + other.len <= MAX_LEN, "word too long");
        Word { bits: self.bits | (other.bits << self.len), len: self.len + other.len }
    }

    /// self repeated n times.
    pub fn power(self, n: u32) -> Word {
        let mut out = Word::empty();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// First `j` letters.
    pub fn prefix(self, j: u32) -> Word {
        debug_assert!(j <= self.len);
        Word { bits: self.bits & mask(j), len: j }
    }

    /// Letters from position `j` to the end.
    pub fn suffix(self, j: u32) -> Word {
        debug_assert!(j <= self.len);
        Word { bits: self.bits >> j, len: self.len - j }
    }

    /// Insert a letter so that it lands at position `i` (0 <= i <= len).
    pub fn insert(self, i: u32, l: Letter) -> Word {
        assert!(self.len < MAX_LEN, "word too long");
        debug_assert!(i <= self.len);
        let low = self.bits & mask(i);
        let high = (self.bits >> i) << (i + 1);
        Word { bits: low | (l.bit() << i) | high, len: self.len + 1 }
    }

    pub fn reverse(self) -> Word {
        if self.len == 0 {
            return self;
        }
        Word { bits: self.bits.reverse_bits() >> (128 - self.len), len: self.len }
    }

    /// Exchange x and y in every position.
    pub fn swap_letters(self) -> Word {
        Word { bits: self.bits ^ mask(self.len), len: self.len }
    }

    /// Duality anti-automorphism on monomials: reverse, then swap x and y.
    pub fn tau(self) -> Word {
        self.reverse().swap_letters()
    }

    /// Length of the maximal x-run at the front.
    pub fn leading_x_run(self) -> u32 {
        let significant = self.bits | !mask(self.len); // force ones past the end
        significant.trailing_zeros().min(self.len)
    }

    /// Length of the maximal y-run at the back.
    pub fn trailing_y_run(self) -> u32 {
        if self.len == 0 {
            return 0;
        }
        // shift y-bits so the last letter is the u128 MSB, count leading ones
        (self.bits << (128 - self.len)).leading_ones().min(self.len)
    }

    /// Monomial test for the y-headed subalgebra: empty or first letter y.
    pub fn is_h1(self) -> bool {
        self.len == 0 || self.letter(0) == Letter::Y
    }

    /// Monomial test for the convergent subalgebra: empty, or starts y and
    /// ends x.
    pub fn is_h0(self) -> bool {
        self.len == 0 || (self.letter(0) == Letter::Y && self.letter(self.len - 1) == Letter::X)
    }

    // Graded lexicographic key: length first, then letters left to right with
    // x < y. Reversing the bit order makes position 0 the most significant,
    // so plain integer comparison is the lexicographic one.
    fn lex_key(self) -> u128 {
        if self.len == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (128 - self.len)
        }
    }
}

fn mask(len: u32) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len, self.lex_key()).cmp(&(other.len, other.lex_key()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Q-linear combination of words.
pub type WordPolynomial = LinComb<Word>;

impl WordPolynomial {
    pub fn one() -> WordPolynomial {
        WordPolynomial::basis(Word::empty())
    }

    /// Every monomial y-headed (or the polynomial is a multiple of 1)?
    pub fn in_h1(&self) -> bool {
        self.keys().all(|w| w.is_h1())
    }

    /// Every monomial in the convergent subalgebra?
    pub fn in_h0(&self) -> bool {
        self.keys().all(|w| w.is_h0())
    }
}

pub fn format_word_polynomial(p: &WordPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.iter().enumerate() {
        let neg = c < &num_rational::BigRational::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let one = num_rational::BigRational::from_integer(1.into());
        if mag != one || w.is_empty() {
            out.push_str(&mag.to_string());
            if !w.is_empty() {
                out.push('*');
            }
        }
        if !w.is_empty() {
            out.push_str(&w.to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn roundtrip_display_parse() {
        for s in ["", "x", "y", "xy", "yx", "yxxyx", "yyyxxy"] {
            let word = w(s);
            let shown = word.to_string();
            let expect = if s.is_empty() { "1" } else { s };
            assert_eq!(shown, expect);
            assert_eq!(Word::parse(&shown).unwrap(), word);
        }
        assert!(Word::parse("xz").is_err());
    }

    #[test]
    fn structure_ops() {
        let word = w("yxxyx");
        assert_eq!(word.len(), 5);
        assert_eq!(word.y_count(), 2);
        assert_eq!(word.first(), Some(Letter::Y));
        assert_eq!(word.last(), Some(Letter::X));
        assert_eq!(word.tail(), w("xxyx"));
        assert_eq!(word.drop_last(), w("yxxy"));
        assert_eq!(word.prefix(2), w("yx"));
        assert_eq!(word.suffix(2), w("xyx"));
        assert_eq!(w("yx").concat(w("xyx")), word);
        assert_eq!(w("xy").power(3), w("xyxyxy"));
        assert_eq!(word.insert(0, Letter::Y), w("yyxxyx"));
        assert_eq!(word.insert(5, Letter::Y), w("yxxyxy"));
        assert_eq!(word.insert(2, Letter::Y), w("yxyxyx"));
    }

    #[test]
    fn tau_is_reverse_swap() {
        assert_eq!(w("yx").tau(), w("yx"));
        assert_eq!(w("yxx").tau(), w("yyx"));
        assert_eq!(w("yxyx").tau(), w("yxyx"));
        assert_eq!(w("yyx").tau(), w("yxx"));
        assert_eq!(Word::empty().tau(), Word::empty());
        // involution on a batch of words
        for s in ["x", "y", "xy", "yxxyxyy", "xxyy"] {
            assert_eq!(w(s).tau().tau(), w(s));
        }
    }

    #[test]
    fn runs_and_membership() {
        assert_eq!(w("xxxyxy").leading_x_run(), 3);
        assert_eq!(w("yxy").leading_x_run(), 0);
        assert_eq!(Word::x_power(4).leading_x_run(), 4);
        assert_eq!(w("yxyy").trailing_y_run(), 2);
        assert_eq!(w("yx").trailing_y_run(), 0);
        assert_eq!(Word::y_power(3).trailing_y_run(), 3);
        assert_eq!(Word::empty().trailing_y_run(), 0);

        assert!(Word::empty().is_h0());
        assert!(w("yx").is_h0());
        assert!(!w("yxy").is_h0());
        assert!(w("yxy").is_h1());
        assert!(!w("xy").is_h1());
    }

    #[test]
    fn graded_lex_order() {
        // length dominates, then x < y position by position
        let mut words = vec![w("y"), w("xy"), w("x"), w("yx"), w("xx"), w("yy")];
        words.sort();
        let shown: Vec<String> = words.iter().map(|u| u.to_string()).collect();
        assert_eq!(shown, ["x", "y", "xx", "xy", "yx", "yy"]);
    }

    #[test]
    fn z_blocks() {
        assert_eq!(Word::z(1), w("y"));
        assert_eq!(Word::z(3), w("yxx"));
    }

    #[test]
    fn polynomial_display() {
        let mut p = WordPolynomial::zero();
        p.add_term(w("xy"), num_rational::BigRational::from_integer(2.into()));
        p.add_term(
            w("y"),
            num_rational::BigRational::new((-1).into(), 2.into()),
        );
        p.add_term(Word::empty(), num_rational::BigRational::from_integer(1.into()));
        assert_eq!(format_word_polynomial(&p), "1 - 1/2*y + 2*xy");
        assert_eq!(format_word_polynomial(&WordPolynomial::zero()), "0");
    }
}
