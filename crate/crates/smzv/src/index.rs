//! Indices (tuples of positive integers), their formal combinations, and the
//! translation to and from y-headed words.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::word::{Letter, Word};
use std::fmt;

/// A tuple of positive integer parts, possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: impl Into<Vec<u32>>) -> Index {
        let parts = parts.into();
        assert!(parts.iter().all(|&k| k >= 1), "index parts must be positive");
        Index(parts)
    }

    pub const fn empty() -> Index {
        Index(Vec::new())
    }

    /// `pattern` repeated `n` times, e.g. `repeat(&[1,3], 2) = (1,3,1,3)`.
    pub fn repeat(pattern: &[u32], n: u32) -> Index {
        let mut parts = Vec::with_capacity(pattern.len() * n as usize);
        for _ in 0..n {
            parts.extend_from_slice(pattern);
        }
        Index::new(parts)
    }

    /// Parse a comma-separated list of positive integers; empty input is the
    /// empty index.
    pub fn parse(s: &str) -> std::result::Result<Index, String> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Index::empty());
        }
        let mut parts = Vec::new();
        for piece in s.trim_start_matches('(').trim_end_matches(')').split(',') {
            let k: u32 = piece
                .trim()
                .parse()
                .map_err(|_| format!("invalid index part {:?}", piece.trim()))?;
            if k == 0 {
                return Err("index parts must be positive".to_string());
            }
            parts.push(k);
        }
        Ok(Index(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Admissible means the defining nested sum converges: empty, or last
    /// part at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.last().map_or(true, |&k| k >= 2)
    }

    pub fn has_adjacent_ones(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == 1 && w[1] == 1)
    }

    pub fn reverse(&self) -> Index {
        let mut parts = self.0.clone();
        parts.reverse();
        Index(parts)
    }

    pub fn push(&self, part: u32) -> Index {
        assert!(part >= 1);
        let mut parts = self.0.clone();
        parts.push(part);
        Index(parts)
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Index(parts)
    }

    /// First `i` parts.
    pub fn prefix(&self, i: usize) -> Index {
        Index(self.0[..i].to_vec())
    }

    /// Parts from position `i` on.
    pub fn suffix(&self, i: usize) -> Index {
        Index(self.0[i..].to_vec())
    }

    /// Copy with part `i` increased by one.
    pub fn with_part_incremented(&self, i: usize) -> Index {
        let mut parts = self.0.clone();
        parts[i] += 1;
        Index(parts)
    }

    /// Componentwise sum with a weak composition of the same depth.
    pub fn add_composition(&self, l: &[u32]) -> Index {
        debug_assert_eq!(self.depth(), l.len());
        Index(self.0.iter().zip(l).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Index{self}")
    }
}

impl From<&[u32]> for Index {
    fn from(parts: &[u32]) -> Index {
        Index::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Index {
    fn from(parts: [u32; N]) -> Index {
        Index::new(parts.to_vec())
    }
}

/// The word z_{k_1} ... z_{k_r} with z_k = y x^{k-1}.
pub fn word_of_index(k: &Index) -> Word {
    let mut out = Word::empty();
    for &part in k.parts() {
        out = out.concat(Word::z(part));
    }
    out
}

/// Inverse of [`word_of_index`]; fails unless the word starts with y (or is
/// empty).
pub fn index_of_word(w: Word) -> Result<Index> {
    if w.is_empty() {
        return Ok(Index::empty());
    }
    if w.first() != Some(Letter::Y) {
        return Err(Error::NotInH1);
    }
    let mut parts: Vec<u32> = Vec::new();
    for l in w.letters() {
        match l {
            Letter::Y => parts.push(1),
            Letter::X => *parts.last_mut().unwrap() += 1,
        }
    }
    Ok(Index(parts))
}

/// Q-linear combination of indices.
pub type IndexCombination = LinComb<Index>;

pub fn format_index_combination(c: &IndexCombination) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, q)) in c.iter().enumerate() {
        let neg = q < &num_rational::BigRational::from_integer(0.into());
        let mag = if neg { -q.clone() } else { q.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let one = num_rational::BigRational::from_integer(1.into());
        if mag != one {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(&k.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(Index::parse("1,3").unwrap(), Index::new([1, 3]));
        assert_eq!(Index::parse(" 2 , 10 ").unwrap(), Index::new([2, 10]));
        assert_eq!(Index::parse("").unwrap(), Index::empty());
        assert_eq!(Index::parse("(1,3)").unwrap(), Index::new([1, 3]));
        assert!(Index::parse("0,2").is_err());
        assert!(Index::parse("a").is_err());
        assert_eq!(Index::new([1, 3]).to_string(), "(1,3)");
        assert_eq!(Index::empty().to_string(), "()");
    }

    #[test]
    fn attributes() {
        let k = Index::new([1, 3, 2]);
        assert_eq!(k.weight(), 6);
        assert_eq!(k.depth(), 3);
        assert!(k.is_admissible());
        assert!(!Index::new([2, 1]).is_admissible());
        assert!(Index::empty().is_admissible());
        assert!(Index::new([1, 1, 3]).has_adjacent_ones());
        assert!(!Index::new([1, 3, 1]).has_adjacent_ones());
        assert_eq!(k.reverse(), Index::new([2, 3, 1]));
        assert_eq!(Index::repeat(&[3, 1], 2), Index::new([3, 1, 3, 1]));
        assert_eq!(Index::repeat(&[2], 0), Index::empty());
        assert_eq!(k.prefix(1), Index::new([1]));
        assert_eq!(k.suffix(1), Index::new([3, 2]));
        assert_eq!(k.with_part_incremented(0), Index::new([2, 3, 2]));
        assert_eq!(k.add_composition(&[0, 2, 1]), Index::new([1, 5, 3]));
    }

    #[test]
    fn word_index_roundtrip() {
        assert_eq!(word_of_index(&Index::new([2])), Word::parse("yx").unwrap());
        assert_eq!(
            word_of_index(&Index::new([1, 3])),
            Word::parse("yyxx").unwrap()
        );
        assert_eq!(word_of_index(&Index::empty()), Word::empty());
        for parts in [vec![], vec![1], vec![2, 1, 1], vec![3, 1, 4, 1]] {
            let k = Index::new(parts);
            assert_eq!(index_of_word(word_of_index(&k)).unwrap(), k);
        }
        assert_eq!(
            index_of_word(Word::parse("xy").unwrap()),
            Err(Error::NotInH1)
        );
    }

    #[test]
    fn depth_then_lex_order() {
        let mut v = vec![
            Index::new([3]),
            Index::new([1, 2]),
            Index::new([10]),
            Index::new([1, 1, 1]),
            Index::new([2, 1]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|k| k.to_string()).collect();
        assert_eq!(shown, ["(3)", "(10)", "(1,2)", "(2,1)", "(1,1,1)"]);
    }
}
