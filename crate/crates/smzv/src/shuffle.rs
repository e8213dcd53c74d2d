//! Shuffle product on words, duality, and shuffle regularization.
//!
//! - `shuffle` expands u·w ⧢ u'·w' = u(w ⧢ u'w') + u'(uw ⧢ w'), memoized on
//!   word pairs with exact integer multiplicities.
//! - `tau` is the anti-automorphism that reverses a word and exchanges x, y.
//! - `reg_sh` projects onto the convergent subalgebra: it is the algebra
//!   homomorphism (for ⧢) that kills x and y and fixes every word that
//!   starts with y and ends with x.
//! - `zsh_symbolic` composes reg_sh with the word-to-index reading, yielding
//!   a formal combination of admissible zeta symbols.
//! - `regshwd_lhs` / `regshwd_rhs` build both sides of the leading-x-power
//!   expansion x^m z_k ≡ (-1)^m Σ_{|l|=m} (∏ binom) z_{k+l} mod x ⧢ 𝔥, and
//!   `leading_x_expansion` builds the exact word identity behind it.

use crate::combinatorics::{binomial, compositions};
use crate::error::{Error, Result};
use crate::expr::MzvExpression;
use crate::index::{index_of_word, word_of_index, Index};
use crate::word::{Letter, Word, WordPolynomial, MAX_LEN};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

type ShuffleTable = HashMap<(Word, Word), Arc<Vec<(Word, i128)>>>;

static SHUFFLE_MEMO: Lazy<Mutex<ShuffleTable>> = Lazy::new(|| Mutex::new(HashMap::new()));

// Enough for every verification batch while keeping the table bounded; on
// overflow results are still computed, just not retained.
const SHUFFLE_MEMO_CAP: usize = 1 << 15;

/// All interleavings of `a` and `b`, as a sorted (word, multiplicity) list.
///
/// Multiplicities fit in i128: each is at most binom(len(a)+len(b), len(a))
/// and words carry at most 128 letters.
pub fn shuffle_words(a: Word, b: Word) -> Arc<Vec<(Word, i128)>> {
    assert!(a.len() + b.len() <= MAX_LEN, "shuffle result would exceed word capacity");
    if a.is_empty() {
        return Arc::new(vec![(b, 1)]);
    }
    if b.is_empty() {
        return Arc::new(vec![(a, 1)]);
    }
    // the product is commutative, so normalize the memo key
    let key = if a <= b { (a, b) } else { (b, a) };
    if let Some(hit) = SHUFFLE_MEMO.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let (a, b) = key;
    let u = a.letter(0);
    let v = b.letter(0);
    let left = shuffle_words(a.tail(), b);
    let right = shuffle_words(a, b.tail());

    // Both branches are sorted and prefixing by a fixed letter preserves the
    // graded-lex order (all words here share one length), so a single merge
    // produces the sorted result.
    let mut out: Vec<(Word, i128)> = Vec::with_capacity(left.len() + right.len());
    let mut i = 0;
    let mut j = 0;
    while i < left.len() && j < right.len() {
        let lw = left[i].0.push_front(u);
        let rw = right[j].0.push_front(v);
        match lw.cmp(&rw) {
            std::cmp::Ordering::Less => {
                out.push((lw, left[i].1));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((rw, right[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((lw, left[i].1 + right[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    while i < left.len() {
        out.push((left[i].0.push_front(u), left[i].1));
        i += 1;
    }
    while j < right.len() {
        out.push((right[j].0.push_front(v), right[j].1));
        j += 1;
    }

    let out = Arc::new(out);
    let mut memo = SHUFFLE_MEMO.lock().unwrap();
    if memo.len() < SHUFFLE_MEMO_CAP {
        memo.insert(key, out.clone());
    }
    out
}

/// Shuffle of two single words as a polynomial.
pub fn shuffle_word(a: Word, b: Word) -> WordPolynomial {
    shuffle_words(a, b)
        .iter()
        .map(|(w, m)| (*w, BigRational::from_integer((*m).into())))
        .collect()
}

/// Bilinear extension of the shuffle product.
pub fn shuffle(a: &WordPolynomial, b: &WordPolynomial) -> WordPolynomial {
    let mut out = WordPolynomial::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let c = ca * cb;
            for (w, m) in shuffle_words(*wa, *wb).iter() {
                out.add_term(*w, &c * BigRational::from_integer((*m).into()));
            }
        }
    }
    out
}

/// Linear extension of the duality anti-automorphism (reverse + swap x,y).
pub fn tau(a: &WordPolynomial) -> WordPolynomial {
    a.iter().map(|(w, c)| (w.tau(), c.clone())).collect()
}

type RegTable = HashMap<Word, Arc<Vec<(Word, BigRational)>>>;

static REG_MEMO: Lazy<Mutex<RegTable>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Shuffle regularization of a single word, memoized.
///
/// Two reduction steps, both exact consequences of reg being a ⧢-algebra map
/// with reg(x) = reg(y) = 0:
///  (a) leading x-run: x^a y v = Σ_i (±) x^i ⧢ y(x^(a-i) ⧢ v); every term
///      with i ≥ 1 dies, leaving (-1)^a y(x^a ⧢ v), which is y-headed.
///  (b) trailing y-run: for w = u y^m (u empty or ending in x),
///      y ⧢ (u y^(m-1)) = m·w + words with a shorter trailing run, and the
///      left side regularizes to zero.
/// Both measures shrink toward words that start with y and end with x, where
/// reg is the identity.
fn reg_sh_word(w: Word) -> Arc<Vec<(Word, BigRational)>> {
    if w.is_h0() {
        return Arc::new(vec![(w, BigRational::one())]);
    }
    if let Some(hit) = REG_MEMO.lock().unwrap().get(&w) {
        return hit.clone();
    }

    let mut acc: BTreeMap<Word, BigRational> = BTreeMap::new();
    let add = |acc: &mut BTreeMap<Word, BigRational>, w: Word, c: BigRational| {
        let entry = acc.entry(w).or_insert_with(BigRational::zero);
        *entry += c;
    };

    if w.letter(0) == Letter::X {
        let a = w.leading_x_run();
        if a < w.len() {
            // w = x^a y v with the run maximal
            let v = w.suffix(a + 1);
            let sign = if a % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            for (t, m) in shuffle_words(Word::x_power(a), v).iter() {
                let c = &sign * BigRational::from_integer((*m).into());
                for (rw, rc) in reg_sh_word(t.push_front(Letter::Y)).iter() {
                    add(&mut acc, *rw, &c * rc);
                }
            }
        }
        // a == len: a bare x-power regularizes to zero
    } else {
        // y-headed and not in h0, so it ends in y: peel the trailing run
        let m = w.trailing_y_run();
        debug_assert!(m >= 1);
        let base = w.drop_last();
        let u_len = w.len() - m;
        let scale = BigRational::new((-1).into(), BigInt::from(m));
        for i in 0..u_len {
            for (rw, rc) in reg_sh_word(base.insert(i, Letter::Y)).iter() {
                add(&mut acc, *rw, &scale * rc);
            }
        }
        // u empty (bare y-power) leaves the empty sum: zero
    }

    let out: Vec<(Word, BigRational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let out = Arc::new(out);
    REG_MEMO.lock().unwrap().insert(w, out.clone());
    out
}

/// Shuffle regularization, linearly extended. The result satisfies `in_h0`.
pub fn reg_sh(a: &WordPolynomial) -> WordPolynomial {
    let mut out = WordPolynomial::zero();
    for (w, c) in a.iter() {
        for (rw, rc) in reg_sh_word(*w).iter() {
            out.add_term(*rw, c * rc);
        }
    }
    out
}

/// Regularized symbolic evaluation: reg_sh followed by reading each word as
/// an admissible zeta symbol.
pub fn zsh_symbolic(a: &WordPolynomial) -> MzvExpression {
    let mut out = MzvExpression::zero();
    for (w, c) in a.iter() {
        for (rw, rc) in reg_sh_word(*w).iter() {
            let k = index_of_word(*rw).expect("regularization lands in the convergent subalgebra");
            out.add_assign(&MzvExpression::mzv(&k).scale(&(c * rc)));
        }
    }
    out
}

/// Convenience: regularized symbolic evaluation of a single word.
pub fn zsh_word(w: Word) -> MzvExpression {
    zsh_symbolic(&WordPolynomial::basis(w))
}

/// The word x^m · z_{k_1} ⋯ z_{k_r}.
pub fn regshwd_lhs(m: u32, k: &Index) -> Word {
    Word::x_power(m).concat(word_of_index(k))
}

/// The weight-shift expansion (-1)^m Σ_{l_1+⋯+l_r=m} ∏_j binom(k_j+l_j-1, l_j)
/// · z_{k_1+l_1} ⋯ z_{k_r+l_r}, congruent to `regshwd_lhs(m, k)` modulo the
/// shuffle ideal generated by x.
pub fn regshwd_rhs(m: u32, k: &Index) -> Result<WordPolynomial> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let sign = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let mut out = WordPolynomial::zero();
    for l in compositions(m, k.depth()) {
        let mut coeff = sign.clone();
        for (j, lj) in l.iter().enumerate() {
            coeff *= binomial(k.parts()[j] + lj - 1, *lj);
        }
        out.add_term(word_of_index(&k.add_composition(&l)), BigRational::from_integer(coeff));
    }
    Ok(out)
}

/// The exact expansion Σ_{i=0}^m (-1)^(m-i) x^i ⧢ y(x^(m-i) ⧢ w), equal to
/// x^m y w as a word polynomial.
pub fn leading_x_expansion(m: u32, w: Word) -> WordPolynomial {
    let mut out = WordPolynomial::zero();
    for i in 0..=m {
        let sign = if (m - i) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        let mut y_inner = WordPolynomial::zero();
        for (t, c) in shuffle_words(Word::x_power(m - i), w).iter() {
            y_inner.add_term(t.push_front(Letter::Y), BigRational::from_integer((*c).into()));
        }
        let term = shuffle(&WordPolynomial::basis(Word::x_power(i)), &y_inner);
        out.add_assign(&term.scale(&sign));
    }
    out
}
