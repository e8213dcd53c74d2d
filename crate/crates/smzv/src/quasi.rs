//! Harmonic (stuffle) product and index shuffle on indices, the star-value
//! expansion, and harmonic regularization.
//!
//! - `harmonic` expands (𝐤,k) ∗ (𝐥,l) = (𝐤∗(𝐥,l), k) + (𝐤∗𝐥, k+l) + ((𝐤,k)∗𝐥, l).
//! - `index_shuffle` is the same recursion without the merge term: all
//!   interleavings, no part addition.
//! - `star_expand` rewrites a star value as the 2^(r-1)-term combination of
//!   ordinary values obtained by merging comma subsets.
//! - `reg_star` is the harmonic-regularized constant term: identity on
//!   admissible indices, zero on (1), computed by peeling trailing ones.

use crate::index::{Index, IndexCombination};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Append `part` to every index of `c`.
fn push_all(c: &IndexCombination, part: u32) -> IndexCombination {
    c.iter().map(|(k, q)| (k.push(part), q.clone())).collect()
}

/// Harmonic product of two single indices.
pub fn harmonic_indices(a: &Index, b: &Index) -> IndexCombination {
    // prefix-pair dynamic program over the right-append recursion
    let (pa, pb) = (a.parts(), b.parts());
    let mut prev: Vec<IndexCombination> = (0..=pb.len())
        .map(|j| IndexCombination::basis(Index::new(&pb[..j])))
        .collect();
    for i in 1..=pa.len() {
        let mut row: Vec<IndexCombination> = Vec::with_capacity(pb.len() + 1);
        row.push(IndexCombination::basis(Index::new(&pa[..i])));
        for j in 1..=pb.len() {
            let mut cell = push_all(&prev[j], pa[i - 1]);
            cell.add_assign(&push_all(&row[j - 1], pb[j - 1]));
            cell.add_assign(&push_all(&prev[j - 1], pa[i - 1] + pb[j - 1]));
            row.push(cell);
        }
        prev = row;
    }
    prev.pop().expect("dp row is nonempty")
}

/// Bilinear extension of the harmonic product. The empty index is the unit.
pub fn harmonic(a: &IndexCombination, b: &IndexCombination) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_assign(&harmonic_indices(ka, kb).scale(&(ca * cb)));
        }
    }
    out
}

/// Index shuffle of two single indices: interleavings only, no merging.
pub fn index_shuffle_indices(a: &Index, b: &Index) -> IndexCombination {
    let (pa, pb) = (a.parts(), b.parts());
    let mut prev: Vec<IndexCombination> = (0..=pb.len())
        .map(|j| IndexCombination::basis(Index::new(&pb[..j])))
        .collect();
    for i in 1..=pa.len() {
        let mut row: Vec<IndexCombination> = Vec::with_capacity(pb.len() + 1);
        row.push(IndexCombination::basis(Index::new(&pa[..i])));
        for j in 1..=pb.len() {
            let mut cell = push_all(&prev[j], pa[i - 1]);
            cell.add_assign(&push_all(&row[j - 1], pb[j - 1]));
            row.push(cell);
        }
        prev = row;
    }
    prev.pop().expect("dp row is nonempty")
}

/// Bilinear extension of the index shuffle.
pub fn index_shuffle(a: &IndexCombination, b: &IndexCombination) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_assign(&index_shuffle_indices(ka, kb).scale(&(ca * cb)));
        }
    }
    out
}

/// The alternating stuffle sum Σ_{i=0}^n (-1)^i (a·i+b) ∗ ({a}^(n-i)), which
/// collapses to the index shuffle (b) ⧢ ({a}ⁿ).
pub fn sha_alternating_lhs(a: u32, b: u32, n: u32) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for i in 0..=n {
        let head = Index::new([a * i + b]);
        let tail = Index::repeat(&[a], n - i);
        let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        out.add_assign(&harmonic_indices(&head, &tail).scale(&sign));
    }
    out
}

/// Expand a star value into ordinary values: one term per subset of commas,
/// each chosen comma replaced by a part merge.
pub fn star_expand(k: &Index) -> IndexCombination {
    let r = k.depth();
    if r == 0 {
        return IndexCombination::basis(Index::empty());
    }
    assert!(r <= 32, "star expansion of depth {r} would have 2^{} terms", r - 1);
    let parts = k.parts();
    let mut out = IndexCombination::zero();
    for mask in 0u64..(1u64 << (r - 1)) {
        let mut merged = vec![parts[0]];
        for (j, &p) in parts.iter().enumerate().skip(1) {
            if (mask >> (j - 1)) & 1 == 1 {
                *merged.last_mut().expect("nonempty") += p;
            } else {
                merged.push(p);
            }
        }
        out.add_term(Index::new(merged), BigRational::one());
    }
    out
}

type RegStarTable = HashMap<Index, Arc<IndexCombination>>;

static REG_STAR_MEMO: Lazy<Mutex<RegStarTable>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Harmonic-regularized constant term of a single index, as a combination of
/// admissible indices.
///
/// For k = (𝐥, {1}^m) with 𝐥 empty or ending above 1, the product
/// (𝐥, {1}^(m-1)) ∗ (1) equals m·k plus terms with a strictly shorter
/// trailing run of ones; the product regularizes to zero (the (1) factor
/// does), so k is solved for and the rest recursed.
pub fn reg_star(k: &Index) -> IndexCombination {
    if k.is_admissible() {
        return IndexCombination::basis(k.clone());
    }
    if let Some(hit) = REG_STAR_MEMO.lock().unwrap().get(k) {
        return (**hit).clone();
    }
    let m = k.parts().iter().rev().take_while(|&&p| p == 1).count();
    debug_assert!(m >= 1);
    let base = k.prefix(k.depth() - 1);
    let prod = harmonic_indices(&base, &Index::new([1]));
    debug_assert_eq!(
        prod.coeff(k),
        BigRational::from_integer(BigInt::from(m)),
        "peel multiplicity mismatch at {k}"
    );
    let scale = BigRational::new(BigInt::from(-1), BigInt::from(m));
    let mut out = IndexCombination::zero();
    for (j, c) in prod.iter() {
        if j == k {
            continue;
        }
        out.add_assign(&reg_star(j).scale(&(&scale * c)));
    }
    REG_STAR_MEMO.lock().unwrap().insert(k.clone(), Arc::new(out.clone()));
    out
}

/// Linear extension of `reg_star` to combinations.
pub fn reg_star_combination(c: &IndexCombination) -> IndexCombination {
    c.map_basis(|k| reg_star(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::format_index_combination;

    fn ix(parts: &[u32]) -> Index {
        Index::new(parts)
    }

    fn comb(entries: &[(&[u32], i64)]) -> IndexCombination {
        entries
            .iter()
            .map(|(p, c)| (ix(p), BigRational::from_integer((*c).into())))
            .collect()
    }

    #[test]
    fn harmonic_small_products() {
        assert_eq!(
            harmonic_indices(&Index::empty(), &ix(&[4, 2])),
            comb(&[(&[4, 2], 1)])
        );
        assert_eq!(
            harmonic_indices(&ix(&[1]), &ix(&[2])),
            comb(&[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
        assert_eq!(
            harmonic_indices(&ix(&[1]), &ix(&[1])),
            comb(&[(&[1, 1], 2), (&[2], 1)])
        );
        // commutativity and associativity on a non-trivial triple
        assert_eq!(harmonic_indices(&ix(&[2, 1]), &ix(&[3])), harmonic_indices(&ix(&[3]), &ix(&[2, 1])));
        let a = IndexCombination::basis(ix(&[1, 2]));
        let b = IndexCombination::basis(ix(&[2]));
        let c = IndexCombination::basis(ix(&[1]));
        assert_eq!(harmonic(&harmonic(&a, &b), &c), harmonic(&a, &harmonic(&b, &c)));
    }

    #[test]
    fn index_shuffle_small_products() {
        assert_eq!(
            index_shuffle_indices(&ix(&[1]), &ix(&[2])),
            comb(&[(&[1, 2], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            index_shuffle_indices(&ix(&[1, 2]), &ix(&[7])),
            comb(&[(&[1, 2, 7], 1), (&[1, 7, 2], 1), (&[7, 1, 2], 1)])
        );
        assert_eq!(
            index_shuffle_indices(&ix(&[5]), &Index::empty()),
            comb(&[(&[5], 1)])
        );
        // no merging: every term keeps full depth
        let s = index_shuffle_indices(&ix(&[1, 1]), &ix(&[2, 2]));
        assert!(s.keys().all(|k| k.depth() == 4));
        assert_eq!(
            s.iter().map(|(_, c)| c.clone()).sum::<BigRational>(),
            BigRational::from_integer(6.into())
        );
    }

    #[test]
    fn alternating_sum_collapses_to_index_shuffle() {
        assert_eq!(sha_alternating_lhs(3, 7, 0), comb(&[(&[7], 1)]));
        assert_eq!(
            sha_alternating_lhs(2, 1, 1),
            comb(&[(&[1, 2], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            sha_alternating_lhs(4, 5, 1),
            comb(&[(&[5, 4], 1), (&[4, 5], 1)])
        );
        for (a, b, n) in [(2u32, 3u32, 2u32), (1, 1, 3), (4, 2, 2)] {
            let lhs = sha_alternating_lhs(a, b, n);
            let rhs = index_shuffle_indices(&ix(&[b]), &Index::repeat(&[a], n));
            assert_eq!(lhs, rhs, "a={a}, b={b}, n={n}: {}", format_index_combination(&lhs));
        }
    }

    #[test]
    fn star_expansion_merges_comma_subsets() {
        assert_eq!(star_expand(&Index::empty()), comb(&[(&[], 1)]));
        assert_eq!(star_expand(&ix(&[9])), comb(&[(&[9], 1)]));
        assert_eq!(star_expand(&ix(&[2, 2])), comb(&[(&[2, 2], 1), (&[4], 1)]));
        assert_eq!(
            star_expand(&ix(&[2, 2, 2])),
            comb(&[(&[2, 2, 2], 1), (&[4, 2], 1), (&[2, 4], 1), (&[6], 1)])
        );
    }

    #[test]
    fn reg_star_examples() {
        assert_eq!(reg_star(&ix(&[2])), comb(&[(&[2], 1)]));
        assert_eq!(reg_star(&Index::empty()), comb(&[(&[], 1)]));
        assert!(reg_star(&ix(&[1])).is_zero());
        assert_eq!(reg_star(&ix(&[2, 1])), comb(&[(&[1, 2], -1), (&[3], -1)]));
        // zeta*(1,1) = -zeta(2)/2
        let r = reg_star(&ix(&[1, 1]));
        assert_eq!(
            r,
            IndexCombination::basis(ix(&[2])).scale(&BigRational::new((-1).into(), 2.into()))
        );
        // support is always admissible, and reg_star is then a fixed point
        for k in [ix(&[3, 1, 1]), ix(&[1, 2, 1]), ix(&[1, 1, 1])] {
            let r = reg_star(&k);
            assert!(r.keys().all(|j| j.is_admissible()), "non-admissible term in reg of {k}");
            assert_eq!(reg_star_combination(&r), r);
        }
    }
}
