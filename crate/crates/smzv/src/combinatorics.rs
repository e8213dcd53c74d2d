//! Exact binomials, factorials, Bernoulli numbers and composition
//! enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

// Pascal triangle rows, grown on demand. Row n holds C(n, 0..=n).
static PASCAL: Lazy<Mutex<Vec<Vec<BigInt>>>> =
    Lazy::new(|| Mutex::new(vec![vec![BigInt::one()]]));

/// C(n, k), exactly.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut rows = PASCAL.lock().unwrap();
    while rows.len() <= n as usize {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigInt::one());
        for i in 1..prev.len() {
            row.push(&prev[i - 1] + &prev[i]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n as usize][k as usize].clone()
}

/// n!, exactly.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

// Bernoulli numbers B_0, B_1, ... (B_1 = -1/2), grown on demand.
static BERNOULLI: Lazy<Mutex<Vec<BigRational>>> =
    Lazy::new(|| Mutex::new(vec![BigRational::one()]));

/// The Bernoulli number B_n, exactly, from the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
pub fn bernoulli(n: u32) -> BigRational {
    let mut cache = BERNOULLI.lock().unwrap();
    while cache.len() <= n as usize {
        let m = cache.len() as u32;
        let mut acc = BigRational::zero();
        for (j, b) in cache.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m + 1, j as u32)) * b;
        }
        let value = -acc / BigRational::from_integer((m + 1).into());
        cache.push(value);
    }
    cache[n as usize].clone()
}

/// All weak compositions of `total` into `parts` nonnegative summands, in
/// lexicographic order. `compositions(2, 2) = [[0,2],[1,1],[2,0]]`;
/// `compositions(m, 0)` is `[[]]` for m = 0 and empty otherwise.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(total: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = total;
            out.push(cur.clone());
            return;
        }
        for v in 0..=total {
            cur[pos] = v;
            rec(total - v, pos + 1, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 7), BigInt::from(0));
        // large enough to overflow u64 if done naively in fixed width
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479001600u64));
    }

    #[test]
    fn bernoulli_table() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(3), q(0, 1));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(8), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
    }

    #[test]
    fn compositions_counts() {
        // number of weak compositions of m into r parts is C(m+r-1, r-1)
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(compositions(2, 0).is_empty());
        assert_eq!(
            compositions(2, 2),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }
}
