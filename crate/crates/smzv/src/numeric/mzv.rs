//! Numeric evaluation of admissible multiple zeta values.
//!
//! ζ(k) is the iterated integral of the word z_{k_1}⋯z_{k_r}; splitting the
//! integration simplex at 1/2 turns it into
//!     ζ(k) = Σ_{j=0}^{n} L(w[..j]) · L(τ(w[j..])),
//! where every factor is a multiple polylogarithm at argument 1/2,
//!     L(z_{c_1}⋯z_{c_q}) = Σ_{0<m_1<…<m_q} 2^(-m_q) ∏ m_i^(-c_i),
//! a geometrically convergent series (one bit per term). Both halves stay
//! y-headed because admissible words start with y and end with x, so every
//! factor converges.
//!
//! Evaluations are cached in-process at the highest precision seen, and can
//! be persisted to / restored from a JSON-lines file.

use super::bigfloat::{bits_for_digits, BigFloat};
use crate::error::{Error, Result};
use crate::index::{index_of_word, word_of_index, Index};
use num_traits::ToPrimitive;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::Mutex;

// Iteration guard: evaluating beyond this many decimal digits is refused
// rather than silently looping for hours.
const MAX_DIGITS: u32 = 4000;

/// Multiple polylogarithm at 1/2 with exponent vector `c`, at working
/// precision `wbits` (absolute error well under 2^-(wbits-16)).
fn polylog_half(c: &[u32], wbits: u32) -> BigFloat {
    if c.is_empty() {
        return BigFloat::one(wbits);
    }
    // Tail: Σ_{m>N} 2^-m (1+ln m)^(q-1) ≤ 2^-(N-50) for the depths used
    // here, so N = wbits + 64 leaves the tail far below one ulp.
    let n_cut = wbits as usize + 64;
    let one = BigFloat::one(wbits);
    let inv: Vec<BigFloat> = (1..=n_cut)
        .map(|m| one.div(&BigFloat::from_i64(m as i64, wbits)))
        .collect();

    // row[m-1] = Σ over chains ending at m of ∏ m_i^(-c_i), built one
    // exponent at a time with running prefix sums
    let mut row: Vec<BigFloat> = inv.iter().map(|v| v.pow(c[0])).collect();
    for &ci in &c[1..] {
        let mut acc = BigFloat::zero(wbits);
        let mut next = Vec::with_capacity(n_cut);
        for m in 0..n_cut {
            next.push(acc.mul(&inv[m].pow(ci)));
            acc = acc.add(&row[m]);
        }
        row = next;
    }
    // Horner in the factor 1/2: Σ_m row[m-1] 2^-m
    let mut total = BigFloat::zero(wbits);
    for m in (0..n_cut).rev() {
        total = total.add(&row[m]).shr_int(1);
    }
    total
}

type PolylogKey = (Vec<u32>, u32);

static POLYLOG_CACHE: Lazy<Mutex<HashMap<PolylogKey, BigFloat>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

const POLYLOG_CACHE_CAP: usize = 1 << 16;

fn polylog_half_cached(c: &[u32], wbits: u32) -> BigFloat {
    let key = (c.to_vec(), wbits);
    if let Some(hit) = POLYLOG_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let out = polylog_half(c, wbits);
    let mut cache = POLYLOG_CACHE.lock().unwrap();
    if cache.len() < POLYLOG_CACHE_CAP {
        cache.insert(key, out.clone());
    }
    out
}

struct CachedMzv {
    digits: u32,
    value: BigFloat,
}

static MZV_CACHE: Lazy<Mutex<HashMap<Index, CachedMzv>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// ζ(k) for an admissible index, to `digits` decimal digits.
pub fn eval_mzv(k: &Index, digits: u32) -> Result<BigFloat> {
    if !k.is_admissible() {
        return Err(Error::NotAdmissible(k.to_string()));
    }
    if digits > MAX_DIGITS {
        return Err(Error::PrecisionUnreachable {
            digits,
            reason: format!("evaluation beyond {MAX_DIGITS} digits is not supported"),
        });
    }
    let bits = bits_for_digits(digits);
    if k.is_empty() {
        return Ok(BigFloat::one(bits));
    }
    if let Some(hit) = MZV_CACHE.lock().unwrap().get(k) {
        if hit.digits >= digits {
            return Ok(hit.value.with_bits(bits));
        }
    }

    let w = word_of_index(k);
    let wbits = bits + 64;
    let mut total = BigFloat::zero(wbits);
    for j in 0..=w.len() {
        let head = index_of_word(w.prefix(j)).expect("prefix of an admissible word is y-headed");
        let tail =
            index_of_word(w.suffix(j).tau()).expect("dual of an admissible suffix is y-headed");
        let prod =
            polylog_half_cached(head.parts(), wbits).mul(&polylog_half_cached(tail.parts(), wbits));
        total = total.add(&prod);
    }
    let out = total.with_bits(bits);
    let mut cache = MZV_CACHE.lock().unwrap();
    let stale = cache.get(k).map_or(true, |old| old.digits < digits);
    if stale {
        cache.insert(k.clone(), CachedMzv { digits, value: out.clone() });
    }
    Ok(out)
}

/// Load previously computed values from a JSON-lines cache file; returns how
/// many entries were accepted. Unreadable lines are skipped.
pub fn load_cache_file(path: &Path) -> std::io::Result<usize> {
    let file = std::fs::File::open(path)?;
    let reader = std::io::BufReader::new(file);
    let mut accepted = 0;
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let Ok(record) = serde_json::from_str::<serde_json::Value>(&line) else {
            continue;
        };
        let (Some(parts), Some(digits), Some(value)) = (
            record.get("index").and_then(|v| v.as_array()),
            record.get("digits").and_then(|v| v.as_u64()),
            record.get("value").and_then(|v| v.as_str()),
        ) else {
            continue;
        };
        let Some(parts) = parts
            .iter()
            .map(|p| p.as_u64().and_then(|x| x.to_u32()).filter(|&x| x >= 1))
            .collect::<Option<Vec<u32>>>()
        else {
            continue;
        };
        let digits = digits.min(MAX_DIGITS as u64) as u32;
        let k = Index::new(parts);
        if !k.is_admissible() {
            continue;
        }
        let Ok(value) = BigFloat::parse(value, bits_for_digits(digits)) else {
            continue;
        };
        let mut cache = MZV_CACHE.lock().unwrap();
        let stale = cache.get(&k).map_or(true, |old| old.digits < digits);
        if stale {
            cache.insert(k, CachedMzv { digits, value });
            accepted += 1;
        }
    }
    Ok(accepted)
}

/// Persist the in-process cache as JSON lines; returns how many entries were
/// written. The write is atomic (temp file + rename).
pub fn save_cache_file(path: &Path) -> std::io::Result<usize> {
    let cache = MZV_CACHE.lock().unwrap();
    let mut entries: Vec<(&Index, &CachedMzv)> = cache.iter().collect();
    entries.sort_by(|a, b| a.0.cmp(b.0));
    let tmp = path.with_extension("tmp");
    {
        let mut out = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
        for (k, entry) in &entries {
            let record = serde_json::json!({
                "index": k.parts(),
                "digits": entry.digits,
                "value": entry.value.to_decimal(entry.digits + 5),
            });
            writeln!(out, "{record}")?;
        }
        out.flush()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(entries.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::consts::pi_const;

    fn tol(digits: i64, bits: u32) -> BigFloat {
        BigFloat::parse(&format!("1e-{digits}"), bits).unwrap()
    }

    #[test]
    fn empty_index_is_one() {
        let v = eval_mzv(&Index::empty(), 30).unwrap();
        assert_eq!(v, BigFloat::one(v.bits()));
    }

    #[test]
    fn rejects_divergent_indices() {
        assert!(matches!(
            eval_mzv(&Index::new([2, 1]), 30),
            Err(Error::NotAdmissible(_))
        ));
        assert!(matches!(
            eval_mzv(&Index::new([1]), 30),
            Err(Error::NotAdmissible(_))
        ));
        assert!(matches!(
            eval_mzv(&Index::new([2]), 100_000),
            Err(Error::PrecisionUnreachable { .. })
        ));
    }

    #[test]
    fn depth_one_matches_even_closed_forms() {
        let digits = 60;
        let pi = pi_const(digits + 5);
        // zeta(2) = pi^2/6
        let z2 = eval_mzv(&Index::new([2]), digits).unwrap();
        let expect = pi.pow(2).div(&BigFloat::from_i64(6, pi.bits()));
        assert!(z2.sub(&expect).abs() < tol(58, z2.bits()), "zeta(2) = {}", z2.to_decimal(60));
        // zeta(4) = pi^4/90
        let z4 = eval_mzv(&Index::new([4]), digits).unwrap();
        let expect = pi.pow(4).div(&BigFloat::from_i64(90, pi.bits()));
        assert!(z4.sub(&expect).abs() < tol(58, z4.bits()));
    }

    #[test]
    fn weight_four_closed_forms() {
        let digits = 60;
        let pi = pi_const(digits + 5);
        // zeta(1,3) = pi^4/360
        let v = eval_mzv(&Index::new([1, 3]), digits).unwrap();
        let expect = pi.pow(4).div(&BigFloat::from_i64(360, pi.bits()));
        assert!(v.sub(&expect).abs() < tol(58, v.bits()), "zeta(1,3) = {}", v.to_decimal(60));
        // zeta(2,2) = pi^4/120
        let v = eval_mzv(&Index::new([2, 2]), digits).unwrap();
        let expect = pi.pow(4).div(&BigFloat::from_i64(120, pi.bits()));
        assert!(v.sub(&expect).abs() < tol(58, v.bits()));
    }

    #[test]
    fn duality_example() {
        // zeta(1,2) = zeta(3)
        let digits = 50;
        let a = eval_mzv(&Index::new([1, 2]), digits).unwrap();
        let b = eval_mzv(&Index::new([3]), digits).unwrap();
        assert!(a.sub(&b).abs() < tol(48, a.bits()));
    }

    #[test]
    fn precision_doubling_is_consistent() {
        let lo = eval_mzv(&Index::new([2, 3]), 30).unwrap();
        let hi = eval_mzv(&Index::new([2, 3]), 60).unwrap();
        assert!(lo.sub(&hi).abs() < tol(28, hi.bits()));
    }

    #[test]
    fn cache_file_round_trip() {
        let dir = std::env::temp_dir().join(format!("mzv-cache-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        eval_mzv(&Index::new([5]), 40).unwrap();
        let written = save_cache_file(&path).unwrap();
        assert!(written >= 1);
        let loaded = load_cache_file(&path).unwrap();
        // nothing newly accepted (all entries already cached at >= digits),
        // but parsing must succeed
        assert!(loaded <= written);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
