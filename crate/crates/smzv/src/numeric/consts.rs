//! π and Riemann zeta values at arbitrary precision.

use super::bigfloat::{bits_for_digits, BigFloat};
use super::mzv::eval_mzv;
use crate::combinatorics::{bernoulli, factorial};
use crate::error::Result;
use crate::index::Index;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// Σ_j (-1)^j / ((2j+1) k^(2j+1)) at fixed-point scale 2^wbits.
fn arctan_recip(k: u64, wbits: u32) -> BigInt {
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut term = (BigInt::one() << wbits) / BigInt::from(k);
    let mut total = BigInt::zero();
    let mut j = 0u64;
    while !term.is_zero() {
        let contrib = &term / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            total += &contrib;
        } else {
            total -= &contrib;
        }
        term /= &k2;
        j += 1;
    }
    total
}

static PI_CACHE: Lazy<Mutex<Option<BigFloat>>> = Lazy::new(|| Mutex::new(None));

/// π at the given binary precision (Machin: π = 16 atan(1/5) − 4 atan(1/239)).
pub fn pi_bits(bits: u32) -> BigFloat {
    {
        let cache = PI_CACHE.lock().unwrap();
        if let Some(v) = cache.as_ref() {
            if v.bits() >= bits {
                return v.with_bits(bits);
            }
        }
    }
    let wbits = bits + 32;
    let mant = arctan_recip(5, wbits) * 16 - arctan_recip(239, wbits) * 4;
    let full = BigFloat::from_mantissa(mant, wbits);
    let out = full.with_bits(bits);
    *PI_CACHE.lock().unwrap() = Some(full);
    out
}

/// π to `digits` decimal digits.
pub fn pi_const(digits: u32) -> BigFloat {
    pi_bits(bits_for_digits(digits))
}

/// Exact rational c with ζ(2m) = c·π^(2m), from the Bernoulli closed form.
pub fn zeta_even_rational(n: u32) -> BigRational {
    assert!(n >= 2 && n % 2 == 0, "even zeta closed form needs even n >= 2");
    // ζ(2m) = |B_2m| (2π)^(2m) / (2 (2m)!)
    bernoulli(n).abs()
        * BigRational::new(BigInt::from(2).pow(n), BigInt::from(2) * factorial(n))
}

/// ζ(n) for n ≥ 2 to `digits` decimal digits: Bernoulli closed form at even
/// n, the depth-one nested-sum evaluator at odd n.
pub fn riemann_zeta_numeric(n: u32, digits: u32) -> Result<BigFloat> {
    assert!(n >= 2, "zeta(n) needs n >= 2 here; zeta(1) is fixed to 0 upstream");
    let bits = bits_for_digits(digits);
    if n % 2 == 0 {
        let wbits = bits + 32;
        let c = BigFloat::from_rational(&zeta_even_rational(n), wbits);
        Ok(pi_bits(wbits).pow(n).mul(&c).with_bits(bits))
    } else {
        eval_mzv(&Index::new([n]), digits)
    }
}
