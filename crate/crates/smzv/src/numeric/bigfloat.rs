//! Fixed-point arbitrary-precision reals: value = mant / 2^bits.
//!
//! Every operation returns a value at the larger operand precision and is
//! exact up to one unit in the last place, so a computation with guard bits
//! keeps a rigorous error budget: after k elementary operations the
//! accumulated error is below k ulps. Callers pick working precision from
//! decimal digits via [`bits_for_digits`], which already includes headroom.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Binary precision that guarantees `digits` decimal digits, with headroom.
pub fn bits_for_digits(digits: u32) -> u32 {
    // 3322/1000 > log2(10)
    (digits as u64 * 3322 / 1000) as u32 + 32
}

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    bits: u32,
}

impl BigFloat {
    pub fn zero(bits: u32) -> BigFloat {
        BigFloat { mant: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> BigFloat {
        BigFloat { mant: BigInt::one() << bits, bits }
    }

    pub fn from_i64(v: i64, bits: u32) -> BigFloat {
        BigFloat { mant: BigInt::from(v) << bits, bits }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> BigFloat {
        BigFloat { mant: v.clone() << bits, bits }
    }

    /// Assemble from a raw mantissa: the value mant / 2^bits.
    pub fn from_mantissa(mant: BigInt, bits: u32) -> BigFloat {
        BigFloat { mant, bits }
    }

    /// Nearest fixed-point value to an exact rational (ties away from zero).
    pub fn from_rational(q: &BigRational, bits: u32) -> BigFloat {
        let doubled = (q.numer() << (bits + 1)) / q.denom();
        let mant = if doubled.is_negative() {
            (doubled - 1) / 2
        } else {
            (doubled + 1) / 2
        };
        BigFloat { mant, bits }
    }

    /// Exact rational value of the stored approximation.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Re-round to a different precision (floor on the mantissa).
    pub fn with_bits(&self, bits: u32) -> BigFloat {
        if bits >= self.bits {
            BigFloat { mant: &self.mant << (bits - self.bits), bits }
        } else {
            BigFloat { mant: &self.mant >> (self.bits - bits), bits }
        }
    }

    fn aligned(&self, other: &BigFloat) -> (BigInt, BigInt, u32) {
        let bits = self.bits.max(other.bits);
        (
            &self.mant << (bits - self.bits),
            &other.mant << (bits - other.bits),
            bits,
        )
    }

    pub fn add(&self, other: &BigFloat) -> BigFloat {
        let (a, b, bits) = self.aligned(other);
        BigFloat { mant: a + b, bits }
    }

    pub fn sub(&self, other: &BigFloat) -> BigFloat {
        let (a, b, bits) = self.aligned(other);
        BigFloat { mant: a - b, bits }
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat { mant: -&self.mant, bits: self.bits }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn mul(&self, other: &BigFloat) -> BigFloat {
        let bits = self.bits.max(other.bits);
        // product carries scale bits_a + bits_b; shift back to `bits`
        BigFloat {
            mant: (&self.mant * &other.mant) >> (self.bits + other.bits - bits),
            bits,
        }
    }

    pub fn div(&self, other: &BigFloat) -> BigFloat {
        assert!(!other.mant.is_zero(), "big-float division by zero");
        let bits = self.bits.max(other.bits);
        let shift = bits + other.bits - self.bits;
        BigFloat { mant: (&self.mant << shift) / &other.mant, bits }
    }

    pub fn recip(&self) -> BigFloat {
        BigFloat::one(self.bits).div(self)
    }

    /// Multiply by 2^k.
    pub fn shl_int(&self, k: u32) -> BigFloat {
        BigFloat { mant: &self.mant << k, bits: self.bits }
    }

    /// Divide by 2^k (floor).
    pub fn shr_int(&self, k: u32) -> BigFloat {
        BigFloat { mant: &self.mant >> k, bits: self.bits }
    }

    pub fn pow(&self, e: u32) -> BigFloat {
        let mut result = BigFloat::one(self.bits);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Scientific-notation rendering with `sig` significant digits.
    pub fn to_decimal(&self, sig: u32) -> String {
        assert!(sig >= 1);
        if self.mant.is_zero() {
            return "0".to_string();
        }
        let neg = self.mant.is_negative();
        let m = self.mant.magnitude().clone();
        let l = m.bits() as i64;
        let b = self.bits as i64;
        // first estimate of floor(log10 |v|), then adjust by inspection
        let mut e = (((l - 1 - b) as f64) * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let k = sig as i64 - 1 - e;
            let (num, den) = if k >= 0 {
                (&m * pow10(k as u64), BigUint::one() << self.bits)
            } else {
                (m.clone(), (BigUint::one() << self.bits) * pow10((-k) as u64))
            };
            // round(num/den), half up
            let q = (num * 2u32 + &den) / (den * 2u32);
            let digits = q.to_string();
            match (digits.len() as u32).cmp(&sig) {
                Ordering::Equal => {
                    let mut out = String::new();
                    if neg {
                        out.push('-');
                    }
                    out.push_str(&digits[..1]);
                    if sig > 1 {
                        out.push('.');
                        out.push_str(&digits[1..]);
                    }
                    out.push('e');
                    out.push_str(&e.to_string());
                    return out;
                }
                Ordering::Greater => e += 1,
                Ordering::Less => e -= 1,
            }
        }
    }

    /// Parse a decimal literal (signs, optional fraction, optional e-exponent)
    /// into the nearest fixed-point value.
    pub fn parse(s: &str, bits: u32) -> Result<BigFloat, String> {
        Ok(BigFloat::from_rational(&parse_decimal_rational(s)?, bits))
    }

    /// Rough f64 view, for log-scale heuristics only.
    pub fn to_f64_lossy(&self) -> f64 {
        let l = self.mant.bits() as i64;
        if l == 0 {
            return 0.0;
        }
        // keep the top 52 bits and track the discarded scale
        let drop = (l - 52).max(0);
        let top = (&self.mant >> drop).to_f64().unwrap_or(0.0);
        top * 2f64.powi((drop - self.bits as i64) as i32)
    }
}

fn pow10(k: u64) -> BigUint {
    BigUint::from(10u32).pow(k as u32)
}

/// Parse a decimal literal into an exact rational.
pub fn parse_decimal_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (s, sign) = match s.strip_prefix('-') {
        Some(rest) => (rest, -1),
        None => (s.strip_prefix('+').unwrap_or(s), 1),
    };
    let (mant_str, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (
            m,
            e.parse::<i64>().map_err(|_| format!("invalid exponent in {s:?}"))?,
        ),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mant_str.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mant_str, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("empty number in {s:?}"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(format!("invalid digits in {s:?}"));
    }
    let digits: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| format!("invalid number {s:?}"))?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let q = if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow((-scale) as u32))
    };
    Ok(q * BigRational::from_integer(sign.into()))
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigFloat {}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}
