//! Stable JSON forms for the algebraic types.
//!
//! - words serialize as strings over "x"/"y";
//! - indices as integer arrays;
//! - rationals as {"num","den"} decimal strings (denominator always
//!   positive);
//! - symbol combinations as lists of {coeff, monomial} records, where every
//!   monomial factor is an index array — π² is rewritten as 6·ζ(2) so no
//!   separate transcendental tag is needed.
//!
//! Iteration order comes from the underlying ordered maps, so equal values
//! serialize byte-identically.

use crate::expr::{Atom, MzvExpression, TadicSeries};
use crate::index::{Index, IndexCombination};
use crate::word::{Word, WordPolynomial};
use num_rational::BigRational;
use serde_json::{json, Value};

/// {"num","den"} with the sign carried by the numerator.
pub fn rational_value(q: &BigRational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

pub fn word_value(w: Word) -> Value {
    Value::String(w.to_string())
}

pub fn index_value(k: &Index) -> Value {
    Value::Array(k.parts().iter().map(|&p| json!(p)).collect())
}

pub fn word_polynomial_value(p: &WordPolynomial) -> Value {
    Value::Array(
        p.iter()
            .map(|(w, c)| json!({"coeff": rational_value(c), "word": word_value(*w)}))
            .collect(),
    )
}

pub fn index_combination_value(c: &IndexCombination) -> Value {
    Value::Array(
        c.iter()
            .map(|(k, q)| json!({"coeff": rational_value(q), "index": index_value(k)}))
            .collect(),
    )
}

/// One record per monomial; π^(2e) contributes a factor 6^e to the
/// coefficient and e copies of [2] to the factor list.
pub fn expression_value(e: &MzvExpression) -> Value {
    let six = BigRational::from_integer(6.into());
    let mut records = Vec::with_capacity(e.len());
    for (m, q) in e.iter() {
        let mut coeff = q.clone();
        let mut factors = Vec::new();
        for atom in m.atoms() {
            match atom {
                Atom::Pi2 => {
                    coeff *= &six;
                    factors.push(json!([2]));
                }
                Atom::Zeta(k) => factors.push(json!([k])),
                Atom::Mzv(idx) => factors.push(index_value(idx)),
            }
        }
        records.push(json!({"coeff": rational_value(&coeff), "monomial": Value::Array(factors)}));
    }
    Value::Array(records)
}

pub fn series_value(s: &TadicSeries) -> Value {
    json!({
        "truncation": s.truncation(),
        "coefficients": Value::Array(s.coeffs().iter().map(expression_value).collect()),
    })
}
