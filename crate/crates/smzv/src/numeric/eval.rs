//! Numeric evaluation of symbolic zeta expressions and t-adic coefficients.

use super::bigfloat::{bits_for_digits, BigFloat};
use super::consts::{pi_bits, riemann_zeta_numeric};
use super::mzv::eval_mzv;
use crate::error::Result;
use crate::expr::{Atom, MzvExpression, TadicSeries};

fn eval_atom(a: &Atom, digits: u32) -> Result<BigFloat> {
    match a {
        Atom::Pi2 => {
            let pi = pi_bits(bits_for_digits(digits) + 16);
            Ok(pi.mul(&pi))
        }
        Atom::Zeta(n) => riemann_zeta_numeric(*n, digits),
        Atom::Mzv(k) => eval_mzv(k, digits),
    }
}

/// Evaluate an expression to `digits` decimal digits.
///
/// Works at digits + g where the guard g = 10 + ⌈log10(op count)⌉ covers
/// every product and the final sum, so each result digit is trustworthy.
pub fn eval_expr(e: &MzvExpression, digits: u32) -> Result<BigFloat> {
    let ops: usize = e.iter().map(|(m, _)| m.atoms().len() + 2).sum::<usize>().max(1);
    let guard = 10 + ops.ilog10() + 1;
    let wd = digits + guard;
    let wbits = bits_for_digits(wd);
    let mut total = BigFloat::zero(wbits);
    for (mono, coeff) in e.iter() {
        let mut term = BigFloat::from_rational(coeff, wbits);
        for atom in mono.atoms() {
            term = term.mul(&eval_atom(atom, wd)?.with_bits(wbits));
        }
        total = total.add(&term);
    }
    Ok(total.with_bits(bits_for_digits(digits)))
}

/// Evaluate every t-coefficient of a series.
pub fn eval_series(s: &TadicSeries, digits: u32) -> Result<Vec<BigFloat>> {
    s.coeffs().iter().map(|c| eval_expr(c, digits)).collect()
}
