//! Symbolic zeta expressions and truncated t-adic series over them.
//!
//! An `MzvExpression` is a Q-linear combination of monomials in the atoms
//! pi^2, zeta(odd n >= 3) and depth >= 2 convergent zeta values. Expressions
//! are kept in a normal form — atoms sorted inside monomials, zero terms
//! purged, and every depth <= 1 value rewritten at construction time
//! (zeta(even) becomes a rational multiple of a pi^2 power via Bernoulli
//! numbers, zeta(1) is the regularized value 0) — so `==` is syntactic
//! equality of normal forms.

use crate::combinatorics::bernoulli;
use crate::error::{Error, Result};
use crate::index::{Index, IndexCombination};
use crate::lincomb::LinComb;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    /// pi^2 (pi only ever enters through even zeta values, so the square is
    /// the natural unit).
    Pi2,
    /// zeta(n) for odd n >= 3.
    Zeta(u32),
    /// A convergent nested zeta value of depth >= 2.
    Mzv(Index),
}

impl Atom {
    pub fn weight(&self) -> u32 {
        match self {
            Atom::Pi2 => 2,
            Atom::Zeta(n) => *n,
            Atom::Mzv(k) => k.weight(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Pi2 => f.write_str("pi^2"),
            Atom::Zeta(n) => write!(f, "zeta({n})"),
            Atom::Mzv(k) => {
                f.write_str("zeta")?;
                write!(f, "{k}")
            }
        }
    }
}

/// A product of atoms, kept sorted; the empty product is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<Atom>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn atom(a: Atom) -> Monomial {
        Monomial(vec![a])
    }

    pub fn from_atoms(mut atoms: Vec<Atom>) -> Monomial {
        atoms.sort();
        Monomial(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut atoms = Vec::with_capacity(self.0.len() + other.0.len());
        atoms.extend_from_slice(&self.0);
        atoms.extend_from_slice(&other.0);
        atoms.sort();
        Monomial(atoms)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Atom::weight).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        // group repeated atoms into powers for readability
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let e = j - i;
            match (&self.0[i], e) {
                (Atom::Pi2, 1) => f.write_str("pi^2")?,
                (Atom::Pi2, e) => write!(f, "pi^{}", 2 * e)?,
                (a, 1) => write!(f, "{a}")?,
                (a, e) => write!(f, "{a}^{e}")?,
            }
            i = j;
        }
        Ok(())
    }
}

/// Q-linear combination of atom monomials.
pub type MzvExpression = LinComb<Monomial>;

impl MzvExpression {
    pub fn one() -> MzvExpression {
        MzvExpression::basis(Monomial::one())
    }

    pub fn scalar(q: BigRational) -> MzvExpression {
        MzvExpression::from_terms([(Monomial::one(), q)])
    }

    pub fn scalar_i64(n: i64) -> MzvExpression {
        MzvExpression::scalar(BigRational::from_integer(n.into()))
    }

    /// The convergent zeta value of `k`, normalized: the empty index gives 1
    /// and depth-one indices are routed through [`MzvExpression::riemann_zeta`].
    /// Panics on an inadmissible index — regularize first.
    pub fn mzv(k: &Index) -> MzvExpression {
        assert!(
            k.is_admissible(),
            "zeta{k} diverges; apply a regularization first"
        );
        match k.depth() {
            0 => MzvExpression::one(),
            1 => MzvExpression::riemann_zeta(k.parts()[0]),
            _ => MzvExpression::basis(Monomial::atom(Atom::Mzv(k.clone()))),
        }
    }

    /// zeta(n) as an expression: 0 for n = 1 (the regularized value), a
    /// rational multiple of a pi^2 power for even n, an irreducible atom for
    /// odd n >= 3.
    pub fn riemann_zeta(n: u32) -> MzvExpression {
        assert!(n >= 1);
        if n == 1 {
            return MzvExpression::zero();
        }
        if n % 2 == 1 {
            return MzvExpression::basis(Monomial::atom(Atom::Zeta(n)));
        }
        // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
        let m = n / 2;
        let coeff = bernoulli(n).abs()
            * BigRational::new(
                BigInt::from(2).pow(n),
                BigInt::from(2) * crate::combinatorics::factorial(n),
            );
        debug_assert!(coeff.is_positive());
        MzvExpression::from_terms([(Monomial(vec![Atom::Pi2; m as usize]), coeff)])
    }

    /// Linear extension of [`MzvExpression::mzv`] to index combinations;
    /// every index in the support must be admissible.
    pub fn from_index_combination(c: &IndexCombination) -> MzvExpression {
        let mut out = MzvExpression::zero();
        for (k, q) in c.iter() {
            out.add_assign(&MzvExpression::mzv(k).scale(q));
        }
        out
    }

    pub fn mul(&self, other: &MzvExpression) -> MzvExpression {
        let mut out = MzvExpression::zero();
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Uniform weight of all terms, if there is one (scalars count as weight
    /// 0 only when alone).
    pub fn uniform_weight(&self) -> Option<u32> {
        let mut it = self.iter().map(|(m, _)| m.weight());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

pub fn format_expression(e: &MzvExpression) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() && !m.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&mag.to_string());
            if !m.is_one() {
                out.push('*');
                out.push_str(&m.to_string());
            }
        }
    }
    out
}

/// A t-adic value truncated at t^truncation: coefficients of t^0 .. t^{truncation-1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TadicSeries {
    coeffs: Vec<MzvExpression>,
}

impl TadicSeries {
    /// The zero series with `truncation` retained coefficients (>= 1).
    pub fn zero(truncation: usize) -> TadicSeries {
        assert!(truncation >= 1, "truncation must be positive");
        TadicSeries { coeffs: vec![MzvExpression::zero(); truncation] }
    }

    pub fn from_coeffs(coeffs: Vec<MzvExpression>) -> TadicSeries {
        assert!(!coeffs.is_empty(), "truncation must be positive");
        TadicSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of t^j; asking past the truncation is an error, not zero.
    pub fn coeff(&self, j: usize) -> Result<&MzvExpression> {
        self.coeffs.get(j).ok_or(Error::TruncationExceeded {
            requested: j,
            truncation: self.coeffs.len(),
        })
    }

    pub fn coeffs(&self) -> &[MzvExpression] {
        &self.coeffs
    }

    pub fn add_to_coeff(&mut self, j: usize, e: &MzvExpression) {
        assert!(j < self.coeffs.len());
        self.coeffs[j].add_assign(e);
    }

    pub fn add(&self, other: &TadicSeries) -> Result<TadicSeries> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch(self.truncation(), other.truncation()));
        }
        Ok(TadicSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &TadicSeries) -> Result<TadicSeries> {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    pub fn scale(&self, q: &BigRational) -> TadicSeries {
        TadicSeries { coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect() }
    }

    /// Multiply every coefficient by a fixed expression.
    pub fn mul_expr(&self, e: &MzvExpression) -> TadicSeries {
        TadicSeries { coeffs: self.coeffs.iter().map(|c| c.mul(e)).collect() }
    }
}

pub fn format_series(s: &TadicSeries) -> String {
    let mut out = String::new();
    for (j, c) in s.coeffs().iter().enumerate() {
        if j > 0 {
            out.push_str(" + ");
        }
        let body = format_expression(c);
        match j {
            0 => out.push_str(&body),
            1 => out.push_str(&format!("({body})*t")),
            _ => out.push_str(&format!("({body})*t^{j}")),
        }
    }
    out.push_str(&format!(" + O(t^{})", s.truncation()));
    out
}
