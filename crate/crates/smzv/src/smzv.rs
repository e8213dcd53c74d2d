//! Weight-shifted zeta symbols and t-adic symmetric multiple zeta values.
//!
//! `zeta_m_symbolic(k, m, flavor)` is the sum Σ_{l_1+⋯+l_r=m} ζ•(k+l)
//! ∏ binom(k_i+l_i-1, l_i) over weak compositions, with ζ• the regularized
//! value of the chosen flavor. Under the shuffle flavor this collapses to
//! (-1)^m · Z^⧢(x^m · z_{k_1} ⋯ z_{k_r}), which is how it is computed.
//!
//! `t_adic_smzv(k, truncation, flavor)` assembles
//! Σ_{i=0}^r (-1)^(k_{i+1}+⋯+k_r) ζ•(k_1,…,k_i) Σ_m ζ_m•(k_r,…,k_{i+1}) t^m,
//! the split-sum series whose truncations are the finite symmetric values.
//!
//! `sigma`, `i0`, `i1` are the derivation Σ k_i (…, k_i+1, …) and the two
//! alternating stuffle sums that give the degree-0 and degree-1 coefficients
//! under the harmonic flavor; `zeta_s2_via_i` packages them as a shortcut
//! for the truncation-2 series.

use crate::combinatorics::{binomial, compositions};
use crate::expr::{MzvExpression, TadicSeries};
use crate::index::{Index, IndexCombination};
use crate::quasi::{harmonic, reg_star, reg_star_combination};
use crate::shuffle::{regshwd_lhs, zsh_word};
use num_rational::BigRational;
use num_traits::One;

/// Which regularization backs the symbols ζ• in non-admissible positions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegularizationFlavor {
    Shuffle,
    Harmonic,
}

/// Regularized zeta symbol of an arbitrary index: ζ^⧢ via word
/// regularization, ζ* via trailing-one peeling. Identity on admissible
/// indices either way, and ζ•(1) = 0.
pub fn zeta_reg(k: &Index, flavor: RegularizationFlavor) -> MzvExpression {
    match flavor {
        RegularizationFlavor::Shuffle => zsh_word(crate::index::word_of_index(k)),
        RegularizationFlavor::Harmonic => MzvExpression::from_index_combination(&reg_star(k)),
    }
}

/// The weight-shift sum ζ_m•(k); `weight_shift` is the total shift m.
///
/// Conventions fall out of the formulas: ζ_0•(k) = ζ•(k) and
/// ζ_m•(∅) = 1 if m = 0, else 0.
pub fn zeta_m_symbolic(
    k: &Index,
    weight_shift: u32,
    flavor: RegularizationFlavor,
) -> MzvExpression {
    match flavor {
        RegularizationFlavor::Shuffle => {
            let sign = if weight_shift % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            zsh_word(regshwd_lhs(weight_shift, k)).scale(&sign)
        }
        RegularizationFlavor::Harmonic => {
            let mut out = MzvExpression::zero();
            for l in compositions(weight_shift, k.depth()) {
                let mut coeff = BigRational::one();
                for (j, lj) in l.iter().enumerate() {
                    coeff *= BigRational::from_integer(binomial(k.parts()[j] + lj - 1, *lj));
                }
                let shifted = k.add_composition(&l);
                out.add_assign(&zeta_reg(&shifted, flavor).scale(&coeff));
            }
            out
        }
    }
}

/// The t-adic symmetric value as a series truncated at t^truncation:
/// coefficient of t^m collects ζ•(prefix) · ζ_m•(reversed suffix) over all
/// splits, signed by the parity of the suffix weight.
pub fn t_adic_smzv(k: &Index, truncation: usize, flavor: RegularizationFlavor) -> TadicSeries {
    let mut out = TadicSeries::zero(truncation);
    for i in 0..=k.depth() {
        let suffix = k.suffix(i);
        let sign = if suffix.weight() % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let prefix_factor = zeta_reg(&k.prefix(i), flavor).scale(&sign);
        if prefix_factor.is_zero() {
            continue;
        }
        let suffix_rev = suffix.reverse();
        for m in 0..truncation {
            let zm = zeta_m_symbolic(&suffix_rev, m as u32, flavor);
            if !zm.is_zero() {
                out.add_to_coeff(m, &prefix_factor.mul(&zm));
            }
        }
    }
    out
}

/// The derivation sending k to Σ_i k_i · (k_1, …, k_i+1, …, k_r).
pub fn sigma_index(k: &Index) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for i in 0..k.depth() {
        out.add_term(
            k.with_part_incremented(i),
            BigRational::from_integer(k.parts()[i].into()),
        );
    }
    out
}

/// Linear extension of `sigma_index`.
pub fn sigma(a: &IndexCombination) -> IndexCombination {
    a.map_basis(|k| sigma_index(k))
}

/// Alternating split-stuffle sum Σ_i (-1)^(suffix weight) (prefix) ∗
/// (reversed suffix): the t⁰ layer of the symmetric value, before
/// regularization.
pub fn i0(k: &Index) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for i in 0..=k.depth() {
        let suffix = k.suffix(i);
        let sign = if suffix.weight() % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let prod = crate::quasi::harmonic_indices(&k.prefix(i), &suffix.reverse());
        out.add_assign(&prod.scale(&sign));
    }
    out
}

/// Same split sum with the derivation applied to the reversed suffix: the
/// t¹ layer. Empty index gives zero.
pub fn i1(k: &Index) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for i in 0..=k.depth() {
        let suffix = k.suffix(i);
        let sign = if suffix.weight() % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let prefix = IndexCombination::basis(k.prefix(i));
        let prod = harmonic(&prefix, &sigma_index(&suffix.reverse()));
        out.add_assign(&prod.scale(&sign));
    }
    out
}

/// Truncation-2 symmetric value computed through `i0`/`i1` and harmonic
/// regularization; agrees with `t_adic_smzv(k, 2, Harmonic)`.
pub fn zeta_s2_via_i(k: &Index) -> TadicSeries {
    let c0 = MzvExpression::from_index_combination(&reg_star_combination(&i0(k)));
    let c1 = MzvExpression::from_index_combination(&reg_star_combination(&i1(k)));
    TadicSeries::from_coeffs(vec![c0, c1])
}
