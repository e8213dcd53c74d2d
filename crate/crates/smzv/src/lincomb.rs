//! Formal Q-linear combinations over an ordered key type.
//!
//! `WordPolynomial`, `IndexCombination` and `MzvExpression` are all free
//! Q-modules over some canonical basis (words, indices, atom monomials); this
//! is the shared carrier. Zero coefficients are never stored, so `==` is
//! equality of values.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinComb<K: Ord + Clone> {
    terms: BTreeMap<K, BigRational>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// Combination with a single basis element, coefficient 1.
    pub fn basis(key: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, BigRational::from_integer(1.into()));
        LinComb { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (K, BigRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Coefficient of `key` (zero if absent).
    pub fn coeff(&self, key: &K) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, key: K, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigRational::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Apply `f` to every basis element and resum (linear extension).
    pub fn map_basis<F: FnMut(&K) -> Self>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).terms {
                out.add_term(k2, c2 * c);
            }
        }
        out
    }

    /// Largest basis element with nonzero coefficient, if any.
    pub fn leading(&self) -> Option<(&K, &BigRational)> {
        self.terms.iter().next_back()
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigRational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigRational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cancellation_purges_zeros() {
        let mut a: LinComb<u32> = LinComb::basis(7);
        a.add_term(7, q(-1));
        assert!(a.is_zero());
        assert_eq!(a, LinComb::zero());
    }

    #[test]
    fn add_sub_scale() {
        let a = LinComb::from_terms([(1u32, q(2)), (2, q(-1))]);
        let b = LinComb::from_terms([(2u32, q(1)), (3, q(5))]);
        let s = a.add(&b);
        assert_eq!(s.coeff(&1), q(2));
        assert_eq!(s.coeff(&2), q(0));
        assert_eq!(s.coeff(&3), q(5));
        assert_eq!(s.sub(&s), LinComb::zero());
        assert_eq!(s.scale(&q(3)).coeff(&3), q(15));
    }
}
