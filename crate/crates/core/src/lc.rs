//! Sparse finite linear combinations in canonical form.
//!
//! [`Lc`] backs every vector-like type in the crate: algebra elements,
//! tensors, and finite dual elements. Terms live in a `BTreeMap`, so
//! iteration order is the key order and two combinations are equal exactly
//! when their maps are. A stored coefficient is never zero.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lc<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord, S> Default for Lc<K, S> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, S: Scalar> Lc<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: S) -> Self {
        let mut lc = Self::zero();
        lc.add_term(key, coeff);
        lc
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

    pub fn coeff(&self, key: &K) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, S> {
        self.terms.keys()
    }

    /// Adds `coeff · key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &S, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), c.clone() * v.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), c.clone() * v.clone()))
                .collect(),
        }
    }

    /// `c1 · a + c2 · b`
    pub fn combine(c1: &S, a: &Self, c2: &S, b: &Self) -> Self {
        let mut out = a.scale(c1);
        out.add_scaled(c2, b);
        out
    }

    /// Re-keys every term, merging keys that collide.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> Lc<K2, S> {
        let mut out = Lc::zero();
        for (k, v) in self.iter() {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, S)> for Lc<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut lc = Self::zero();
        for (k, c) in iter {
            lc.add_term(k, c);
        }
        lc
    }
}

impl<'a, K: Ord, S> IntoIterator for &'a Lc<K, S> {
    type Item = (&'a K, &'a S);
    type IntoIter = btree_map::Iter<'a, K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, S: Scalar> AddAssign<&Lc<K, S>> for Lc<K, S> {
    fn add_assign(&mut self, rhs: &Lc<K, S>) {
        self.add_scaled(&S::one(), rhs);
    }
}

impl<K: Ord + Clone, S: Scalar> SubAssign<&Lc<K, S>> for Lc<K, S> {
    fn sub_assign(&mut self, rhs: &Lc<K, S>) {
        self.add_scaled(&-S::one(), rhs);
    }
}

impl<K: Ord + Clone, S: Scalar> Add for &Lc<K, S> {
    type Output = Lc<K, S>;
    fn add(self, rhs: Self) -> Lc<K, S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, S: Scalar> Sub for &Lc<K, S> {
    type Output = Lc<K, S>;
    fn sub(self, rhs: Self) -> Lc<K, S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, S: Scalar> Add for Lc<K, S> {
    type Output = Lc<K, S>;
    fn add(mut self, rhs: Self) -> Lc<K, S> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, S: Scalar> Sub for Lc<K, S> {
    type Output = Lc<K, S>;
    fn sub(mut self, rhs: Self) -> Lc<K, S> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, S: Scalar> Neg for &Lc<K, S> {
    type Output = Lc<K, S>;
    fn neg(self) -> Lc<K, S> {
        self.scale(&-S::one())
    }
}

impl<K: Ord + Clone, S: Scalar> Neg for Lc<K, S> {
    type Output = Lc<K, S>;
    fn neg(self) -> Lc<K, S> {
        -&self
    }
}

/// How a key prints inside a linear combination.
pub trait KeyFormat {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// Canonical text: terms in key order, unit coefficients elided, signs
/// pulled out as ` + ` / ` - `, and `0` for the empty combination.
impl<K: Ord + KeyFormat, S: Scalar> fmt::Display for Lc<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            k.fmt_key(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    #[test]
    fn cancellation_removes_key() {
        let mut a: Lc<i32, Q> = Lc::term(3, q(1, 2));
        a.add_term(3, q(-1, 2));
        assert!(a.is_zero());
        a.add_term(4, q(0, 1));
        assert!(a.is_zero());
    }

    #[test]
    fn combine_and_scale() {
        let a: Lc<i32, Q> = [(1, q(1, 1)), (2, q(2, 1))].into_iter().collect();
        let b: Lc<i32, Q> = [(2, q(-1, 1)), (5, q(3, 1))].into_iter().collect();
        let c = Lc::combine(&q(1, 1), &a, &q(2, 1), &b);
        assert_eq!(c.coeff(&1), q(1, 1));
        assert!(!c.keys().any(|k| *k == 2));
        assert_eq!(c.coeff(&5), q(6, 1));
        assert!((&a - &a).is_zero());
        assert!(a.scale(&q(0, 1)).is_zero());
    }
}
