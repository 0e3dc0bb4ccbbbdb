//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::composition::{self, Composition, Permutation};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// An exponent vector `z^m = z_1^{m_1} ... z_N^{m_N}`.
pub type Monomial = Composition;

/// A finite map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Poly::monomial(Composition::zeros(n), Scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Poly::monomial(Composition::zeros(n), c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// The variable `z_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        Poly::monomial(Composition::unit(n, i), Scalar::one())
    }

    /// The product of the variables indexed by `set`.
    pub fn product_of_vars(n: usize, set: &[usize]) -> Self {
        let mut m = vec![0; n];
        for &i in set {
            m[i] += 1;
        }
        Poly::monomial(Composition::new(m), Scalar::one())
    }

    /// The elementary symmetric polynomial `e_p` in `n` variables.
    pub fn elementary(n: usize, p: usize) -> Self {
        let mut out = Poly::zero(n);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == p {
                let m = (0..n).map(|k| (mask >> k) & 1).collect();
                out.add_term(Composition::new(m), Scalar::one());
            }
        }
        out
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
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

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Adds `c z^m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.len(), self.n, "monomial has the wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Scalar) {
        assert_eq!(self.n, other.n);
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Composition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Composition::weight);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Interchanges `z_i` and `z_p`.
    pub fn swap_vars(&self, i: usize, p: usize) -> Poly {
        self.map_monomials(|m| {
            let mut e = m.parts().to_vec();
            e.swap(i, p);
            Composition::new(e)
        })
    }

    /// Substitutes `z_k -> z_{σ(k)}`.
    pub fn permute_vars(&self, sigma: &Permutation) -> Poly {
        self.map_monomials(|m| {
            let mut e = vec![0; self.n];
            for (k, &x) in m.parts().iter().enumerate() {
                e[sigma.apply(k)] = x;
            }
            Composition::new(e)
        })
    }

    /// `Φf(z) = z_N f(z_N, z_1, ..., z_{N−1})`.
    pub fn raise(&self) -> Poly {
        self.map_monomials(Composition::phi)
    }

    pub fn partial_deriv(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let k = m.parts()[i];
            if k == 0 {
                continue;
            }
            let mut e = m.parts().to_vec();
            e[i] -= 1;
            out.add_term(Composition::new(e), c * scalar::int(k as i64));
        }
        out
    }

    /// The exact quotient `(f − s_{ip} f) / (z_i − z_p)`.
    pub fn divided_difference(&self, i: usize, p: usize) -> Result<Poly> {
        if i == p {
            return Err(Error::InvalidArgument("divided difference needs i ≠ p".into()));
        }
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let (a, b) = (m.parts()[i], m.parts()[p]);
            if a == b {
                continue;
            }
            // z_i^a z_p^b − z_i^b z_p^a = ± z_i^lo z_p^lo (z_x^k − z_y^k)
            let (lo, hi, sign) = if a > b {
                (b, a, Scalar::one())
            } else {
                (a, b, -Scalar::one())
            };
            let coeff = c * &sign;
            for k in 0..hi - lo {
                let mut e = m.parts().to_vec();
                e[i] = lo + k;
                e[p] = lo + (hi - lo - 1 - k);
                out.add_term(Composition::new(e), coeff.clone());
            }
        }
        Ok(out)
    }

    /// The `◁`-maximal monomial of the support; among several maximal
    /// monomials the lexicographically greatest is returned.
    pub fn leading_monomial_triangle(&self) -> Result<Monomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let support: Vec<&Monomial> = self.terms.keys().collect();
        // iterate from the lexicographic top so the first maximal hit wins
        support
            .iter()
            .rev()
            .find(|m| {
                !support
                    .iter()
                    .any(|other| composition::triangle_less_unchecked(m, other))
            })
            .map(|m| (*m).clone())
            .ok_or(Error::ZeroPolynomial)
    }

    /// Sum over all permutations of the variables.
    pub fn symmetrize(&self) -> Poly {
        let mut out = Poly::zero(self.n);
        for sigma in Permutation::all(self.n) {
            out.add_scaled(&self.permute_vars(&sigma), &Scalar::one());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n);
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e = m1.parts().iter().zip(m2.parts()).map(|(a, b)| a + b).collect();
                out.add_term(Composition::new(e), c1 * c2);
            }
        }
        out
    }
}

impl Mul<&Scalar> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Scalar) -> Poly {
        self.scale(rhs)
    }
}

impl fmt::Display for Poly {
    /// Terms in lexicographically descending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*z^{}", scalar::format_scalar(c), m)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn mono(e: &[u32], c: i64) -> Poly {
        Poly::monomial(Composition::new(e.to_vec()), int(c))
    }

    #[test]
    fn ring_basics() {
        let f = &mono(&[2, 0], 3) + &mono(&[1, 1], -1);
        assert_eq!(&f + &Poly::zero(2), f);
        assert!((&f - &f).is_zero());
        let z1z2 = &Poly::var(3, 0) * &Poly::var(3, 1);
        assert_eq!(z1z2, mono(&[1, 1, 0], 1));
        assert_eq!(f.scale(&int(0)), Poly::zero(2));
    }

    #[test]
    fn swap_and_derivative() {
        assert_eq!(Poly::var(2, 0).swap_vars(0, 1), Poly::var(2, 1));
        assert_eq!(mono(&[2, 0], 1).partial_deriv(0), mono(&[1, 0], 2));
        let f = &mono(&[3, 1, 0], 2) + &mono(&[0, 1, 2], 5);
        assert_eq!(f.swap_vars(0, 2).swap_vars(0, 2), f);
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(Poly::var(2, 0).divided_difference(0, 1).unwrap(), Poly::one(2));
        assert_eq!(
            mono(&[2, 0], 1).divided_difference(0, 1).unwrap(),
            &Poly::var(2, 0) + &Poly::var(2, 1)
        );
        let sym = &mono(&[2, 1, 0], 1) + &mono(&[1, 2, 0], 1);
        assert!(sym.divided_difference(0, 1).unwrap().is_zero());
        assert!(Poly::var(2, 0).divided_difference(1, 1).is_err());
    }

    #[test]
    fn leading_monomial() {
        let a = int(2);
        let e10 = &Poly::var(2, 0) + &Poly::var(2, 1).scale(&(int(1) / (&a + int(1))));
        assert_eq!(e10.leading_monomial_triangle().unwrap(), Composition::from([1, 0]));
        assert_eq!(
            mono(&[0, 3, 1], 4).leading_monomial_triangle().unwrap(),
            Composition::from([0, 3, 1])
        );
        let f = &mono(&[1, 1], 1) + &mono(&[2, 0], 1);
        assert_eq!(f.leading_monomial_triangle().unwrap(), Composition::from([2, 0]));
        assert_eq!(
            (&mono(&[1, 0], 1) + &mono(&[0, 0], 1)).leading_monomial_triangle(),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn elementary_counts() {
        assert_eq!(Poly::elementary(4, 2).len(), 6);
        assert_eq!(Poly::elementary(3, 0), Poly::one(3));
        assert!(Poly::elementary(3, 2).is_symmetric());
    }

    #[test]
    fn raise_matches_definition() {
        // Φ(z_1^2 z_2) = z_3 * z_3^2 * z_1 = z_1 z_3^3
        let f = mono(&[2, 1, 0], 1);
        assert_eq!(f.raise(), mono(&[1, 0, 3], 1));
    }

    fn arb_poly(n: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (prop::collection::vec(0..=max_deg, n), -5i64..=5, 1i64..=4),
            0..6,
        )
        .prop_map(move |terms| {
            Poly::from_terms(
                n,
                terms
                    .into_iter()
                    .map(|(e, p, q)| (Composition::new(e), ratio(p, q))),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(f in arb_poly(3, 3), g in arb_poly(3, 3), h in arb_poly(3, 2)) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn divided_difference_is_exact(f in arb_poly(4, 6), i in 0usize..4, p in 0usize..4) {
            prop_assume!(i != p);
            let q = f.divided_difference(i, p).unwrap();
            let linear = &Poly::var(4, i) - &Poly::var(4, p);
            prop_assert_eq!(&(&q * &linear) + &f.swap_vars(i, p), f);
        }

        #[test]
        fn coefficients_stay_canonical(f in arb_poly(3, 3), g in arb_poly(3, 3)) {
            let h = &(&f * &g) - &f.scale(&ratio(3, 7));
            for (_, c) in h.terms() {
                prop_assert!(scalar::is_canonical(c));
                prop_assert!(!c.is_zero());
            }
        }
    }
}
