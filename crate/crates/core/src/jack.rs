//! Non-symmetric Jack polynomials `E_η` and symmetric Jack polynomials `P_κ`.
//!
//! `E_η` is generated from `E_{(0^N)} = 1` by two operators: the simple
//! transposition `s_i`, which relates `E_η` and `E_{s_i η}`, and the raising
//! operator `Φ`, with `Φ E_η = E_{Φη}`. Results are memoized in a
//! [`JackTable`] for one fixed `(N, α)`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::composition::{compositions_up_to, delta_bar, Composition};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{self, Scalar};

/// One generation step producing `E_η` from a neighbour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// `E_η = s_i E_μ − δ̄_{i,μ}⁻¹ E_μ` with `μ = s_i η`; requires `η_i > η_{i+1}`.
    Swap(usize),
    /// `E_η = Φ E_μ` with `μ = Φ⁻¹ η`; requires `η_N ≥ 1`.
    Raise,
}

/// Memoized `E_η` for a fixed number of variables and a fixed `α`.
///
/// Generation needs `&mut self`; a completed table is only read and can be
/// shared across threads.
#[derive(Clone, Debug)]
pub struct JackTable {
    n: usize,
    alpha: Scalar,
    entries: HashMap<Composition, Poly>,
}

impl JackTable {
    pub fn new(n: usize, alpha: Scalar) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        scalar::validate_alpha(&alpha)?;
        let mut entries = HashMap::new();
        entries.insert(Composition::zeros(n), Poly::one(n));
        Ok(JackTable { n, alpha, entries })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, eta: &Composition) -> Option<&Poly> {
        self.entries.get(eta)
    }

    /// Entries ordered by weight, then lexicographically decreasing.
    pub fn sorted_entries(&self) -> Vec<(&Composition, &Poly)> {
        let mut out: Vec<_> = self.entries.iter().collect();
        out.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then(b.0.cmp(a.0)));
        out
    }

    /// Stores a polynomial without checking it; used when loading a cache.
    pub fn insert(&mut self, eta: Composition, poly: Poly) -> Result<()> {
        if eta.len() != self.n || poly.nvars() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: eta.len().max(poly.nvars()),
            });
        }
        self.entries.insert(eta, poly);
        Ok(())
    }

    /// The default step: the smallest descent, otherwise the raising operator.
    pub fn default_step(eta: &Composition) -> Option<Step> {
        if let Some(&i) = eta.descents().first() {
            Some(Step::Swap(i))
        } else if eta.weight() > 0 {
            Some(Step::Raise)
        } else {
            None
        }
    }

    /// Returns `E_η`, generating it and its ancestors as needed.
    pub fn generate(&mut self, eta: &Composition) -> Result<&Poly> {
        if eta.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: eta.len(),
            });
        }
        self.ensure(eta)?;
        Ok(&self.entries[eta])
    }

    fn ensure(&mut self, eta: &Composition) -> Result<()> {
        if self.entries.contains_key(eta) {
            return Ok(());
        }
        let step = Self::default_step(eta).expect("E_(0^N) is always present");
        let poly = self.generate_via(eta, step)?;
        self.entries.insert(eta.clone(), poly);
        Ok(())
    }

    /// Computes `E_η` by the given step from (generated) neighbours, without
    /// storing the result.
    pub fn generate_via(&mut self, eta: &Composition, step: Step) -> Result<Poly> {
        match step {
            Step::Swap(i) => {
                if i + 1 >= self.n || eta.parts()[i] <= eta.parts()[i + 1] {
                    return Err(Error::InvalidArgument(format!(
                        "position {} is not a descent of {eta}",
                        i + 1
                    )));
                }
                let mu = eta.swap(i);
                self.ensure(&mu)?;
                let e_mu = &self.entries[&mu];
                let delta = delta_bar(&mu, i, &self.alpha);
                let coeff = -scalar::inv(&delta, || format!("δ̄_{} of {mu}", i + 1))?;
                let mut out = e_mu.swap_vars(i, i + 1);
                out.add_scaled(e_mu, &coeff);
                Ok(out)
            }
            Step::Raise => {
                let mu = eta.phi_inverse().ok_or_else(|| {
                    Error::InvalidArgument(format!("{eta} has zero last part"))
                })?;
                self.ensure(&mu)?;
                Ok(self.entries[&mu].raise())
            }
        }
    }

    /// Generates every `E_η` with `|η| ≤ max_weight`.
    pub fn generate_up_to(&mut self, max_weight: u32) -> Result<()> {
        for eta in compositions_up_to(self.n, max_weight) {
            self.ensure(&eta)?;
        }
        Ok(())
    }
}

/// The Cherednik operator `ξ_i` (0-based `i`) applied to `f`:
/// `α z_i ∂_i f + Σ_{p<i} z_i ∂_{ip} f + Σ_{p>i} z_p ∂_{ip} f − i f`,
/// where `∂_{ip}` is the divided difference.
pub fn cherednik_apply(i: usize, f: &Poly, alpha: &Scalar) -> Poly {
    let n = f.nvars();
    let mut out = (&Poly::var(n, i) * &f.partial_deriv(i)).scale(alpha);
    for p in 0..n {
        if p == i {
            continue;
        }
        let dd = f
            .divided_difference(i, p)
            .expect("distinct indices always divide exactly");
        let factor = Poly::var(n, if p < i { i } else { p });
        out = &out + &(&factor * &dd);
    }
    out.add_scaled(f, &scalar::int(-(i as i64)));
    out
}

/// The symmetric Jack polynomial `P_κ`, monic in `m_κ`, obtained by
/// symmetrizing `E_κ`.
pub fn symmetric_p(kappa: &Composition, table: &mut JackTable) -> Result<Poly> {
    if !kappa.is_partition() {
        return Err(Error::InvalidArgument(format!("{kappa} is not a partition")));
    }
    let sym = table.generate(kappa)?.symmetrize();
    let lead = sym.coefficient(kappa);
    if lead.is_zero() {
        return Err(Error::ZeroLeadingCoefficient(kappa.clone()));
    }
    Ok(sym.scale(&num_traits::Inv::inv(lead)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{eta_bar, triangle_less};
    use crate::scalar::{int, ratio};
    use num_traits::One;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec())
    }

    fn sample_alphas() -> Vec<Scalar> {
        vec![int(2), int(3), ratio(5, 2), ratio(7, 3), ratio(11, 2)]
    }

    #[test]
    fn unit_compositions() {
        for a in sample_alphas() {
            for n in 1..=4 {
                let mut t = JackTable::new(n, a.clone()).unwrap();
                for k in 0..n {
                    let mut expected = Poly::var(n, k);
                    let tail = scalar::inv(&(&a + int(k as i64 + 1)), String::new).unwrap();
                    for p in k + 1..n {
                        expected.add_scaled(&Poly::var(n, p), &tail);
                    }
                    assert_eq!(t.generate(&Composition::unit(n, k)).unwrap(), &expected);
                }
            }
        }
    }

    #[test]
    fn trivial_entries() {
        let mut t = JackTable::new(2, int(2)).unwrap();
        assert_eq!(t.generate(&c(&[0, 0])).unwrap(), &Poly::one(2));
        let e10 = t.generate(&c(&[1, 0])).unwrap().clone();
        let expected = &Poly::var(2, 0) + &Poly::var(2, 1).scale(&ratio(1, 3));
        assert_eq!(e10, expected);
    }

    #[test]
    fn cherednik_on_constants_and_linear() {
        let a = ratio(5, 2);
        for n in 1..=4 {
            for i in 0..n {
                assert_eq!(
                    cherednik_apply(i, &Poly::one(n), &a),
                    Poly::constant(n, int(-(i as i64)))
                );
            }
        }
        // ξ_1 z_1 = α z_1 + Σ_{p>1} z_p
        let n = 3;
        let mut expected = Poly::var(n, 0).scale(&a);
        for p in 1..n {
            expected = &expected + &Poly::var(n, p);
        }
        assert_eq!(cherednik_apply(0, &Poly::var(n, 0), &a), expected);
    }

    #[test]
    fn eigenrelation_small() {
        for a in sample_alphas() {
            for n in 1..=3 {
                let mut t = JackTable::new(n, a.clone()).unwrap();
                t.generate_up_to(4).unwrap();
                for eta in compositions_up_to(n, 4) {
                    let e = t.get(&eta).unwrap();
                    let bar = eta_bar(&eta, &a);
                    for i in 0..n {
                        assert_eq!(cherednik_apply(i, e, &a), e.scale(&bar[i]), "{eta} ξ_{}", i + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn triangularity() {
        let mut t = JackTable::new(3, ratio(7, 3)).unwrap();
        t.generate_up_to(5).unwrap();
        for (eta, e) in t.sorted_entries() {
            assert!(e.is_homogeneous());
            assert!(e.coefficient(eta).is_one());
            for (m, _) in e.terms() {
                if m != eta {
                    assert!(triangle_less(m, eta).unwrap(), "{m} not below {eta}");
                }
            }
            assert_eq!(e.leading_monomial_triangle().unwrap(), *eta);
        }
    }

    /// Every admissible step reproduces the stored entry.
    #[test]
    fn generation_path_independence() {
        for a in [int(2), ratio(5, 2)] {
            for n in 2..=4 {
                let mut t = JackTable::new(n, a.clone()).unwrap();
                let max = if n == 4 { 4 } else { 5 };
                t.generate_up_to(max).unwrap();
                for eta in compositions_up_to(n, max) {
                    let stored = t.get(&eta).unwrap().clone();
                    let mut steps: Vec<Step> = eta.descents().into_iter().map(Step::Swap).collect();
                    if eta.phi_inverse().is_some() {
                        steps.push(Step::Raise);
                    }
                    for step in steps {
                        assert_eq!(t.generate_via(&eta, step).unwrap(), stored, "{eta} {step:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn swap_relations_hold() {
        let a = ratio(11, 2);
        let n = 3;
        let mut t = JackTable::new(n, a.clone()).unwrap();
        t.generate_up_to(5).unwrap();
        for eta in compositions_up_to(n, 4) {
            let e = t.get(&eta).unwrap().clone();
            for i in 0..n - 1 {
                let lhs = e.swap_vars(i, i + 1);
                let (x, y) = (eta.parts()[i], eta.parts()[i + 1]);
                let d_inv = scalar::inv(&delta_bar(&eta, i, &a), String::new).unwrap();
                let other = t.get(&eta.swap(i)).unwrap();
                let rhs = if x > y {
                    let mut r = e.scale(&d_inv);
                    r.add_scaled(other, &(Scalar::one() - &d_inv * &d_inv));
                    r
                } else if x == y {
                    e.clone()
                } else {
                    &e.scale(&d_inv) + other
                };
                assert_eq!(lhs, rhs, "{eta} s_{}", i + 1);
            }
            assert_eq!(&e.raise(), t.generate(&eta.phi()).unwrap());
        }
    }

    #[test]
    fn symmetric_examples() {
        let mut t = JackTable::new(3, int(2)).unwrap();
        assert_eq!(symmetric_p(&c(&[1, 0, 0]), &mut t).unwrap(), Poly::elementary(3, 1));
        let mut t2 = JackTable::new(2, int(2)).unwrap();
        assert_eq!(symmetric_p(&c(&[1, 1]), &mut t2).unwrap(), Poly::elementary(2, 2));
        // at α = 1, P_(2) = s_(2) = m_(2) + m_(1,1)
        let mut t1 = JackTable::new(2, int(1)).unwrap();
        let p2 = symmetric_p(&c(&[2, 0]), &mut t1).unwrap();
        let expected = Poly::from_terms(
            2,
            [(c(&[2, 0]), int(1)), (c(&[0, 2]), int(1)), (c(&[1, 1]), int(1))],
        );
        assert_eq!(p2, expected);
        assert!(symmetric_p(&c(&[0, 1]), &mut t1).is_err());
        for kappa in crate::composition::partitions_of_weight(3, 4) {
            assert!(symmetric_p(&kappa, &mut t).unwrap().is_symmetric());
        }
    }

    #[test]
    fn rejects_zero_alpha() {
        assert!(matches!(JackTable::new(2, int(0)), Err(Error::AlphaSingular(_))));
    }
}
