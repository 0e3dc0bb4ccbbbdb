//! Brute-force expansions used to check every closed form.
//!
//! `E_η = z^η + (◁-lower terms)`, so a homogeneous polynomial is expanded in
//! the `E` basis by repeatedly stripping its `◁`-leading monomial. Nothing
//! here calls the closed-form coefficient code.

use num_traits::Zero;

use crate::composition::{eta_bar, Composition};
use crate::error::{Error, Result};
use crate::jack::{cherednik_apply, symmetric_p, JackTable};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Coefficients of a polynomial in a Jack basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    /// Sorted lexicographically decreasing by composition; no zero entries.
    pub terms: Vec<(Composition, Scalar)>,
    pub residual: Poly,
}

impl BasisExpansion {
    pub fn coefficient(&self, nu: &Composition) -> Scalar {
        self.terms
            .iter()
            .find(|(c, _)| c == nu)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// `Σ coeff · E_ν + residual`.
    pub fn reconstruct(&self, table: &mut JackTable) -> Result<Poly> {
        let mut out = self.residual.clone();
        for (nu, c) in &self.terms {
            out.add_scaled(table.generate(nu)?, c);
        }
        Ok(out)
    }
}

pub(crate) fn sort_terms(terms: &mut Vec<(Composition, Scalar)>) {
    terms.retain(|(_, c)| !c.is_zero());
    terms.sort_by(|a, b| b.0.cmp(&a.0));
}

/// Expands a homogeneous `f` in `{E_ν}` by triangular elimination.
pub fn expand_in_e(f: &Poly, table: &mut JackTable) -> Result<BasisExpansion> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut rest = f.clone();
    let mut terms = Vec::new();
    while !rest.is_zero() {
        let mu = rest.leading_monomial_triangle()?;
        let c = rest.coefficient(&mu);
        rest.add_scaled(table.generate(&mu)?, &-c.clone());
        if !rest.coefficient(&mu).is_zero() {
            return Err(Error::NotInSpan(rest.len()));
        }
        terms.push((mu, c));
    }
    sort_terms(&mut terms);
    Ok(BasisExpansion {
        terms,
        residual: rest,
    })
}

/// Expands `(Π_{i ∈ S} z_i) E_η` in `{E_ν}`.
pub fn brute_pieri(eta: &Composition, set: &[usize], table: &mut JackTable) -> Result<BasisExpansion> {
    let n = table.nvars();
    let f = &Poly::product_of_vars(n, set) * table.generate(eta)?;
    expand_in_e(&f, table)
}

/// Expands `e_p E_η` in `{E_ν}`.
pub fn brute_elementary(eta: &Composition, p: usize, table: &mut JackTable) -> Result<BasisExpansion> {
    let n = table.nvars();
    let f = &Poly::elementary(n, p) * table.generate(eta)?;
    expand_in_e(&f, table)
}

/// Result of checking the eigenrelation on every entry of a table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EigenReport {
    pub checked: usize,
    /// `(η, i)` pairs where `ξ_i E_η ≠ η̄_i E_η`.
    pub failures: Vec<(Composition, usize)>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn eigen_audit(table: &JackTable) -> EigenReport {
    let mut report = EigenReport::default();
    for (eta, e) in table.sorted_entries() {
        let bar = eta_bar(eta, table.alpha());
        for i in 0..table.nvars() {
            report.checked += 1;
            if cherednik_apply(i, e, table.alpha()) != e.scale(&bar[i]) {
                report.failures.push((eta.clone(), i));
            }
        }
    }
    report
}

/// Expands a symmetric homogeneous `f` in `{P_λ}` by stripping the
/// lexicographically largest partition-shaped monomial.
pub fn expand_in_p(f: &Poly, table: &mut JackTable) -> Result<Vec<(Composition, Scalar)>> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut rest = f.clone();
    let mut terms = Vec::new();
    while !rest.is_zero() {
        let lead = rest
            .terms()
            .rev()
            .map(|(m, _)| m)
            .find(|m| m.is_partition())
            .cloned()
            .ok_or(Error::NotInSpan(rest.len()))?;
        let c = rest.coefficient(&lead);
        rest.add_scaled(&symmetric_p(&lead, table)?, &-c.clone());
        terms.push((lead, c));
    }
    sort_terms(&mut terms);
    Ok(terms)
}

/// Expands `e_p P_κ` in `{P_λ}`.
pub fn brute_symmetric(kappa: &Composition, p: usize, table: &mut JackTable) -> Result<Vec<(Composition, Scalar)>> {
    let n = table.nvars();
    let f = &Poly::elementary(n, p) * &symmetric_p(kappa, table)?;
    expand_in_p(&f, table)
}
