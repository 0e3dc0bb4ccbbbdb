//! The Pieri rule `e_p P_κ = Σ_λ U(λ/κ) P_λ` for symmetric Jack polynomials.
//!
//! `λ/κ` runs over vertical `p`-strips and
//!
//! `U(λ/κ) = f^1(ακ + χ) f^{1/α}(κ) / (f^1(ακ) f^{1/α}(κ + χ))`, `λ = κ + χ`,
//!
//! where each `f` is a product over pairs `i < j` of Pochhammer ratios. With
//! `k = κ_i − κ_j` an integer, every ratio `(y + k)_r / (y)_r` is rewritten as
//! `(y + r)_k / (y)_k`, which is a finite product and keeps `U` rational.

use num_traits::{One, Zero};

use super::closed_form_elementary;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::jack::JackTable;
use crate::oracle::sort_terms;
use crate::scalar::{self, Scalar};

/// All partitions `λ ⊇ κ` with `λ/κ` a vertical `m`-strip, at most `N = len(κ)`
/// rows, lexicographically decreasing.
pub fn vertical_strips(kappa: &Composition, m: usize) -> Vec<Composition> {
    let n = kappa.len();
    let parts = kappa.parts();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let lambda: Vec<u32> = (0..n)
            .map(|i| parts[i] + u32::from(mask & (1 << i) != 0))
            .collect();
        let lambda = Composition::new(lambda);
        if lambda.is_partition() {
            out.push(lambda);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `(y + r)_k / (y)_k` for a nonnegative integer `k`.
fn pochhammer_ratio(y: &Scalar, r: &Scalar, k: u32) -> Result<Scalar> {
    let mut out = Scalar::one();
    for m in 0..k {
        let m = scalar::int(m as i64);
        out *= scalar::div(&(y + r + &m), &(y + &m), || "Pochhammer denominator".into())?;
    }
    Ok(out)
}

fn check_partition(kappa: &Composition) -> Result<()> {
    if !kappa.is_partition() {
        return Err(Error::InvalidArgument(format!("{kappa} is not a partition")));
    }
    Ok(())
}

/// `U(λ/κ)`; `λ/κ` must be a vertical strip.
pub fn symmetric_u(lambda: &Composition, kappa: &Composition, alpha: &Scalar) -> Result<Scalar> {
    scalar::validate_alpha(alpha)?;
    check_partition(kappa)?;
    check_partition(lambda)?;
    if lambda.len() != kappa.len() {
        return Err(Error::DimensionMismatch {
            expected: kappa.len(),
            found: lambda.len(),
        });
    }
    let (k, l) = (kappa.parts(), lambda.parts());
    if k.iter().zip(l).any(|(&a, &b)| b != a && b != a + 1) {
        return Err(Error::InvalidArgument(format!("{lambda}/{kappa} is not a vertical strip")));
    }
    let n = k.len();
    let r = alpha.recip();
    let mut out = Scalar::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = scalar::int((j - i) as i64);
            let dk = scalar::int(k[i] as i64 - k[j] as i64);
            let dchi = scalar::int((l[i] - k[i]) as i64 - (l[j] - k[j]) as i64);
            let base = &gap + alpha * &dk;
            out *= scalar::div(&(&base + &dchi), &base, || format!("f^1 factor ({}, {})", i + 1, j + 1))?;
            let y = &gap / alpha;
            let num = pochhammer_ratio(&y, &r, k[i] - k[j])?;
            let den = pochhammer_ratio(&y, &r, l[i] - l[j])?;
            out *= scalar::div(&num, &den, || format!("f^(1/α) factor ({}, {})", i + 1, j + 1))?;
        }
    }
    Ok(out)
}

/// `e_p P_κ` in the `P` basis, lexicographically decreasing.
pub fn expand_ep_p(kappa: &Composition, p: usize, alpha: &Scalar) -> Result<Vec<(Composition, Scalar)>> {
    check_partition(kappa)?;
    if p > kappa.len() {
        return Err(Error::InvalidArgument(format!("p = {p} exceeds N = {}", kappa.len())));
    }
    let mut terms = Vec::new();
    for lambda in vertical_strips(kappa, p) {
        let u = symmetric_u(&lambda, kappa, alpha)?;
        terms.push((lambda, u));
    }
    sort_terms(&mut terms);
    Ok(terms)
}

/// `U(λ/κ)` recovered from the non-symmetric expansion of `e_p E_κ`:
/// symmetrizing both sides gives `U(λ/κ) = Σ_{ν⁺ = λ} C_{κ,ν} s_ν / s_κ`,
/// where `Sym E_ν = s_ν P_{ν⁺}`. Only `p ∈ {0, 1, N−1, N}` have closed forms.
pub fn expand_ep_p_via_nonsymmetric(
    kappa: &Composition,
    p: usize,
    table: &mut JackTable,
) -> Result<Vec<(Composition, Scalar)>> {
    check_partition(kappa)?;
    let alpha = table.alpha().clone();
    let expansion = closed_form_elementary(kappa, p, &alpha).ok_or_else(|| {
        Error::InvalidArgument(format!("no closed form for e_{p} with N = {}", kappa.len()))
    })??;
    let scale = |nu: &Composition, table: &mut JackTable| -> Result<Scalar> {
        Ok(table.generate(nu)?.symmetrize().coefficient(&nu.partition()))
    };
    let s_kappa = scale(kappa, table)?;
    if s_kappa.is_zero() {
        return Err(Error::ZeroLeadingCoefficient(kappa.clone()));
    }
    let mut sums: Vec<(Composition, Scalar)> = Vec::new();
    for (nu, c) in &expansion.terms {
        let lambda = nu.partition();
        let add = c * scale(nu, table)? / &s_kappa;
        match sums.iter_mut().find(|(l, _)| *l == lambda) {
            Some((_, x)) => *x += add,
            None => sums.push((lambda, add)),
        }
    }
    sort_terms(&mut sums);
    Ok(sums)
}
