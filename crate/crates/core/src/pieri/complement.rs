//! Closed forms for `(z^1 / z_{j_1}) E_η` and `e_{N−1} E_η`.
//!
//! The targets are `ν = ĉ_I(η)` with `I` hat-maximal, which is the same as
//! `η + (1^N) = c_I(ν)` with `I` maximal for `ν`. Duality with the `p = 1`
//! case then gives, for `j_1 ∈ I`,
//!
//! `c = (e_η d_ν / (d_η e_ν)) · χ̃_I^{(j_1)} A_I B̂_I`
//!
//! with the kernels evaluated at `ν̄/α`.

use num_traits::Zero;

use super::kernel::kernel;
use super::{PieriExpansion, Selector};
use crate::composition::{hooks, Composition};
use crate::error::{Error, Result};
use crate::oracle::sort_terms;
use crate::scalar::Scalar;
use crate::subsets::{hat_c_i, hat_maximal_sets, IndexSubset};

/// The hat-maximal subset labelling `ν` in the `p = N − 1` support.
pub fn hat_label_of(eta: &Composition, nu: &Composition) -> Option<IndexSubset> {
    hat_maximal_sets(eta).into_iter().find(|set| hat_c_i(eta, set) == *nu)
}

fn check_index(eta: &Composition, j1: usize) -> Result<()> {
    if j1 >= eta.len() {
        return Err(Error::InvalidArgument(format!(
            "omitted index {} out of range for {eta}",
            j1 + 1
        )));
    }
    Ok(())
}

/// `e_η d_ν / (d_η e_ν)`.
fn prefactor(eta: &Composition, nu: &Composition, alpha: &Scalar) -> Result<Scalar> {
    let h_eta = hooks(eta, alpha)?;
    let h_nu = hooks(nu, alpha)?;
    Ok(h_eta.e * h_nu.d / (h_eta.d * h_nu.e))
}

/// Coefficient for a known hat-maximal label `I ∋ j_1`.
pub fn coeff_pn1_labelled(eta: &Composition, j1: usize, set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let nu = hat_c_i(eta, set);
    let k = kernel(&nu, set, alpha)?;
    Ok(prefactor(eta, &nu, alpha)? * &k.chi_tilde[&j1] * &k.a * &k.b_hat)
}

/// Coefficient of `E_ν` in `(Π_{k ≠ j_1} z_k) E_η` (0-based `j_1`).
pub fn coeff_pn1(eta: &Composition, j1: usize, nu: &Composition, alpha: &Scalar) -> Result<Scalar> {
    check_index(eta, j1)?;
    match hat_label_of(eta, nu) {
        Some(set) if set.contains(j1) => coeff_pn1_labelled(eta, j1, &set, alpha),
        _ => Ok(Scalar::zero()),
    }
}

/// The same product with the kernels evaluated at `η̄/α` instead of `ν̄/α`.
/// Kept for diagnostics; it does not reproduce the expansion.
pub fn coeff_pn1_at_source(eta: &Composition, j1: usize, nu: &Composition, alpha: &Scalar) -> Result<Scalar> {
    check_index(eta, j1)?;
    let Some(set) = hat_label_of(eta, nu).filter(|set| set.contains(j1)) else {
        return Ok(Scalar::zero());
    };
    let k = kernel(eta, &set, alpha)?;
    Ok(prefactor(eta, nu, alpha)? * &k.chi_tilde[&j1] * &k.a * &k.b_hat)
}

/// Full expansion of `(Π_{k ≠ j_1} z_k) E_η`.
pub fn expand_complement(eta: &Composition, j1: usize, alpha: &Scalar) -> Result<PieriExpansion> {
    check_index(eta, j1)?;
    let mut terms = Vec::new();
    for set in hat_maximal_sets(eta) {
        if set.contains(j1) {
            terms.push((hat_c_i(eta, &set), coeff_pn1_labelled(eta, j1, &set, alpha)?));
        }
    }
    sort_terms(&mut terms);
    Ok(PieriExpansion {
        source: eta.clone(),
        selector: Selector::Complement(j1),
        terms,
    })
}

/// Full expansion of `e_{N−1} E_η`: coefficient `−α (e_η d_ν / (d_η e_ν)) A_I B̂_I`
/// at `ν̄/α`, `ν = ĉ_I(η)`.
pub fn expand_en1(eta: &Composition, alpha: &Scalar) -> Result<PieriExpansion> {
    let mut terms = Vec::new();
    for set in hat_maximal_sets(eta) {
        let nu = hat_c_i(eta, &set);
        let k = kernel(&nu, &set, alpha)?;
        let coeff = -alpha * prefactor(eta, &nu, alpha)? * &k.a * &k.b_hat;
        terms.push((nu, coeff));
    }
    sort_terms(&mut terms);
    Ok(PieriExpansion {
        source: eta.clone(),
        selector: Selector::Elementary(eta.len().saturating_sub(1)),
        terms,
    })
}
