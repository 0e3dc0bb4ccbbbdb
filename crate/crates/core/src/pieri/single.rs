//! Closed forms for `z_i E_η` and `(z_1 + ... + z_N) E_η`.
//!
//! For `ν = c_I(η)` with `I` maximal and `i ∈ I`,
//!
//! `c^{(i)}_{η,ν} = (d'_η e'_ν / (d'_ν e'_η)) · χ̃_I^{(i)} A_I B̂_I`
//!
//! with the kernels evaluated at `η̄/α`; the coefficient vanishes otherwise.

use num_traits::Zero;

use super::kernel::{kernel, kernel_at};
use super::{PieriExpansion, Selector};
use crate::composition::{eta_bar, hooks, Composition};
use crate::error::{Error, Result};
use crate::oracle::sort_terms;
use crate::scalar::{self, Scalar};
use crate::subsets::{c_i, maximal_sets, IndexSubset};

/// The maximal subset labelling `ν` as an element of the `p = 1` support.
pub fn label_of(eta: &Composition, nu: &Composition) -> Option<IndexSubset> {
    maximal_sets(eta).into_iter().find(|set| c_i(eta, set) == *nu)
}

fn check_index(eta: &Composition, i: usize) -> Result<()> {
    if i >= eta.len() {
        return Err(Error::InvalidArgument(format!(
            "variable index {} out of range for {eta}",
            i + 1
        )));
    }
    Ok(())
}

/// `(d'_η e'_ν / (d'_ν e'_η)) · χ̃_I^{(i)} A_I B̂_I` for a known label `I ∋ i`.
pub fn coeff_p1_labelled(eta: &Composition, i: usize, set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let nu = c_i(eta, set);
    let k = kernel(eta, set, alpha)?;
    let h_eta = hooks(eta, alpha)?;
    let h_nu = hooks(&nu, alpha)?;
    let ratio = &h_eta.d_prime * &h_nu.e_prime / (&h_nu.d_prime * &h_eta.e_prime);
    Ok(ratio * &k.chi_tilde[&i] * &k.a * &k.b_hat)
}

/// Coefficient of `E_ν` in `z_i E_η` (0-based `i`); zero off the support.
pub fn coeff_p1(eta: &Composition, i: usize, nu: &Composition, alpha: &Scalar) -> Result<Scalar> {
    check_index(eta, i)?;
    match label_of(eta, nu) {
        Some(set) if set.contains(i) => coeff_p1_labelled(eta, i, &set, alpha),
        _ => Ok(Scalar::zero()),
    }
}

/// The same coefficient written with the kernels at the target's
/// eigenvalues: `α d'_η χ_I^{(i)} A_I B_I / d'_ν` at `ν̄/α`.
pub fn coeff_p1_target_form(eta: &Composition, i: usize, nu: &Composition, alpha: &Scalar) -> Result<Scalar> {
    check_index(eta, i)?;
    let Some(set) = label_of(eta, nu).filter(|set| set.contains(i)) else {
        return Ok(Scalar::zero());
    };
    let k = kernel_at(&eta_bar(nu, alpha).scaled(), &set, alpha)?;
    let ratio = scalar::div(
        &hooks(eta, alpha)?.d_prime,
        &hooks(nu, alpha)?.d_prime,
        || format!("d' of {nu}"),
    )?;
    Ok(alpha * ratio * &k.chi[&i] * &k.a * &k.b)
}

/// Full expansion of `z_i E_η` in `{E_ν}`.
pub fn expand_z_i(eta: &Composition, i: usize, alpha: &Scalar) -> Result<PieriExpansion> {
    check_index(eta, i)?;
    let mut terms = Vec::new();
    for set in maximal_sets(eta) {
        if set.contains(i) {
            terms.push((c_i(eta, &set), coeff_p1_labelled(eta, i, &set, alpha)?));
        }
    }
    sort_terms(&mut terms);
    Ok(PieriExpansion {
        source: eta.clone(),
        selector: Selector::Variable(i),
        terms,
    })
}

/// Full expansion of `e_1 E_η`: coefficient `−α² d'_η A_I B̃_I / d'_{c_I(η)}`.
pub fn expand_e1(eta: &Composition, alpha: &Scalar) -> Result<PieriExpansion> {
    let d_eta = hooks(eta, alpha)?.d_prime;
    let mut terms = Vec::new();
    for set in maximal_sets(eta) {
        let nu = c_i(eta, &set);
        let k = kernel(eta, &set, alpha)?;
        let d_nu = hooks(&nu, alpha)?.d_prime;
        let coeff = -(alpha * alpha) * &d_eta * &k.a * &k.b_tilde / d_nu;
        terms.push((nu, coeff));
    }
    sort_terms(&mut terms);
    Ok(PieriExpansion {
        source: eta.clone(),
        selector: Selector::Elementary(1),
        terms,
    })
}
