//! The rational kernels `A_I`, `B_I`, `B̃_I`, `B̂_I`, `χ_I^{(i)}`, `χ̃_I^{(i)}`.
//!
//! Each is a rational function of a point `x ∈ Q^N`; the Pieri coefficients
//! evaluate them at `x = η̄/α`. With `I = {t_1 < ... < t_s}`:
//!
//! * `a(x, y) = 1 / (α (x − y))`, `b(x, y) = (x − y − 1/α) / (x − y)`
//! * `A_I = Π_{u<s} a(x_{t_u}, x_{t_{u+1}}) · a(x_{t_s} − 1, x_{t_1})`
//! * `B_I = Π_u Π_{t_u<j<t_{u+1}} b(x_{t_u}, x_j) · (x_{t_s} + (N−1)/α) · Π_{j<t_1} b(x_{t_s} − 1, x_j)`
//! * `B̃_I = Π_u Π_{t_{u−1}<j<t_u} b(x_{t_u}, x_j) · Π_{j>t_s} b(x_{t_1} + 1, x_j) · (x_{t_1} + 1 + (N−1)/α)`
//! * `B̂_I = Π_u Π_{t_{u−1}<j<t_u} b(x_{t_u}, x_j) · Π_{j>t_s} b(x_{t_1} + 1, x_j)`
//!
//! so that `B̂_I(η̄/α) = α e'_η / e'_{c_I(η)} · B̃_I(η̄/α)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::composition::{eta_bar, Composition};
use crate::error::Result;
use crate::scalar::{self, Scalar};
use crate::subsets::IndexSubset;

/// All six kernels at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientKernel {
    pub a: Scalar,
    pub b: Scalar,
    pub b_tilde: Scalar,
    pub b_hat: Scalar,
    /// Keyed by the 0-based element of `I`.
    pub chi: BTreeMap<usize, Scalar>,
    pub chi_tilde: BTreeMap<usize, Scalar>,
}

fn a_fn(x: &Scalar, y: &Scalar, alpha: &Scalar) -> Result<Scalar> {
    scalar::inv(&(alpha * (x - y)), || "a(x, y) denominator".into())
}

fn b_fn(x: &Scalar, y: &Scalar, alpha: &Scalar) -> Result<Scalar> {
    let diff = x - y;
    let num = &diff - alpha.recip();
    scalar::div(&num, &diff, || "b(x, y) denominator".into())
}

pub fn a_i(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let t = set.elements();
    let mut out = Scalar::one();
    for w in t.windows(2) {
        out *= a_fn(&x[w[0]], &x[w[1]], alpha)?;
    }
    let shifted = &x[set.last()] - Scalar::one();
    out *= a_fn(&shifted, &x[set.first()], alpha)?;
    Ok(out)
}

/// `Π_u Π_{t_{u−1}<j<t_u} b(x_{t_u}, x_j)`, the product shared by `B̃` and `B̂`.
fn leading_gaps(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let mut out = Scalar::one();
    let mut start = 0;
    for &tu in set.elements() {
        for xj in &x[start..tu] {
            out *= b_fn(&x[tu], xj, alpha)?;
        }
        start = tu + 1;
    }
    Ok(out)
}

fn trailing_tail(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let bumped = &x[set.first()] + Scalar::one();
    let mut out = Scalar::one();
    for xj in &x[set.last() + 1..] {
        out *= b_fn(&bumped, xj, alpha)?;
    }
    Ok(out)
}

pub fn b_i(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let n = x.len();
    let t = set.elements();
    let mut out = Scalar::one();
    for (u, &tu) in t.iter().enumerate() {
        let end = t.get(u + 1).copied().unwrap_or(n);
        for xj in &x[tu + 1..end] {
            out *= b_fn(&x[tu], xj, alpha)?;
        }
    }
    out *= &x[set.last()] + scalar::int(n as i64 - 1) / alpha;
    let lowered = &x[set.last()] - Scalar::one();
    for xj in &x[..set.first()] {
        out *= b_fn(&lowered, xj, alpha)?;
    }
    Ok(out)
}

pub fn b_tilde(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    let n = x.len();
    let factor = &x[set.first()] + Scalar::one() + scalar::int(n as i64 - 1) / alpha;
    Ok(leading_gaps(x, set, alpha)? * trailing_tail(x, set, alpha)? * factor)
}

pub fn b_hat(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<Scalar> {
    Ok(leading_gaps(x, set, alpha)? * trailing_tail(x, set, alpha)?)
}

/// `χ_I^{(i)}(x)`; `i` must belong to `I`.
pub fn chi(x: &[Scalar], set: &IndexSubset, i: usize, alpha: &Scalar) -> Scalar {
    let k = set.index_of(i).expect("i must belong to I");
    let t = set.elements();
    if k == 0 {
        alpha * (&x[set.last()] - &x[i] - Scalar::one())
    } else {
        alpha * (&x[t[k - 1]] - &x[i])
    }
}

/// `χ̃_I^{(i)}(x)`; `i` must belong to `I`.
pub fn chi_tilde(x: &[Scalar], set: &IndexSubset, i: usize, alpha: &Scalar) -> Scalar {
    let k = set.index_of(i).expect("i must belong to I");
    let t = set.elements();
    if k + 1 == t.len() {
        alpha * (&x[i] - &x[set.first()] - Scalar::one())
    } else {
        alpha * (&x[i] - &x[t[k + 1]])
    }
}

/// Evaluates every kernel at the point `x`.
pub fn kernel_at(x: &[Scalar], set: &IndexSubset, alpha: &Scalar) -> Result<CoefficientKernel> {
    Ok(CoefficientKernel {
        a: a_i(x, set, alpha)?,
        b: b_i(x, set, alpha)?,
        b_tilde: b_tilde(x, set, alpha)?,
        b_hat: b_hat(x, set, alpha)?,
        chi: set
            .elements()
            .iter()
            .map(|&i| (i, chi(x, set, i, alpha)))
            .collect(),
        chi_tilde: set
            .elements()
            .iter()
            .map(|&i| (i, chi_tilde(x, set, i, alpha)))
            .collect(),
    })
}

/// Evaluates every kernel at `η̄/α`.
pub fn kernel(eta: &Composition, set: &IndexSubset, alpha: &Scalar) -> Result<CoefficientKernel> {
    scalar::validate_alpha(alpha)?;
    kernel_at(&eta_bar(eta, alpha).scaled(), set, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{compositions_up_to, hooks};
    use crate::scalar::{int, ratio};
    use crate::subsets::{c_i, is_maximal, maximal_sets};
    use num_traits::Zero;

    fn alphas() -> Vec<Scalar> {
        vec![int(2), int(3), ratio(5, 2), ratio(7, 3), ratio(11, 2)]
    }

    #[test]
    fn zero_composition_values() {
        for a in alphas() {
            for n in 1..=5usize {
                for j in 1..=n {
                    let set = IndexSubset::new((0..j).collect());
                    let k = kernel(&Composition::zeros(n), &set, &a).unwrap();
                    let jm1 = int(j as i64 - 1);
                    for i in 0..j - 1 {
                        assert_eq!(k.chi_tilde[&i], int(1));
                    }
                    // the last entry is −(j − 1 + α), which is what makes the
                    // inverse-triangle coefficient of z_j equal to 1
                    assert_eq!(k.chi_tilde[&(j - 1)], -(&jm1 + &a));
                    assert_eq!(k.a, -(&jm1 + &a).recip());
                    assert_eq!(k.b_hat, (&jm1 + &a) / (int(n as i64 - 1) + &a));
                }
            }
        }
    }

    #[test]
    fn chi_sums_to_minus_alpha() {
        for a in alphas() {
            for eta in compositions_up_to(3, 4) {
                for set in maximal_sets(&eta) {
                    let k = kernel(&eta, &set, &a).unwrap();
                    let s1: Scalar = k.chi_tilde.values().sum();
                    let s2: Scalar = k.chi.values().sum();
                    assert_eq!(s1, -a.clone());
                    assert_eq!(s2, -a.clone());
                }
            }
        }
    }

    /// Evaluating at the eigenvalues of `c_I(η)` instead of `η` trades
    /// `B → B̃` and `χ → χ̃` and leaves `A` unchanged.
    #[test]
    fn dependence_moves_from_target_to_source() {
        for a in alphas() {
            for n in 1..=4 {
                for eta in compositions_up_to(n, if n == 4 { 3 } else { 4 }) {
                    for set in maximal_sets(&eta) {
                        let at_eta = kernel(&eta, &set, &a).unwrap();
                        let at_nu = kernel(&c_i(&eta, &set), &set, &a).unwrap();
                        assert_eq!(at_nu.a, at_eta.a, "{eta} {set}");
                        assert_eq!(at_nu.b, at_eta.b_tilde, "{eta} {set}");
                        for &i in set.elements() {
                            assert_eq!(at_nu.chi[&i], at_eta.chi_tilde[&i]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn b_vanishes_off_maximal_sets() {
        for a in alphas() {
            for eta in compositions_up_to(3, 4) {
                for set in IndexSubset::all(3) {
                    let nu = c_i(&eta, &set);
                    let b = b_i(&crate::composition::eta_bar(&nu, &a).scaled(), &set, &a).unwrap();
                    assert_eq!(b.is_zero(), !is_maximal(&eta, &set), "{eta} {set}");
                }
            }
        }
    }

    #[test]
    fn b_hat_is_normalized_b_tilde() {
        for a in alphas() {
            for eta in compositions_up_to(4, 4) {
                let e_eta = hooks(&eta, &a).unwrap().e_prime;
                for set in maximal_sets(&eta) {
                    let k = kernel(&eta, &set, &a).unwrap();
                    let e_nu = hooks(&c_i(&eta, &set), &a).unwrap().e_prime;
                    assert_eq!(k.b_hat, &a * &e_eta / &e_nu * &k.b_tilde, "{eta} {set}");
                }
            }
        }
    }

    #[test]
    fn kernels_commute_with_raising() {
        let a = ratio(7, 3);
        let n = 3;
        for eta in compositions_up_to(n, 4) {
            for set in maximal_sets(&eta) {
                let image = crate::subsets::phi_of_i(&set, n);
                let k = kernel(&eta, &set, &a).unwrap();
                let kp = kernel(&eta.phi(), &image, &a).unwrap();
                assert_eq!(kp.a, k.a);
                assert_eq!(kp.b_hat, k.b_hat);
                for &i in set.elements() {
                    let moved = if i == 0 { n - 1 } else { i - 1 };
                    assert_eq!(kp.chi_tilde[&moved], k.chi_tilde[&i]);
                }
            }
        }
    }
}
