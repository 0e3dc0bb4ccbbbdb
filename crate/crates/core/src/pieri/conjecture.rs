//! Candidate product formulas for the general-`p` coefficient of `E_ν` in
//! `e_p E_η`, compared against the oracle.
//!
//! With `B = (d'_ν e'_η / (e'_ν d'_η)) A`, `π` the rank matching from `η` to
//! `ν`, `G_1` the rows whose part gains a box under `π` and `G_0` the rest:
//!
//! * `B_swa = Π_{j∈G_0, k∈G_1, j<k} (η̄_j − η̄_k + 1)/(η̄_j − η̄_k)
//!   · Π_{j∈G_1, k∈G_0, π(j)<π(k)} (η̄_j − η̄_k + α − 1)/(η̄_j − η̄_k + α)`;
//! * `B_ext = B_swa · Π_{π²(j)<π(j)<j} 1/(η̄_{π(j)} − η̄_j)
//!   · Π_{j≤π²(j)≤π(j)} 1/(η̄_{π(j)} − η̄_j − α)`.
//!
//! The index range of `j` in the last two products is ambiguous, so both
//! "every row" and "moved rows only" are evaluated.

use num_traits::{One, Zero};

use crate::composition::{eta_bar, hooks, rank_matching, Composition, EtaBar, Permutation};
use crate::error::{Error, Result};
use crate::jack::JackTable;
use crate::oracle::{brute_elementary, BasisExpansion};
use crate::scalar::Scalar;
use crate::subsets::support_j;

/// `η + χ_{M*}`: one box added to each of the `p` rows of smallest rank.
pub fn m_star_target(eta: &Composition, p: usize) -> Composition {
    let parts = (0..eta.len())
        .map(|i| eta.parts()[i] + u32::from(eta.rank(i) < p))
        .collect();
    Composition::new(parts)
}

/// Rows of `η` that keep (`G_0`) or gain (`G_1`) a box on their way to `ν`.
pub fn row_classes(eta: &Composition, nu: &Composition, pi: &Permutation) -> (Vec<usize>, Vec<usize>) {
    let mut g0 = Vec::new();
    let mut g1 = Vec::new();
    for j in 0..eta.len() {
        let target = nu.parts()[pi.apply(j)];
        if target == eta.parts()[j] {
            g0.push(j);
        } else if target == eta.parts()[j] + 1 {
            g1.push(j);
        }
    }
    (g0, g1)
}

/// Which rows the trailing products of the extended form range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendedReading {
    /// `j` over every row; a fixed row contributes `−1/α`.
    AllRows,
    /// `j` over rows with `π(j) ≠ j` only.
    MovedRows,
}

/// `None` when some factor has a zero denominator.
fn product(factors: impl IntoIterator<Item = (Scalar, Scalar)>) -> Option<Scalar> {
    let mut out = Scalar::one();
    for (num, den) in factors {
        if den.is_zero() {
            return None;
        }
        out *= num / den;
    }
    Some(out)
}

pub fn b_swa(eta: &Composition, nu: &Composition, pi: &Permutation, bar: &EtaBar) -> Option<Scalar> {
    let (g0, g1) = row_classes(eta, nu, pi);
    let alpha = &bar.alpha;
    let one = Scalar::one();
    let mut factors = Vec::new();
    for &j in &g0 {
        for &k in &g1 {
            if j < k {
                let diff = &bar[j] - &bar[k];
                factors.push((&diff + &one, diff));
            }
        }
    }
    for &j in &g1 {
        for &k in &g0 {
            if pi.apply(j) < pi.apply(k) {
                let diff = &bar[j] - &bar[k] + alpha;
                factors.push((&diff - &one, diff));
            }
        }
    }
    product(factors)
}

pub fn extended_factor(pi: &Permutation, bar: &EtaBar, reading: ExtendedReading) -> Option<Scalar> {
    let one = Scalar::one();
    let mut factors = Vec::new();
    for j in 0..pi.len() {
        let pj = pi.apply(j);
        if reading == ExtendedReading::MovedRows && pj == j {
            continue;
        }
        let ppj = pi.apply(pj);
        if ppj < pj && pj < j {
            factors.push((one.clone(), &bar[pj] - &bar[j]));
        } else if j <= ppj && ppj <= pj {
            factors.push((one.clone(), &bar[pj] - &bar[j] - &bar.alpha));
        }
    }
    product(factors)
}

/// One `(η, ν)` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRecord {
    pub eta: Composition,
    pub nu: Composition,
    pub p: usize,
    pub a_oracle: Scalar,
    pub b_from_a: Scalar,
    pub b_swa: Option<Scalar>,
    pub b_extended_all: Option<Scalar>,
    pub b_extended_moved: Option<Scalar>,
    pub is_m_star: bool,
    pub single_box: bool,
    /// At most one row of `η` moves to a larger index.
    pub at_most_one_down: bool,
}

impl ConjectureRecord {
    pub fn swa_matches(&self) -> bool {
        self.b_swa.as_ref() == Some(&self.b_from_a)
    }

    pub fn extended_all_matches(&self) -> bool {
        self.b_extended_all.as_ref() == Some(&self.b_from_a)
    }

    pub fn extended_moved_matches(&self) -> bool {
        self.b_extended_moved.as_ref() == Some(&self.b_from_a)
    }
}

fn record_from(eta: &Composition, p: usize, nu: &Composition, oracle: &BasisExpansion, alpha: &Scalar) -> Result<ConjectureRecord> {
    let a_oracle = oracle.coefficient(nu);
    let h_eta = hooks(eta, alpha)?;
    let h_nu = hooks(nu, alpha)?;
    let b_from_a = &h_nu.d_prime * &h_eta.e_prime / (&h_nu.e_prime * &h_eta.d_prime) * &a_oracle;
    let pi = rank_matching(eta, nu);
    let bar = eta_bar(eta, alpha);
    let swa = b_swa(eta, nu, &pi, &bar);
    let ext = |reading| match (&swa, extended_factor(&pi, &bar, reading)) {
        (Some(s), Some(e)) => Some(s * e),
        _ => None,
    };
    let moved_down = (0..eta.len()).filter(|&j| pi.apply(j) > j).count();
    Ok(ConjectureRecord {
        eta: eta.clone(),
        nu: nu.clone(),
        p,
        a_oracle,
        b_from_a,
        b_extended_all: ext(ExtendedReading::AllRows),
        b_extended_moved: ext(ExtendedReading::MovedRows),
        b_swa: swa,
        is_m_star: *nu == m_star_target(eta, p),
        single_box: p == 1,
        at_most_one_down: moved_down <= 1,
    })
}

fn check_target(eta: &Composition, p: usize, nu: &Composition) -> Result<()> {
    if p > eta.len() {
        return Err(Error::InvalidArgument(format!("p = {p} exceeds N = {}", eta.len())));
    }
    if !support_j(eta, p).contains(nu) {
        return Err(Error::InvalidArgument(format!("{nu} is not in the e_{p} support of {eta}")));
    }
    Ok(())
}

/// Compares every candidate formula for one `ν` in the `e_p` support of `η`.
pub fn conjecture_bp(eta: &Composition, p: usize, nu: &Composition, table: &mut JackTable) -> Result<ConjectureRecord> {
    check_target(eta, p, nu)?;
    let oracle = brute_elementary(eta, p, table)?;
    let alpha = table.alpha().clone();
    record_from(eta, p, nu, &oracle, &alpha)
}

/// One record per `ν` in the `e_p` support of `η`, sharing one oracle run.
pub fn conjecture_rows(eta: &Composition, p: usize, table: &mut JackTable) -> Result<Vec<ConjectureRecord>> {
    if p > eta.len() {
        return Err(Error::InvalidArgument(format!("p = {p} exceeds N = {}", eta.len())));
    }
    let oracle = brute_elementary(eta, p, table)?;
    let alpha = table.alpha().clone();
    support_j(eta, p)
        .iter()
        .map(|nu| record_from(eta, p, nu, &oracle, &alpha))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_up_to;
    use crate::pieri::kernel::kernel;
    use crate::scalar::{int, ratio};
    use crate::subsets::{c_i, maximal_sets};

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec())
    }

    #[test]
    fn m_star_example() {
        assert_eq!(m_star_target(&c(&[2, 0, 1]), 2), c(&[3, 0, 2]));
        assert_eq!(m_star_target(&c(&[2, 0, 1]), 0), c(&[2, 0, 1]));
        assert_eq!(m_star_target(&c(&[0, 0, 0]), 1), c(&[1, 0, 0]));
    }

    #[test]
    fn m_star_coefficient_is_one() {
        let mut t = JackTable::new(3, ratio(5, 2)).unwrap();
        for eta in compositions_up_to(3, 3) {
            for p in 0..=3 {
                let nu = m_star_target(&eta, p);
                let rec = conjecture_bp(&eta, p, &nu, &mut t).unwrap();
                assert!(rec.is_m_star);
                assert_eq!(rec.a_oracle, int(1), "{eta} p = {p}");
                assert!(rec.swa_matches(), "{eta} p = {p}");
            }
        }
    }

    #[test]
    fn single_variable_b_is_kernel_product() {
        let a = int(3);
        let mut t = JackTable::new(3, a.clone()).unwrap();
        for eta in compositions_up_to(3, 3) {
            for set in maximal_sets(&eta) {
                let nu = c_i(&eta, &set);
                let rec = conjecture_bp(&eta, 1, &nu, &mut t).unwrap();
                let k = kernel(&eta, &set, &a).unwrap();
                assert_eq!(rec.b_from_a, -&a * &k.a * &k.b_hat, "{eta} {set}");
                if set.len() == 1 {
                    assert!(rec.swa_matches(), "{eta} {set}");
                    assert!(rec.extended_moved_matches(), "{eta} {set}");
                }
            }
        }
    }

    #[test]
    fn rejects_targets_outside_support() {
        let mut t = JackTable::new(2, int(2)).unwrap();
        assert!(conjecture_bp(&c(&[1, 0]), 1, &c(&[3, 0]), &mut t).is_err());
    }
}
