//! The `z_j E_η` coefficients computed by recurrence instead of closed form.
//!
//! Starting from the expansion of each `z_j` at `η = (0^N)`, coefficients
//! are transported along the same generation graph used for `E_η`:
//!
//! * raising: `c^{(j)}_{Φη,Φν} = c^{(j+1)}_{η,ν}` (indices cyclic);
//! * swapping, for `μ_i < μ_{i+1}`, with normalized coefficients
//!   `α̃_{μ,ν} = (d'_ν e'_μ / (d'_μ e'_ν)) c_{μ,ν}`:
//!   `(1 + δ̄_{i,μ}⁻¹) α̃^{(j)}_{s_i μ,ν} = (1 − δ̄_{i,ν}⁻¹) α̃^{(j')}_{μ,s_i ν} + δ̄_{i,ν}⁻¹ α̃^{(j')}_{μ,ν} − δ̄_{i,μ}⁻¹ α̃^{(j)}_{μ,ν}`
//!   where `j' = s_i(j)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::composition::{compositions_up_to, delta_bar, hooks, Composition};
use crate::error::{Error, Result};
use crate::jack::{JackTable, Step};
use crate::scalar::{self, Scalar};

/// Per-variable coefficient maps `j ↦ (ν ↦ c^{(j)}_{η,ν})`.
pub type VariableCoefficients = Vec<BTreeMap<Composition, Scalar>>;

/// Inductive computation of every `c^{(j)}_{η,ν}` for one `(N, α)`.
#[derive(Clone, Debug)]
pub struct RecurrenceEngine {
    n: usize,
    alpha: Scalar,
    coeffs: HashMap<Composition, VariableCoefficients>,
    /// `d'_η / e'_η`, the only hook data the normalization needs.
    hook_ratio: HashMap<Composition, Scalar>,
}

impl RecurrenceEngine {
    pub fn new(n: usize, alpha: Scalar) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        scalar::validate_alpha(&alpha)?;
        let mut coeffs = HashMap::new();
        coeffs.insert(Composition::zeros(n), initial_condition(n, &alpha)?);
        Ok(RecurrenceEngine {
            n,
            alpha,
            coeffs,
            hook_ratio: HashMap::new(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    /// All coefficients of `z_j E_η`, `j = 0..N`.
    pub fn coefficients(&mut self, eta: &Composition) -> Result<&VariableCoefficients> {
        if eta.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: eta.len(),
            });
        }
        self.ensure(eta)?;
        Ok(&self.coeffs[eta])
    }

    /// `c^{(j)}_{η,ν}` (0-based `j`), zero off the support.
    pub fn coefficient(&mut self, eta: &Composition, j: usize, nu: &Composition) -> Result<Scalar> {
        if j >= self.n {
            return Err(Error::InvalidArgument(format!("variable index {} out of range", j + 1)));
        }
        Ok(self.coefficients(eta)?[j]
            .get(nu)
            .cloned()
            .unwrap_or_else(Scalar::zero))
    }

    pub fn build_up_to(&mut self, max_weight: u32) -> Result<()> {
        for eta in compositions_up_to(self.n, max_weight) {
            self.ensure(&eta)?;
        }
        Ok(())
    }

    /// Every stored `(η, j, ν) ↦ c`.
    pub fn to_map(&self) -> BTreeMap<(Composition, usize, Composition), Scalar> {
        let mut out = BTreeMap::new();
        for (eta, per_var) in &self.coeffs {
            for (j, row) in per_var.iter().enumerate() {
                for (nu, c) in row {
                    out.insert((eta.clone(), j, nu.clone()), c.clone());
                }
            }
        }
        out
    }

    fn ratio(&mut self, eta: &Composition) -> Result<Scalar> {
        if let Some(r) = self.hook_ratio.get(eta) {
            return Ok(r.clone());
        }
        let h = hooks(eta, &self.alpha)?;
        let r = h.d_prime / h.e_prime;
        self.hook_ratio.insert(eta.clone(), r.clone());
        Ok(r)
    }

    fn ensure(&mut self, eta: &Composition) -> Result<()> {
        if self.coeffs.contains_key(eta) {
            return Ok(());
        }
        let step = JackTable::default_step(eta).expect("(0^N) is seeded");
        let computed = match step {
            Step::Raise => {
                let mu = eta.phi_inverse().expect("raise needs a positive last part");
                self.ensure(&mu)?;
                let src = &self.coeffs[&mu];
                (0..self.n)
                    .map(|j| {
                        src[(j + 1) % self.n]
                            .iter()
                            .map(|(nu, c)| (nu.phi(), c.clone()))
                            .collect()
                    })
                    .collect()
            }
            Step::Swap(i) => {
                let mu = eta.swap(i);
                self.ensure(&mu)?;
                self.swap_step(&mu, i)?
            }
        };
        self.coeffs.insert(eta.clone(), computed);
        Ok(())
    }

    /// Coefficients for `s_i μ` from those of `μ`, where `μ_i < μ_{i+1}`.
    fn swap_step(&mut self, mu: &Composition, i: usize) -> Result<VariableCoefficients> {
        let target = mu.swap(i);
        let src = self.coeffs[mu].clone();
        let alpha = self.alpha.clone();
        let r_mu = self.ratio(mu)?;
        let r_target = self.ratio(&target)?;

        // normalized source coefficients α̃_{μ,ν} = (d'_ν/e'_ν)(e'_μ/d'_μ) c
        let mut tilde: Vec<BTreeMap<Composition, Scalar>> = Vec::with_capacity(self.n);
        for row in &src {
            let mut out = BTreeMap::new();
            for (nu, c) in row {
                out.insert(nu.clone(), self.ratio(nu)? / &r_mu * c);
            }
            tilde.push(out);
        }
        let candidates: BTreeSet<Composition> = tilde
            .iter()
            .flat_map(|row| row.keys())
            .flat_map(|nu| [nu.clone(), nu.swap(i)])
            .collect();

        let inv_mu = scalar::inv(&delta_bar(mu, i, &alpha), || format!("δ̄_{} of {mu}", i + 1))?;
        let lead = Scalar::one() + &inv_mu;
        let get = |j: usize, nu: &Composition| tilde[j].get(nu).cloned().unwrap_or_else(Scalar::zero);

        let mut out = vec![BTreeMap::new(); self.n];
        for nu in &candidates {
            let inv_nu = scalar::inv(&delta_bar(nu, i, &alpha), || format!("δ̄_{} of {nu}", i + 1))?;
            let swapped = nu.swap(i);
            let ratio_nu = self.ratio(nu)?;
            for (j, row) in out.iter_mut().enumerate() {
                let partner = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                let rhs = (Scalar::one() - &inv_nu) * get(partner, &swapped) + &inv_nu * get(partner, nu)
                    - &inv_mu * get(j, nu);
                if rhs.is_zero() {
                    continue;
                }
                let new_tilde = scalar::div(&rhs, &lead, || format!("1 + δ̄⁻¹ for {mu}"))?;
                // back to c_{s_i μ, ν} = (d'_{s_i μ} e'_ν / (d'_ν e'_{s_i μ})) α̃
                row.insert(nu.clone(), &r_target / &ratio_nu * new_tilde);
            }
        }
        Ok(out)
    }
}

/// `z_i = E_{e_i} − Σ_{j>i} E_{e_j} / (α + j)` with 0-based `i`, `j`.
fn initial_condition(n: usize, alpha: &Scalar) -> Result<VariableCoefficients> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = BTreeMap::new();
        row.insert(Composition::unit(n, i), Scalar::one());
        for j in i + 1..n {
            let c = scalar::inv(&(alpha + scalar::int(j as i64)), || "α + j".into())?;
            row.insert(Composition::unit(n, j), -c);
        }
        out.push(row);
    }
    Ok(out)
}

/// Runs the engine over all `|η| ≤ max_weight` and returns every coefficient.
pub fn recurrence_engine(
    n: usize,
    alpha: &Scalar,
    max_weight: u32,
) -> Result<BTreeMap<(Composition, usize, Composition), Scalar>> {
    let mut engine = RecurrenceEngine::new(n, alpha.clone())?;
    engine.build_up_to(max_weight)?;
    Ok(engine.to_map())
}
