//! Closed-form Pieri coefficients for `E_η` and `P_κ`.

use std::fmt;

use num_traits::Zero;

use crate::composition::Composition;
use crate::error::Result;
use crate::scalar::{format_scalar, Scalar};

pub mod complement;
pub mod conjecture;
pub mod kernel;
pub mod recurrence;
pub mod single;
pub mod symmetric;

pub use kernel::{kernel, CoefficientKernel};

/// Which product multiplies the source polynomial. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// `z_i`.
    Variable(usize),
    /// `Π_{k ≠ j} z_k`.
    Complement(usize),
    /// `e_p`, acting on `E_η`.
    Elementary(usize),
    /// `e_p`, acting on the symmetric `P_κ`.
    Symmetric(usize),
}

impl Selector {
    /// Number of variables in each monomial of the multiplier.
    pub fn degree(&self, n: usize) -> usize {
        match *self {
            Selector::Variable(_) => 1,
            Selector::Complement(_) => n - 1,
            Selector::Elementary(p) | Selector::Symmetric(p) => p,
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Variable(i) => write!(f, "z_{}", i + 1),
            Selector::Complement(j) => write!(f, "z^1 / z_{}", j + 1),
            Selector::Elementary(p) => write!(f, "e_{p}"),
            Selector::Symmetric(p) => write!(f, "e_{p} (symmetric)"),
        }
    }
}

/// The product of a selector with `E_η` (or `P_κ`) written in the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriExpansion {
    pub source: Composition,
    pub selector: Selector,
    /// Sorted lexicographically decreasing; no zero coefficients.
    pub terms: Vec<(Composition, Scalar)>,
}

impl PieriExpansion {
    pub fn coefficient(&self, nu: &Composition) -> Scalar {
        self.terms
            .iter()
            .find(|(c, _)| c == nu)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for PieriExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} * E{}", self.selector, self.source)?;
        for (nu, c) in &self.terms {
            writeln!(f, "  E{nu}  {}", format_scalar(c))?;
        }
        Ok(())
    }
}

/// `e_p E_η` when a closed form exists (`p ∈ {0, 1, N−1, N}`), else `None`.
pub fn closed_form_elementary(eta: &Composition, p: usize, alpha: &Scalar) -> Option<Result<PieriExpansion>> {
    let n = eta.len();
    let trivial = |target: Composition| {
        Ok(PieriExpansion {
            source: eta.clone(),
            selector: Selector::Elementary(p),
            terms: vec![(target, num_traits::One::one())],
        })
    };
    if p == n {
        Some(crate::scalar::validate_alpha(alpha).and_then(|_| trivial(eta.plus_ones())))
    } else if p == 0 {
        Some(crate::scalar::validate_alpha(alpha).and_then(|_| trivial(eta.clone())))
    } else if p == 1 {
        Some(single::expand_e1(eta, alpha))
    } else if p + 1 == n {
        Some(complement::expand_en1(eta, alpha))
    } else {
        None
    }
}
