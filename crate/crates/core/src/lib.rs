//! Exact non-symmetric Jack polynomials and their Pieri-type expansions.
//!
//! The crate computes `E_η(z)` over the rationals for a fixed rational `α`,
//! evaluates closed-form coefficients for `z_i E_η`, `e_1 E_η`,
//! `e_{N−1} E_η` and the symmetric `e_p P_κ` rule, and checks them against a
//! brute-force triangular-elimination oracle.

pub mod cache;
pub mod composition;
pub mod error;
pub mod jack;
pub mod oracle;
pub mod pieri;
pub mod poly;
pub mod scalar;
pub mod subsets;
pub mod verify;

pub use composition::{Composition, EtaBar, HookData, Permutation};
pub use error::{Error, Result};
pub use jack::JackTable;
pub use oracle::BasisExpansion;
pub use pieri::{PieriExpansion, Selector};
pub use poly::{Monomial, Poly};
pub use scalar::Scalar;
pub use subsets::IndexSubset;
