//! Exact rational scalars.
//!
//! The coefficient field is `BigRational`; values are always kept in lowest
//! terms with a positive denominator by `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `n`, `-n`, or `num/den`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `num/den`, with the denominator omitted when it is 1.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `num/den`, always with an explicit denominator.
pub fn format_scalar_full(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Checked inverse; `what` names the factor for the error message.
pub fn inv(x: &Scalar, what: impl FnOnce() -> String) -> Result<Scalar> {
    if x.is_zero() {
        Err(Error::AlphaSingular(what()))
    } else {
        Ok(x.recip())
    }
}

/// Checked quotient `num / den`.
pub fn div(num: &Scalar, den: &Scalar, what: impl FnOnce() -> String) -> Result<Scalar> {
    Ok(num * inv(den, what)?)
}

pub fn validate_alpha(alpha: &Scalar) -> Result<()> {
    if alpha.is_zero() {
        return Err(Error::AlphaSingular("alpha".into()));
    }
    Ok(())
}

/// True when the rational is in canonical form (lowest terms, positive denominator).
pub fn is_canonical(x: &Scalar) -> bool {
    use num_integer::Integer;
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}
