//! Arbitrary-precision evaluation of Gaussian-weighted rational functions.
//!
//! The rational part is evaluated exactly at the (dyadic) input point and only
//! the Gaussian factor is rounded, so the result carries the full working
//! precision regardless of cancellation in high-degree numerators.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRational;
use crate::error::Result;

/// Binary arbitrary-precision float, round-half-even.
pub type HighPrec = FBig<HalfEven, 2>;

/// Environment variable selecting the working precision in bits.
pub const PRECISION_ENV: &str = "SUSYOSC_PRECISION";
pub const DEFAULT_PRECISION_BITS: usize = 192;

/// Working precision from `SUSYOSC_PRECISION`, falling back to 192 bits.
/// Values below 64 bits are clamped up.
pub fn precision_bits() -> usize {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_PRECISION_BITS, |b| b.max(64))
}

pub fn bigint_to_ibig(n: &BigInt) -> IBig {
    IBig::from_le_bytes(&n.to_signed_bytes_le())
}

fn ibig_to_bigint(n: &IBig) -> BigInt {
    n.to_string().parse().expect("decimal integer")
}

/// Round an exact rational to `bits` of precision.
pub fn from_rational(r: &BigRational, bits: usize) -> HighPrec {
    let num = HighPrec::from(bigint_to_ibig(r.numer())).with_precision(bits).value();
    let den = HighPrec::from(bigint_to_ibig(r.denom())).with_precision(bits).value();
    num / den
}

pub fn from_f64(x: f64, bits: usize) -> HighPrec {
    HighPrec::try_from(x)
        .expect("finite input")
        .with_precision(bits)
        .value()
}

/// Exact rational value of a finite binary float.
pub fn to_rational(x: &HighPrec) -> BigRational {
    let sig = ibig_to_bigint(x.repr().significand());
    let exp = x.repr().exponent();
    let two = BigInt::from(2);
    if exp >= 0 {
        BigRational::from_integer(sig * num_traits::pow(two, exp as usize))
    } else {
        BigRational::new(sig, num_traits::pow(two, (-exp) as usize))
    }
}

pub fn to_f64(x: &HighPrec) -> f64 {
    x.to_f64().value()
}

/// Value of `f` at `x` using `bits` of working precision.
///
/// Errors when `x` is a root of the denominator of the rational part.
pub fn evaluate_with(f: &GaussRational, x: &HighPrec, bits: usize) -> Result<HighPrec> {
    let xr = to_rational(x);
    let r = f.rat.eval(&xr)?;
    let value = from_rational(&r, bits);
    if f.weight == 0 || r.is_zero() {
        return Ok(value);
    }
    let x = x.clone().with_precision(bits).value();
    let arg = &x * &x * HighPrec::from(f.weight) / HighPrec::from(2);
    Ok(value * arg.exp())
}

/// Value of `f` at `x` at the working precision selected by [`precision_bits`].
pub fn evaluate(f: &GaussRational, x: &HighPrec) -> Result<HighPrec> {
    evaluate_with(f, x, precision_bits())
}

/// `|a - b| / |b|` evaluated at the precision of the arguments.
pub fn relative_difference(a: &HighPrec, b: &HighPrec) -> f64 {
    let d = to_rational(a) - to_rational(b);
    let b = to_rational(b);
    if !b.is_zero() {
        to_f64(&from_rational(&(d / b).abs(), 64))
    } else if !d.is_zero() {
        f64::INFINITY
    } else {
        0.0
    }
}

/// `1` as a high-precision value.
pub fn one(bits: usize) -> HighPrec {
    from_rational(&BigRational::one(), bits)
}
