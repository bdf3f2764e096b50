use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::Polynomial;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// `rat(x) * exp(weight * x^2 / 2)`.
///
/// Closed under differentiation and multiplication, which is everything the
/// Darboux machinery needs: seeds carry weight `+1`, oscillator states `-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub rat: RationalFunction,
    pub weight: i64,
}

impl GaussRational {
    pub fn new(rat: RationalFunction, weight: i64) -> Self {
        GaussRational { rat, weight }
    }

    pub fn from_poly(p: Polynomial, weight: i64) -> Self {
        Self::new(RationalFunction::from_poly(p), weight)
    }

    pub fn zero(weight: i64) -> Self {
        Self::new(RationalFunction::zero(), weight)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero()
    }

    /// `d/dx`: `rat -> rat' + weight * x * rat`, weight unchanged.
    pub fn differentiate(&self) -> Self {
        let mut out = self.rat.derivative();
        if self.weight != 0 && !self.rat.is_zero() {
            let sx = RationalFunction::from_poly(Polynomial::monomial(
                BigRational::from_integer(BigInt::from(self.weight)),
                1,
            ));
            out = &out + &(&sx * &self.rat);
        }
        Self::new(out, self.weight)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.weight != rhs.weight {
            return Err(Error::WeightMismatch(self.weight, rhs.weight));
        }
        Ok(Self::new(&self.rat + &rhs.rat, self.weight))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.rat.scale(c), self.weight)
    }

    /// Multiply by a plain rational function (weight unchanged).
    pub fn mul_rat(&self, r: &RationalFunction) -> Self {
        Self::new(&self.rat * r, self.weight)
    }

    /// Quotient of two Gaussian-weighted functions; weights subtract.
    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::new(self.rat.div(&rhs.rat)?, self.weight - rhs.weight))
    }

    /// `Some(c)` when `self = c * other` for a rational constant `c`
    /// (tested by exact cross-multiplication). Zero functions are only
    /// proportional to each other.
    pub fn proportionality(&self, other: &Self) -> Option<BigRational> {
        if self.is_zero() || other.is_zero() {
            return (self.is_zero() && other.is_zero()).then(BigRational::zero);
        }
        if self.weight != other.weight {
            return None;
        }
        // a/b = c * p/q  <=>  a*q = c * p*b
        let lhs = self.rat.numer() * other.rat.denom();
        let rhs = other.rat.numer() * self.rat.denom();
        if lhs.degree() != rhs.degree() {
            return None;
        }
        let c = lhs.leading() / rhs.leading();
        (lhs == rhs.scale(&c)).then_some(c)
    }

    /// Value of the rational part at `x = 0`; `None` at a pole.
    pub fn rat_at_zero(&self) -> Option<BigRational> {
        self.rat.eval(&BigRational::zero()).ok()
    }

    /// Sign of the highest-degree numerator coefficient (denominator is monic).
    pub fn leading_sign(&self) -> i32 {
        let l = self.rat.numer().leading();
        if l.is_positive() {
            1
        } else if l.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Double-precision evaluation. Only suitable where the rational part
    /// is well conditioned; see [`super::highprec`] for the exact-input path.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.rat.to_f64().eval(x) * (0.5 * self.weight as f64 * x * x).exp()
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.rat, self.weight)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.rat * &rhs.rat, self.weight + rhs.weight)
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] * exp({} x^2/2)", self.rat, self.weight)
    }
}

/// `derivative_sign * d/dx + superpotential`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FirstOrderOperator {
    pub superpotential: RationalFunction,
    pub derivative_sign: i8,
}

impl FirstOrderOperator {
    /// `d/dx + w`
    pub fn lowering(w: RationalFunction) -> Self {
        FirstOrderOperator {
            superpotential: w,
            derivative_sign: 1,
        }
    }

    /// `-d/dx + w`
    pub fn raising(w: RationalFunction) -> Self {
        FirstOrderOperator {
            superpotential: w,
            derivative_sign: -1,
        }
    }

    /// Oscillator annihilator `a = d/dx + x`.
    pub fn annihilator() -> Self {
        Self::lowering(RationalFunction::x())
    }

    /// Oscillator creator `a† = -d/dx + x`.
    pub fn creator() -> Self {
        Self::raising(RationalFunction::x())
    }

    /// Formal adjoint on real functions: flips the derivative sign.
    pub fn adjoint(&self) -> Self {
        FirstOrderOperator {
            superpotential: self.superpotential.clone(),
            derivative_sign: -self.derivative_sign,
        }
    }

    pub fn apply(&self, f: &GaussRational) -> GaussRational {
        if f.is_zero() {
            return f.clone();
        }
        let d = f.differentiate();
        let d = if self.derivative_sign < 0 { -&d } else { d };
        let w = f.mul_rat(&self.superpotential);
        d.try_add(&w).expect("equal weights")
    }
}

/// Apply operators written left-to-right (`ops[0]` acts last).
pub fn apply_product(ops: &[FirstOrderOperator], f: &GaussRational) -> GaussRational {
    ops.iter().rev().fold(f.clone(), |acc, op| {
        if acc.is_zero() {
            acc
        } else {
            op.apply(&acc)
        }
    })
}
