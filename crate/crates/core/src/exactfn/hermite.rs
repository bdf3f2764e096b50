use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::GaussRational;
use super::poly::Polynomial;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Physicists' Hermite polynomial `H_n` via `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite(n: usize) -> Polynomial {
    hermite_family(n, -1)
}

/// Modified Hermite polynomial `(-i)^m H_m(ix)`, satisfying
/// `𝓗_{m+1} = 2x 𝓗_m + 2m 𝓗_{m-1}` (all coefficients non-negative).
pub fn modified_hermite(m: usize) -> Polynomial {
    hermite_family(m, 1)
}

fn hermite_family(n: usize, sign: i64) -> Polynomial {
    let two_x = Polynomial::monomial(int(2), 1);
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) + &prev.scale(&int(sign * 2 * k as i64));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Oscillator eigenfunction `ψ_ν = H_ν e^{-x²/2}` with energy `2ν + 1`.
pub fn oscillator_state(nu: usize) -> GaussRational {
    GaussRational::from_poly(hermite(nu), -1)
}

/// Formal seed solution `φ_m = 𝓗_m e^{x²/2}` with energy `-(2m + 1)`.
pub fn seed_function(m: usize) -> GaussRational {
    GaussRational::from_poly(modified_hermite(m), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;
    use num_traits::{One, Zero};

    #[test]
    fn low_order_values() {
        assert_eq!(hermite(0), Polynomial::from_ints(&[1]));
        assert_eq!(hermite(2), Polynomial::from_ints(&[-2, 0, 4]));
        assert_eq!(hermite(5), Polynomial::from_ints(&[0, 120, 0, -160, 0, 32]));
        assert_eq!(modified_hermite(0), Polynomial::from_ints(&[1]));
        assert_eq!(modified_hermite(2), Polynomial::from_ints(&[2, 0, 4]));
        assert_eq!(modified_hermite(3), Polynomial::from_ints(&[0, 12, 0, 8]));
    }

    #[test]
    fn hermite_ode_holds_exactly() {
        for n in 0..=20 {
            let h = hermite(n);
            let lhs = &(&h.derivative().derivative() - &(&Polynomial::monomial(int(2), 1) * &h.derivative()))
                + &h.scale(&int(2 * n as i64));
            assert!(lhs.is_zero(), "n = {n}");
        }
    }

    /// Oracle: evaluate `(-i)^m H_m(i x)` directly in Gaussian rationals.
    fn modified_by_definition(m: usize, x: &BigRational) -> BigRational {
        let h = hermite(m);
        let ix = Complex::new(BigRational::zero(), x.clone());
        let mut acc = Complex::new(BigRational::zero(), BigRational::zero());
        for c in h.coeffs().iter().rev() {
            acc = acc * ix.clone() + Complex::new(c.clone(), BigRational::zero());
        }
        let minus_i = Complex::new(BigRational::zero(), -BigRational::one());
        let mut factor = Complex::new(BigRational::one(), BigRational::zero());
        for _ in 0..m {
            factor = factor * minus_i.clone();
        }
        let v = acc * factor;
        assert!(v.im.is_zero());
        v.re
    }

    #[test]
    fn modified_hermite_matches_definition() {
        let points = [(1, 2), (-3, 7), (5, 3), (2, 1), (-1, 9), (11, 4), (0, 1), (7, 5), (-13, 6), (1, 100)];
        for m in 0..=20 {
            let p = modified_hermite(m);
            assert!(p.coeffs().iter().all(|c| c >= &BigRational::zero()));
            for &(a, b) in &points {
                let x = BigRational::new(a.into(), b.into());
                assert_eq!(p.eval(&x), modified_by_definition(m, &x), "m = {m}");
            }
        }
    }

    #[test]
    fn seeds_solve_the_oscillator_equation_at_negative_energy() {
        for m in 0..8 {
            let phi = seed_function(m);
            let d2 = phi.differentiate().differentiate();
            let x2 = crate::exactfn::RationalFunction::from_poly(Polynomial::monomial(int(1), 2));
            let h_phi = (-&d2).try_add(&phi.mul_rat(&x2)).unwrap();
            let rhs = phi.scale(&int(-(2 * m as i64 + 1)));
            assert_eq!(h_phi, rhs);
        }
    }
}
