//! Reference closed forms for the `{2,3,4,5}` model, kept verbatim (including
//! errata) so the exact constructions can be diffed against them.

use num_rational::BigRational;

use super::ladder::LadderName;
use crate::exactfn::{q, GaussRational, Polynomial, RationalFunction};

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn ratio(c: i64, num: &[i64], den: &[i64], weight: i64) -> GaussRational {
    let r = RationalFunction::new(p(num).scale(&q(c)), p(den)).expect("non-zero denominator");
    GaussRational::new(r, weight)
}

/// `45 + 120x⁴ - 64x⁶ + 16x⁸`
pub fn wronskian_polynomial() -> Polynomial {
    p(&[45, 0, 0, 0, 120, 0, -64, 0, 16])
}

/// `V = -8 + x² - 1024 N₂ / P² + 64 N₁ / P`.
pub fn partner_potential() -> RationalFunction {
    let pw = RationalFunction::from_poly(wronskian_polynomial());
    let base = RationalFunction::from_poly(p(&[-8, 0, 1]));
    let n2 = RationalFunction::from_poly(p(&[-315, 0, 90, 0, -1020, 0, 328]).scale(&q(1024)));
    let n1 = RationalFunction::from_poly(p(&[-112, 0, -13, 0, -4, 0, 4]).scale(&q(64)));
    let t2 = n2.div(&pw.pow(2)).expect("P non-zero");
    let t1 = n1.div(&pw).expect("P non-zero");
    &(&base - &t2) + &t1
}

/// Reference `Q^(1)..Q^(4)` of the state-adding chain.
pub fn adding_chain_functions() -> Vec<(&'static str, GaussRational)> {
    vec![
        ("Q1", ratio(1, &[2, 0, 4], &[1], 1)),
        ("Q2", ratio(8, &[3, 0, 4], &[2, 0, 4], 1)),
        ("Q3", ratio(16, &[9, 0, 18, 0, -12, 0, 8], &[3, 0, 0, 0, 4], 1)),
        // 9 + 18x²(15 - 8x² + 2x⁴)
        ("Q4", ratio(96, &[9, 0, 270, 0, -144, 0, 36], &[9, 0, 18, 0, -12, 0, 8], 1)),
    ]
}

/// Reference `Q̄^(4), Q̄^(5)` of the state-deleting chain.
pub fn deleting_chain_functions() -> Vec<(&'static str, GaussRational)> {
    vec![
        ("Qbar4", ratio(1, &[12, 0, -48, 0, 16], &[1], -1)),
        ("Qbar5", ratio(8, &[45, 0, 0, 0, 120, 0, -64, 0, 16], &[3, 0, -12, 0, 4], -1)),
    ]
}

/// Offsets `c_j` of a product `Π (H + c_j)`.
pub fn reference_structure_offsets(name: LadderName) -> Option<&'static [i64]> {
    use LadderName::*;
    match name {
        C | CTilde => Some(&[-11, -9, 5, 7, 9, 11]),
        L => Some(&[3, 5, 7, 9, -1, 5, 7, 9, 11]),
        LBar => Some(&[11, 1, -1, 3, 1]),
        LTilde => Some(&[1, 3, 5, 7, -5, -3, 5, 7, 9, 11]),
        LBarTilde => Some(&[9, -1, 11, -3, 3, 1]),
        _ => None,
    }
}

/// `Π (E + c_j)` as a polynomial in `E`.
pub fn offsets_polynomial(offsets: &[i64]) -> Polynomial {
    offsets
        .iter()
        .fold(Polynomial::one(), |acc, &c| &acc * &Polynomial::new(vec![q(c), q(1)]))
}

/// Listed zero modes for the untruncated system.
pub fn untruncated_zero_modes() -> Vec<(LadderName, Vec<i64>)> {
    use LadderName::*;
    vec![
        (C, vec![-6, -5, -4, -3, 4, 5]),
        (CDag, vec![]),
        (L, vec![-6, -5, -4, -3, 0]),
        (LDag, vec![-6, -5, -4, -3]),
        (LBar, vec![-6, 0]),
        (LBarDag, vec![-3]),
    ]
}

/// Listed zero modes for the truncated (odd) system.
pub fn truncated_zero_modes() -> Vec<(LadderName, Vec<i64>)> {
    use LadderName::*;
    vec![
        (CTilde, vec![-5, -3, 5]),
        (CTildeDag, vec![]),
        (LTilde, vec![-5, -3, 1]),
        (LTildeDag, vec![-5, -3]),
        (LBarTilde, vec![-5, 1]),
        (LBarTildeDag, vec![-3]),
    ]
}

/// Two-significant-figure values of `D_k²`, `k = 0..=3`.
pub const DENOMINATOR_SQUARES: [f64; 4] = [1.0, 1.5e8, 3.3e17, 4.1e27];

/// Wigner value at `(x, p) = (1.9, 0.8)`, `|z| = 500`, single-term truncation.
pub const WIGNER_PROBE: f64 = -0.036;

pub fn energy_shift() -> BigRational {
    q(-8)
}
