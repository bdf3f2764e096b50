use super::gauss::GaussRational;
use super::poly::Polynomial;
use super::rational::RationalFunction;

fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() {
        return b.monic();
    }
    if b.is_constant() {
        return a.monic();
    }
    (a * b).exact_div(&a.gcd(b)).monic()
}

/// Wronskian determinant `det[f_j^{(i)}]`, weight equal to the sum of input weights.
///
/// Each column shares one Gaussian factor, so it is pulled out of the
/// determinant; every row is then cleared of denominators and the remaining
/// polynomial matrix is reduced by fraction-free (Bareiss) elimination.
///
/// Panics on an empty list.
pub fn wronskian(fs: &[GaussRational]) -> GaussRational {
    assert!(!fs.is_empty(), "Wronskian of an empty list");
    let n = fs.len();
    let weight: i64 = fs.iter().map(|f| f.weight).sum();

    let mut rows: Vec<Vec<GaussRational>> = vec![fs.to_vec()];
    for i in 1..n {
        let next = rows[i - 1].iter().map(GaussRational::differentiate).collect();
        rows.push(next);
    }

    let mut row_den = Vec::with_capacity(n);
    let mut m: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    for row in &rows {
        let d = row
            .iter()
            .fold(Polynomial::one(), |acc, f| lcm(&acc, f.rat.denom()));
        m.push(
            row.iter()
                .map(|f| &f.rat.numer().clone() * &d.exact_div(f.rat.denom()))
                .collect(),
        );
        row_den.push(d);
    }

    let det = bareiss_det(m);
    let den = row_den.iter().fold(Polynomial::one(), |acc, d| &acc * d);
    GaussRational::new(
        RationalFunction::new(det, den).expect("non-zero denominator"),
        weight,
    )
}

/// Fraction-free determinant of a square polynomial matrix.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfn::hermite::{oscillator_state, seed_function};

    #[test]
    fn single_entry_is_identity() {
        let phi = seed_function(2);
        assert_eq!(wronskian(&[phi.clone()]), phi);
    }

    #[test]
    fn two_seed_wronskian() {
        // (2+4x^2)(12+24x^2) - 8x(12x+8x^3) = 24 + 32x^4
        let w = wronskian(&[seed_function(2), seed_function(3)]);
        assert_eq!(w, GaussRational::from_poly(Polynomial::from_ints(&[24, 0, 0, 0, 32]), 2));
    }

    #[test]
    fn repeated_entry_vanishes() {
        let w = wronskian(&[seed_function(2), seed_function(4), seed_function(2)]);
        assert!(w.is_zero());
        let w = wronskian(&[oscillator_state(3), oscillator_state(3)]);
        assert!(w.is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let p = |c: &[i64]| Polynomial::from_ints(c);
        let m = vec![
            vec![p(&[1, 1]), p(&[2]), p(&[0, 0, 1])],
            vec![p(&[0]), p(&[3, 1]), p(&[1])],
            vec![p(&[1]), p(&[0, 2]), p(&[5])],
        ];
        let cof = &(&(&m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1])))
            - &(&m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]))))
            + &(&m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0])));
        assert_eq!(bareiss_det(m), cof);
    }
}
