use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use susyosc::exactfn::{
    apply_product, hermite, modified_hermite, oscillator_state, q, seed_function, wronskian, FirstOrderOperator,
    Polynomial,
};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `m! Σ_j (2x)^{m-2j} / (j! (m-2j)!)`, coefficient by coefficient.
fn modified_hermite_oracle(m: usize) -> Polynomial {
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(0)); m + 1];
    for j in 0..=m / 2 {
        let d = m - 2 * j;
        let num = factorial(m) * BigInt::from(2).pow(d as u32);
        let den = factorial(j) * factorial(d);
        coeffs[d] = BigRational::new(num, den);
    }
    Polynomial::new(coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(21))]

    #[test]
    fn hermite_solves_its_ode(n in 0usize..=20) {
        let h = hermite(n);
        let h1 = h.derivative();
        let h2 = h1.derivative();
        let lhs = &(&h2 - &(&Polynomial::from_ints(&[0, 2]) * &h1)) + &h.scale(&q(2 * n as i64));
        prop_assert!(lhs.is_zero());
        prop_assert_eq!(h.count_real_roots(None, None), n);
    }

    #[test]
    fn modified_hermite_matches_explicit_sum(m in 0usize..=20) {
        prop_assert_eq!(modified_hermite(m), modified_hermite_oracle(m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn repeated_entry_kills_the_wronskian(a in 0usize..6, b in 0usize..6, pos in 0usize..3) {
        let fa = seed_function(a);
        let fb = seed_function(b);
        let mut fs = vec![fa.clone(), fb];
        fs.insert(pos.min(fs.len()), fa);
        prop_assert!(wronskian(&fs).is_zero());
    }

    #[test]
    fn derivative_obeys_product_rule(n in 0usize..8, m in 0usize..6) {
        let f = oscillator_state(n);
        let g = seed_function(m);
        let lhs = (&f * &g).differentiate();
        let rhs = (&f.differentiate() * &g).try_add(&(&f * &g.differentiate())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn oscillator_commutator_is_two(nu in 0usize..=8) {
        let a = FirstOrderOperator::annihilator();
        let ad = FirstOrderOperator::creator();
        let psi = oscillator_state(nu);
        let aad = apply_product(&[a.clone(), ad.clone()], &psi);
        let ada = apply_product(&[ad, a], &psi);
        prop_assert_eq!(aad.try_sub(&ada).unwrap(), psi.scale(&q(2)));
    }
}
