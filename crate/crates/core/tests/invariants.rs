//! Cross-method agreement and structural invariants. Every quantity here
//! is computed by at least two independent routes, so a regression in any
//! one kernel shows up as a disagreement rather than a silently shifted
//! value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use delannoy_core::{
    binomial, central_delannoy, delannoy_poly, delannoy_poly_defining_sum, delannoy_poly_mod,
    delannoy_polynomial, legendre_symbol, padic_valuation, power_sum, rhs_lemma41, rhs_theorem12,
    square_formula_rhs, weighted_power_sum_poly, BinomialTable, DelannoySequence, IntPolynomial,
    PrimePower, Residue, Sign, Valuation,
};

/// Sparse ladder of indices reaching deep into the sequence without
/// quadratic test cost.
const N_SAMPLES: [u64; 16] = [0, 1, 2, 3, 4, 5, 7, 10, 16, 25, 40, 64, 100, 150, 220, 300];

#[test]
fn recurrence_and_defining_sum_agree_far_out() {
    for &n in &N_SAMPLES {
        for x in [-6i64, -3, -1, 0, 1, 2, 6] {
            let xb = BigInt::from(x);
            assert_eq!(
                delannoy_poly(n, &xb),
                delannoy_poly_defining_sum(n, &xb),
                "n = {n}, x = {x}"
            );
        }
    }
}

#[test]
fn modular_evaluation_matches_exact_reduction() {
    for &(p, e) in &[(3u64, 1u32), (3, 3), (5, 2), (7, 1), (13, 3)] {
        let pp = PrimePower::new(p, e).unwrap();
        for &n in &N_SAMPLES {
            for x in [-9i64, -2, 0, 1, 5] {
                let xb = BigInt::from(x);
                let exact = Residue::reduce(&delannoy_poly(n, &xb), pp);
                assert_eq!(
                    delannoy_poly_mod(n, &xb, pp),
                    exact.value(),
                    "n = {n}, x = {x}, modulus = {pp}"
                );
            }
        }
    }
}

#[test]
fn special_values_along_the_sequence() {
    let minus_one = BigInt::from(-1);
    let zero = BigInt::zero();
    let one = BigInt::one();
    let mut at_minus_one = DelannoySequence::new(&minus_one);
    let mut at_zero = DelannoySequence::new(&zero);
    let mut at_one = DelannoySequence::new(&one);
    for n in 0..=300u64 {
        let expected_sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(at_minus_one.next().unwrap(), BigInt::from(expected_sign));
        assert_eq!(at_zero.next().unwrap(), BigInt::one());
        assert_eq!(at_one.next().unwrap(), central_delannoy(n), "n = {n}");
    }
}

#[test]
fn square_formula_holds_at_scale() {
    // coefficientwise for a mid-size index, pointwise out to n = 100
    let n = 100u64;
    for x in [-5i64, -1, 0, 2, 4] {
        let xb = BigInt::from(x);
        let d = delannoy_poly(n, &xb);
        assert_eq!(&d * &d, square_formula_rhs(n, &xb), "x = {x}");
    }
}

#[test]
fn closed_forms_evaluate_to_the_power_sums() {
    // The polynomial identities, specialized at integer points, must
    // reproduce the weighted power sums computed directly.
    for n in 1..=12u64 {
        for m in [3u32, 4] {
            let plus_rhs = rhs_theorem12(n, m);
            let minus_rhs = rhs_lemma41(n, m);
            let parity = if n % 2 == 1 { 1 } else { -1 };
            for x in -3i64..=3 {
                let xb = BigInt::from(x);
                assert_eq!(
                    plus_rhs.eval(&xb) * n,
                    power_sum(n, m, Sign::Plus, &xb),
                    "n = {n}, m = {m}, x = {x}"
                );
                assert_eq!(
                    minus_rhs.eval(&xb) * n * parity,
                    power_sum(n, m, Sign::Minus, &xb),
                    "n = {n}, m = {m}, x = {x}"
                );
            }
        }
    }
}

#[test]
fn weighted_sum_polynomial_evaluates_consistently() {
    for n in 1..=10u64 {
        for m in [3u32, 4] {
            for sign in [Sign::Plus, Sign::Minus] {
                let poly = weighted_power_sum_poly(n, m, sign);
                for x in -2i64..=2 {
                    let xb = BigInt::from(x);
                    let direct = power_sum(n, m, sign, &xb);
                    let expected = match sign {
                        Sign::Plus => direct,
                        Sign::Minus => {
                            if n % 2 == 1 {
                                direct
                            } else {
                                -direct
                            }
                        }
                    };
                    assert_eq!(poly.eval(&xb), expected, "n = {n}, m = {m}, x = {x}");
                }
            }
        }
    }
}

#[test]
fn linear_power_sum_matches_triangle_closed_form() {
    // Swapping summation order in sum (2t+1) D_t(x) over t < n turns the
    // weighted triangle sums into coefficients: the positive sum equals
    // n * sum_k C(n,k+1) C(n+k,k) x^k and the alternating one (up to the
    // global parity factor) equals n * sum_k C(n-1,k) C(n+k,k) x^k.
    for n in 1..=30u64 {
        let mut plus_closed = IntPolynomial::zero();
        let mut minus_closed = IntPolynomial::zero();
        for k in 0..n {
            let shared = binomial(n + k, k as i64);
            plus_closed += &IntPolynomial::monomial(
                binomial(n, k as i64 + 1) * &shared * n,
                k as usize,
            );
            minus_closed += &IntPolynomial::monomial(
                binomial(n - 1, k as i64) * shared * n,
                k as usize,
            );
        }
        let parity = if n % 2 == 1 { 1 } else { -1 };
        for x in -4i64..=4 {
            let xb = BigInt::from(x);
            assert_eq!(
                plus_closed.eval(&xb),
                power_sum(n, 1, Sign::Plus, &xb),
                "n = {n}, x = {x}"
            );
            assert_eq!(
                minus_closed.eval(&xb) * parity,
                power_sum(n, 1, Sign::Minus, &xb),
                "n = {n}, x = {x}"
            );
        }
    }
}

#[test]
fn delannoy_polynomial_coefficients_match_pointwise_values() {
    for &n in &[0u64, 1, 2, 5, 9, 14, 20] {
        let poly = delannoy_polynomial(n);
        assert_eq!(poly.degree(), Some(n as usize));
        for x in -3i64..=3 {
            let xb = BigInt::from(x);
            assert_eq!(poly.eval(&xb), delannoy_poly(n, &xb), "n = {n}, x = {x}");
        }
    }
}

#[test]
fn legendre_symbol_is_multiplicative() {
    for p in [3u64, 5, 7, 11, 13, 31] {
        for a in -8i64..=8 {
            for b in -8i64..=8 {
                let ab = legendre_symbol(&BigInt::from(a * b), p).unwrap();
                let sa = legendre_symbol(&BigInt::from(a), p).unwrap();
                let sb = legendre_symbol(&BigInt::from(b), p).unwrap();
                assert_eq!(ab, sa * sb, "p = {p}, a = {a}, b = {b}");
            }
        }
    }
}

#[test]
fn binomial_row_facts_modulo_a_prime() {
    for p in [5u64, 7, 11, 13] {
        let pp = PrimePower::new(p, 1).unwrap();
        let table = BinomialTable::modular(2 * p as usize, pp);
        for i in 0..p {
            // C(p-1, i) alternates sign mod p
            let expected = if i % 2 == 0 { 1 } else { p - 1 };
            assert_eq!(table.get_mod((p - 1) as usize, i as i64), expected);
            // every interior entry of row p vanishes mod p
            if i > 0 {
                assert_eq!(table.get_mod(p as usize, i as i64), 0);
            }
        }
    }
}

#[test]
fn modular_table_samples_match_exact_binomials() {
    let pp = PrimePower::new(13, 2).unwrap();
    let table = BinomialTable::modular(600, pp);
    let modulus = BigInt::from(pp.modulus());
    for &(r, c) in &[(0u64, 0u64), (17, 9), (128, 64), (333, 2), (599, 599), (600, 271)] {
        let expected = binomial(r, c as i64).mod_floor(&modulus);
        assert_eq!(
            BigInt::from(table.get_mod(r as usize, c as i64)),
            expected,
            "r = {r}, c = {c}"
        );
    }
}

#[test]
fn valuations_add_over_products() {
    let samples = [
        BigInt::from(250),
        BigInt::from(-49),
        BigInt::from(1),
        BigInt::from(360),
        BigInt::from(10_000_019),
    ];
    for p in [2u64, 5, 7] {
        for a in &samples {
            for b in &samples {
                let va = padic_valuation(a, p).unwrap();
                let vb = padic_valuation(b, p).unwrap();
                let vab = padic_valuation(&(a * b), p).unwrap();
                match (va, vb) {
                    (Valuation::Finite(x), Valuation::Finite(y)) => {
                        assert_eq!(vab, Valuation::Finite(x + y));
                    }
                    _ => assert_eq!(vab, Valuation::Infinite),
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn polynomial_ring_laws(
        a in proptest::collection::vec(-50i64..50, 0..6),
        b in proptest::collection::vec(-50i64..50, 0..6),
        c in proptest::collection::vec(-50i64..50, 0..6),
        x in -7i64..7,
    ) {
        let to_poly = |v: &Vec<i64>| {
            IntPolynomial::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
        };
        let (a, b, c) = (to_poly(&a), to_poly(&b), to_poly(&c));
        // distributivity and commutativity
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        // evaluation is a ring homomorphism
        let xb = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&xb), a.eval(&xb) * b.eval(&xb));
        prop_assert_eq!((&a + &b).eval(&xb), a.eval(&xb) + b.eval(&xb));
        prop_assert_eq!((&a - &b).eval(&xb), a.eval(&xb) - b.eval(&xb));
    }

    #[test]
    fn residue_reduction_matches_floor_mod(v in -1_000_000_000i64..1_000_000_000, e in 1u32..4) {
        let pp = PrimePower::new(7, e).unwrap();
        let vb = BigInt::from(v);
        let reduced = Residue::reduce(&vb, pp);
        prop_assert_eq!(
            BigInt::from(reduced.value()),
            vb.mod_floor(&pp.modulus_big())
        );
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 0u64..80, k in 0i64..80) {
        let symmetric = binomial(n, n as i64 - k);
        prop_assert_eq!(binomial(n, k), symmetric);
        if n > 0 {
            let pascal = binomial(n - 1, k - 1) + binomial(n - 1, k);
            prop_assert_eq!(binomial(n, k), pascal);
        }
    }

    #[test]
    fn valuation_strips_exact_prime_powers(k in 0u64..12, m in 1u64..500) {
        let p = 3u64;
        let m = if m % p == 0 { m + 1 } else { m };
        let value = BigInt::from(p).pow(k as u32) * m;
        prop_assert_eq!(padic_valuation(&value, p).unwrap(), Valuation::Finite(k));
    }

    #[test]
    fn power_sum_prefixes_are_divisible(n in 1u64..25, m in 1u32..5, x in -6i64..6) {
        let xb = BigInt::from(x);
        let sum = power_sum(n, m, Sign::Plus, &xb);
        prop_assert!(sum.mod_floor(&BigInt::from(n)).is_zero());
        // the alternating sum shares the divisibility up to a sign flip
        let alt = power_sum(n, m, Sign::Minus, &xb);
        prop_assert!(alt.abs().mod_floor(&BigInt::from(n)).is_zero());
    }
}
