//! Delannoy polynomial sequences and the weighted power sums built on them.
//!
//! `D_n(x) = sum_{k=0}^{n} C(n,k) C(n+k,k) x^k`, with `D_n(1)` the central
//! Delannoy numbers. Values are produced by the three-term recurrence
//! `(n+1) D_{n+1}(x) = (2n+1)(2x+1) D_n(x) - n D_{n-1}(x)`, whose division
//! by `n+1` is always exact over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ntheory::{exact_div, mul_mod, BinomialTable, PrimePower};

/// Sign pattern of a weighted sum: either all terms positive or terms
/// alternating as `(-1)^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(+1)^k` or `(-1)^k`.
    pub fn pow(self, k: u64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// The sign itself as a unit integer.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_i8(self) -> i8 {
        self.unit() as i8
    }
}

/// Infinite iterator over `D_0(x), D_1(x), D_2(x), ...` at a fixed integer
/// point, advanced by the three-term recurrence.
///
/// Each step asserts that the recurrence division by `k+1` is exact; a
/// remainder would mean the update rule is wrong, so it is a hard error.
pub struct DelannoySequence {
    two_x_plus_one: BigInt,
    k: u64,
    prev: BigInt,
    cur: BigInt,
}

impl DelannoySequence {
    pub fn new(x: &BigInt) -> Self {
        DelannoySequence {
            two_x_plus_one: BigInt::from(2) * x + 1,
            k: 0,
            prev: BigInt::zero(),
            cur: BigInt::one(),
        }
    }
}

impl Iterator for DelannoySequence {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let out = self.cur.clone();
        let k = self.k;
        let numerator = BigInt::from(2 * k + 1) * &self.two_x_plus_one * &self.cur
            - BigInt::from(k) * &self.prev;
        let next = exact_div(numerator, &BigInt::from(k + 1));
        self.prev = std::mem::replace(&mut self.cur, next);
        self.k += 1;
        Some(out)
    }
}

/// `D_n(x)` by the three-term recurrence.
pub fn delannoy_poly(n: u64, x: &BigInt) -> BigInt {
    DelannoySequence::new(x)
        .nth(n as usize)
        .expect("sequence is infinite")
}

/// `D_n(x)` straight from the defining sum, as an independent cross-check
/// of the recurrence. Binomial factors are updated by exact ratio steps.
pub fn delannoy_poly_defining_sum(n: u64, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut c_n_k = BigInt::one(); // C(n, k)
    let mut c_nk_k = BigInt::one(); // C(n+k, k)
    let mut x_pow = BigInt::one();
    for k in 0..=n {
        acc += &c_n_k * &c_nk_k * &x_pow;
        c_n_k = exact_div(c_n_k * (n - k), &BigInt::from(k + 1));
        c_nk_k = exact_div(c_nk_k * (n + k + 1), &BigInt::from(k + 1));
        x_pow *= x;
    }
    acc
}

/// `D_n(x) mod p^e` via an addition-only Pascal table — no modular division.
pub fn delannoy_poly_mod(n: u64, x: &BigInt, modulus: PrimePower) -> u64 {
    let n = usize::try_from(n).expect("index fits usize");
    let m = modulus.modulus();
    let table = BinomialTable::modular(2 * n, modulus);
    let x_mod = x
        .mod_floor(&modulus.modulus_big())
        .to_u64()
        .expect("reduced residue fits u64");
    let mut acc = 0u64;
    let mut x_pow = 1 % m;
    for k in 0..=n {
        let term = mul_mod(
            mul_mod(table.get_mod(n, k as i64), table.get_mod(n + k, k as i64), m),
            x_pow,
            m,
        );
        acc = (acc + term) % m;
        x_pow = mul_mod(x_pow, x_mod, m);
    }
    acc
}

/// Central Delannoy number `D_n = D_n(1) = sum_k C(n+k, 2k) C(2k, k)`.
pub fn central_delannoy(n: u64) -> BigInt {
    delannoy_poly(n, &BigInt::one())
}

/// `sum_{k=0}^{n-1} sign^k (2k+1) D_k(x)^m`, computed in one linear pass
/// over the Delannoy sequence (each `D_k` is produced exactly once).
pub fn power_sum(n: u64, m: u32, sign: Sign, x: &BigInt) -> BigInt {
    assert!(n >= 1, "power sums need at least one term");
    assert!(m >= 1, "exponent must be positive");
    let mut acc = BigInt::zero();
    for (k, d) in DelannoySequence::new(x).take(n as usize).enumerate() {
        let k = k as u64;
        let term = BigInt::from(2 * k + 1) * (&d).pow(m);
        match sign.pow(k) {
            1 => acc += term,
            _ => acc -= term,
        }
    }
    acc
}

/// Closed form for the square: `D_n(x)^2 = sum_k C(n,k) C(n+k,k) C(2k,k)
/// x^k (x+1)^k`, evaluated with exact incremental binomial chains.
pub fn square_formula_rhs(n: u64, x: &BigInt) -> BigInt {
    let y = x * (x + 1u32); // x(x+1)
    let mut acc = BigInt::zero();
    let mut c_n_k = BigInt::one(); // C(n, k)
    let mut c_nk_k = BigInt::one(); // C(n+k, k)
    let mut c_2k_k = BigInt::one(); // C(2k, k)
    let mut y_pow = BigInt::one();
    for k in 0..=n {
        acc += &c_n_k * &c_nk_k * &c_2k_k * &y_pow;
        c_n_k = exact_div(c_n_k * (n - k), &BigInt::from(k + 1));
        c_nk_k = exact_div(c_nk_k * (n + k + 1), &BigInt::from(k + 1));
        // C(2k+2, k+1) = C(2k, k) * (2k+1)(2k+2) / (k+1)^2
        c_2k_k = exact_div(
            c_2k_k * (2 * k + 1) * (2 * k + 2),
            &(BigInt::from(k + 1) * (k + 1)),
        );
        y_pow *= &y;
    }
    acc
}

/// p-adic-free helper: true exactly when `d | a`.
pub fn divides(d: &BigInt, a: &BigInt) -> bool {
    assert!(!d.is_zero(), "zero divisor");
    a.mod_floor(&d.abs()).is_zero()
}
