//! Number-theoretic kernel: exact binomial coefficients, Pascal tables over
//! prime-power moduli, Legendre symbols, p-adic valuations, and deterministic
//! 64-bit primality testing.
//!
//! Everything here is exact: modular tables are built by addition only, and
//! no routine divides by quantities that can vanish mod p.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors from kernel routines whose preconditions involve primality or
/// representable moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NtError {
    /// The argument was required to be prime and is not.
    NotPrime(u64),
    /// The argument was required to be an odd prime (p = 2 is rejected).
    OddPrimeRequired(u64),
    /// The prime is below the smallest value the check is stated for.
    PrimeBelowMinimum { p: u64, min: u64 },
    /// Prime-power exponent outside the supported range `1..=4`.
    ExponentOutOfRange(u32),
    /// `p^e` does not fit in a `u64`.
    ModulusOverflow { p: u64, e: u32 },
}

impl fmt::Display for NtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NtError::NotPrime(n) => write!(f, "{n} is not prime"),
            NtError::OddPrimeRequired(n) => write!(f, "{n} is not an odd prime"),
            NtError::PrimeBelowMinimum { p, min } => {
                write!(f, "prime {p} is below the smallest admissible prime {min}")
            }
            NtError::ExponentOutOfRange(e) => {
                write!(f, "prime-power exponent {e} outside supported range 1..=4")
            }
            NtError::ModulusOverflow { p, e } => {
                write!(f, "prime power {p}^{e} does not fit in u64")
            }
        }
    }
}

impl std::error::Error for NtError {}

/// `(a * b) mod m` without overflow, via 128-bit intermediates.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply. `m` must be nonzero.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Witnesses that make Miller-Rabin deterministic over the full `u64` range.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for `u64` (Miller-Rabin with a fixed witness
/// set that is exhaustive for 64-bit integers).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `p` with `lo <= p <= hi`, ascending. Empty when `lo > hi`.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if lo > hi || hi < 2 {
        return Vec::new();
    }
    let lo = lo.max(2);
    // Below this bound a sieve is cheap; above it, trial ranges are expected
    // to be narrow, so test candidates individually.
    const SIEVE_BOUND: u64 = 1 << 22;
    if hi <= SIEVE_BOUND {
        let mut composite = vec![false; (hi + 1) as usize];
        let mut primes = Vec::new();
        for n in 2..=hi {
            if !composite[n as usize] {
                if n >= lo {
                    primes.push(n);
                }
                let mut multiple = n * n;
                while multiple <= hi {
                    composite[multiple as usize] = true;
                    multiple += n;
                }
            }
        }
        primes
    } else {
        (lo..=hi).filter(|&n| is_prime_u64(n)).collect()
    }
}

/// A modulus of the form `p^e` with `p` prime and `1 <= e <= 4`, with the
/// expanded modulus guaranteed to fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    e: u32,
    modulus: u64,
}

impl PrimePower {
    /// Validates primality of `p`, the exponent range, and that `p^e` fits.
    pub fn new(p: u64, e: u32) -> Result<Self, NtError> {
        if !is_prime_u64(p) {
            return Err(NtError::NotPrime(p));
        }
        if !(1..=4).contains(&e) {
            return Err(NtError::ExponentOutOfRange(e));
        }
        let modulus = p
            .checked_pow(e)
            .ok_or(NtError::ModulusOverflow { p, e })?;
        Ok(PrimePower { p, e, modulus })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The modulus as a `BigInt`, for reducing exact values.
    pub fn modulus_big(&self) -> BigInt {
        BigInt::from(self.modulus)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.e)
        }
    }
}

/// A canonical residue in `0..modulus` attached to its prime-power modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: PrimePower,
}

impl Residue {
    /// Reduces an exact integer into `0..p^e`; negative inputs land on the
    /// canonical nonnegative representative.
    pub fn reduce(a: &BigInt, modulus: PrimePower) -> Residue {
        let m = modulus.modulus_big();
        let value = a
            .mod_floor(&m)
            .to_u64()
            .expect("floor-mod against a u64 modulus fits in u64");
        Residue { value, modulus }
    }

    pub fn from_u64(value: u64, modulus: PrimePower) -> Residue {
        Residue {
            value: value % modulus.modulus(),
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> PrimePower {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// p-adic valuation of an integer; the valuation of zero is `Infinite`,
/// which compares greater than every finite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest `v` with `p^v | a`, or `Infinite` for `a = 0`. Errors when `p`
/// is not prime.
pub fn padic_valuation(a: &BigInt, p: u64) -> Result<Valuation, NtError> {
    if !is_prime_u64(p) {
        return Err(NtError::NotPrime(p));
    }
    if a.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    let mut v = 0u64;
    let mut cur = a.abs();
    loop {
        let (q, r) = cur.div_rem(&p);
        if !r.is_zero() {
            return Ok(Valuation::Finite(v));
        }
        v += 1;
        cur = q;
    }
}

/// Legendre symbol `(a/p)` for odd prime `p`, computed by Euler's criterion:
/// `a^((p-1)/2) mod p` mapped onto `{0, 1, -1}`.
pub fn legendre_symbol(a: &BigInt, p: u64) -> Result<i32, NtError> {
    if p == 2 {
        return Err(NtError::OddPrimeRequired(p));
    }
    if !is_prime_u64(p) {
        return Err(NtError::NotPrime(p));
    }
    let am = a
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue mod u64 prime fits in u64");
    let r = pow_mod(am, (p - 1) / 2, p);
    if r == 0 {
        Ok(0)
    } else if r == 1 {
        Ok(1)
    } else {
        debug_assert_eq!(r, p - 1, "Euler's criterion yields 0, 1, or p-1");
        Ok(-1)
    }
}

/// Exact binomial coefficient `C(n, k)` by the multiplicative formula; every
/// intermediate division is exact. Negative or oversized `k` gives zero.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as u64;
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc = exact_div(acc, &BigInt::from(i + 1));
    }
    acc
}

/// Exact division, asserting that the divisor divides the numerator.
pub fn exact_div(numerator: BigInt, divisor: &BigInt) -> BigInt {
    let (q, r) = numerator.div_rem(divisor);
    assert!(r.is_zero(), "division expected to be exact");
    q
}

enum TableStorage {
    Exact(Vec<BigInt>),
    Modular { modulus: PrimePower, entries: Vec<u64> },
}

/// Pascal's triangle up to a fixed row, either with exact `BigInt` entries
/// or reduced mod a prime power.
///
/// The modular variant is built by addition only, so entries are correct for
/// every index; no factorial inversion mod p is ever attempted.
pub struct BinomialTable {
    n_max: usize,
    storage: TableStorage,
}

impl BinomialTable {
    /// Exact table with rows `0..=n_max`.
    pub fn exact(n_max: usize) -> Self {
        let mut entries = vec![BigInt::zero(); tri_len(n_max)];
        for r in 0..=n_max {
            entries[tri_idx(r, 0)] = BigInt::one();
            for c in 1..=r {
                let prev = tri_idx(r - 1, c - 1);
                let val = if c == r {
                    entries[prev].clone()
                } else {
                    &entries[prev] + &entries[prev + 1]
                };
                entries[tri_idx(r, c)] = val;
            }
        }
        BinomialTable {
            n_max,
            storage: TableStorage::Exact(entries),
        }
    }

    /// Table with rows `0..=n_max`, reduced mod `p^e` as it is built.
    pub fn modular(n_max: usize, modulus: PrimePower) -> Self {
        let m = modulus.modulus();
        let mut entries = vec![0u64; tri_len(n_max)];
        for r in 0..=n_max {
            entries[tri_idx(r, 0)] = 1 % m;
            for c in 1..=r {
                let prev = tri_idx(r - 1, c - 1);
                let val = if c == r {
                    entries[prev]
                } else {
                    (entries[prev] + entries[prev + 1]) % m
                };
                entries[tri_idx(r, c)] = val;
            }
        }
        BinomialTable {
            n_max,
            storage: TableStorage::Modular { modulus, entries },
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// The modulus for a modular table, `None` for an exact one.
    pub fn prime_power(&self) -> Option<PrimePower> {
        match &self.storage {
            TableStorage::Exact(_) => None,
            TableStorage::Modular { modulus, .. } => Some(*modulus),
        }
    }

    /// `C(r, c)` as an exact integer (modular tables return the reduced
    /// entry). Out-of-range column indices give zero; `r` must be a stored row.
    pub fn get(&self, r: usize, c: i64) -> BigInt {
        assert!(r <= self.n_max, "row {r} beyond table bound {}", self.n_max);
        if c < 0 || c as usize > r {
            return BigInt::zero();
        }
        let idx = tri_idx(r, c as usize);
        match &self.storage {
            TableStorage::Exact(entries) => entries[idx].clone(),
            TableStorage::Modular { entries, .. } => BigInt::from(entries[idx]),
        }
    }

    /// `C(r, c) mod p^e` from a modular table. Panics on an exact table.
    pub fn get_mod(&self, r: usize, c: i64) -> u64 {
        assert!(r <= self.n_max, "row {r} beyond table bound {}", self.n_max);
        match &self.storage {
            TableStorage::Exact(_) => {
                panic!("get_mod requires a modular table")
            }
            TableStorage::Modular { entries, .. } => {
                if c < 0 || c as usize > r {
                    0
                } else {
                    entries[tri_idx(r, c as usize)]
                }
            }
        }
    }
}

#[inline]
fn tri_idx(r: usize, c: usize) -> usize {
    r * (r + 1) / 2 + c
}

#[inline]
fn tri_len(n_max: usize) -> usize {
    tri_idx(n_max, n_max) + 1
}
