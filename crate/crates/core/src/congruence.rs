//! Congruence and divisibility checks on weighted Delannoy power sums, plus
//! the campaign runner that sweeps them over (n, m, p, x) grids.
//!
//! Proven statements and open conjectures run through the same machinery;
//! they differ only in how a failing record is classified (bug vs.
//! counterexample). Every check computes its sums exactly and reduces at
//! the end, so a failure is a fact about the mathematics, not the arithmetic.

use std::cmp::min;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::delannoy::{power_sum, DelannoySequence, Sign};
use crate::ntheory::{
    is_prime_u64, legendre_symbol, padic_valuation, primes_in_range, NtError, Valuation,
};

/// Which congruence or divisibility statement a record belongs to. The
/// `as_str` names are the stable report identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// `n | sum_{k<n} (2k+1) D_k(x)^m` for every n, m >= 1.
    DivisibilityEq1,
    /// `sum_{k<p} (2k+1) D_k(x)^3 = p (-4x-3 / p) (mod p^2)` for p not
    /// dividing x(x+1).
    Thm13Cubic,
    /// `sum_{k<p} (2k+1) D_k(x)^4 = p (mod p^2)` for p not dividing x(x+1).
    Thm13Quartic,
    /// `sum_{k<p} (-1)^k (2k+1) D_k(x)^3 = p (4x+1 / p) (mod p^2)` for p
    /// not dividing x(x+1).
    Thm14AltCubic,
    /// `sum_{k<p} (-1)^k (2k+1) D_k(x)^4 = p * S(x) (mod p^2)`
    /// unconditionally, where S is the half-range central-binomial sum.
    Thm14AltQuartic,
    /// `sum_{k<p} C(2k,k) x^k = (1-4x / p) (mod p)`.
    SunTauraso,
    /// `sum_{k<p} (2k+1) D_k = p + 2pq - pq^2 (mod p^4)`, q = 2^(p-1) - 1.
    IntroModP4,
    /// `n^2 | sum_{k<n} (2k+1) D_k^2`.
    IntroModN2,
    /// Conjecture: `v_p((1/n) sum (-1)^k (2k+1) D_k(x)^3) >= min(v_p(n), v_p(4x+1))`.
    ConjSunLast,
    /// Conjecture: same with the positive sum and `v_p(4x+3)`.
    ConjGuoLast,
    /// Conjecture: the alt-quartic congruence holds mod p^3, not just p^2.
    Conj52,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::DivisibilityEq1 => "divisibility_eq1",
            CheckId::Thm13Cubic => "thm13_cubic",
            CheckId::Thm13Quartic => "thm13_quartic",
            CheckId::Thm14AltCubic => "thm14_alt_cubic",
            CheckId::Thm14AltQuartic => "thm14_alt_quartic",
            CheckId::SunTauraso => "sun_tauraso",
            CheckId::IntroModP4 => "intro_mod_p4",
            CheckId::IntroModN2 => "intro_mod_n2",
            CheckId::ConjSunLast => "conj_sun_last",
            CheckId::ConjGuoLast => "conj_guo_last",
            CheckId::Conj52 => "conj52",
        }
    }

    /// Conjecture checks are discovery-mode: a failure is a counterexample
    /// to report, not a bug in proven mathematics.
    pub fn is_conjecture(self) -> bool {
        matches!(
            self,
            CheckId::ConjSunLast | CheckId::ConjGuoLast | CheckId::Conj52
        )
    }
}

/// Grid coordinates of one record; only the fields meaningful for the
/// check are populated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckParams {
    pub n: Option<u64>,
    pub m: Option<u32>,
    pub p: Option<u64>,
    pub e: Option<u32>,
    pub x: Option<BigInt>,
    pub sign: Option<Sign>,
}

/// What happened at one grid cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    /// The statement's hypothesis is violated at this cell; the reason
    /// names the violated hypothesis.
    Skipped(String),
}

/// Full result of one check at one grid cell, with enough exact data to
/// reproduce the verdict independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: CheckId,
    pub params: CheckParams,
    /// Modulus for modular checks; the divisor for divisibility checks.
    pub modulus: Option<BigInt>,
    pub lhs_residue: Option<BigInt>,
    pub rhs_residue: Option<BigInt>,
    /// For valuation checks: the attained p-adic valuation.
    pub lhs_valuation: Option<Valuation>,
    /// For valuation checks: the conjectured lower bound.
    pub bound: Option<Valuation>,
    pub outcome: Outcome,
    /// Exact left side, populated on failure so the record is a complete
    /// witness.
    pub lhs_witness: Option<BigInt>,
    /// Exact right side on failure, when the check has one.
    pub rhs_witness: Option<BigInt>,
    pub detail: Option<String>,
    /// Wall time of the evaluation unit that produced this record.
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    /// Defined iff the cell was not skipped.
    pub fn holds(&self) -> Option<bool> {
        match &self.outcome {
            Outcome::Holds => Some(true),
            Outcome::Fails => Some(false),
            Outcome::Skipped(_) => None,
        }
    }

    pub fn skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped(_))
    }

    pub fn skip_reason(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Skipped(reason) => Some(reason),
            _ => None,
        }
    }

    /// A failed check of proven mathematics — a build-breaking bug.
    pub fn is_theorem_failure(&self) -> bool {
        !self.id.is_conjecture() && self.holds() == Some(false)
    }

    /// A failed conjecture check — a reportable discovery.
    pub fn is_counterexample(&self) -> bool {
        self.id.is_conjecture() && self.holds() == Some(false)
    }

    /// Canonical report order: (check_id, p, n, x, m).
    pub fn sort_key(&self) -> (CheckId, u64, u64, BigInt, u32, u32) {
        (
            self.id,
            self.params.p.unwrap_or(0),
            self.params.n.unwrap_or(0),
            self.params.x.clone().unwrap_or_default(),
            self.params.m.unwrap_or(0),
            self.params.e.unwrap_or(0),
        )
    }
}

fn blank_record(id: CheckId, params: CheckParams) -> CheckRecord {
    CheckRecord {
        id,
        params,
        modulus: None,
        lhs_residue: None,
        rhs_residue: None,
        lhs_valuation: None,
        bound: None,
        outcome: Outcome::Holds,
        lhs_witness: None,
        rhs_witness: None,
        detail: None,
        elapsed_ms: None,
    }
}

/// Reduces both exact sides mod `modulus` and records whether they agree;
/// on disagreement the full-precision sides are kept as witnesses.
fn modular_record(
    id: CheckId,
    params: CheckParams,
    modulus: BigInt,
    lhs_exact: &BigInt,
    rhs_exact: &BigInt,
) -> CheckRecord {
    let lhs_residue = lhs_exact.mod_floor(&modulus);
    let rhs_residue = rhs_exact.mod_floor(&modulus);
    let holds = lhs_residue == rhs_residue;
    let mut record = blank_record(id, params);
    record.modulus = Some(modulus);
    record.lhs_residue = Some(lhs_residue);
    record.rhs_residue = Some(rhs_residue);
    record.outcome = if holds { Outcome::Holds } else { Outcome::Fails };
    if !holds {
        record.lhs_witness = Some(lhs_exact.clone());
        record.rhs_witness = Some(rhs_exact.clone());
    }
    record
}

fn skipped_record(id: CheckId, params: CheckParams, reason: String) -> CheckRecord {
    let mut record = blank_record(id, params);
    record.outcome = Outcome::Skipped(reason);
    record
}

fn require_odd_prime(p: u64) -> Result<(), NtError> {
    if p == 2 {
        return Err(NtError::OddPrimeRequired(p));
    }
    if !is_prime_u64(p) {
        return Err(NtError::NotPrime(p));
    }
    Ok(())
}

/// True iff p divides x(x+1) — the hypothesis guard shared by the
/// power-sum supercongruences.
fn p_divides_x_x1(p: u64, x: &BigInt) -> bool {
    let pb = BigInt::from(p);
    let xm = x.mod_floor(&pb);
    (&xm * (&xm + 1u32)).mod_floor(&pb).is_zero()
}

/// `sum sign^k (2k+1) D_k(x)^3` and `... D_k(x)^4` over `k < n` in a single
/// pass, sharing each `D_k(x)^2` between the two powers.
fn cubic_quartic_sums(n: u64, sign: Sign, x: &BigInt) -> (BigInt, BigInt) {
    let mut s3 = BigInt::zero();
    let mut s4 = BigInt::zero();
    for (k, d) in DelannoySequence::new(x).take(n as usize).enumerate() {
        let k = k as u64;
        let d2 = &d * &d;
        let d3 = &d2 * &d;
        let d4 = &d2 * &d2;
        let w = BigInt::from(2 * k + 1);
        match sign.pow(k) {
            1 => {
                s3 += &w * d3;
                s4 += w * d4;
            }
            _ => {
                s3 -= &w * d3;
                s4 -= w * d4;
            }
        }
    }
    (s3, s4)
}

/// Shared record constructor for the divisibility check, used identically
/// by the one-off entry point and the campaign's prefix-sum pass.
fn divisibility_record(n: u64, m: u32, x: &BigInt, sum: &BigInt) -> CheckRecord {
    let modulus = BigInt::from(n);
    modular_record(
        CheckId::DivisibilityEq1,
        CheckParams {
            n: Some(n),
            m: Some(m),
            x: Some(x.clone()),
            sign: Some(Sign::Plus),
            ..CheckParams::default()
        },
        modulus,
        sum,
        &BigInt::zero(),
    )
}

/// `n | sum_{k<n} (2k+1) D_k(x)^m`, tested by exact summation and one
/// remainder. Holds for every n, m >= 1 if the divisibility statement is
/// right.
pub fn check_divisibility_eq1(n: u64, m: u32, x: &BigInt) -> CheckRecord {
    assert!(n >= 1 && m >= 1);
    divisibility_record(n, m, x, &power_sum(n, m, Sign::Plus, x))
}

/// Cubic and quartic supercongruences for the positive weighted sum:
/// mod p^2 the cubic side equals `p * (-4x-3 / p)` and the quartic side
/// equals p, both under the hypothesis `p` does not divide `x(x+1)`.
pub fn check_thm13(p: u64, x: &BigInt) -> Result<(CheckRecord, CheckRecord), NtError> {
    require_odd_prime(p)?;
    let params = |m: u32| CheckParams {
        m: Some(m),
        p: Some(p),
        e: Some(2),
        x: Some(x.clone()),
        sign: Some(Sign::Plus),
        ..CheckParams::default()
    };
    if p_divides_x_x1(p, x) {
        let reason = format!("hypothesis violated: {p} divides x(x+1)");
        return Ok((
            skipped_record(CheckId::Thm13Cubic, params(3), reason.clone()),
            skipped_record(CheckId::Thm13Quartic, params(4), reason),
        ));
    }
    let modulus = BigInt::from(p) * p;
    let (s3, s4) = cubic_quartic_sums(p, Sign::Plus, x);
    let symbol = legendre_symbol(&(BigInt::from(-4) * x - 3), p)?;
    let cubic_rhs = BigInt::from(p) * symbol;
    let cubic = modular_record(CheckId::Thm13Cubic, params(3), modulus.clone(), &s3, &cubic_rhs);
    let quartic_rhs = BigInt::from(p);
    let quartic = modular_record(CheckId::Thm13Quartic, params(4), modulus, &s4, &quartic_rhs);
    Ok((cubic, quartic))
}

/// The half-range sum `sum_{k=0}^{(p-1)/2} (-1)^k C(2k,k)^2 (x^2+x)^k (2x+1)^{2k}`
/// appearing on the right of the alternating quartic congruences.
fn alt_quartic_rhs_sum(p: u64, x: &BigInt) -> BigInt {
    let y = x * (x + 1u32); // x^2 + x
    let t = BigInt::from(2) * x + 1;
    let yz = y * (&t * &t); // (x^2+x)(2x+1)^2, stepped as one power
    let mut central = BigInt::one(); // C(2k, k)
    let mut yz_pow = BigInt::one();
    let mut acc = BigInt::zero();
    for k in 0..=(p - 1) / 2 {
        let term = &central * &central * &yz_pow;
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        central = crate::ntheory::exact_div(
            central * (2 * k + 1) * (2 * k + 2),
            &(BigInt::from(k + 1) * (k + 1)),
        );
        yz_pow *= &yz;
    }
    acc
}

/// Alternating cubic and quartic supercongruences mod p^2: the cubic one
/// needs `p` not dividing `x(x+1)` (skipped otherwise); the quartic one is
/// unconditional for odd p.
pub fn check_thm14(p: u64, x: &BigInt) -> Result<(CheckRecord, CheckRecord), NtError> {
    require_odd_prime(p)?;
    let params = |m: u32| CheckParams {
        m: Some(m),
        p: Some(p),
        e: Some(2),
        x: Some(x.clone()),
        sign: Some(Sign::Minus),
        ..CheckParams::default()
    };
    let modulus = BigInt::from(p) * p;
    let (s3, s4) = cubic_quartic_sums(p, Sign::Minus, x);
    let alt_cubic = if p_divides_x_x1(p, x) {
        skipped_record(
            CheckId::Thm14AltCubic,
            params(3),
            format!("hypothesis violated: {p} divides x(x+1)"),
        )
    } else {
        let symbol = legendre_symbol(&(BigInt::from(4) * x + 1), p)?;
        let rhs = BigInt::from(p) * symbol;
        modular_record(CheckId::Thm14AltCubic, params(3), modulus.clone(), &s3, &rhs)
    };
    let quartic_rhs = BigInt::from(p) * alt_quartic_rhs_sum(p, x);
    let alt_quartic =
        modular_record(CheckId::Thm14AltQuartic, params(4), modulus, &s4, &quartic_rhs);
    Ok((alt_cubic, alt_quartic))
}

/// `sum_{k<p} C(2k,k) x^k = (1-4x / p) (mod p)` for odd p.
pub fn check_sun_tauraso(p: u64, x: &BigInt) -> Result<CheckRecord, NtError> {
    require_odd_prime(p)?;
    let mut central = BigInt::one(); // C(2k, k)
    let mut x_pow = BigInt::one();
    let mut lhs = BigInt::zero();
    for k in 0..p {
        lhs += &central * &x_pow;
        central = crate::ntheory::exact_div(
            central * (2 * k + 1) * (2 * k + 2),
            &(BigInt::from(k + 1) * (k + 1)),
        );
        x_pow *= x;
    }
    let symbol = legendre_symbol(&(BigInt::one() - BigInt::from(4) * x), p)?;
    let params = CheckParams {
        p: Some(p),
        e: Some(1),
        x: Some(x.clone()),
        ..CheckParams::default()
    };
    Ok(modular_record(
        CheckId::SunTauraso,
        params,
        BigInt::from(p),
        &lhs,
        &BigInt::from(symbol),
    ))
}

/// `sum_{k<p} (2k+1) D_k = p + 2pq - pq^2 (mod p^4)` with `q = 2^(p-1) - 1`,
/// for primes p > 3.
pub fn check_intro_congruences(p: u64) -> Result<CheckRecord, NtError> {
    if !is_prime_u64(p) {
        return Err(NtError::NotPrime(p));
    }
    if p <= 3 {
        return Err(NtError::PrimeBelowMinimum { p, min: 5 });
    }
    let lhs = power_sum(p, 1, Sign::Plus, &BigInt::one());
    let q = (BigInt::one() << (p - 1) as usize) - 1;
    let pb = BigInt::from(p);
    let rhs = &pb + BigInt::from(2) * &pb * &q - &pb * &q * &q;
    let modulus = (&pb).pow(4u32);
    let params = CheckParams {
        p: Some(p),
        e: Some(4),
        x: Some(BigInt::one()),
        sign: Some(Sign::Plus),
        m: Some(1),
        ..CheckParams::default()
    };
    Ok(modular_record(CheckId::IntroModP4, params, modulus, &lhs, &rhs))
}

fn intro_mod_n2_record(n: u64, sum: &BigInt) -> CheckRecord {
    let modulus = BigInt::from(n) * n;
    modular_record(
        CheckId::IntroModN2,
        CheckParams {
            n: Some(n),
            m: Some(2),
            x: Some(BigInt::one()),
            sign: Some(Sign::Plus),
            ..CheckParams::default()
        },
        modulus,
        sum,
        &BigInt::zero(),
    )
}

/// `n^2 | sum_{k<n} (2k+1) D_k^2` for every n >= 1.
pub fn check_intro_mod_n2(n: u64) -> CheckRecord {
    assert!(n >= 1);
    intro_mod_n2_record(n, &power_sum(n, 2, Sign::Plus, &BigInt::one()))
}

/// Builds the valuation-bound record shared by the two open conjectures:
/// the weighted cubic sum is divided exactly by n and its p-adic valuation
/// is compared against `min(v_p(n), v_p(4x+c))`.
///
/// `sum` must equal the check's weighted power sum for (n, x); a non-exact
/// division by n is recorded as a hard failure with full witnesses.
fn conjecture_valuation_record(id: CheckId, n: u64, p: u64, x: &BigInt, sum: &BigInt) -> CheckRecord {
    let (sign, offset) = match id {
        CheckId::ConjSunLast => (Sign::Minus, 1u32),
        _ => (Sign::Plus, 3u32),
    };
    let params = CheckParams {
        n: Some(n),
        m: Some(3),
        p: Some(p),
        x: Some(x.clone()),
        sign: Some(sign),
        ..CheckParams::default()
    };
    let nb = BigInt::from(n);
    let (quotient, remainder) = sum.div_rem(&nb);
    let mut record = blank_record(id, params);
    if !remainder.is_zero() {
        record.outcome = Outcome::Fails;
        record.detail = Some(format!(
            "weighted power sum is not divisible by n = {n}"
        ));
        record.lhs_witness = Some(sum.clone());
        return record;
    }
    let shifted = BigInt::from(4) * x + offset;
    let attained = padic_valuation(&quotient, p).expect("p was validated prime");
    let bound = min(
        padic_valuation(&nb, p).expect("p was validated prime"),
        padic_valuation(&shifted, p).expect("p was validated prime"),
    );
    let holds = attained >= bound;
    record.lhs_valuation = Some(attained);
    record.bound = Some(bound);
    record.outcome = if holds { Outcome::Holds } else { Outcome::Fails };
    if !holds {
        record.lhs_witness = Some(quotient);
    }
    record
}

/// Conjectured valuation bound for the alternating cubic sum:
/// `v_p((1/n) sum (-1)^k (2k+1) D_k(x)^3) >= min(v_p(n), v_p(4x+1))`.
pub fn check_conj_sun_last(n: u64, p: u64, x: &BigInt) -> Result<CheckRecord, NtError> {
    assert!(n >= 1);
    if !is_prime_u64(p) {
        return Err(NtError::NotPrime(p));
    }
    let sum = power_sum(n, 3, Sign::Minus, x);
    Ok(conjecture_valuation_record(CheckId::ConjSunLast, n, p, x, &sum))
}

/// Conjectured valuation bound for the positive cubic sum:
/// `v_p((1/n) sum (2k+1) D_k(x)^3) >= min(v_p(n), v_p(4x+3))`.
pub fn check_conj_guo_last(n: u64, p: u64, x: &BigInt) -> Result<CheckRecord, NtError> {
    assert!(n >= 1);
    if !is_prime_u64(p) {
        return Err(NtError::NotPrime(p));
    }
    let sum = power_sum(n, 3, Sign::Plus, x);
    Ok(conjecture_valuation_record(CheckId::ConjGuoLast, n, p, x, &sum))
}

/// Conjectured strengthening of the alternating quartic congruence from
/// mod p^2 to mod p^e (the conjecture itself is e = 3).
pub fn check_conj52_with_exponent(p: u64, x: &BigInt, e: u32) -> Result<CheckRecord, NtError> {
    require_odd_prime(p)?;
    if !(1..=4).contains(&e) {
        return Err(NtError::ExponentOutOfRange(e));
    }
    let modulus = (&BigInt::from(p)).pow(e);
    let lhs = power_sum(p, 4, Sign::Minus, x);
    let rhs = BigInt::from(p) * alt_quartic_rhs_sum(p, x);
    let params = CheckParams {
        m: Some(4),
        p: Some(p),
        e: Some(e),
        x: Some(x.clone()),
        sign: Some(Sign::Minus),
        ..CheckParams::default()
    };
    Ok(modular_record(CheckId::Conj52, params, modulus, &lhs, &rhs))
}

/// The conjecture as stated: alternating quartic congruence mod p^3.
pub fn check_conj52(p: u64, x: &BigInt) -> Result<CheckRecord, NtError> {
    check_conj52_with_exponent(p, x, 3)
}

/// The check families a campaign can sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckFamily {
    /// divisibility_eq1 over (n, m, x).
    Divisibility,
    /// thm13_cubic + thm13_quartic over (p, x).
    Thm13,
    /// thm14_alt_cubic + thm14_alt_quartic over (p, x).
    Thm14,
    /// sun_tauraso over (p, x); default x grid is 0..p per prime.
    SunTauraso,
    /// intro_mod_p4 over primes > 3.
    IntroModP4,
    /// intro_mod_n2 over n.
    IntroModN2,
    /// conj52 over (p, x) at a chosen modulus exponent.
    Conj52,
    /// conj_sun_last over (n, p, x).
    ConjSunLast,
    /// conj_guo_last over (n, p, x).
    ConjGuoLast,
}

/// Grid selection for one campaign. Unset fields fall back to the family's
/// published verification grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignSpec {
    pub family: CheckFamily,
    pub n_max: Option<u64>,
    pub m_set: Option<Vec<u32>>,
    pub p_max: Option<u64>,
    pub x_range: Option<(i64, i64)>,
    /// Modulus exponent, honored by the conj52 family.
    pub e: Option<u32>,
    /// Parallelism hint: exact worker count for this campaign's pool.
    pub jobs: Option<usize>,
}

impl CampaignSpec {
    pub fn new(family: CheckFamily) -> Self {
        CampaignSpec {
            family,
            n_max: None,
            m_set: None,
            p_max: None,
            x_range: None,
            e: None,
            jobs: None,
        }
    }
}

/// Grid validation and execution errors for campaigns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CampaignError {
    EmptyXRange { lo: i64, hi: i64 },
    /// No prime falls inside the family's admissible range.
    NoPrimes { lo: u64, hi: u64 },
    EmptyMSet,
    /// Power-sum exponents must be >= 1.
    InvalidM(u32),
    ZeroNMax,
    ExponentOutOfRange(u32),
    ZeroJobs,
    PoolBuild(String),
    Kernel(NtError),
}

impl fmt::Display for CampaignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CampaignError::EmptyXRange { lo, hi } => {
                write!(f, "empty x range: {lo}..={hi}")
            }
            CampaignError::NoPrimes { lo, hi } => {
                write!(f, "no primes in the admissible range {lo}..={hi}")
            }
            CampaignError::EmptyMSet => write!(f, "m-set must be nonempty"),
            CampaignError::InvalidM(m) => write!(f, "power-sum exponent m = {m} must be >= 1"),
            CampaignError::ZeroNMax => write!(f, "n bound must be >= 1"),
            CampaignError::ExponentOutOfRange(e) => {
                write!(f, "modulus exponent {e} outside supported range 1..=4")
            }
            CampaignError::ZeroJobs => write!(f, "jobs must be >= 1"),
            CampaignError::PoolBuild(err) => write!(f, "could not build worker pool: {err}"),
            CampaignError::Kernel(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CampaignError {}

impl From<NtError> for CampaignError {
    fn from(err: NtError) -> Self {
        CampaignError::Kernel(err)
    }
}

/// One unit of parallel work. Pass-style cells produce a whole column of
/// records from a single sweep of the Delannoy sequence.
enum Cell {
    Divisibility { m: u32, x: i64, n_max: u64 },
    Thm13 { p: u64, x: i64 },
    Thm14 { p: u64, x: i64 },
    SunTauraso { p: u64, x: i64 },
    IntroModP4 { p: u64 },
    IntroModN2 { n_max: u64 },
    Conj52 { p: u64, x: i64, e: u32 },
    ConjValuation { id: CheckId, x: i64, n_max: u64, primes: Vec<u64> },
}

/// All divisibility records for one (m, x) column, with prefix sums so the
/// Delannoy sequence is walked once.
fn divisibility_pass(m: u32, x: i64, n_max: u64) -> Vec<CheckRecord> {
    let xb = BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut out = Vec::with_capacity(n_max as usize);
    for (k, d) in DelannoySequence::new(&xb).take(n_max as usize).enumerate() {
        let k = k as u64;
        acc += BigInt::from(2 * k + 1) * (&d).pow(m);
        out.push(divisibility_record(k + 1, m, &xb, &acc));
    }
    out
}

/// All intro_mod_n2 records up to n_max from one prefix-sum sweep.
fn intro_mod_n2_pass(n_max: u64) -> Vec<CheckRecord> {
    let one = BigInt::one();
    let mut acc = BigInt::zero();
    let mut out = Vec::with_capacity(n_max as usize);
    for (k, d) in DelannoySequence::new(&one).take(n_max as usize).enumerate() {
        let k = k as u64;
        acc += BigInt::from(2 * k + 1) * &d * &d;
        out.push(intro_mod_n2_record(k + 1, &acc));
    }
    out
}

/// All (n, p) records of one valuation conjecture for a fixed x, from one
/// prefix-sum sweep of the cubic sums.
fn conjecture_valuation_pass(
    id: CheckId,
    x: i64,
    n_max: u64,
    primes: &[u64],
) -> Vec<CheckRecord> {
    let sign = match id {
        CheckId::ConjSunLast => Sign::Minus,
        _ => Sign::Plus,
    };
    let xb = BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut out = Vec::with_capacity(n_max as usize * primes.len());
    for (k, d) in DelannoySequence::new(&xb).take(n_max as usize).enumerate() {
        let k = k as u64;
        let d2 = &d * &d;
        let term = BigInt::from(2 * k + 1) * &d2 * &d;
        match sign.pow(k) {
            1 => acc += term,
            _ => acc -= term,
        }
        for &p in primes {
            out.push(conjecture_valuation_record(id, k + 1, p, &xb, &acc));
        }
    }
    out
}

fn evaluate_cell(cell: &Cell) -> Result<Vec<CheckRecord>, CampaignError> {
    Ok(match cell {
        Cell::Divisibility { m, x, n_max } => divisibility_pass(*m, *x, *n_max),
        Cell::Thm13 { p, x } => {
            let (cubic, quartic) = check_thm13(*p, &BigInt::from(*x))?;
            vec![cubic, quartic]
        }
        Cell::Thm14 { p, x } => {
            let (cubic, quartic) = check_thm14(*p, &BigInt::from(*x))?;
            vec![cubic, quartic]
        }
        Cell::SunTauraso { p, x } => vec![check_sun_tauraso(*p, &BigInt::from(*x))?],
        Cell::IntroModP4 { p } => vec![check_intro_congruences(*p)?],
        Cell::IntroModN2 { n_max } => intro_mod_n2_pass(*n_max),
        Cell::Conj52 { p, x, e } => {
            vec![check_conj52_with_exponent(*p, &BigInt::from(*x), *e)?]
        }
        Cell::ConjValuation { id, x, n_max, primes } => {
            conjecture_valuation_pass(*id, *x, *n_max, primes)
        }
    })
}

struct ResolvedGrids {
    n_max: u64,
    m_set: Vec<u32>,
    x_values: Vec<i64>,
    primes: Vec<u64>,
    e: u32,
}

fn resolve_grids(spec: &CampaignSpec) -> Result<ResolvedGrids, CampaignError> {
    if let Some((lo, hi)) = spec.x_range {
        if lo > hi {
            return Err(CampaignError::EmptyXRange { lo, hi });
        }
    }
    if spec.n_max == Some(0) {
        return Err(CampaignError::ZeroNMax);
    }
    if spec.jobs == Some(0) {
        return Err(CampaignError::ZeroJobs);
    }
    if let Some(ref m_set) = spec.m_set {
        if m_set.is_empty() {
            return Err(CampaignError::EmptyMSet);
        }
        if let Some(&bad) = m_set.iter().find(|&&m| m == 0) {
            return Err(CampaignError::InvalidM(bad));
        }
    }
    let e = spec.e.unwrap_or(3);
    if !(1..=4).contains(&e) {
        return Err(CampaignError::ExponentOutOfRange(e));
    }

    let (default_n, default_p, prime_floor, default_x) = match spec.family {
        CheckFamily::Divisibility => (100, 0, 0, Some((-10, 10))),
        CheckFamily::Thm13 | CheckFamily::Thm14 => (0, 499, 3, Some((-20, 20))),
        CheckFamily::SunTauraso => (0, 499, 3, None),
        CheckFamily::IntroModP4 => (0, 97, 5, None),
        CheckFamily::IntroModN2 => (200, 0, 0, None),
        CheckFamily::Conj52 => (0, 199, 3, Some((-10, 10))),
        CheckFamily::ConjSunLast | CheckFamily::ConjGuoLast => (60, 31, 2, Some((-10, 10))),
    };
    let n_max = spec.n_max.unwrap_or(default_n);
    let primes = if prime_floor > 0 {
        let p_max = spec.p_max.unwrap_or(default_p);
        let primes = primes_in_range(prime_floor, p_max);
        if primes.is_empty() {
            return Err(CampaignError::NoPrimes { lo: prime_floor, hi: p_max });
        }
        primes
    } else {
        Vec::new()
    };
    let x_values = match spec.x_range.or(default_x) {
        Some((lo, hi)) => (lo..=hi).collect(),
        None => Vec::new(),
    };
    let mut m_set = spec.m_set.clone().unwrap_or_else(|| vec![1, 2, 3, 4, 5, 6]);
    m_set.sort_unstable();
    m_set.dedup();
    Ok(ResolvedGrids { n_max, m_set, x_values, primes, e })
}

fn build_plan(spec: &CampaignSpec) -> Result<Vec<Cell>, CampaignError> {
    let grids = resolve_grids(spec)?;
    let mut cells = Vec::new();
    match spec.family {
        CheckFamily::Divisibility => {
            for &m in &grids.m_set {
                for &x in &grids.x_values {
                    cells.push(Cell::Divisibility { m, x, n_max: grids.n_max });
                }
            }
        }
        CheckFamily::Thm13 => {
            for &p in &grids.primes {
                for &x in &grids.x_values {
                    cells.push(Cell::Thm13 { p, x });
                }
            }
        }
        CheckFamily::Thm14 => {
            for &p in &grids.primes {
                for &x in &grids.x_values {
                    cells.push(Cell::Thm14 { p, x });
                }
            }
        }
        CheckFamily::SunTauraso => {
            for &p in &grids.primes {
                if grids.x_values.is_empty() {
                    // default grid: one full residue system per prime
                    for x in 0..p as i64 {
                        cells.push(Cell::SunTauraso { p, x });
                    }
                } else {
                    for &x in &grids.x_values {
                        cells.push(Cell::SunTauraso { p, x });
                    }
                }
            }
        }
        CheckFamily::IntroModP4 => {
            for &p in &grids.primes {
                cells.push(Cell::IntroModP4 { p });
            }
        }
        CheckFamily::IntroModN2 => {
            cells.push(Cell::IntroModN2 { n_max: grids.n_max });
        }
        CheckFamily::Conj52 => {
            for &p in &grids.primes {
                for &x in &grids.x_values {
                    cells.push(Cell::Conj52 { p, x, e: grids.e });
                }
            }
        }
        CheckFamily::ConjSunLast | CheckFamily::ConjGuoLast => {
            let id = if spec.family == CheckFamily::ConjSunLast {
                CheckId::ConjSunLast
            } else {
                CheckId::ConjGuoLast
            };
            for &x in &grids.x_values {
                cells.push(Cell::ConjValuation {
                    id,
                    x,
                    n_max: grids.n_max,
                    primes: grids.primes.clone(),
                });
            }
        }
    }
    Ok(cells)
}

fn run_cells(cells: &[Cell]) -> Result<Vec<CheckRecord>, CampaignError> {
    let nested: Result<Vec<Vec<CheckRecord>>, CampaignError> = cells
        .par_iter()
        .map(|cell| {
            let start = Instant::now();
            let mut records = evaluate_cell(cell)?;
            let elapsed = start.elapsed().as_millis() as u64;
            for record in &mut records {
                record.elapsed_ms = Some(elapsed);
            }
            Ok(records)
        })
        .collect();
    let mut records: Vec<CheckRecord> = nested?.into_iter().flatten().collect();
    records.sort_by_cached_key(CheckRecord::sort_key);
    Ok(records)
}

/// Sweeps one check family over its grid. Records come back in canonical
/// (check_id, p, n, x, m) order regardless of the parallel schedule; the
/// grid is validated before any work starts.
pub fn run_campaign(spec: &CampaignSpec) -> Result<Vec<CheckRecord>, CampaignError> {
    let cells = build_plan(spec)?;
    match spec.jobs {
        None => run_cells(&cells),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|err| CampaignError::PoolBuild(err.to_string()))?;
            pool.install(|| run_cells(&cells))
        }
    }
}

/// Totals over a record list; `checked` counts every record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CampaignSummary {
    pub checked: u64,
    pub held: u64,
    pub failed: u64,
    pub skipped: u64,
}

pub fn summarize(records: &[CheckRecord]) -> CampaignSummary {
    let mut summary = CampaignSummary::default();
    for record in records {
        summary.checked += 1;
        match record.holds() {
            Some(true) => summary.held += 1,
            Some(false) => summary.failed += 1,
            None => summary.skipped += 1,
        }
    }
    summary
}

/// Any failed record of a proven statement (a bug, exit-code 1 material).
pub fn any_theorem_failure(records: &[CheckRecord]) -> bool {
    records.iter().any(CheckRecord::is_theorem_failure)
}

/// Any failed conjecture record (a discovery, exit-code 3 material).
pub fn any_counterexample(records: &[CheckRecord]) -> bool {
    records.iter().any(CheckRecord::is_counterexample)
}
