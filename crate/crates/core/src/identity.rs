//! Exact verification of the binomial-sum identities underlying the
//! weighted power sums: the triple-sum expansions of `(1/n) Σ ±(2k+1) D_k(x)^m`
//! for m = 3, 4, the product-expansion and weighted-triangle lemmas feeding
//! them, an alternating Chu-Vandermonde sum, the closed form for `D_n(x)^2`,
//! and a pair of equal binomial sums with their common three-term recurrence.
//!
//! Every check compares exact integers or exact polynomial coefficients;
//! nothing is sampled or rounded.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::delannoy::Sign;
use crate::ntheory::{binomial, exact_div, BinomialTable};
use crate::poly::{IntPolynomial, PolyPowers};

/// Which verified identity a verdict refers to. The `as_str` names are the
/// stable report identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `(1/n) Σ (2k+1) D_k(x)^3` as a positive triple sum.
    Sum1,
    /// `(1/n) Σ (2k+1) D_k(x)^4` as a positive triple sum.
    Sum2,
    /// Alternating cubic variant with the shifted leading binomial row.
    Sum11,
    /// Alternating quartic variant with the shifted leading binomial row.
    Sum12,
    /// Expansion of `C(l,i)C(l+i,i)C(l,j)C(l+j,j)` as a single sum.
    FromGz,
    /// `Σ_{t=k}^{n-1} (2t+1)C(t,k)C(t+k,k) = n C(n,k+1)C(n+k,k)`.
    TrianglePlus,
    /// Alternating twin of the triangle sum.
    TriangleMinus,
    /// `Σ_k (-1)^k C(j,i-k)C(j+k,k) = (-1)^i`.
    Chu,
    /// `D_n(x)^2 = Σ C(n,k)C(n+k,k)C(2k,k) x^k (x+1)^k`.
    DnxSquare,
    /// Two equal binomial sums sharing one quadratic-coefficient recurrence.
    Zeil,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Sum1 => "sum1",
            IdentityId::Sum2 => "sum2",
            IdentityId::Sum11 => "sum11",
            IdentityId::Sum12 => "sum12",
            IdentityId::FromGz => "from_gz",
            IdentityId::TrianglePlus => "triangle_plus",
            IdentityId::TriangleMinus => "triangle_minus",
            IdentityId::Chu => "chu",
            IdentityId::DnxSquare => "dnx_square",
            IdentityId::Zeil => "zeil",
        }
    }
}

/// Which of the two equal sums a recurrence check ran against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZeilSide {
    Lhs,
    Rhs,
}

impl ZeilSide {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeilSide::Lhs => "lhs",
            ZeilSide::Rhs => "rhs",
        }
    }
}

/// Grid coordinates of one verdict; only the fields meaningful for the
/// identity are populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdentityParams {
    pub n: Option<u64>,
    pub m: Option<u32>,
    pub sign: Option<Sign>,
    pub l: Option<u64>,
    pub i: Option<u64>,
    pub j: Option<u64>,
    pub k: Option<u64>,
    pub side: Option<ZeilSide>,
}

/// One side of a verified equation: a single exact integer or an exact
/// polynomial in x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentitySide {
    Scalar(BigInt),
    Poly(IntPolynomial),
}

impl IdentitySide {
    /// The scalar value if this side is scalar.
    pub fn as_scalar(&self) -> Option<&BigInt> {
        match self {
            IdentitySide::Scalar(v) => Some(v),
            IdentitySide::Poly(_) => None,
        }
    }
}

/// Outcome of checking one identity instance: both sides, exactly, plus
/// whether they agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub id: IdentityId,
    pub params: IdentityParams,
    pub lhs: IdentitySide,
    pub rhs: IdentitySide,
    pub holds: bool,
    /// Human-readable note on failures (e.g. which coefficient differed).
    pub detail: Option<String>,
    /// Wall time of the check, filled in by the suite runner.
    pub elapsed_ms: Option<u64>,
}

impl IdentityVerdict {
    /// Canonical report order: identity, then grid coordinates.
    pub fn sort_key(
        &self,
    ) -> (
        IdentityId,
        u64,
        u64,
        u64,
        u64,
        u64,
        u32,
        Option<Sign>,
        Option<ZeilSide>,
    ) {
        let p = &self.params;
        (
            self.id,
            p.n.unwrap_or(0),
            p.l.unwrap_or(0),
            p.i.unwrap_or(0),
            p.j.unwrap_or(0),
            p.k.unwrap_or(0),
            p.m.unwrap_or(0),
            p.sign,
            p.side,
        )
    }
}

/// `D_n(x)` as an exact polynomial: coefficient of `x^k` is `C(n,k)C(n+k,k)`.
pub fn delannoy_polynomial(n: u64) -> IntPolynomial {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c_n_k = BigInt::one(); // C(n, k)
    let mut c_nk_k = BigInt::one(); // C(n+k, k)
    for k in 0..=n {
        coeffs.push(&c_n_k * &c_nk_k);
        c_n_k = exact_div(c_n_k * (n - k), &BigInt::from(k + 1));
        c_nk_k = exact_div(c_nk_k * (n + k + 1), &BigInt::from(k + 1));
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Leading binomial pair of the triple sum: the full row `C(n, j+k+1)` or
/// the shifted row `C(n-1, j+k)` used by the alternating variants.
#[derive(Clone, Copy)]
enum LeadingRow {
    Full,
    Shifted,
}

/// The triple sum over `0 <= i, j <= n-1`, `0 <= k <= i` shared by all four
/// power-sum expansions. Loop bounds are kept literal; terms killed by the
/// out-of-range-binomial-is-zero convention simply contribute nothing.
fn triple_sum_rhs(n: u64, m: u32, leading: LeadingRow) -> IntPolynomial {
    assert!(n >= 1, "triple sum needs n >= 1");
    assert!(m == 3 || m == 4, "only cubes and fourth powers are expanded");
    let n = n as usize;
    // deepest row touched is n + j + k <= 3n - 2
    let table = BinomialTable::exact(3 * n);
    let max_deg = if m == 3 { 3 * (n - 1) } else { 4 * (n - 1) };
    let mut acc = vec![BigInt::zero(); max_deg + 1];
    let base = if m == 3 {
        // (x + 1)^i
        IntPolynomial::from_coeffs(vec![BigInt::one(), BigInt::one()])
    } else {
        // (x^2 + x)^{i+j}
        IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one(), BigInt::one()])
    };
    let mut powers = PolyPowers::new(base);
    for i in 0..n {
        for j in 0..n {
            for k in 0..=i {
                let mut factors = Vec::with_capacity(7);
                factors.push(match leading {
                    LeadingRow::Full => table.get(n, (j + k + 1) as i64),
                    LeadingRow::Shifted => table.get(n - 1, (j + k) as i64),
                });
                factors.push(table.get(n + j + k, (j + k) as i64));
                factors.push(table.get(i + j, i as i64));
                factors.push(table.get(j, i as i64 - k as i64));
                factors.push(table.get(j + k, k as i64));
                factors.push(table.get(2 * i, i as i64));
                if m == 4 {
                    factors.push(table.get(2 * j, j as i64));
                }
                let mut coeff = BigInt::one();
                let mut vanishes = false;
                for f in factors {
                    if f.is_zero() {
                        vanishes = true;
                        break;
                    }
                    coeff *= f;
                }
                if vanishes {
                    continue;
                }
                let (shift, power_index) = if m == 3 { (i + j, i) } else { (0, i + j) };
                let power = powers.get(power_index);
                for (t, c) in power.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    acc[shift + t] += &coeff * c;
                }
            }
        }
    }
    IntPolynomial::from_coeffs(acc)
}

/// Triple-sum form of `(1/n) Σ_{k<n} (2k+1) D_k(x)^m` for m in {3, 4}.
pub fn rhs_theorem12(n: u64, m: u32) -> IntPolynomial {
    triple_sum_rhs(n, m, LeadingRow::Full)
}

/// Triple-sum form of the alternating weighted sum, with the leading
/// binomial row shifted down by one.
pub fn rhs_lemma41(n: u64, m: u32) -> IntPolynomial {
    triple_sum_rhs(n, m, LeadingRow::Shifted)
}

/// `Σ_{k<n} w_k D_k(x)^m` with weight `(2k+1)` (sign = +1) or
/// `(-1)^{n-k-1} (2k+1)` (sign = -1), before division by n.
pub fn weighted_power_sum_poly(n: u64, m: u32, sign: Sign) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    for k in 0..n {
        let d = delannoy_polynomial(k);
        let d2 = &d * &d;
        let dm = match m {
            3 => &d2 * &d,
            4 => &d2 * &d2,
            _ => d.pow(m),
        };
        let magnitude = 2 * k + 1;
        let weight = match sign {
            Sign::Plus => BigInt::from(magnitude),
            Sign::Minus => {
                if (n - k - 1) % 2 == 0 {
                    BigInt::from(magnitude)
                } else {
                    -BigInt::from(magnitude)
                }
            }
        };
        acc += &dm.mul_scalar(&weight);
    }
    acc
}

/// Lowest degree at which two polynomials differ, if any.
fn first_coeff_mismatch(a: &IntPolynomial, b: &IntPolynomial) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&d| a.coeff(d) != b.coeff(d))
}

/// Checks that the weighted power sum, divided exactly by n, equals its
/// triple-sum expansion as a polynomial identity in x.
///
/// A non-exact division by n is itself a failed verdict (it would already
/// contradict the divisibility the expansion implies), not a panic.
pub fn verify_power_sum_identity(n: u64, m: u32, sign: Sign) -> IdentityVerdict {
    assert!(n >= 1);
    assert!(m == 3 || m == 4);
    let id = match (m, sign) {
        (3, Sign::Plus) => IdentityId::Sum1,
        (4, Sign::Plus) => IdentityId::Sum2,
        (3, Sign::Minus) => IdentityId::Sum11,
        _ => IdentityId::Sum12,
    };
    let params = IdentityParams {
        n: Some(n),
        m: Some(m),
        sign: Some(sign),
        ..IdentityParams::default()
    };
    let raw = weighted_power_sum_poly(n, m, sign);
    let rhs = match sign {
        Sign::Plus => rhs_theorem12(n, m),
        Sign::Minus => rhs_lemma41(n, m),
    };
    match raw.div_exact_scalar(&BigInt::from(n)) {
        Some(lhs) => {
            let mismatch = first_coeff_mismatch(&lhs, &rhs);
            IdentityVerdict {
                id,
                params,
                holds: mismatch.is_none(),
                detail: mismatch.map(|d| format!("coefficients first differ at degree {d}")),
                lhs: IdentitySide::Poly(lhs),
                rhs: IdentitySide::Poly(rhs),
                elapsed_ms: None,
            }
        }
        None => IdentityVerdict {
            id,
            params,
            holds: false,
            detail: Some(format!(
                "weighted power sum is not divisible by n = {n} coefficientwise"
            )),
            lhs: IdentitySide::Poly(raw),
            rhs: IdentitySide::Poly(rhs),
            elapsed_ms: None,
        },
    }
}

/// Verifies the single-sum expansion of the four-binomial product
/// `C(l,i)C(l+i,i)C(l,j)C(l+j,j)`.
pub fn check_product_expansion(l: u64, i: u64, j: u64) -> IdentityVerdict {
    assert!(i <= l && j <= l, "indices must not exceed the row l");
    let lhs = binomial(l, i as i64)
        * binomial(l + i, i as i64)
        * binomial(l, j as i64)
        * binomial(l + j, j as i64);
    let mut rhs = BigInt::zero();
    for k in 0..=i {
        rhs += binomial(i + j, i as i64)
            * binomial(j, i as i64 - k as i64)
            * binomial(j + k, k as i64)
            * binomial(l, (j + k) as i64)
            * binomial(l + j + k, (j + k) as i64);
    }
    let holds = lhs == rhs;
    IdentityVerdict {
        id: IdentityId::FromGz,
        params: IdentityParams {
            l: Some(l),
            i: Some(i),
            j: Some(j),
            ..IdentityParams::default()
        },
        lhs: IdentitySide::Scalar(lhs),
        rhs: IdentitySide::Scalar(rhs),
        holds,
        detail: None,
        elapsed_ms: None,
    }
}

/// Verifies the weighted triangle sum `Σ_{t=k}^{n-1} ±(2t+1)C(t,k)C(t+k,k)`
/// against its closed form (`n C(n,k+1)C(n+k,k)` for +, `n C(n-1,k)C(n+k,k)`
/// for the alternating weight `(-1)^{n-t-1}`).
pub fn check_weighted_triangle_sum(n: u64, k: u64, sign: Sign) -> IdentityVerdict {
    assert!(n >= 1);
    assert!(k <= n - 1, "summation range would be empty");
    let mut lhs = BigInt::zero();
    for t in k..n {
        let term = BigInt::from(2 * t + 1) * binomial(t, k as i64) * binomial(t + k, k as i64);
        let negate = sign == Sign::Minus && (n - t - 1) % 2 == 1;
        if negate {
            lhs -= term;
        } else {
            lhs += term;
        }
    }
    let rhs = match sign {
        Sign::Plus => BigInt::from(n) * binomial(n, k as i64 + 1) * binomial(n + k, k as i64),
        Sign::Minus => BigInt::from(n) * binomial(n - 1, k as i64) * binomial(n + k, k as i64),
    };
    let holds = lhs == rhs;
    IdentityVerdict {
        id: match sign {
            Sign::Plus => IdentityId::TrianglePlus,
            Sign::Minus => IdentityId::TriangleMinus,
        },
        params: IdentityParams {
            n: Some(n),
            k: Some(k),
            sign: Some(sign),
            ..IdentityParams::default()
        },
        lhs: IdentitySide::Scalar(lhs),
        rhs: IdentitySide::Scalar(rhs),
        holds,
        detail: None,
        elapsed_ms: None,
    }
}

/// Verifies the alternating Chu-Vandermonde sum
/// `Σ_{k=0}^{i} (-1)^k C(j, i-k) C(j+k, k) = (-1)^i`.
pub fn check_chu_vandermonde(i: u64, j: u64) -> IdentityVerdict {
    let mut lhs = BigInt::zero();
    for k in 0..=i {
        let term = binomial(j, i as i64 - k as i64) * binomial(j + k, k as i64);
        if k % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let holds = lhs == rhs;
    IdentityVerdict {
        id: IdentityId::Chu,
        params: IdentityParams {
            i: Some(i),
            j: Some(j),
            ..IdentityParams::default()
        },
        lhs: IdentitySide::Scalar(lhs),
        rhs: IdentitySide::Scalar(rhs),
        holds,
        detail: None,
        elapsed_ms: None,
    }
}

/// Central binomial coefficients `C(0,0), C(2,1), ..., C(2n,n)`.
fn central_binomials(up_to: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(BigInt::one());
    for k in 0..up_to {
        let k = k as u64;
        let next = exact_div(
            &out[k as usize] * (2 * k + 1) * (2 * k + 2),
            &(BigInt::from(k + 1) * (k + 1)),
        );
        out.push(next);
    }
    out
}

/// `Σ_{k=0}^{n} C(n,k) C(2k,k) C(2n-2k,n-k)`.
pub fn zeil_lhs(n: u64) -> BigInt {
    let n = n as usize;
    let cb = central_binomials(n);
    let mut c_n_k = BigInt::one();
    let mut acc = BigInt::zero();
    for k in 0..=n {
        acc += &c_n_k * &cb[k] * &cb[n - k];
        c_n_k = exact_div(c_n_k * (n - k) as u64, &BigInt::from(k as u64 + 1));
    }
    acc
}

/// `Σ_{k=0}^{n} C(2k,k)^2 C(k,n-k) (-4)^{n-k}`, with the `C(k, n-k)` factor
/// advanced by exact ratio steps over the half-range where it is nonzero.
pub fn zeil_rhs(n: u64) -> BigInt {
    let n = n as usize;
    let cb = central_binomials(n);
    let start = n.div_ceil(2); // below this, C(k, n-k) = 0
    let mut c = binomial(start as u64, (n - start) as i64);
    let mut sign_pow = (&BigInt::from(-4)).pow((n - start) as u32);
    let mut acc = BigInt::zero();
    for k in start..=n {
        acc += &cb[k] * &cb[k] * &c * &sign_pow;
        if k < n {
            // C(k+1, n-k-1) = C(k, n-k) * (k+1)(n-k) / ((2k+2-n)(2k+1-n))
            c = exact_div(
                c * (k as u64 + 1) * (n - k) as u64,
                &(BigInt::from((2 * k + 2 - n) as u64) * (2 * k + 1 - n) as u64),
            );
            sign_pow = exact_div(sign_pow, &BigInt::from(-4));
        }
    }
    acc
}

/// Verdict that the two binomial sums agree at index n.
pub fn check_zeil(n: u64) -> IdentityVerdict {
    let lhs = zeil_lhs(n);
    let rhs = zeil_rhs(n);
    let holds = lhs == rhs;
    IdentityVerdict {
        id: IdentityId::Zeil,
        params: IdentityParams {
            n: Some(n),
            ..IdentityParams::default()
        },
        lhs: IdentitySide::Scalar(lhs),
        rhs: IdentitySide::Scalar(rhs),
        holds,
        detail: None,
        elapsed_ms: None,
    }
}

/// Residual of `(n+2)^2 S(n+2) - 4(3n^2+9n+7) S(n+1) + 32(n+1)^2 S(n)`
/// for the chosen side's sequence; the recurrence holds iff it is zero.
fn zeil_recurrence_residual(side: ZeilSide, n: u64) -> BigInt {
    let eval = match side {
        ZeilSide::Lhs => zeil_lhs,
        ZeilSide::Rhs => zeil_rhs,
    };
    let (s0, s1, s2) = (eval(n), eval(n + 1), eval(n + 2));
    let nb = BigInt::from(n);
    let c2 = (&nb + 2) * (&nb + 2);
    let c1 = BigInt::from(4) * (BigInt::from(3) * &nb * &nb + BigInt::from(9) * &nb + 7);
    let c0 = BigInt::from(32) * (&nb + 1) * (&nb + 1);
    c2 * s2 - c1 * s1 + c0 * s0
}

/// True iff the shared three-term recurrence holds at index n for the
/// chosen side.
pub fn check_zeil_recurrence(side: ZeilSide, n: u64) -> bool {
    zeil_recurrence_residual(side, n).is_zero()
}

/// Recurrence check packaged as a verdict: lhs is the residual, rhs is 0.
pub fn zeil_recurrence_verdict(side: ZeilSide, n: u64) -> IdentityVerdict {
    let residual = zeil_recurrence_residual(side, n);
    let holds = residual.is_zero();
    IdentityVerdict {
        id: IdentityId::Zeil,
        params: IdentityParams {
            n: Some(n),
            side: Some(side),
            ..IdentityParams::default()
        },
        lhs: IdentitySide::Scalar(residual),
        rhs: IdentitySide::Scalar(BigInt::zero()),
        holds,
        detail: Some("three-term recurrence residual".to_string()),
        elapsed_ms: None,
    }
}

/// Compares `D_n(x)^2` with `Σ C(n,k)C(n+k,k)C(2k,k) x^k (x+1)^k`
/// coefficient by coefficient.
pub fn check_square_formula_poly(n: u64) -> IdentityVerdict {
    let d = delannoy_polynomial(n);
    let lhs = &d * &d;
    let n = n as usize;
    let mut acc = vec![BigInt::zero(); 2 * n + 1];
    let mut powers = PolyPowers::new(IntPolynomial::from_coeffs(vec![
        BigInt::one(),
        BigInt::one(),
    ]));
    let mut c_n_k = BigInt::one();
    let mut c_nk_k = BigInt::one();
    let mut c_2k_k = BigInt::one();
    for k in 0..=n {
        let coeff = &c_n_k * &c_nk_k * &c_2k_k;
        let power = powers.get(k);
        for (t, c) in power.coeffs().iter().enumerate() {
            acc[k + t] += &coeff * c;
        }
        let kb = k as u64;
        let nb = n as u64;
        c_n_k = exact_div(c_n_k * (nb - kb), &BigInt::from(kb + 1));
        c_nk_k = exact_div(c_nk_k * (nb + kb + 1), &BigInt::from(kb + 1));
        c_2k_k = exact_div(
            c_2k_k * (2 * kb + 1) * (2 * kb + 2),
            &(BigInt::from(kb + 1) * (kb + 1)),
        );
    }
    let rhs = IntPolynomial::from_coeffs(acc);
    let mismatch = first_coeff_mismatch(&lhs, &rhs);
    IdentityVerdict {
        id: IdentityId::DnxSquare,
        params: IdentityParams {
            n: Some(n as u64),
            ..IdentityParams::default()
        },
        holds: mismatch.is_none(),
        detail: mismatch.map(|d| format!("coefficients first differ at degree {d}")),
        lhs: IdentitySide::Poly(lhs),
        rhs: IdentitySide::Poly(rhs),
        elapsed_ms: None,
    }
}

/// Grid bounds for a full identity-suite run. Defaults match the published
/// verification envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySuiteConfig {
    /// Power-sum identities run for 1 ..= this bound.
    pub power_sum_n_max: u64,
    /// Exponents checked for the power-sum identities (subset of {3, 4}).
    pub power_sum_m_set: Vec<u32>,
    /// Product expansion checked for all l up to this bound, i, j <= l.
    pub product_expansion_l_max: u64,
    /// Triangle sums for 1 ..= bound, all k <= n-1, both signs.
    pub triangle_n_max: u64,
    /// Chu-Vandermonde grid bound for both i and j.
    pub chu_max: u64,
    /// Square closed form for 0 ..= bound.
    pub square_n_max: u64,
    /// Equal-sums check for 0 ..= bound, recurrence for 0 ..= bound-2.
    pub zeil_n_max: u64,
}

impl Default for IdentitySuiteConfig {
    fn default() -> Self {
        IdentitySuiteConfig {
            power_sum_n_max: 40,
            power_sum_m_set: vec![3, 4],
            product_expansion_l_max: 12,
            triangle_n_max: 30,
            chu_max: 20,
            square_n_max: 60,
            zeil_n_max: 500,
        }
    }
}

enum SuiteCell {
    PowerSum { n: u64, m: u32, sign: Sign },
    Product { l: u64, i: u64, j: u64 },
    Triangle { n: u64, k: u64, sign: Sign },
    Chu { i: u64, j: u64 },
    Square { n: u64 },
    Zeil { n: u64 },
    ZeilRecurrence { side: ZeilSide, n: u64 },
}

fn evaluate_cell(cell: &SuiteCell) -> IdentityVerdict {
    match *cell {
        SuiteCell::PowerSum { n, m, sign } => verify_power_sum_identity(n, m, sign),
        SuiteCell::Product { l, i, j } => check_product_expansion(l, i, j),
        SuiteCell::Triangle { n, k, sign } => check_weighted_triangle_sum(n, k, sign),
        SuiteCell::Chu { i, j } => check_chu_vandermonde(i, j),
        SuiteCell::Square { n } => check_square_formula_poly(n),
        SuiteCell::Zeil { n } => check_zeil(n),
        SuiteCell::ZeilRecurrence { side, n } => zeil_recurrence_verdict(side, n),
    }
}

/// Runs every identity check over the configured grids, in parallel, and
/// returns the verdicts in canonical (identity, params) order — independent
/// of the parallel schedule.
pub fn identity_suite(config: &IdentitySuiteConfig) -> Vec<IdentityVerdict> {
    let mut cells = Vec::new();
    for n in 1..=config.power_sum_n_max {
        for &m in &config.power_sum_m_set {
            for sign in [Sign::Plus, Sign::Minus] {
                cells.push(SuiteCell::PowerSum { n, m, sign });
            }
        }
    }
    for l in 0..=config.product_expansion_l_max {
        for i in 0..=l {
            for j in 0..=l {
                cells.push(SuiteCell::Product { l, i, j });
            }
        }
    }
    for n in 1..=config.triangle_n_max {
        for k in 0..n {
            for sign in [Sign::Plus, Sign::Minus] {
                cells.push(SuiteCell::Triangle { n, k, sign });
            }
        }
    }
    for i in 0..=config.chu_max {
        for j in 0..=config.chu_max {
            cells.push(SuiteCell::Chu { i, j });
        }
    }
    for n in 0..=config.square_n_max {
        cells.push(SuiteCell::Square { n });
    }
    for n in 0..=config.zeil_n_max {
        cells.push(SuiteCell::Zeil { n });
    }
    if config.zeil_n_max >= 2 {
        for n in 0..=config.zeil_n_max - 2 {
            for side in [ZeilSide::Lhs, ZeilSide::Rhs] {
                cells.push(SuiteCell::ZeilRecurrence { side, n });
            }
        }
    }
    let mut verdicts: Vec<IdentityVerdict> = cells
        .par_iter()
        .map(|cell| {
            let start = Instant::now();
            let mut verdict = evaluate_cell(cell);
            verdict.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            verdict
        })
        .collect();
    verdicts.sort_by_key(IdentityVerdict::sort_key);
    verdicts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn eval_at_one(p: &IntPolynomial) -> BigInt {
        p.eval(&BigInt::one())
    }

    #[test]
    fn delannoy_polynomial_coefficients() {
        assert_eq!(delannoy_polynomial(0).coeffs(), &[big(1)]);
        assert_eq!(delannoy_polynomial(1).coeffs(), &[big(1), big(2)]);
        assert_eq!(delannoy_polynomial(2).coeffs(), &[big(1), big(6), big(6)]);
        assert_eq!(eval_at_one(&delannoy_polynomial(4)), big(321));
        assert_eq!(
            delannoy_polynomial(7).eval(&big(3)),
            crate::delannoy::delannoy_poly(7, &big(3))
        );
    }

    #[test]
    fn triple_sum_anchor_values() {
        assert_eq!(rhs_theorem12(1, 3), IntPolynomial::one());
        assert_eq!(rhs_theorem12(1, 4), IntPolynomial::one());
        assert_eq!(eval_at_one(&rhs_theorem12(2, 3)), big(41));
        assert_eq!(eval_at_one(&rhs_theorem12(2, 4)), big(122));
        assert_eq!(rhs_lemma41(1, 3), IntPolynomial::one());
        assert_eq!(eval_at_one(&rhs_lemma41(2, 3)), big(40));
        assert_eq!(eval_at_one(&rhs_lemma41(2, 4)), big(121));
    }

    #[test]
    fn power_sum_identities_hold() {
        for (n, m, sign) in [
            (1, 3, Sign::Plus),
            (7, 3, Sign::Plus),
            (7, 4, Sign::Minus),
            (5, 3, Sign::Minus),
            (6, 4, Sign::Plus),
        ] {
            let v = verify_power_sum_identity(n, m, sign);
            assert!(v.holds, "n = {n}, m = {m}, sign = {sign:?}: {:?}", v.detail);
        }
    }

    #[test]
    fn product_expansion_anchors() {
        let v = check_product_expansion(2, 1, 1);
        assert!(v.holds);
        assert_eq!(v.lhs.as_scalar(), Some(&big(36)));
        assert_eq!(v.rhs.as_scalar(), Some(&big(36)));
        let v = check_product_expansion(5, 0, 0);
        assert!(v.holds);
        assert_eq!(v.lhs.as_scalar(), Some(&big(1)));
        assert!(check_product_expansion(3, 2, 1).holds);
    }

    #[test]
    fn triangle_sum_anchors() {
        let v = check_weighted_triangle_sum(2, 0, Sign::Plus);
        assert!(v.holds);
        assert_eq!(v.lhs.as_scalar(), Some(&big(4)));
        let v = check_weighted_triangle_sum(2, 1, Sign::Plus);
        assert!(v.holds);
        assert_eq!(v.lhs.as_scalar(), Some(&big(6)));
        let v = check_weighted_triangle_sum(2, 1, Sign::Minus);
        assert!(v.holds);
        assert_eq!(v.lhs.as_scalar(), Some(&big(6)));
    }

    #[test]
    fn chu_vandermonde_anchors() {
        assert_eq!(check_chu_vandermonde(0, 5).lhs.as_scalar(), Some(&big(1)));
        assert_eq!(check_chu_vandermonde(1, 2).lhs.as_scalar(), Some(&big(-1)));
        assert_eq!(check_chu_vandermonde(2, 1).lhs.as_scalar(), Some(&big(1)));
        for i in 0..=8 {
            for j in 0..=8 {
                assert!(check_chu_vandermonde(i, j).holds, "i = {i}, j = {j}");
            }
        }
    }

    #[test]
    fn zeil_anchor_values() {
        assert_eq!(zeil_lhs(0), big(1));
        assert_eq!(zeil_lhs(1), big(4));
        assert_eq!(zeil_lhs(2), big(20));
        assert_eq!(zeil_rhs(0), big(1));
        assert_eq!(zeil_rhs(1), big(4));
        assert_eq!(zeil_rhs(2), big(20));
        assert_eq!(zeil_lhs(10), big(68_906_320));
        assert_eq!(zeil_rhs(10), big(68_906_320));
        for n in 0..=40 {
            assert!(check_zeil(n).holds, "n = {n}");
        }
    }

    #[test]
    fn zeil_recurrence_anchors() {
        assert!(check_zeil_recurrence(ZeilSide::Lhs, 0));
        assert!(check_zeil_recurrence(ZeilSide::Rhs, 0));
        assert!(check_zeil_recurrence(ZeilSide::Lhs, 10));
        for n in 0..=25 {
            assert!(check_zeil_recurrence(ZeilSide::Lhs, n), "lhs at {n}");
            assert!(check_zeil_recurrence(ZeilSide::Rhs, n), "rhs at {n}");
        }
        let v = zeil_recurrence_verdict(ZeilSide::Rhs, 3);
        assert!(v.holds);
        assert_eq!(v.lhs.as_scalar(), Some(&big(0)));
        assert_eq!(v.params.side, Some(ZeilSide::Rhs));
    }

    #[test]
    fn square_formula_anchors() {
        let v = check_square_formula_poly(0);
        assert!(v.holds);
        assert_eq!(v.lhs, IdentitySide::Poly(IntPolynomial::one()));
        assert!(check_square_formula_poly(2).holds);
        assert!(check_square_formula_poly(15).holds);
    }

    #[test]
    fn suite_is_sorted_and_green() {
        let config = IdentitySuiteConfig {
            power_sum_n_max: 4,
            power_sum_m_set: vec![3, 4],
            product_expansion_l_max: 3,
            triangle_n_max: 4,
            chu_max: 3,
            square_n_max: 4,
            zeil_n_max: 6,
        };
        let verdicts = identity_suite(&config);
        let power = 4 * 2 * 2;
        let product: usize = (0..=3u64).map(|l| ((l + 1) * (l + 1)) as usize).sum();
        let triangle = (1 + 2 + 3 + 4) * 2;
        let chu = 4 * 4;
        let square = 5;
        let zeil = 7 + 2 * 5;
        assert_eq!(verdicts.len(), power + product + triangle + chu + square + zeil);
        assert!(verdicts.iter().all(|v| v.holds));
        assert!(verdicts.iter().all(|v| v.elapsed_ms.is_some()));
        for pair in verdicts.windows(2) {
            assert!(pair[0].sort_key() <= pair[1].sort_key());
        }
        // plain equal-sums rows sort before the recurrence rows at the same n
        let zeil_rows: Vec<_> = verdicts.iter().filter(|v| v.id == IdentityId::Zeil).collect();
        assert_eq!(zeil_rows[0].params.side, None);
        assert_eq!(zeil_rows[1].params.side, Some(ZeilSide::Lhs));
        assert_eq!(zeil_rows[2].params.side, Some(ZeilSide::Rhs));
    }
}
