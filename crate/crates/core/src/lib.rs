//! Exact-arithmetic kernels for Delannoy polynomials, the combinatorial
//! identities governing their weighted power sums, and the congruence and
//! divisibility checks built on top of them.
//!
//! Everything is computed over arbitrary-precision integers and reduced
//! only at the end, so every verdict produced by this crate is exact: a
//! reported failure is a counterexample, never a rounding artifact.
//!
//! The crate is layered:
//!
//! - [`ntheory`]: primality, prime enumeration, modular arithmetic,
//!   binomial coefficients (exact and modular tables), Legendre symbols,
//!   and p-adic valuations.
//! - [`poly`]: a small exact integer-polynomial ring used where identities
//!   are verified coefficientwise rather than pointwise.
//! - [`delannoy`]: the Delannoy polynomial evaluators (recurrence,
//!   defining sum, and modular) and the weighted power sums.
//! - [`identity`]: coefficientwise verification of the closed-form
//!   identities for weighted power sums and their helper identities.
//! - [`congruence`]: congruence/divisibility checks and the campaign
//!   runner that sweeps them over parameter grids in parallel.

pub mod congruence;
pub mod delannoy;
pub mod identity;
pub mod ntheory;
pub mod poly;

pub use num_bigint::BigInt;

pub use congruence::{
    any_counterexample, any_theorem_failure, check_conj52, check_conj52_with_exponent,
    check_conj_guo_last, check_conj_sun_last, check_divisibility_eq1, check_intro_congruences,
    check_intro_mod_n2, check_sun_tauraso, check_thm13, check_thm14, run_campaign, summarize,
    CampaignError, CampaignSpec, CampaignSummary, CheckFamily, CheckId, CheckParams, CheckRecord,
    Outcome,
};
pub use delannoy::{
    central_delannoy, delannoy_poly, delannoy_poly_defining_sum, delannoy_poly_mod, power_sum,
    square_formula_rhs, DelannoySequence, Sign,
};
pub use identity::{
    check_chu_vandermonde, check_product_expansion, check_square_formula_poly,
    check_weighted_triangle_sum, check_zeil, check_zeil_recurrence, delannoy_polynomial,
    identity_suite, rhs_lemma41, rhs_theorem12, verify_power_sum_identity,
    weighted_power_sum_poly, zeil_lhs, zeil_recurrence_verdict, zeil_rhs, IdentityId,
    IdentityParams, IdentitySide, IdentitySuiteConfig, IdentityVerdict, ZeilSide,
};
pub use ntheory::{
    binomial, exact_div, is_prime_u64, legendre_symbol, mul_mod, padic_valuation, pow_mod,
    primes_in_range, BinomialTable, NtError, PrimePower, Residue, Valuation,
};
pub use poly::{IntPolynomial, PolyPowers};
