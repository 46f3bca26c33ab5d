//! Exact computation of power sums of integers through the triangle
//! `R(k, m)` (OEIS A304330) and its relatives.
//!
//! The crate covers the triangles themselves ([`triangles`]), every closed
//! form for `S_k(n)`, `T_k(n)` and `Omega_k(n)` ([`power_sums`]), Faulhaber
//! coefficients ([`faulhaber`]) and an identity checker that compares all of
//! them against brute-force sums ([`verify`]). Everything is exact: big
//! integers, reduced rationals and dense rational polynomials.

pub mod error;
pub mod faulhaber;
pub mod format;
pub mod numeric;
pub mod power_sums;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use faulhaber::{CRoute, CoeffKind, FaulhaberCoeffs};
pub use numeric::{
    binomial, factorial, falling_factorial_generalized, Integer, Polynomial, Rational,
};
pub use power_sums::{BernoulliMethod, EvalMethod, Evaluation, PowerSumKind};
pub use triangles::{Family, Triangle};
pub use verify::{CheckResult, CheckSpec, Status, Suite, VerificationReport};
