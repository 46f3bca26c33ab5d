//! Exact integers, rationals and the combinatorial primitives used everywhere
//! else in the crate.
//!
//! [`Integer`] and [`Rational`] are thin aliases over `num-bigint` and
//! `num-rational`. `BigRational` normalizes on construction, so two rationals
//! are equal exactly when their reduced forms are.

mod poly;

pub use poly::Polynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invariant, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `a!`. Negative arguments are unrepresentable by the signature.
pub fn factorial(a: u64) -> Integer {
    (2..=a).fold(Integer::one(), |acc, i| acc * i)
}

/// `C(a, b)`, with the convention that it vanishes for `b < 0` or `b > a`.
///
/// Several power-sum formulas rely on terms such as `C(6, 7)` being zero.
pub fn binomial(a: u64, b: i64) -> Integer {
    if b < 0 || b as u64 > a {
        return Integer::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = Integer::one();
    for i in 0..b {
        // Each prefix product is itself a binomial coefficient, so the
        // division is exact.
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// `C(a, b)` for a possibly negative upper argument, read as the generalized
/// binomial `a(a-1)...(a-b+1)/b!`; zero for `b < 0`.
pub fn binomial_signed(a: i64, b: i64) -> Integer {
    if a >= 0 {
        return binomial(a as u64, b);
    }
    if b < 0 {
        return Integer::zero();
    }
    // C(-a', b) = (-1)^b C(a' + b - 1, b)
    let magnitude = binomial((b - a - 1) as u64, b);
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// `2^e` as an [`Integer`].
pub fn pow2(e: u64) -> Integer {
    Integer::one() << e
}

/// Integer power for a small signed base.
pub fn ipow(base: i64, e: u32) -> Integer {
    num_traits::pow(Integer::from(base), e as usize)
}

/// `(-1)^e`.
pub fn sign_pow(e: u64) -> Integer {
    if e.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

pub fn rat(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: impl Into<Integer>, d: impl Into<Integer>) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Converts a rational that must be integral, failing loudly otherwise.
pub fn expect_integral(value: Rational, what: &str) -> Result<Integer> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(invariant!("{what} evaluated to non-integral {value}"))
    }
}

/// Exact division of integers that must divide evenly.
pub fn exact_div(num: &Integer, den: &Integer, what: &str) -> Result<Integer> {
    if den.is_zero() {
        return Err(invariant!("{what}: division by zero"));
    }
    let q = num / den;
    if &(&q * den) != num {
        return Err(invariant!("{what}: {den} does not divide {num}"));
    }
    Ok(q)
}

/// Canonical string: plain integer, or `p/q` with `q > 1`.
pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

/// `<x>_m = x (x - 1*2) (x - 2*3) ... (x - (m-1)m)`, the generalized falling
/// factorial whose coefficients are the Legendre-Stirling numbers of the
/// first kind. `m = 0` gives the constant 1.
pub fn falling_factorial_generalized(m: usize) -> Polynomial {
    (0..m as i64).fold(Polynomial::one(), |acc, j| {
        acc * Polynomial::linear(rat(-(j * (j + 1))), rat(1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), Integer::from(1));
        assert_eq!(factorial(4), Integer::from(24));
        let product: u64 = (1..=12).product();
        assert_eq!(factorial(12), Integer::from(product));
        assert_eq!(factorial(12), Integer::from(479_001_600u64));
    }

    #[test]
    fn binomial_values_and_zero_convention() {
        assert_eq!(binomial(5, 3), Integer::from(10));
        assert_eq!(binomial(6, 7), Integer::zero());
        assert_eq!(binomial(6, -1), Integer::zero());
        assert_eq!(binomial(0, 0), Integer::one());
        // C(2n+2, 3) at n = 3
        assert_eq!(binomial(8, 3), Integer::from(56));
    }

    #[test]
    fn signed_binomial_matches_product_form() {
        for a in -8i64..8 {
            for b in -1i64..6 {
                let expected = if b < 0 {
                    rat(0)
                } else {
                    let num = (0..b).fold(Integer::one(), |acc, i| acc * (a - i));
                    Rational::new(num, factorial(b as u64))
                };
                assert_eq!(rat(binomial_signed(a, b)), expected, "C({a},{b})");
            }
        }
    }

    #[test]
    fn binomial_factorial_quotient_to_60() {
        for a in 0..=60u64 {
            for b in 0..=a {
                let expected = factorial(a) / (factorial(b) * factorial(a - b));
                assert_eq!(binomial(a, b as i64), expected);
            }
        }
    }

    #[test]
    fn pascal_rule_to_60() {
        for a in 1..=60u64 {
            for b in -2..=(a as i64 + 2) {
                assert_eq!(
                    binomial(a, b),
                    binomial(a - 1, b - 1) + binomial(a - 1, b),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn generalized_falling_factorial() {
        let x = Polynomial::x();
        assert_eq!(falling_factorial_generalized(1), x.clone());
        assert_eq!(
            falling_factorial_generalized(2),
            Polynomial::from_coeffs(vec![rat(0), rat(-2), rat(1)])
        );
        assert_eq!(
            falling_factorial_generalized(3),
            Polynomial::from_coeffs(vec![rat(0), rat(12), rat(-8), rat(1)])
        );
        assert_eq!(falling_factorial_generalized(0), Polynomial::one());
    }

    #[test]
    fn non_integral_is_reported() {
        assert!(expect_integral(frac(1, 2), "half").is_err());
        assert_eq!(
            expect_integral(frac(6, 3), "two").unwrap(),
            Integer::from(2)
        );
        assert!(exact_div(&Integer::from(7), &Integer::from(2), "7/2").is_err());
    }

    proptest! {
        #[test]
        fn rational_is_canonical(p in -10_000i64..10_000, q in (-10_000i64..10_000).prop_filter("nonzero", |q| *q != 0)) {
            let r = frac(p, q);
            prop_assert!(r.denom() > &Integer::zero());
            prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), Integer::one());
            // p/q == r exactly as cross-multiplication
            prop_assert_eq!(r.numer() * Integer::from(q), r.denom() * Integer::from(p));
            let reread = Rational::new(r.numer().clone(), r.denom().clone());
            prop_assert_eq!(reread, r);
        }
    }
}
