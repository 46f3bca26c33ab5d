//! Power sums `S_k(n)`, `T_k(n)`, `Omega_k(n)`: literal summation plus every
//! closed form built on `R(k, m)`, and the Bernoulli machinery those forms
//! connect to.
//!
//! Closed forms accumulate in [`Rational`] and only the final total is
//! required to be an integer; individual terms need not be.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::numeric::{
    binomial, expect_integral, factorial, frac, ipow, pow2, rat, sign_pow, Integer, Polynomial,
    Rational,
};
use crate::triangles::r_entry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PowerSumKind {
    /// `1^k + 2^k + ... + n^k`
    S,
    /// `1^k + 3^k + ... + (2n-1)^k`
    T,
    /// `n^k - (n-1)^k + ... + (-1)^(n-1) 1^k`
    Omega,
}

impl FromStr for PowerSumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Self::S),
            "T" | "t" => Ok(Self::T),
            "omega" | "Omega" => Ok(Self::Omega),
            _ => Err(Error::Usage(format!("unknown power sum {s:?}"))),
        }
    }
}

impl fmt::Display for PowerSumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::S => "S",
            Self::T => "T",
            Self::Omega => "omega",
        })
    }
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(domain!("exponent index must be >= 1"))
    } else {
        Ok(())
    }
}

/// Literal summation; the empty sum (`n = 0`) is zero.
pub fn brute(kind: PowerSumKind, k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    let e = k as u32;
    let total = match kind {
        PowerSumKind::S => (1..=n).map(|i| ipow(i as i64, e)).sum(),
        PowerSumKind::T => (1..=n).map(|i| ipow(2 * i as i64 - 1, e)).sum(),
        PowerSumKind::Omega => (1..=n)
            .map(|i| {
                let p = ipow(i as i64, e);
                if (n - i).is_multiple_of(2) {
                    p
                } else {
                    -p
                }
            })
            .sum(),
    };
    Ok(total)
}

/// `2^(2k) S_{2k}(n) = sum_m R(k, m) C(2n + m + 1, 2m + 1)`.
pub fn s_even_scaled(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    Ok((1..=k)
        .map(|m| r_entry(k, m) * binomial(2 * n + m as u64 + 1, 2 * m as i64 + 1))
        .sum())
}

/// `S_{2k}(n) = sum_m R(k, m) (2n + 1)/(2m + 1) C(n + m, 2m)`.
pub fn s_even_knuth(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    let total: Rational = (1..=k)
        .map(|m| {
            rat(r_entry(k, m) * binomial(n + m as u64, 2 * m as i64))
                * frac(2 * n + 1, 2 * m as u64 + 1)
        })
        .sum();
    expect_integral(total, "S_2k via Knuth's even formula")
}

/// `S_{2k-1}(n) = sum_m R(k, m) / m * C(n + m, 2m)`.
pub fn s_odd_knuth(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    let total: Rational = (1..=k)
        .map(|m| {
            Rational::new(
                r_entry(k, m) * binomial(n + m as u64, 2 * m as i64),
                m.into(),
            )
        })
        .sum();
    expect_integral(total, "S_(2k-1) via Knuth's odd formula")
}

/// `T_{2k}(n) = sum_m R(k, m) C(2n + m, 2m + 1)`.
pub fn t_even(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    Ok((1..=k)
        .map(|m| r_entry(k, m) * binomial(2 * n + m as u64, 2 * m as i64 + 1))
        .sum())
}

/// `Omega_{2k}(n) = sum_m R(k, m) C(n + m, 2m)`.
pub fn omega_even(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    Ok((1..=k)
        .map(|m| r_entry(k, m) * binomial(n + m as u64, 2 * m as i64))
        .sum())
}

/// `Q_{k,m}(n)`: `n^(2k-1)` for `m = 1`, otherwise
/// `2 sum_{j=m}^{k} C(2k-1, 2j-2) R(j-1, m-1) n^(2k-2j+1)`.
pub fn q_polynomial(k: usize, m: usize) -> Result<Polynomial> {
    if m == 0 || m > k {
        return Err(domain!("Q_(k,m) requires 1 <= m <= k, got k={k} m={m}"));
    }
    if m == 1 {
        return Ok(Polynomial::monomial(rat(1), 2 * k - 1));
    }
    let poly = (m..=k).fold(Polynomial::zero(), |acc, j| {
        let c = binomial(2 * k as u64 - 1, 2 * j as i64 - 2) * r_entry(j - 1, m - 1) * 2u32;
        &acc + &Polynomial::monomial(rat(c), 2 * k - 2 * j + 1)
    });
    Ok(poly)
}

/// `2^(2k-1) S_{2k-1}(n) = sum_m Q_{k,m}(n) C(n + m, 2m - 1)`.
pub fn s_odd_scaled_q(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    let mut total = Rational::zero();
    for m in 1..=k {
        total += q_polynomial(k, m)?.eval_int(n) * rat(binomial(n + m as u64, 2 * m as i64 - 1));
    }
    expect_integral(total, "2^(2k-1) S_(2k-1) via Q_(k,m)")
}

static F_POLYS: LazyLock<RwLock<BTreeMap<usize, Polynomial>>> = LazyLock::new(Default::default);

/// `F_m(n) = sum_{i=1}^{n} C(2i + m - 1, 2m - 1)` directly.
pub fn f_sum(m: usize, n: u64) -> Integer {
    (1..=n)
        .map(|i| binomial(2 * i + m as u64 - 1, 2 * m as i64 - 1))
        .sum()
}

/// `F_m` as a polynomial of degree `2m`, interpolated through
/// `n = 0, 1, ..., 2m`.
pub fn f_polynomial(m: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(domain!("F_m requires m >= 1"));
    }
    if let Some(p) = F_POLYS.read().expect("poisoned").get(&m) {
        return Ok(p.clone());
    }
    let points: Vec<_> = (0..=2 * m as u64)
        .map(|n| (rat(n), rat(f_sum(m, n))))
        .collect();
    let poly = Polynomial::interpolate(&points);
    F_POLYS.write().expect("poisoned").insert(m, poly.clone());
    Ok(poly)
}

/// `C(n + h, 2h)` as a polynomial in `n`, with `h = floor((m + 1)/2)`.
pub fn g_divisor(m: usize) -> Polynomial {
    let h = m.div_ceil(2);
    Polynomial::binomial_of(&Polynomial::from_integers([h as i64, 1]), 2 * h)
}

/// `G_m = F_m / C(n + h, 2h)`, which must divide exactly.
pub fn g_polynomial(m: usize) -> Result<Polynomial> {
    let f = f_polynomial(m)?;
    let (q, r) = f
        .div_rem(&g_divisor(m))
        .expect("divisor is a nonzero polynomial");
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "F_{m} is not divisible by C(n+h,2h): remainder {r}"
        )));
    }
    Ok(q)
}

/// `2^(2k-1) S_{2k-1}(n) = sum_m R(k, m) F_m(n) / m`.
pub fn s_odd_scaled_f(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    let mut total = Rational::zero();
    for m in 1..=k {
        total += f_polynomial(m)?.eval_int(n) * Rational::new(r_entry(k, m), m.into());
    }
    expect_integral(total, "2^(2k-1) S_(2k-1) via F_m")
}

/// `B_0, ..., B_max` from `sum_{j=0}^{m} C(m+1, j) B_j = 0`, so `B_1 = -1/2`.
pub fn bernoulli_recurrence(max_index: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(max_index + 1);
    b.push(rat(1));
    for m in 1..=max_index {
        let s: Rational = b
            .iter()
            .enumerate()
            .map(|(j, bj)| bj * rat(binomial(m as u64 + 1, j as i64)))
            .sum();
        b.push(-s / rat(m as u64 + 1));
    }
    b
}

/// `B_{2k} = sum_m (-1)^(m-1) m! (m-1)! / (2m+1)! R(k, m)`.
pub fn bernoulli_even_from_r(k: usize) -> Result<Rational> {
    require_k(k)?;
    Ok((1..=k)
        .map(|m| {
            let m64 = m as u64;
            Rational::new(
                sign_pow(m64 - 1) * factorial(m64) * factorial(m64 - 1) * r_entry(k, m),
                factorial(2 * m64 + 1),
            )
        })
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernoulliMethod {
    /// Even indices from `R(k, m)`; `B_0`, `B_1` and the odd zeros are fixed.
    RFormula,
    Recurrence,
}

/// `B_0..=B_max_index`, even indices `>= 2` via `R(k, m)`, each checked
/// against the recurrence.
pub fn bernoulli_numbers(max_index: usize) -> Result<Vec<Rational>> {
    let oracle = bernoulli_recurrence(max_index);
    let mut out = Vec::with_capacity(max_index + 1);
    for (i, expected) in oracle.iter().enumerate() {
        let value = match i {
            0 => rat(1),
            1 => frac(-1, 2),
            _ if i % 2 == 1 => rat(0),
            _ => bernoulli_even_from_r(i / 2)?,
        };
        if &value != expected {
            return Err(Error::Verification(format!(
                "B_{i}: R-formula gives {value}, recurrence gives {expected}"
            )));
        }
        out.push(value);
    }
    Ok(out)
}

pub fn bernoulli_numbers_by(max_index: usize, method: BernoulliMethod) -> Result<Vec<Rational>> {
    match method {
        BernoulliMethod::RFormula => bernoulli_numbers(max_index),
        BernoulliMethod::Recurrence => Ok(bernoulli_recurrence(max_index)),
    }
}

/// `B_k(x) = sum_j C(k, j) B_j x^(k-j)`.
pub fn bernoulli_polynomial(k: usize) -> Polynomial {
    let b = bernoulli_recurrence(k);
    Polynomial::from_coeffs(
        (0..=k)
            .map(|deg| &b[k - deg] * rat(binomial(k as u64, (k - deg) as i64)))
            .collect(),
    )
}

/// `(2k+1)/2^(2k) sum_m R(k, m) C(2x + m - 1, 2m + 1)` as a polynomial in `x`,
/// each binomial taken in product form.
pub fn odd_bernoulli_identity_polynomial(k: usize) -> Result<Polynomial> {
    require_k(k)?;
    let sum = (1..=k).fold(Polynomial::zero(), |acc, m| {
        let top = Polynomial::from_integers([m as i64 - 1, 2]);
        &acc + &Polynomial::binomial_of(&top, 2 * m + 1).scale(&rat(r_entry(k, m)))
    });
    Ok(sum.scale(&Rational::new((2 * k + 1).into(), pow2(2 * k as u64))))
}

/// Right-hand side of `B_{2k+1}(n) = (2k+1)/2^(2k) sum_m R(k, m) C(2n+m-1, 2m+1)`
/// at a rational point.
pub fn odd_bernoulli_identity_rhs(k: usize, n: &Rational) -> Result<Rational> {
    Ok(odd_bernoulli_identity_polynomial(k)?.eval(n))
}

/// `2^(2k)/(2k+1) B_{2k+1}(n + 1/2)`, which equals `T_{2k}(n)`.
pub fn merca_t_even(k: usize, n: u64) -> Result<Rational> {
    require_k(k)?;
    let point = rat(n) + frac(1, 2);
    Ok(bernoulli_polynomial(2 * k + 1).eval(&point)
        * Rational::new(pow2(2 * k as u64), (2 * k + 1).into()))
}

/// `m! (m-1)! / (2m+1)!`, the weight shared by the Bernoulli formulas.
fn bernoulli_weight(m: usize) -> Rational {
    let m = m as u64;
    Rational::new(factorial(m) * factorial(m - 1), factorial(2 * m + 1))
}

/// Bernoulli's formula for `S_k(n)` with each `B_{2j}` expanded through
/// `R(j, m)`.
pub fn s_via_bernoulli(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    let nq = rat(n);
    let k1 = rat(k as u64 + 1);
    let mut total =
        num_traits::pow(nq.clone(), k + 1) / &k1 + num_traits::pow(nq.clone(), k) / rat(2);
    let mut inner = Rational::zero();
    for j in 1..=k / 2 {
        let power = num_traits::pow(nq.clone(), k + 1 - 2 * j);
        let c = rat(binomial(k as u64 + 1, 2 * j as i64));
        for m in 1..=j {
            let term = bernoulli_weight(m) * rat(sign_pow(m as u64) * r_entry(j, m));
            inner += term * &c * &power;
        }
    }
    total -= inner / k1;
    expect_integral(total, "S_k via Bernoulli's formula")
}

/// `sum_{j=1}^{r} sum_{m=1}^{j} (-1)^(m-1) m!(m-1)!/(2m+1)! C(2r+2, 2j) R(j, m)`,
/// which equals `r`.
pub fn bernoulli_unit_identity(r: usize) -> Rational {
    let mut total = Rational::zero();
    for j in 1..=r {
        let c = rat(binomial(2 * r as u64 + 2, 2 * j as i64));
        for m in 1..=j {
            total += bernoulli_weight(m) * rat(sign_pow(m as u64 - 1) * r_entry(j, m)) * &c;
        }
    }
    total
}

/// `S_k(n) = (n+1) S_{k-1}(n) - sum_{i=1}^{n} S_{k-1}(i)`, from `S_0(n) = n`.
pub fn s_recursive(k: usize, n: u64) -> Result<Integer> {
    require_k(k)?;
    // level[i] holds S_j(i) for the current j
    let mut level: Vec<Integer> = (0..=n).map(Integer::from).collect();
    for _ in 1..=k {
        let mut prefix = Integer::zero();
        let mut next = Vec::with_capacity(level.len());
        for (i, s) in level.iter().enumerate() {
            prefix += s;
            next.push(s * Integer::from(i as u64 + 1) - &prefix);
        }
        level = next;
    }
    Ok(level.pop().unwrap_or_default())
}

/// How a power sum is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvalMethod {
    Brute,
    /// `2^(2k) S_{2k}` from `R(k, m)` and `C(2n+m+1, 2m+1)`.
    Theorem1,
    KnuthEven,
    KnuthOdd,
    /// The `R(k, m)` closed forms for `T_{2k}` and `Omega_{2k}`.
    Closed,
    QForm,
    FForm,
    BernoulliFormula,
    Recursive,
}

impl EvalMethod {
    pub const ALL: [EvalMethod; 9] = [
        EvalMethod::Brute,
        EvalMethod::Theorem1,
        EvalMethod::KnuthEven,
        EvalMethod::KnuthOdd,
        EvalMethod::Closed,
        EvalMethod::QForm,
        EvalMethod::FForm,
        EvalMethod::BernoulliFormula,
        EvalMethod::Recursive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalMethod::Brute => "brute",
            EvalMethod::Theorem1 => "theorem1",
            EvalMethod::KnuthEven => "knuth-even",
            EvalMethod::KnuthOdd => "knuth-odd",
            EvalMethod::Closed => "closed",
            EvalMethod::QForm => "qform",
            EvalMethod::FForm => "fform",
            EvalMethod::BernoulliFormula => "bernoulli",
            EvalMethod::Recursive => "recursive",
        }
    }

    /// Whether the method covers `kind` at this exponent.
    pub fn applies_to(self, kind: PowerSumKind, exponent: usize) -> bool {
        let even = exponent.is_multiple_of(2);
        match (self, kind) {
            (EvalMethod::Brute, _) => true,
            (EvalMethod::Closed, PowerSumKind::T | PowerSumKind::Omega) => even,
            (_, PowerSumKind::T | PowerSumKind::Omega) => false,
            (EvalMethod::Theorem1 | EvalMethod::KnuthEven, _) => even,
            (EvalMethod::KnuthOdd | EvalMethod::QForm | EvalMethod::FForm, _) => !even,
            (EvalMethod::Closed, _) => false,
            (EvalMethod::BernoulliFormula | EvalMethod::Recursive, _) => true,
        }
    }
}

impl FromStr for EvalMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let squash = |t: &str| t.to_ascii_lowercase().replace(['_', '-'], "");
        let wanted = match squash(s).as_str() {
            "bernoulliformula" => "bernoulli".to_string(),
            other => other.to_string(),
        };
        EvalMethod::ALL
            .into_iter()
            .find(|m| squash(m.name()) == wanted)
            .ok_or_else(|| Error::Usage(format!("unknown evaluation method {s:?}")))
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power-sum value, with the scaled intermediate for methods that compute
/// `2^e` times the sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub scaled: Option<Integer>,
    pub value: Integer,
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.scaled {
            Some(s) => write!(f, "scaled={s} value={}", self.value),
            None => write!(f, "{}", self.value),
        }
    }
}

/// Evaluates `kind_exponent(n)` by `method`. `exponent` is the literal power,
/// so `(S, 9, ..)` means `S_9`.
pub fn evaluate(
    kind: PowerSumKind,
    exponent: usize,
    n: u64,
    method: EvalMethod,
) -> Result<Evaluation> {
    require_k(exponent)?;
    if !method.applies_to(kind, exponent) {
        let parity = if exponent.is_multiple_of(2) {
            "even"
        } else {
            "odd"
        };
        return Err(Error::Usage(format!(
            "method {method} does not apply to {kind} with {parity} exponent {exponent}"
        )));
    }
    let half = exponent.div_ceil(2);
    let plain = |value| {
        Ok(Evaluation {
            scaled: None,
            value,
        })
    };
    let descale = |scaled: Integer, e: usize| -> Result<Evaluation> {
        let value = crate::numeric::exact_div(&scaled, &pow2(e as u64), "descaling")?;
        Ok(Evaluation {
            scaled: Some(scaled),
            value,
        })
    };
    match (method, kind) {
        (EvalMethod::Brute, _) => plain(brute(kind, exponent, n)?),
        (EvalMethod::Closed, PowerSumKind::T) => plain(t_even(half, n)?),
        (EvalMethod::Closed, _) => plain(omega_even(half, n)?),
        (EvalMethod::Theorem1, _) => descale(s_even_scaled(half, n)?, exponent),
        (EvalMethod::KnuthEven, _) => plain(s_even_knuth(half, n)?),
        (EvalMethod::KnuthOdd, _) => plain(s_odd_knuth(half, n)?),
        (EvalMethod::QForm, _) => descale(s_odd_scaled_q(half, n)?, exponent),
        (EvalMethod::FForm, _) => descale(s_odd_scaled_f(half, n)?, exponent),
        (EvalMethod::BernoulliFormula, _) => plain(s_via_bernoulli(exponent, n)?),
        (EvalMethod::Recursive, _) => plain(s_recursive(exponent, n)?),
    }
}

/// `S_1(n) = n(n+1)/2`
pub fn s1(n: u64) -> Integer {
    Integer::from(n) * (n + 1) / 2u32
}

/// `S_2(n) = n(n+1)(2n+1)/6`
pub fn s2(n: u64) -> Integer {
    Integer::from(n) * (n + 1) * (2 * n + 1) / 6u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use PowerSumKind::*;

    fn i(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn method_tag_spellings() {
        for (text, m) in [
            ("knuth_even", EvalMethod::KnuthEven),
            ("knuth-odd", EvalMethod::KnuthOdd),
            ("q_form", EvalMethod::QForm),
            ("qform", EvalMethod::QForm),
            ("f_form", EvalMethod::FForm),
            ("bernoulli_formula", EvalMethod::BernoulliFormula),
            ("bernoulli", EvalMethod::BernoulliFormula),
            ("Theorem1", EvalMethod::Theorem1),
        ] {
            assert_eq!(text.parse::<EvalMethod>().unwrap(), m, "{text}");
        }
        assert!("qforms".parse::<EvalMethod>().is_err());
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute(S, 9, 2).unwrap(), i(513));
        assert_eq!(brute(T, 2, 2).unwrap(), i(10));
        assert_eq!(brute(Omega, 4, 3).unwrap(), i(66));
        assert_eq!(brute(S, 3, 0).unwrap(), i(0));
        assert!(matches!(brute(S, 0, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(s_even_scaled(3, 1).unwrap(), i(64));
        assert_eq!(s_even_scaled(1, 3).unwrap(), i(56));
        assert_eq!(s_even_scaled(4, 0).unwrap(), i(0));
    }

    #[test]
    fn knuth_examples() {
        assert_eq!(s_even_knuth(1, 3).unwrap(), i(14));
        assert_eq!(s_even_knuth(2, 2).unwrap(), i(17));
        assert_eq!(s_even_knuth(5, 0).unwrap(), i(0));
        assert_eq!(s_odd_knuth(2, 2).unwrap(), i(9));
        assert_eq!(s_odd_knuth(1, 5).unwrap(), i(15));
        assert_eq!(s_odd_knuth(3, 1).unwrap(), i(1));
    }

    #[test]
    fn odd_base_and_alternating_examples() {
        assert_eq!(t_even(1, 2).unwrap(), i(10));
        assert_eq!(t_even(2, 2).unwrap(), i(82));
        assert_eq!(t_even(3, 1).unwrap(), i(1));
        assert_eq!(omega_even(1, 4).unwrap(), i(10));
        assert_eq!(omega_even(2, 2).unwrap(), i(15));
        assert_eq!(omega_even(2, 3).unwrap(), i(66));
        for n in 0..20u64 {
            assert_eq!(omega_even(1, n).unwrap(), binomial(n + 1, 2));
        }
    }

    #[test]
    fn q_polynomials_for_k5() {
        let expected: [&[i64]; 5] = [
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 18, 0, 168, 0, 252, 0, 72],
            &[0, 4536, 0, 10080, 0, 3024],
            &[0, 90720, 0, 60480],
            &[0, 362880],
        ];
        for (m, coeffs) in expected.iter().enumerate() {
            let q = q_polynomial(5, m + 1).unwrap();
            assert_eq!(
                q,
                Polynomial::from_integers(coeffs.iter().copied()),
                "Q_5,{}",
                m + 1
            );
        }
        assert!(q_polynomial(3, 4).is_err());
    }

    #[test]
    fn scaled_odd_examples() {
        assert_eq!(s_odd_scaled_q(5, 1).unwrap(), i(512));
        assert_eq!(s_odd_scaled_q(1, 4).unwrap(), i(20));
        assert_eq!(s_odd_scaled_q(2, 2).unwrap(), i(72));
        assert_eq!(s_odd_scaled_f(1, 3).unwrap(), i(12));
        assert_eq!(s_odd_scaled_f(5, 2).unwrap(), i(262656));
        assert_eq!(s_odd_scaled_f(2, 1).unwrap(), i(8));
    }

    #[test]
    fn f_and_g_polynomials() {
        assert_eq!(
            f_polynomial(1).unwrap(),
            Polynomial::from_integers([0, 1, 1])
        );
        // C(4,5) + C(6,5); the factored form gives (2/15) * 45 * C(4,4)
        assert_eq!(f_sum(3, 2), i(6));
        assert_eq!(f_polynomial(3).unwrap().eval_int(2u32), rat(6));
        assert_eq!(
            g_polynomial(2).unwrap(),
            Polynomial::from_integers([-1, 2, 2]).scale(&frac(1, 3))
        );
        assert_eq!(
            g_polynomial(5).unwrap(),
            Polynomial::from_integers([15, -62, -46, 32, 16]).scale(&frac(2, 315))
        );
        assert_eq!(g_polynomial(1).unwrap(), Polynomial::constant(rat(2)));
        assert!(f_polynomial(0).is_err());
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(6).unwrap();
        assert_eq!(b[1], frac(-1, 2));
        assert_eq!(b[2], frac(1, 6));
        assert_eq!(b[4], frac(-1, 30));
        assert_eq!(b[6], frac(1, 42));
        assert_eq!(bernoulli_even_from_r(1).unwrap(), frac(1, 6));
        assert_eq!(bernoulli_even_from_r(2).unwrap(), frac(-1, 30));
        let rec = bernoulli_recurrence(21);
        for k in 1..=10 {
            assert_eq!(rec[2 * k + 1], rat(0));
        }
    }

    #[test]
    fn bernoulli_polynomial_examples() {
        assert_eq!(bernoulli_polynomial(0), Polynomial::one());
        assert_eq!(
            bernoulli_polynomial(3),
            Polynomial::from_coeffs(vec![rat(0), frac(1, 2), frac(-3, 2), rat(1)])
        );
        assert_eq!(merca_t_even(1, 2).unwrap(), rat(10));
        assert_eq!(odd_bernoulli_identity_rhs(1, &rat(0)).unwrap(), rat(0));
        assert_eq!(odd_bernoulli_identity_rhs(1, &rat(1)).unwrap(), rat(0));
        assert_eq!(
            odd_bernoulli_identity_rhs(2, &rat(2)).unwrap(),
            bernoulli_polynomial(5).eval_int(2)
        );
    }

    #[test]
    fn bernoulli_formula_and_recursion() {
        assert_eq!(s_via_bernoulli(3, 1).unwrap(), i(1));
        assert_eq!(s_via_bernoulli(2, 3).unwrap(), i(14));
        assert_eq!(s_via_bernoulli(5, 2).unwrap(), i(33));
        assert_eq!(s_recursive(1, 4).unwrap(), i(10));
        assert_eq!(s_recursive(2, 3).unwrap(), i(14));
        assert_eq!(s_recursive(4, 2).unwrap(), i(17));
        assert_eq!(s_recursive(4, 0).unwrap(), i(0));
    }

    #[test]
    fn unit_identity() {
        for r in 1..=6 {
            assert_eq!(bernoulli_unit_identity(r), rat(r as u64));
        }
    }

    #[test]
    fn dispatch_and_applicability() {
        let e = evaluate(S, 9, 2, EvalMethod::QForm).unwrap();
        assert_eq!(e.to_string(), "scaled=262656 value=513");
        assert_eq!(
            evaluate(T, 2, 2, EvalMethod::Closed).unwrap().to_string(),
            "10"
        );
        assert_eq!(
            evaluate(Omega, 4, 3, EvalMethod::Closed)
                .unwrap()
                .to_string(),
            "66"
        );
        assert!(matches!(
            evaluate(S, 3, 2, EvalMethod::Theorem1),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            evaluate(T, 3, 2, EvalMethod::Closed),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            evaluate(S, 4, 2, EvalMethod::Closed),
            Err(Error::Usage(_))
        ));
        assert_eq!(
            "knuth_even".parse::<EvalMethod>().unwrap(),
            EvalMethod::KnuthEven
        );
    }

    #[test]
    fn every_applicable_method_agrees() {
        for kind in [S, T, Omega] {
            for e in 1..=8 {
                for n in 0..=12u64 {
                    let expected = brute(kind, e, n).unwrap();
                    for method in EvalMethod::ALL {
                        if method.applies_to(kind, e) {
                            let got = evaluate(kind, e, n, method).unwrap();
                            assert_eq!(got.value, expected, "{kind}_{e}({n}) by {method}");
                        }
                    }
                }
            }
        }
    }
}
