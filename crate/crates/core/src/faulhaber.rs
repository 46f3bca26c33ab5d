//! Faulhaber-form coefficients.
//!
//! ```text
//! S_{2k}(n)     = S_2(n)   * sum_r b_{k,r} S_1(n)^(r-1)
//! S_{2k+1}(n)   = S_1(n)^2 * sum_r c_{k,r} S_1(n)^(r-1)
//! Omega_{2k}(n) =            sum_r d_{k,r} S_1(n)^r
//! ```
//!
//! All three come from `R(k, m)` and the Legendre-Stirling numbers of the
//! first kind; `c` additionally has a route through `b` and one through the
//! Bernoulli numbers.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::numeric::{
    binomial, expect_integral, factorial, pow2, rat, sign_pow, Integer, Rational,
};
use crate::power_sums::{bernoulli_recurrence, s1, s2};
use crate::triangles::{legendre_stirling_first, r_entry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    B,
    C,
    D,
}

impl FromStr for CoeffKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            "d" => Ok(Self::D),
            _ => Err(Error::Usage(format!("unknown coefficient kind {s:?}"))),
        }
    }
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::B => "b",
            Self::C => "c",
            Self::D => "d",
        })
    }
}

/// Ways of computing `c_{k,r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CRoute {
    /// Directly from `R(k+1, m+1)` and `Ps_{m+1}^(r+1)`.
    LegendreStirling,
    /// From the `b` sums, `c = (2k+1)/(r+1) * ...`.
    Relation,
    /// Through even-index Bernoulli numbers.
    GesselViennot,
}

impl CRoute {
    pub const ALL: [CRoute; 3] = [
        CRoute::LegendreStirling,
        CRoute::Relation,
        CRoute::GesselViennot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CRoute::LegendreStirling => "legendre-stirling",
            CRoute::Relation => "relation",
            CRoute::GesselViennot => "gessel-viennot",
        }
    }
}

impl FromStr for CRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('_', "-");
        CRoute::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown route {s:?}")))
    }
}

/// Coefficients `x_{k,1}, ..., x_{k,k}` of one Faulhaber form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaulhaberCoeffs {
    pub k: usize,
    pub kind: CoeffKind,
    /// Index `r - 1` holds the coefficient for `r`.
    pub values: Vec<Rational>,
}

impl FaulhaberCoeffs {
    pub fn get(&self, r: usize) -> Option<&Rational> {
        self.values.get(r.checked_sub(1)?)
    }
}

impl fmt::Display for FaulhaberCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(domain!("Faulhaber coefficients need k >= 1"))
    } else {
        Ok(())
    }
}

/// `sum_{m=r}^{k} R(k, m) Ps_m^(r) / (2m+1)!`, shared by `b` and the
/// relation route for `c`.
fn odd_factorial_sum(k: usize, r: usize) -> Rational {
    (r..=k)
        .map(|m| {
            Rational::new(
                r_entry(k, m) * legendre_stirling_first(m, r),
                factorial(2 * m as u64 + 1),
            )
        })
        .sum()
}

fn build(k: usize, kind: CoeffKind, f: impl Fn(usize) -> Rational) -> FaulhaberCoeffs {
    FaulhaberCoeffs {
        k,
        kind,
        values: (1..=k).map(f).collect(),
    }
}

/// `b_{k,r} = sum_{m=r}^{k} 3 * 2^r / (2m+1)! * R(k, m) Ps_m^(r)`.
pub fn faulhaber_b(k: usize) -> Result<FaulhaberCoeffs> {
    require_k(k)?;
    Ok(build(k, CoeffKind::B, |r| {
        odd_factorial_sum(k, r) * rat(pow2(r as u64) * 3u32)
    }))
}

pub fn faulhaber_c(k: usize, route: CRoute) -> Result<FaulhaberCoeffs> {
    require_k(k)?;
    let coeffs = match route {
        CRoute::LegendreStirling => build(k, CoeffKind::C, |r| {
            let sum: Rational = (r..=k)
                .map(|m| {
                    Rational::new(
                        r_entry(k + 1, m + 1) * legendre_stirling_first(m + 1, r + 1),
                        factorial(2 * m as u64 + 2) * (m + 1),
                    )
                })
                .sum();
            sum * rat(pow2(r as u64 + 1))
        }),
        CRoute::Relation => build(k, CoeffKind::C, |r| {
            odd_factorial_sum(k, r)
                * Rational::new(pow2(r as u64 + 1) * (2 * k + 1), (r + 1).into())
        }),
        CRoute::GesselViennot => {
            let bern = bernoulli_recurrence(2 * k);
            build(k, CoeffKind::C, |r| {
                let sum: Rational = (0..=(r - 1) / 2)
                    .map(|m| {
                        let c = binomial(2 * (r - m) as u64 - 1, r as i64)
                            * binomial(2 * k as u64 + 1, 2 * m as i64 + 1);
                        &bern[2 * k - 2 * m] * rat(c)
                    })
                    .sum();
                sum * Rational::new(sign_pow(r as u64 - 1) * pow2(r as u64 + 1), (r + 1).into())
            })
        }
    };
    Ok(coeffs)
}

/// `d_{k,r} = sum_{m=r}^{k} 2^r / (2m)! * R(k, m) Ps_m^(r)`.
pub fn faulhaber_d(k: usize) -> Result<FaulhaberCoeffs> {
    require_k(k)?;
    Ok(build(k, CoeffKind::D, |r| {
        let sum: Rational = (r..=k)
            .map(|m| {
                Rational::new(
                    r_entry(k, m) * legendre_stirling_first(m, r),
                    factorial(2 * m as u64),
                )
            })
            .sum();
        sum * rat(pow2(r as u64))
    }))
}

/// Coefficients of the requested kind; `route` only matters for `c`.
pub fn faulhaber(k: usize, kind: CoeffKind, route: CRoute) -> Result<FaulhaberCoeffs> {
    match kind {
        CoeffKind::B => faulhaber_b(k),
        CoeffKind::C => faulhaber_c(k, route),
        CoeffKind::D => faulhaber_d(k),
    }
}

/// `sum_{m=1}^{k} (-1)^m ((m-1)!)^2 / (2m)! * R(k, m)`; zero for `k >= 2`.
pub fn horizontal_recurrence_check(k: usize) -> Result<Rational> {
    if k < 2 {
        return Err(domain!("horizontal recurrence needs k >= 2"));
    }
    Ok((1..=k)
        .map(|m| {
            let f = factorial(m as u64 - 1);
            Rational::new(
                sign_pow(m as u64) * &f * &f * r_entry(k, m),
                factorial(2 * m as u64),
            )
        })
        .sum())
}

/// `sum_{m=1}^{k+1} R(k+1, m) Ps_m^(1) / ((2m)! m)`; zero for `k >= 1`.
pub fn fau5_check(k: usize) -> Result<Rational> {
    require_k(k)?;
    Ok((1..=k + 1)
        .map(|m| {
            Rational::new(
                r_entry(k + 1, m) * legendre_stirling_first(m, 1),
                factorial(2 * m as u64) * m,
            )
        })
        .sum())
}

/// Evaluates a Faulhaber form at `n`.
pub fn reconstruct_power_sum(coeffs: &FaulhaberCoeffs, n: u64) -> Result<Integer> {
    let t = rat(s1(n));
    // sum_r x_r t^(r-1) by Horner
    let poly = coeffs
        .values
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * &t + c);
    let value = match coeffs.kind {
        CoeffKind::B => poly * rat(s2(n)),
        CoeffKind::C => poly * &t * &t,
        CoeffKind::D => poly * &t,
    };
    expect_integral(value, "Faulhaber reconstruction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;
    use crate::power_sums::{brute, PowerSumKind};

    #[test]
    fn b_coefficients() {
        assert_eq!(faulhaber_b(1).unwrap().values, vec![rat(1)]);
        assert_eq!(
            faulhaber_b(2).unwrap().values,
            vec![frac(-1, 5), frac(6, 5)]
        );
        assert!(faulhaber_b(0).is_err());
    }

    #[test]
    fn c_coefficients_all_routes() {
        for route in CRoute::ALL {
            assert_eq!(
                faulhaber_c(1, route).unwrap().values,
                vec![rat(1)],
                "{route:?}"
            );
            assert_eq!(
                faulhaber_c(2, route).unwrap().values,
                vec![frac(-1, 3), frac(4, 3)],
                "{route:?}"
            );
            assert_eq!(
                faulhaber_c(3, route).unwrap().get(3),
                Some(&rat(2)),
                "{route:?}"
            );
        }
    }

    #[test]
    fn d_coefficients() {
        assert_eq!(faulhaber_d(1).unwrap().values, vec![rat(1)]);
        assert_eq!(faulhaber_d(2).unwrap().values, vec![rat(-1), rat(2)]);
    }

    #[test]
    fn printing() {
        assert_eq!(faulhaber_b(2).unwrap().to_string(), "-1/5, 6/5");
    }

    #[test]
    fn recurrence_checks_vanish() {
        for k in 2..=8 {
            assert_eq!(horizontal_recurrence_check(k).unwrap(), rat(0), "k={k}");
        }
        for k in 1..=8 {
            assert_eq!(fau5_check(k).unwrap(), rat(0), "k={k}");
        }
        assert!(horizontal_recurrence_check(1).is_err());
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(
            reconstruct_power_sum(&faulhaber_b(2).unwrap(), 2).unwrap(),
            Integer::from(17)
        );
        let c = faulhaber_c(2, CRoute::LegendreStirling).unwrap();
        assert_eq!(reconstruct_power_sum(&c, 3).unwrap(), Integer::from(276));
        assert_eq!(
            reconstruct_power_sum(&faulhaber_d(1).unwrap(), 4).unwrap(),
            Integer::from(10)
        );
        for k in 1..=5 {
            for n in 0..=10 {
                let d = faulhaber_d(k).unwrap();
                assert_eq!(
                    reconstruct_power_sum(&d, n).unwrap(),
                    brute(PowerSumKind::Omega, 2 * k, n).unwrap()
                );
            }
        }
    }
}
