use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{factorial, rat, Integer, Rational};

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree. Trailing zeros are never stored; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn x() -> Self {
        Self::monomial(rat(1), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![rat(0); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `b + a*x`
    pub fn linear(b: Rational, a: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(rat).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: impl Into<Integer>) -> Rational {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let d_deg = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let Some(s_deg) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if s_deg < d_deg {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); s_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d_deg] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `C(p(x), j) = p (p - 1) ... (p - j + 1) / j!` as a polynomial in `x`.
    /// Lets binomials with a polynomial upper argument be evaluated at
    /// arbitrary rational points.
    pub fn binomial_of(p: &Polynomial, j: usize) -> Self {
        let prod = (0..j as i64).fold(Self::one(), |acc, i| &acc * &(p - &Self::constant(rat(i))));
        prod.scale(&Rational::new(Integer::one(), factorial(j as u64)))
    }

    /// Unique polynomial of degree < `points.len()` through the given points
    /// (Newton divided differences). Abscissae must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        let mut result = Self::zero();
        for i in (0..n).rev() {
            let factor = Self::linear(-points[i].0.clone(), rat(1));
            result = &(&result * &factor) + &Self::constant(table[i].clone());
        }
        result
    }

    /// True when every even-degree coefficient is zero.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

/// Ascending-degree rendering such as `18*n + 168*n^3 - n^5`.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            let body = match (i, magnitude.is_one()) {
                (0, _) => magnitude.to_string(),
                (1, true) => self.var.to_string(),
                (1, false) => format!("{magnitude}*{}", self.var),
                (_, true) => format!("{}^{i}", self.var),
                (_, false) => format!("{magnitude}*{}^{i}", self.var),
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;
    use proptest::prelude::*;

    fn x_minus(c: i64) -> Polynomial {
        Polynomial::from_integers([-c, 1])
    }

    #[test]
    fn eval_and_mul_basics() {
        let p = Polynomial::from_integers([0, -2, 1]);
        assert_eq!(p.eval_int(3), rat(3));
        assert_eq!(&Polynomial::x() * &x_minus(2), p);
        assert_eq!(Polynomial::zero().eval(&frac(7, 3)), rat(0));
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn canonical_form_strips_zeros() {
        let p = Polynomial::from_integers([1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        let z = &p - &p;
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
    }

    #[test]
    fn division_recovers_factor() {
        let a = Polynomial::from_integers([3, 0, 1]);
        let b = x_minus(5);
        let (q, r) = (&a * &b).div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        let (_, r) = Polynomial::from_integers([1, 0, 1])
            .div_rem(&x_minus(1))
            .unwrap();
        assert_eq!(r, Polynomial::constant(rat(2)));
        assert!(a.div_rem(&Polynomial::zero()).is_none());
    }

    #[test]
    fn binomial_polynomial_matches_integers() {
        // C(2x + 1, 3) at integer points
        let p = Polynomial::binomial_of(&Polynomial::from_integers([1, 2]), 3);
        for n in 0..10u64 {
            assert_eq!(p.eval_int(n), rat(crate::numeric::binomial(2 * n + 1, 3)));
        }
    }

    #[test]
    fn interpolation_reproduces_cubic() {
        let p = Polynomial::from_coeffs(vec![frac(1, 2), rat(-3), rat(0), frac(2, 7)]);
        let pts: Vec<_> = (0..4).map(|i| (rat(i), p.eval_int(i))).collect();
        assert_eq!(Polynomial::interpolate(&pts), p);
    }

    #[test]
    fn display_forms() {
        let q = Polynomial::from_integers([0, 18, 0, 168, 0, 252, 0, 72]);
        assert_eq!(
            q.display_in("n").to_string(),
            "18*n + 168*n^3 + 252*n^5 + 72*n^7"
        );
        let b3 = Polynomial::from_coeffs(vec![rat(0), frac(1, 2), frac(-3, 2), rat(1)]);
        assert_eq!(b3.to_string(), "1/2*x - 3/2*x^2 + x^3");
        assert_eq!(Polynomial::from_integers([-1, -1]).to_string(), "-1 - x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(p, q)| frac(p, q))
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(small_rational(), 0..=9).prop_map(Polynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(p in poly_strategy(), q in poly_strategy(), r in poly_strategy(), x in small_rational()) {
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!(p.compose(&q).eval(&x), p.eval(&q.eval(&x)));
        }

        #[test]
        fn division_identity(p in poly_strategy(), d in poly_strategy()) {
            prop_assume!(!d.is_zero());
            let (q, r) = p.div_rem(&d).unwrap();
            prop_assert_eq!(&(&q * &d) + &r, p);
            if let Some(rd) = r.degree() {
                prop_assert!(rd < d.degree().unwrap());
            }
        }
    }
}
