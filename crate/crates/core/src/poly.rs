//! Dense univariate polynomials over [`Rational`], truncated power series,
//! figurate numbers, and closed forms for series whose coefficients obey a
//! constant-coefficient linear recurrence.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, binomial_q, int, natural_to_rational, pochhammer, factorial, Natural, Rational};

/// Coefficient `i` multiplies `x^i`. Trailing zeros are never stored, so the
/// zero polynomial has no coefficients and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// The polynomial `1 - x`.
    pub fn one_minus_x() -> Self {
        Self::from_ints(&[1, -1])
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

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Terms of degree `< k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().take(k).cloned().collect())
    }

    /// `self(inner(x))`, by Horner's rule on polynomials.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Re-expands in powers of `1 - x`: returns `r` with `self(x) = r(1 - x)`.
    /// Applying it twice gives back the original polynomial.
    pub fn rebase(&self) -> Self {
        self.compose(&Self::one_minus_x())
    }

    /// Euclidean division; fails when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lead_deg = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lead = &divisor.coeffs[lead_deg];
        let mut rem = self.coeffs.clone();
        let Some(deg) = self.degree().filter(|&d| d >= lead_deg) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); deg - lead_deg + 1];
        for shift in (0..=deg - lead_deg).rev() {
            let factor = &rem[shift + lead_deg] / lead;
            if factor.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * d;
            }
            quot[shift] = factor;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::property(format!(
                "({self}) is not divisible by ({divisor}); remainder {r}"
            )))
        }
    }

    /// Multiplicity of `root` as a zero; `None` for the zero polynomial.
    pub fn root_multiplicity(&self, root: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let factor = Self::new(vec![-root.clone(), Rational::one()]);
        let mut current = self.clone();
        let mut order = 0;
        loop {
            match current.div_rem(&factor) {
                Ok((q, r)) if r.is_zero() => {
                    current = q;
                    order += 1;
                }
                _ => return Some(order),
            }
        }
    }

    /// Text rendering `c0 + c1*var + c2*var^2 ...` with exact coefficients.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match i {
                0 => out.push_str(&magnitude.to_string()),
                _ => {
                    let power = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if magnitude.is_one() {
                        out.push_str(&power);
                    } else {
                        out.push_str(&format!("{magnitude}*{power}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
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
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Hering's `(1-x)_n^{-m}`: the power series of `(1-x)^{-m}` cut after its
/// first `n` terms, `sum_{k<n} C(m+k-1, k) x^k`.
pub fn truncated_geometric_power(m: u64, n: u64) -> Polynomial {
    let m_q = int(m as i64);
    Polynomial::new(
        (0..n)
            .map(|k| pochhammer(&m_q, k) / natural_to_rational(&factorial(k)))
            .collect(),
    )
}

/// Which order-counting convention a figurate number uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FigurateConvention {
    /// Orders start at 1; order-p numbers are the coefficients of `(1-x)^{-p}`,
    /// `C(p+k-1, k)`. Triangular numbers have order 3.
    #[default]
    DeMoivre,
    /// Orders start at 0; the k-th number of order p is `C(p+k-1, p)`.
    /// Triangular numbers have order 2.
    Dickson,
}

pub fn figurate(p: u64, k: u64, convention: FigurateConvention) -> Result<Natural> {
    match convention {
        FigurateConvention::DeMoivre if p == 0 => {
            Err(Error::domain("figurate order must be at least 1"))
        }
        FigurateConvention::DeMoivre => Ok(binomial(p + k - 1, k)),
        FigurateConvention::Dickson if p + k == 0 => {
            Err(Error::domain("figurate index undefined for p = k = 0"))
        }
        FigurateConvention::Dickson => Ok(binomial(p + k - 1, p)),
    }
}

/// Checks that the p-th backward difference kills the order-p figurate
/// numbers (extended by zero to negative indices) for `k = 1..=k_max`.
pub fn finite_difference_annihilates(p: u64, k_max: u64) -> Result<bool> {
    if p == 0 {
        return Err(Error::domain("figurate order must be at least 1"));
    }
    let c = |j: i64| -> Rational {
        if j < 0 {
            Rational::zero()
        } else {
            binomial_q(p + j as u64 - 1, j as u64)
        }
    };
    Ok((1..=k_max as i64).all(|k| {
        let diff: Rational = (0..=p)
            .map(|l| {
                let term = binomial_q(p, l) * c(k - l as i64);
                if l % 2 == 0 { term } else { -term }
            })
            .sum();
        diff.is_zero()
    }))
}

/// `c_k = a_1 c_{k-1} + ... + a_p c_{k-p}`, seeded with `c_0 .. c_{p-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    weights: Vec<Rational>,
    seeds: Vec<Rational>,
}

impl RecurrenceSpec {
    pub fn new(weights: Vec<Rational>, seeds: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() || weights.len() != seeds.len() {
            return Err(Error::domain(format!(
                "recurrence needs p >= 1 weights and p seeds, got {} and {}",
                weights.len(),
                seeds.len()
            )));
        }
        Ok(RecurrenceSpec { weights, seeds })
    }

    /// Order-p figurate numbers with the recurrence read off the p-th
    /// difference: `a_l = (-1)^{l+1} C(p, l)`.
    pub fn figurate(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::domain("figurate order must be at least 1"));
        }
        let weights = (1..=p)
            .map(|l| {
                let c = binomial_q(p, l);
                if l % 2 == 1 { c } else { -c }
            })
            .collect();
        let seeds = (0..p).map(|k| binomial_q(p + k - 1, k)).collect();
        Self::new(weights, seeds)
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn seeds(&self) -> &[Rational] {
        &self.seeds
    }

    /// The first `count` terms of the sequence.
    pub fn terms(&self, count: usize) -> Vec<Rational> {
        let p = self.order();
        let mut c: Vec<Rational> = self.seeds.iter().take(count).cloned().collect();
        while c.len() < count {
            let k = c.len();
            let next = (1..=p).map(|l| &self.weights[l - 1] * &c[k - l]).sum();
            c.push(next);
        }
        c
    }

    /// `1 - a_1 x - ... - a_p x^p`.
    pub fn denominator(&self) -> Polynomial {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(self.weights.iter().map(|a| -a));
        Polynomial::new(coeffs)
    }
}

/// The full series `sum c_k x^k` equals `numerator / denominator`, with
/// `deg numerator < p`.
pub fn recurring_series_closed_form(spec: &RecurrenceSpec) -> (Polynomial, Polynomial) {
    let p = spec.order();
    let denominator = spec.denominator();
    let head = Polynomial::new(spec.terms(p));
    let numerator = (&head * &denominator).truncate(p);
    (numerator, denominator)
}

/// Splits `S_n * denominator = q + x^n r` for the partial sum
/// `S_n = sum_{k<n} c_k x^k`, where `q` is the numerator of the closed form
/// and `deg r < p`. Because of the recurrence, `S_n * denominator - q` is
/// divisible by `x^n`; a nonzero low coefficient is reported as a property
/// failure.
pub fn finite_recurring_sum_split(spec: &RecurrenceSpec, n: usize) -> Result<(Polynomial, Polynomial)> {
    let (q, denominator) = recurring_series_closed_form(spec);
    let partial = Polynomial::new(spec.terms(n));
    let diff = &(&partial * &denominator) - &q;
    if let Some(j) = (0..n).find(|&j| !diff.coeff(j).is_zero()) {
        return Err(Error::property(format!(
            "coefficient of x^{j} in S_n * denominator - q is {}, expected 0",
            diff.coeff(j)
        )));
    }
    let r = Polynomial::new(diff.coeffs().iter().skip(n).cloned().collect());
    Ok((q, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[1, -1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &Polynomial::zero(), a);
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn rebase_example() {
        // 1 + 2x = 3 - 2(1 - x)
        let p = Polynomial::from_ints(&[1, 2]);
        assert_eq!(p.rebase(), Polynomial::from_ints(&[3, -2]));
    }

    #[test]
    fn division() {
        let p = Polynomial::from_ints(&[1, 0, -1]);
        let d = Polynomial::from_ints(&[1, -1]);
        assert_eq!(p.div_exact(&d).unwrap(), Polynomial::from_ints(&[1, 1]));
        let (q, r) = Polynomial::from_ints(&[2, 0, 1]).div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, Polynomial::from_ints(&[2, 0, 1]));
        assert_eq!(r, Polynomial::from_ints(&[3]));
        assert!(matches!(
            Polynomial::from_ints(&[2, 0, 1]).div_exact(&d),
            Err(Error::Property(_))
        ));
        assert!(p.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn root_multiplicity() {
        let p = &Polynomial::one_minus_x().pow(3) * &Polynomial::from_ints(&[2, 1]);
        assert_eq!(p.root_multiplicity(&int(1)), Some(3));
        assert_eq!(p.root_multiplicity(&int(-2)), Some(1));
        assert_eq!(p.root_multiplicity(&int(0)), Some(0));
    }

    #[test]
    fn rendering() {
        assert_eq!(Polynomial::from_ints(&[3, -2]).to_string(), "3 - 2*x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let p = Polynomial::new(vec![int(0), rat(1, 2), int(-1)]);
        assert_eq!(p.display_in("s"), "1/2*s - s^2");
    }

    #[test]
    fn truncated_geometric_examples() {
        assert_eq!(truncated_geometric_power(1, 2), Polynomial::from_ints(&[1, 1]));
        assert_eq!(truncated_geometric_power(2, 3), Polynomial::from_ints(&[1, 2, 3]));
        for m in 1..6 {
            assert_eq!(truncated_geometric_power(m, 1), Polynomial::one());
        }
    }

    #[test]
    fn truncated_geometric_inverts_modulo_xn() {
        for m in 1..=15u32 {
            for n in 1..=15usize {
                let prod = &truncated_geometric_power(m as u64, n as u64)
                    * &Polynomial::one_minus_x().pow(m);
                assert_eq!(prod.truncate(n), Polynomial::one(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn figurate_conventions() {
        let triangular: Vec<_> = (0..4)
            .map(|k| figurate(3, k, FigurateConvention::DeMoivre).unwrap())
            .collect();
        assert_eq!(triangular, [1u32, 3, 6, 10].map(Natural::from));
        for p in 1..8 {
            assert_eq!(figurate(p, 0, FigurateConvention::DeMoivre).unwrap(), Natural::one());
        }
        assert_eq!(figurate(2, 3, FigurateConvention::Dickson).unwrap(), Natural::from(6u32));
        // Dickson's order 2 is de Moivre's order 3, shifted by one index
        for k in 1..10 {
            assert_eq!(
                figurate(2, k, FigurateConvention::Dickson).unwrap(),
                figurate(3, k - 1, FigurateConvention::DeMoivre).unwrap()
            );
        }
        assert!(figurate(0, 2, FigurateConvention::DeMoivre).is_err());
    }

    #[test]
    fn finite_differences_vanish() {
        assert!(finite_difference_annihilates(1, 10).unwrap());
        assert!(finite_difference_annihilates(3, 20).unwrap());
        assert!(finite_difference_annihilates(5, 50).unwrap());
    }

    #[test]
    fn closed_form_examples() {
        let geometric = RecurrenceSpec::new(vec![int(1)], vec![int(1)]).unwrap();
        let (q, d) = recurring_series_closed_form(&geometric);
        assert_eq!(q, Polynomial::one());
        assert_eq!(d, Polynomial::one_minus_x());

        let order2 = RecurrenceSpec::new(vec![int(2), int(-1)], vec![int(1), int(2)]).unwrap();
        assert_eq!(order2.terms(5), [1, 2, 3, 4, 5].map(int));
        let (q, d) = recurring_series_closed_form(&order2);
        assert_eq!(q, Polynomial::one());
        assert_eq!(d, Polynomial::one_minus_x().pow(2));

        for p in 1..=8u32 {
            let spec = RecurrenceSpec::figurate(p as u64).unwrap();
            let (q, d) = recurring_series_closed_form(&spec);
            assert_eq!(q, Polynomial::one());
            assert_eq!(d, Polynomial::one_minus_x().pow(p));
            let terms = spec.terms(30);
            for (k, c) in terms.iter().enumerate() {
                assert_eq!(*c, binomial_q(p as u64 + k as u64 - 1, k as u64));
            }
        }
    }

    #[test]
    fn split_examples() {
        let geometric = RecurrenceSpec::new(vec![int(1)], vec![int(1)]).unwrap();
        let (q, r) = finite_recurring_sum_split(&geometric, 3).unwrap();
        assert_eq!((q, r), (Polynomial::one(), Polynomial::from_ints(&[-1])));

        let order2 = RecurrenceSpec::figurate(2).unwrap();
        let (q, r) = finite_recurring_sum_split(&order2, 2).unwrap();
        assert_eq!(q, Polynomial::one());
        assert_eq!(r, Polynomial::from_ints(&[-3, 2]));

        // shorter than the recurrence order
        let (q, r) = finite_recurring_sum_split(&order2, 1).unwrap();
        assert_eq!((q, r), (Polynomial::one(), Polynomial::from_ints(&[-2, 1])));
    }

    #[test]
    fn bad_recurrence_specs() {
        assert!(RecurrenceSpec::new(vec![], vec![]).is_err());
        assert!(RecurrenceSpec::new(vec![int(1)], vec![int(1), int(2)]).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..8).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(small_rational(), 0..=max_len).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn rebase_is_an_involution(p in small_poly(21)) {
            prop_assert_eq!(p.rebase().rebase(), p);
        }

        #[test]
        fn split_reconstructs_product(
            (weights, seeds) in (1usize..=5).prop_flat_map(|p| (
                proptest::collection::vec(small_rational(), p),
                proptest::collection::vec(small_rational(), p),
            )),
            n in 0usize..=20,
        ) {
            let spec = RecurrenceSpec::new(weights, seeds).unwrap();
            let p = spec.order();
            let (q, r) = finite_recurring_sum_split(&spec, n).unwrap();
            let partial = Polynomial::new(spec.terms(n));
            prop_assert_eq!(&q + &r.shift(n), &partial * &spec.denominator());
            prop_assert!(q.degree().is_none_or(|d| d < p));
            prop_assert!(r.degree().is_none_or(|d| d < p));
        }

        #[test]
        fn division_identity(a in small_poly(10), b in small_poly(5)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
