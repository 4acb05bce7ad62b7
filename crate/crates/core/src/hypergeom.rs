//! Terminating Gauss hypergeometric sums over exact rationals, the Pfaff
//! transformation, and checkers for Hering's derivation of the truncated
//! binomial identity.
//!
//! A ₂F₁ terminates when `a` or `b` is a non-positive integer `-K`; the sum
//! then stops at index `K`. A lower parameter `c = -J` is allowed as long as
//! `J >= K`, since the zero factor `(c)_{J+1}` is never reached.

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    as_nonpositive_integer, binomial_q, int, natural_to_rational, factorial, pochhammer,
    rational_pow, Rational,
};
use crate::poly::Polynomial;

/// Parameters of `₂F₁(a, b; c; z)`. `max_index` truncates a series that
/// does not terminate on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyp2F1Spec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub z: Rational,
    pub max_index: Option<u64>,
}

impl Hyp2F1Spec {
    pub fn new(a: Rational, b: Rational, c: Rational, z: Rational) -> Self {
        Hyp2F1Spec { a, b, c, z, max_index: None }
    }

    pub fn truncated(mut self, max_index: u64) -> Self {
        self.max_index = Some(max_index);
        self
    }

    /// Last index with a (possibly) nonzero term.
    pub fn termination_index(&self) -> Result<u64> {
        let natural = [&self.a, &self.b]
            .into_iter()
            .filter_map(as_nonpositive_integer)
            .min();
        match (natural, self.max_index) {
            (Some(k), Some(t)) => Ok(k.min(t)),
            (Some(k), None) => Ok(k),
            (None, Some(t)) => Ok(t),
            (None, None) => Err(Error::domain(format!(
                "2F1({}, {}; {}; z) does not terminate and no truncation was given",
                self.a, self.b, self.c
            ))),
        }
    }
}

fn lower_pole_check(c: &Rational, last: u64) -> Result<()> {
    // (c)_k vanishes from k = J + 1 on when c = -J
    match as_nonpositive_integer(c) {
        Some(j) if j < last => Err(Error::domain(format!(
            "lower parameter c = {c} makes (c)_k vanish at k = {}",
            j + 1
        ))),
        _ => Ok(()),
    }
}

/// `sum_{k=0}^{K} (a)_k (b)_k / ((c)_k k!) z^k`.
pub fn hyp2f1_terminating(spec: &Hyp2F1Spec) -> Result<Rational> {
    let last = spec.termination_index()?;
    lower_pole_check(&spec.c, last)?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 1..=last {
        let shift = int(k as i64 - 1);
        term = term * (&spec.a + &shift) * (&spec.b + &shift) * &spec.z
            / ((&spec.c + &shift) * int(k as i64));
        sum += &term;
    }
    Ok(sum)
}

/// The same sum with a polynomial-valued upper parameter `b(x)`, returning
/// a polynomial in `x`. `a = -K` must terminate the series.
pub fn hyp2f1_polynomial(a: &Rational, b: &Polynomial, c: &Rational, z: &Rational) -> Result<Polynomial> {
    let last = as_nonpositive_integer(a)
        .ok_or_else(|| Error::domain(format!("upper parameter a = {a} does not terminate")))?;
    lower_pole_check(c, last)?;
    let mut term = Polynomial::one();
    let mut sum = Polynomial::one();
    for k in 1..=last {
        let shift = int(k as i64 - 1);
        let b_shifted = b + &Polynomial::constant(shift.clone());
        let scalar = (a + &shift) * z / ((c + &shift) * int(k as i64));
        term = (&term * &b_shifted).scale(&scalar);
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Both sides of Pfaff's transformation,
/// `₂F₁(a,b;c;z) = (1-z)^{-a} ₂F₁(a, c-b; c; z/(z-1))`, for terminating `a`.
pub fn pfaff_sides(a: &Rational, b: &Rational, c: &Rational, z: &Rational) -> Result<(Rational, Rational)> {
    let k = as_nonpositive_integer(a)
        .ok_or_else(|| Error::domain(format!("a = {a} must be a non-positive integer")))?;
    if z.is_one() {
        return Err(Error::domain("z = 1 makes z/(z-1) undefined"));
    }
    let left = hyp2f1_terminating(&Hyp2F1Spec::new(a.clone(), b.clone(), c.clone(), z.clone()))?;
    let w = z / (z - Rational::one());
    let right_series = hyp2f1_terminating(&Hyp2F1Spec::new(a.clone(), c - b, c.clone(), w))?;
    let prefactor = rational_pow(&(Rational::one() - z), k as i64)?;
    Ok((left, prefactor * right_series))
}

pub fn verify_pfaff(a: &Rational, b: &Rational, c: &Rational, z: &Rational) -> Result<bool> {
    let (left, right) = pfaff_sides(a, b, c, z)?;
    Ok(left == right)
}

/// The three members of Hering's chain for `(1-x)_n^{-m}`, generic `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeringChain {
    /// `sum_{k<n} (m)_k/k! x^k`
    pub left: Rational,
    /// `(m)_{n-1}/(n-1)! x^{n-1} ₂F₁(-n+1, 1; -m-n+2; 1/x)`
    pub middle: Rational,
    /// `(m)_{n-1}/(n-1)! x^n/(x-1) F`, where `F` is the value of
    /// `₂F₁(-m+1, 1; -m-n+2; 1/(1-x))` obtained from the middle series by the
    /// terminating Pfaff transformation.
    pub right: Rational,
    /// That implied value `F`.
    pub right_series: Rational,
    /// Whether the Pfaff step itself checked out on the middle series.
    pub pfaff_holds: bool,
}

impl HeringChain {
    pub fn holds(&self) -> bool {
        self.pfaff_holds && self.left == self.middle && self.middle == self.right
    }
}

/// Evaluates every member of Hering's chain for rational non-integer `m`.
pub fn hering_chain_check(m: &Rational, n: u64, x: &Rational) -> Result<HeringChain> {
    if m.is_integer() {
        return Err(Error::domain(format!("m = {m} must be non-integer")));
    }
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    if x.is_zero() || x.is_one() {
        return Err(Error::domain(format!("x = {x} must avoid 0 and 1")));
    }
    let one = Rational::one();
    let left = (0..n)
        .map(|k| pochhammer(m, k) / natural_to_rational(&factorial(k)) * rational_pow(x, k as i64).unwrap())
        .sum::<Rational>();

    let lead = pochhammer(m, n - 1) / natural_to_rational(&factorial(n - 1));
    let a = int(1 - n as i64);
    let c = int(2 - n as i64) - m;
    let z = x.recip();
    let middle_series = hyp2f1_terminating(&Hyp2F1Spec::new(a.clone(), one.clone(), c.clone(), z.clone()))?;
    let middle = &lead * rational_pow(x, n as i64 - 1)? * &middle_series;

    // Pfaff in `a`: F(a,1;c;1/x) = ((x-1)/x)^{n-1} F(a, c-1; c; 1/(1-x)).
    // Pfaff in `b` gives F(a,1;c;1/x) = x/(x-1) F(-m+1, 1; c; 1/(1-x)),
    // so the non-terminating series on the right takes the value below.
    let (pfaff_left, pfaff_right) = pfaff_sides(&a, &one, &c, &z)?;
    let ratio = (x - &one) / x;
    let right_series = rational_pow(&ratio, n as i64)?
        * hyp2f1_terminating(&Hyp2F1Spec::new(a, &c - &one, c.clone(), (&one - x).recip()))?;
    let right = &lead * rational_pow(x, n as i64)? / (x - &one) * &right_series;

    Ok(HeringChain {
        left,
        middle,
        right,
        right_series,
        pfaff_holds: pfaff_left == pfaff_right && pfaff_left == middle_series,
    })
}

/// Head and tail of Hering's integer-`m` limit, each compared against the
/// member it is supposed to reconstruct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailCheck {
    /// Prefactor times the finite series with `m` terms.
    pub head: Rational,
    /// `-(1-x)^{-m} x^n (1-(1-x))_m^{-n}`
    pub head_target: Rational,
    /// Prefactor times the first `terms` terms of the infinite series.
    pub tail_partial: Rational,
    /// `(1-x)^{-m}`
    pub tail_target: Rational,
    /// `|tail_partial - tail_target|`
    pub residual: Rational,
    /// Certified upper bound on the truncated remainder.
    pub bound: Rational,
}

/// Checks the integer-`m` limit of the last ₂F₁ in Hering's chain. The finite
/// part is compared exactly; the infinite part is summed to `terms` terms and
/// its residual compared against a geometric remainder bound.
///
/// The series converges only for `|x - 1| > 1`.
pub fn hering_limit_tail_check(m: u64, n: u64, x: &Rational, terms: u64) -> Result<TailCheck> {
    if m == 0 || n == 0 {
        return Err(Error::domain("m and n must be at least 1"));
    }
    if terms == 0 {
        return Err(Error::domain("at least one tail term is required"));
    }
    let one = Rational::one();
    let u = &one - x;
    if u.abs() <= one {
        return Err(Error::domain(format!(
            "x = {x} is outside region of convergence |x - 1| > 1"
        )));
    }
    let (mi, ni) = (m as i64, n as i64);
    let prefactor = binomial_q(m + n - 2, n - 1) * rational_pow(x, ni)? / (x - &one);
    let lower = int(2 - mi - ni);

    let head_series: Rational = (0..m)
        .map(|k| {
            pochhammer(&int(1 - mi), k) / pochhammer(&lower, k) * rational_pow(&u, -(k as i64)).unwrap()
        })
        .sum();
    let head = &prefactor * head_series;
    let reversed: Rational = (0..m)
        .map(|k| {
            pochhammer(&int(ni), k) / natural_to_rational(&factorial(k)) * rational_pow(&u, k as i64).unwrap()
        })
        .sum();
    let head_target = -rational_pow(&u, -mi)? * rational_pow(x, ni)? * reversed;

    let tail_norm = pochhammer(&lower, n - 1);
    let first = m + n - 1;
    let tail_series: Rational = (first..first + terms)
        .map(|k| {
            pochhammer(&int(2 - mi - ni + k as i64), n - 1) / &tail_norm
                * rational_pow(&u, -(k as i64)).unwrap()
        })
        .sum();
    let tail_partial = &prefactor * tail_series;
    let tail_target = rational_pow(&u, -mi)?;
    let residual = (&tail_partial - &tail_target).abs();

    // Reindexed, the omitted terms are |x|^n |u|^{-m-n} C(n-1+j, j) r^j for
    // j >= terms with r = 1/|u|. Successive ratios (n+j)/(j+1) r decrease in
    // j, so the ratio at j = terms bounds all later ones.
    let r = u.abs().recip();
    let rho = int((n + terms) as i64) / int((terms + 1) as i64) * &r;
    if rho >= one {
        return Err(Error::domain(format!(
            "{terms} terms are too few for a geometric remainder bound at x = {x}"
        )));
    }
    let first_omitted = binomial_q(n - 1 + terms, terms) * rational_pow(&r, terms as i64)?;
    let bound = rational_pow(&x.abs(), ni)? * rational_pow(&r, mi + ni)? * first_omitted / (&one - rho);

    if head != head_target {
        return Err(Error::property(format!(
            "finite part {head} differs from {head_target}"
        )));
    }
    if residual > bound {
        return Err(Error::property(format!(
            "tail residual {residual} exceeds its bound {bound}"
        )));
    }
    Ok(TailCheck { head, head_target, tail_partial, tail_target, residual, bound })
}
