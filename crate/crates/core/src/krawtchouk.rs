//! Symmetric Krawtchouk polynomials and the smoothing filter built from
//! their Christoffel–Darboux kernel.
//!
//! On the window `x = -N..=N` with binomial weight `w(x) = C(2N, N+x)`, the
//! orthogonal polynomials are `p_a(x) = K_a(x+N; 1/2; 2N)` with squared norms
//! `h_a = 4^N / C(2N, a)`. The filter with half-width `N` and order `n` has
//! taps `c(x) = K_{2n}(x, 0) w(x)`, reproduces polynomials of degree `<= 2n`,
//! and its frequency response, written in `s = sin^2(ω/2)`, is
//!
//! ```text
//! φ = 1 - s^{n+1} P(s) = (1-s)^{N-n} Q(s),
//! P(s) = sum_{k<N-n} C(n+k, k) (1-s)^k,   Q(s) = sum_{k<=n} C(N-n-1+k, k) s^k.
//! ```

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_q, int, rational_pow, Rational};
use crate::hypergeom::hyp2f1_polynomial;
use crate::poly::Polynomial;

/// Half-width `N` and order `n` of the smoothing filter, `0 <= n < N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FilterSpec {
    half_width: u64,
    order: u64,
}

impl FilterSpec {
    pub fn new(half_width: u64, order: u64) -> Result<Self> {
        if half_width == 0 {
            return Err(Error::domain("half-width N must be at least 1"));
        }
        if order >= half_width {
            return Err(Error::domain(format!(
                "order n = {order} must be below the half-width N = {half_width}"
            )));
        }
        Ok(FilterSpec { half_width, order })
    }

    pub fn half_width(&self) -> u64 {
        self.half_width
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn window_len(&self) -> usize {
        2 * self.half_width as usize + 1
    }
}

/// `w(x) = C(2N, N+x)` for `|x| <= N`.
pub fn weight(half_width: u64, x: i64) -> Rational {
    let n = half_width as i64;
    if x.abs() > n {
        return Rational::zero();
    }
    binomial_q(2 * half_width, (n + x) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrawtchoukBasis {
    half_width: u64,
    polys: Vec<Polynomial>,
    norms: Vec<Rational>,
}

impl KrawtchoukBasis {
    pub fn half_width(&self) -> u64 {
        self.half_width
    }

    /// `p_0 .. p_{2N}` as polynomials in `x`.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// `h_a = 4^N / C(2N, a)`.
    pub fn norms(&self) -> &[Rational] {
        &self.norms
    }

    /// `sum_x p_a(x) p_b(x) w(x)` over the window.
    pub fn inner_product(&self, a: usize, b: usize) -> Rational {
        let n = self.half_width as i64;
        (-n..=n)
            .map(|x| {
                let xq = int(x);
                self.polys[a].eval(&xq) * self.polys[b].eval(&xq) * weight(self.half_width, x)
            })
            .sum()
    }

    /// Exact orthogonality with the closed-form norms, over all pairs.
    pub fn verify_orthogonality(&self) -> bool {
        let size = self.polys.len();
        (0..size).all(|a| {
            (0..size).all(|b| {
                let expected = if a == b { self.norms[a].clone() } else { Rational::zero() };
                self.inner_product(a, b) == expected
            })
        })
    }
}

/// Builds `p_a(x) = ₂F₁(-a, -(x+N); -2N; 2)` for `a = 0..=2N`.
pub fn krawtchouk_basis(half_width: u64) -> Result<KrawtchoukBasis> {
    if half_width == 0 {
        return Err(Error::domain("half-width N must be at least 1"));
    }
    let big = half_width as i64;
    let shifted = Polynomial::from_ints(&[-big, -1]);
    let lower = int(-2 * big);
    let polys = (0..=2 * big)
        .map(|a| hyp2f1_polynomial(&int(-a), &shifted, &lower, &int(2)))
        .collect::<Result<Vec<_>>>()?;
    let four_n = rational_pow(&int(4), big)?;
    let norms = (0..=2 * half_width)
        .map(|a| &four_n / binomial_q(2 * half_width, a))
        .collect();
    Ok(KrawtchoukBasis { half_width, polys, norms })
}

/// `K_{2n}(x, 0) = sum_{k<=2n} p_k(x) p_k(0) / h_k` at `x = -N..=N`.
pub fn kernel_values(spec: &FilterSpec) -> Result<Vec<Rational>> {
    let basis = krawtchouk_basis(spec.half_width)?;
    let n = spec.half_width as i64;
    let zero = Rational::zero();
    let at_zero: Vec<Rational> = basis.polys.iter().map(|p| p.eval(&zero)).collect();
    Ok((-n..=n)
        .map(|x| {
            let xq = int(x);
            (0..=2 * spec.order as usize)
                .map(|k| basis.polys[k].eval(&xq) * &at_zero[k] / &basis.norms[k])
                .sum()
        })
        .collect())
}

/// Filter taps `c(x) = K_{2n}(x, 0) w(x)`, index `x + N`.
pub fn kernel_coefficients(spec: &FilterSpec) -> Result<Vec<Rational>> {
    let n = spec.half_width as i64;
    Ok(kernel_values(spec)?
        .into_iter()
        .zip(-n..=n)
        .map(|(k, x)| k * weight(spec.half_width, x))
        .collect())
}

/// `g(y) = sum_x f(y - x) c(x)` wherever the whole window fits inside the
/// signal; the output is `2N` samples shorter than the input.
pub fn apply_filter(spec: &FilterSpec, signal: &[Rational]) -> Result<Vec<Rational>> {
    let taps = kernel_coefficients(spec)?;
    filter_with_taps(&taps, signal)
}

pub fn filter_with_taps(taps: &[Rational], signal: &[Rational]) -> Result<Vec<Rational>> {
    let len = taps.len();
    if signal.len() < len {
        return Err(Error::domain(format!(
            "signal of length {} is shorter than the {len}-tap window",
            signal.len()
        )));
    }
    let half = len / 2;
    Ok((half..signal.len() - half)
        .map(|y| {
            // f(y - x) c(x) for x = -N..=N
            taps.iter()
                .enumerate()
                .map(|(i, c)| &signal[y + half - i] * c)
                .sum()
        })
        .collect())
}

/// Chebyshev polynomials `T_0 .. T_max` in `y = cos ω`.
fn chebyshev(max: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one(), Polynomial::x()];
    let two_y = Polynomial::from_ints(&[0, 2]);
    while out.len() <= max {
        let k = out.len();
        out.push(&(&two_y * &out[k - 1]) - &out[k - 2]);
    }
    out.truncate(max + 1);
    out
}

/// `sum_x taps(x) e^{-iωx}` for symmetric taps, as a polynomial in
/// `s = sin^2(ω/2)` (via `cos ω = 1 - 2s`).
pub fn symmetric_response(taps: &[Rational]) -> Result<Polynomial> {
    let half = taps.len() / 2;
    if taps.len().is_multiple_of(2) || (0..half).any(|i| taps[i] != taps[taps.len() - 1 - i]) {
        return Err(Error::domain("taps must be an odd-length symmetric window"));
    }
    let cheb = chebyshev(half);
    let mut in_cos = Polynomial::constant(taps[half].clone());
    for x in 1..=half {
        in_cos = &in_cos + &cheb[x].scale(&(int(2) * &taps[half + x]));
    }
    Ok(in_cos.compose(&Polynomial::from_ints(&[1, -2])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferFunction {
    pub spec: FilterSpec,
    /// φ as a polynomial in `s = sin^2(ω/2)`.
    pub s_poly: Polynomial,
    /// `(1 - φ) / s^{n+1}`, degree `N-n-1`.
    pub p: Polynomial,
    /// `φ / (1-s)^{N-n}`, degree `n`.
    pub q: Polynomial,
}

impl TransferFunction {
    /// φ(ω) in floating point.
    pub fn eval_omega(&self, omega: f64) -> f64 {
        let s = (omega / 2.0).sin().powi(2);
        self.s_poly.eval_f64(s)
    }

    /// `(ω_j, φ(ω_j))` for `ω_j = πj/M`, `j = 0..=M`.
    pub fn sample(&self, samples: usize) -> Vec<(f64, f64)> {
        (0..=samples)
            .map(|j| {
                let omega = std::f64::consts::PI * j as f64 / samples.max(1) as f64;
                (omega, self.eval_omega(omega))
            })
            .collect()
    }
}

/// `sum_{k<N-n} C(n+k, k) (1-s)^k`.
pub fn closed_form_p(spec: &FilterSpec) -> Polynomial {
    let (big, n) = (spec.half_width, spec.order);
    Polynomial::new((0..big - n).map(|k| binomial_q(n + k, k)).collect()).rebase()
}

/// `sum_{k<=n} C(N-n-1+k, k) s^k`.
pub fn closed_form_q(spec: &FilterSpec) -> Polynomial {
    let (big, n) = (spec.half_width, spec.order);
    Polynomial::new((0..=n).map(|k| binomial_q(big - n - 1 + k, k)).collect())
}

/// Computes φ from the filter taps and factors it both ways. Any inexact
/// division, wrong degree, or mismatch with the closed forms is reported as
/// a property failure.
pub fn transfer_function(spec: &FilterSpec) -> Result<TransferFunction> {
    let taps = kernel_coefficients(spec)?;
    let s_poly = symmetric_response(&taps)?;
    let (big, n) = (spec.half_width, spec.order);
    let s_power = Polynomial::monomial(Rational::one(), n as usize + 1);
    let p = (&Polynomial::one() - &s_poly).div_exact(&s_power)?;
    let q = s_poly.div_exact(&Polynomial::one_minus_x().pow((big - n) as u32))?;
    if p.degree() != Some((big - n - 1) as usize) || q.degree() != Some(n as usize) {
        return Err(Error::property(format!(
            "deg P = {:?}, deg Q = {:?}; expected {} and {n}",
            p.degree(),
            q.degree(),
            big - n - 1
        )));
    }
    if p != closed_form_p(spec) || q != closed_form_q(spec) {
        return Err(Error::property(format!(
            "P = {} and Q = {} differ from the closed forms",
            p.display_in("s"),
            q.display_in("s")
        )));
    }
    Ok(TransferFunction { spec: *spec, s_poly, p, q })
}

/// The response of `sum_x K_{2n}(x, 0) e^{-iωx}`, leaving out the weight.
/// Only for comparison: it is not the response of the filter.
pub fn unweighted_response(spec: &FilterSpec) -> Result<Polynomial> {
    symmetric_response(&kernel_values(spec)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    /// φ at `s = j/samples`, `j = 0..=samples`.
    pub grid: Vec<Rational>,
    /// Order of the zero of `1 - φ` at `s = 0`; equals `n + 1`.
    pub order_at_zero: usize,
    /// Order of the zero of `φ` at `s = 1`; equals `N - n`.
    pub order_at_one: usize,
}

/// Evaluates φ on an exact grid in `s` and checks strict decrease from 1 to
/// 0 together with the flatness orders at both ends.
pub fn flatness_report(spec: &FilterSpec, samples: u64) -> Result<FlatnessReport> {
    if samples < 2 {
        return Err(Error::domain("at least 2 samples are needed"));
    }
    let tf = transfer_function(spec)?;
    let grid: Vec<Rational> = (0..=samples)
        .map(|j| tf.s_poly.eval(&(int(j as i64) / int(samples as i64))))
        .collect();
    if grid[0] != Rational::one() || !grid[samples as usize].is_zero() {
        return Err(Error::property(format!(
            "endpoints are {} and {}, expected 1 and 0",
            grid[0], grid[samples as usize]
        )));
    }
    if let Some(j) = grid.windows(2).position(|w| w[1] >= w[0]) {
        return Err(Error::property(format!(
            "response does not decrease between s = {j}/{samples} and s = {}/{samples}",
            j + 1
        )));
    }
    let one_minus = &Polynomial::one() - &tf.s_poly;
    let order_at_zero = one_minus.root_multiplicity(&Rational::zero()).unwrap_or(0);
    let order_at_one = tf.s_poly.root_multiplicity(&Rational::one()).unwrap_or(0);
    let (big, n) = (spec.half_width as usize, spec.order as usize);
    if order_at_zero != n + 1 || order_at_one != big - n {
        return Err(Error::property(format!(
            "flatness orders ({order_at_zero}, {order_at_one}), expected ({}, {})",
            n + 1,
            big - n
        )));
    }
    Ok(FlatnessReport { grid, order_at_zero, order_at_one })
}
