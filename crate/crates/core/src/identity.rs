//! The decomposition of 1 into two truncated binomial series,
//!
//! ```text
//! 1 = (1-x)^{n+1} sum_{k=0}^{m} C(n+k,k) x^k + x^{m+1} sum_{k=0}^{n} C(m+k,k) (1-x)^k,
//! ```
//!
//! together with its older equivalent forms: Hering's truncated-power form
//! and de Moivre's canon for partial sums of figurate series.

use num::traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial_q, rational_pow, Rational};
use crate::poly::{finite_recurring_sum_split, truncated_geometric_power, Polynomial, RecurrenceSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbParams {
    pub n: u64,
    pub m: u64,
    pub x: Rational,
}

impl CbParams {
    pub fn new(n: u64, m: u64, x: Rational) -> Self {
        CbParams { n, m, x }
    }
}

/// The two weighted sums of the identity evaluated at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbSplit {
    pub first: Rational,
    pub second: Rational,
}

impl CbSplit {
    pub fn sum(&self) -> Rational {
        &self.first + &self.second
    }
}

/// `sum_{k=0}^{upper} C(base+k, k) t^k` as a polynomial in `t`.
fn binomial_partial_sum(base: u64, upper: u64) -> Polynomial {
    Polynomial::new((0..=upper).map(|k| binomial_q(base + k, k)).collect())
}

pub fn cb_split(params: &CbParams) -> CbSplit {
    let CbParams { n, m, x } = params;
    let one_minus = Rational::one() - x;
    let first = rational_pow(&one_minus, *n as i64 + 1).unwrap() * binomial_partial_sum(*n, *m).eval(x);
    let second = rational_pow(x, *m as i64 + 1).unwrap() * binomial_partial_sum(*m, *n).eval(&one_minus);
    CbSplit { first, second }
}

/// Both terms of the identity expanded as polynomials in `x`.
pub fn cb_polynomials(n: u64, m: u64) -> (Polynomial, Polynomial) {
    let first = &Polynomial::one_minus_x().pow(n as u32 + 1) * &binomial_partial_sum(n, m);
    let second = binomial_partial_sum(m, n).rebase().shift(m as usize + 1);
    (first, second)
}

/// Symbolic check: the two expanded terms add up to the constant 1.
pub fn cb_polynomial_identity(n: u64, m: u64) -> bool {
    let (first, second) = cb_polynomials(n, m);
    &first + &second == Polynomial::one()
}

/// Both sides of `(1-x)_n^{-m} = (1-x)^{-m} - (1-x)^{-m} x^n (1-(1-x))_m^{-n}`.
pub fn hering_sides(m: u64, n: u64, x: &Rational) -> Result<(Rational, Rational)> {
    if m == 0 || n == 0 {
        return Err(Error::domain("m and n must be at least 1"));
    }
    if x.is_one() {
        return Err(Error::domain("x = 1 divides by zero"));
    }
    let one_minus = Rational::one() - x;
    let lhs = truncated_geometric_power(m, n).eval(x);
    let inv = rational_pow(&one_minus, -(m as i64))?;
    let rhs = &inv - &inv * rational_pow(x, n as i64)? * truncated_geometric_power(n, m).eval(&one_minus);
    Ok((lhs, rhs))
}

pub fn hering_identity_check(m: u64, n: u64, x: &Rational) -> Result<bool> {
    let (lhs, rhs) = hering_sides(m, n, x)?;
    Ok(lhs == rhs)
}

/// Index translation from Hering's form to the two-series identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeringTranslation {
    /// The identity's `n`, equal to Hering's `m - 1`.
    pub cb_n: u64,
    /// The identity's `m`, equal to Hering's `n - 1`.
    pub cb_m: u64,
    /// Hering's form times `(1-x)^m` expands to the identity's two terms,
    /// term by term, and they sum to 1.
    pub verified: bool,
}

/// Multiplying Hering's form by `(1-x)^m` gives
/// `(1-x)^m (1-x)_n^{-m} + x^n (1-(1-x))_m^{-n} = 1`, which is the two-series
/// identity with `n -> m-1`, `m -> n-1`. The map is confirmed by expansion.
pub fn hering_to_cb(m: u64, n: u64) -> Result<HeringTranslation> {
    if m == 0 || n == 0 {
        return Err(Error::domain("m and n must be at least 1"));
    }
    let (cb_n, cb_m) = (m - 1, n - 1);
    let first = &Polynomial::one_minus_x().pow(m as u32) * &truncated_geometric_power(m, n);
    let second = truncated_geometric_power(n, m).rebase().shift(n as usize);
    let (cb_first, cb_second) = cb_polynomials(cb_n, cb_m);
    let verified = first == cb_first && second == cb_second && &first + &second == Polynomial::one();
    Ok(HeringTranslation { cb_n, cb_m, verified })
}

/// De Moivre's canon for `sum_{k<n} C(p+k-1, k) x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeMoivreCanon {
    pub p: u64,
    pub n: u64,
    /// The partial sum itself.
    pub partial_sum: Polynomial,
    /// `sum_{k<p} C(n+k-1, k) u^k`, the correction in powers of `u = 1-x`.
    pub correction: Polynomial,
    /// `r(x)` derived from the recurrence split, rebased to powers of `1-x`.
    pub derived_r: Polynomial,
    /// Both printed forms hold after clearing `(1-x)^p`, and the derived
    /// `r` equals minus the correction.
    pub check: bool,
}

/// The canon in its corrected form,
/// `(1-x^n)/(1-x)^p - sum_{j=1}^{p-1} C(n+j-1, j) x^n / (1-x)^{p-j}`.
pub fn demoivre_canon(p: u64, n: u64) -> Result<DeMoivreCanon> {
    if p == 0 || n == 0 {
        return Err(Error::domain("p and n must be at least 1"));
    }
    let partial_sum = truncated_geometric_power(p, n);
    let correction = Polynomial::new((0..p).map(|k| binomial_q(n + k - 1, k)).collect());
    let cleared = &partial_sum * &Polynomial::one_minus_x().pow(p as u32);
    let x_n = Polynomial::monomial(Rational::one(), n as usize);

    // (1-x)^{-p} - (1-x)^{-p} x^n sum_{k<p} C(n+k-1,k)(1-x)^k
    let compact = &Polynomial::one() - &(&x_n * &correction.rebase());

    // (1 - x^n) - sum_{j=1}^{p-1} C(n+j-1, j) x^n (1-x)^j
    let mut term_by_term = &Polynomial::one() - &x_n;
    for j in 1..p {
        let term = Polynomial::one_minus_x().pow(j as u32).scale(&binomial_q(n + j - 1, j));
        term_by_term = &term_by_term - &(&x_n * &term);
    }

    let (q, r) = finite_recurring_sum_split(&RecurrenceSpec::figurate(p)?, n as usize)?;
    if q != Polynomial::one() {
        return Err(Error::property(format!("figurate split has q = {q}, expected 1")));
    }
    let derived_r = r.rebase();

    let check = cleared == compact && cleared == term_by_term && derived_r == -&correction;
    Ok(DeMoivreCanon { p, n, partial_sum, correction, derived_r, check })
}

/// The canon's terms as printed, one string per term, with the missing
/// `x^n` restored in the last term.
pub fn demoivre_canon_terms(p: u64, n: u64) -> Vec<String> {
    let mut terms = vec![format!("(1 - x^{n})/(1-x)^{p}")];
    for j in 1..p {
        let coeff = binomial_q(n + j - 1, j);
        let denom = match p - j {
            1 => "(1-x)".to_string(),
            e => format!("(1-x)^{e}"),
        };
        terms.push(format!("- {coeff}*x^{n}/{denom}"));
    }
    terms
}

/// Cross-check of the probabilistic reading: with per-round chance `p`,
/// the identity at `x = 1-p` with indices `(n-1, m-1)` gives both players'
/// chances when they need `n` and `m` more wins.
pub fn cb_as_chances(n: u64, m: u64, p: &Rational) -> Result<CbSplit> {
    if n == 0 || m == 0 {
        return Err(Error::domain("n and m must be at least 1"));
    }
    Ok(cb_split(&CbParams::new(n - 1, m - 1, Rational::one() - p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use num::traits::Zero;

    /// Independent oracle: evaluate the identity term by term without the
    /// polynomial machinery.
    fn direct_split(n: u64, m: u64, x: &Rational) -> (Rational, Rational) {
        let u = Rational::one() - x;
        let mut first = Rational::zero();
        for k in 0..=m {
            first += binomial_q(n + k, k) * rational_pow(x, k as i64).unwrap();
        }
        first *= rational_pow(&u, n as i64 + 1).unwrap();
        let mut second = Rational::zero();
        for k in 0..=n {
            second += binomial_q(m + k, k) * rational_pow(&u, k as i64).unwrap();
        }
        second *= rational_pow(x, m as i64 + 1).unwrap();
        (first, second)
    }

    #[test]
    fn split_examples() {
        let x = rat(3, 11);
        let s = cb_split(&CbParams::new(0, 0, x.clone()));
        assert_eq!(s.first, int(1) - &x);
        assert_eq!(s.second, x);

        let s = cb_split(&CbParams::new(1, 1, rat(1, 2)));
        assert_eq!((s.first.clone(), s.second.clone()), (rat(1, 2), rat(1, 2)));

        let s = cb_split(&CbParams::new(3, 2, rat(2, 7)));
        assert_eq!(s.sum(), int(1));
        assert_eq!((s.first, s.second), direct_split(3, 2, &rat(2, 7)));
    }

    #[test]
    fn split_matches_direct_oracle() {
        for n in 0..8 {
            for m in 0..8 {
                for x in [rat(1, 3), rat(-5, 2), int(4), rat(9, 10)] {
                    let s = cb_split(&CbParams::new(n, m, x.clone()));
                    assert_eq!((s.first.clone(), s.second.clone()), direct_split(n, m, &x));
                    assert_eq!(s.sum(), int(1));
                }
            }
        }
    }

    #[test]
    fn symmetry_under_swap() {
        for n in 0..7 {
            for m in 0..7 {
                for x in [rat(1, 5), rat(-2, 3), int(3)] {
                    let a = cb_split(&CbParams::new(n, m, x.clone()));
                    let b = cb_split(&CbParams::new(m, n, int(1) - &x));
                    assert_eq!(a.first, b.second);
                }
            }
        }
    }

    #[test]
    fn polynomial_identity() {
        assert!(cb_polynomial_identity(0, 0));
        let (first, second) = cb_polynomials(1, 1);
        // (1-x)^2 (1+2x) and x^2 (1 + 2(1-x))
        assert_eq!(first, Polynomial::from_ints(&[1, 0, -3, 2]));
        assert_eq!(second, Polynomial::from_ints(&[0, 0, 3, -2]));
        for n in 0..=12 {
            for m in 0..=12 {
                assert!(cb_polynomial_identity(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn hering_examples() {
        let (lhs, rhs) = hering_sides(1, 2, &rat(1, 3)).unwrap();
        assert_eq!((lhs, rhs), (rat(4, 3), rat(4, 3)));
        assert!(hering_identity_check(1, 1, &rat(5, 9)).unwrap());
        assert!(hering_identity_check(4, 6, &rat(-3, 5)).unwrap());
        assert!(matches!(hering_identity_check(2, 2, &int(1)), Err(Error::Domain(_))));
        assert!(hering_identity_check(0, 2, &int(2)).is_err());
    }

    #[test]
    fn hering_translation() {
        let t = hering_to_cb(1, 1).unwrap();
        assert_eq!((t.cb_n, t.cb_m, t.verified), (0, 0, true));
        let t = hering_to_cb(3, 2).unwrap();
        assert_eq!((t.cb_n, t.cb_m, t.verified), (2, 1, true));
        let t = hering_to_cb(5, 4).unwrap();
        assert_eq!((t.cb_n, t.cb_m, t.verified), (4, 3, true));
    }

    #[test]
    fn canon_examples() {
        let c = demoivre_canon(1, 3).unwrap();
        assert_eq!(c.partial_sum, Polynomial::from_ints(&[1, 1, 1]));
        assert!(c.check);

        // 1 + 2x = (1-x^2)/(1-x)^2 - 2x^2/(1-x)
        let c = demoivre_canon(2, 2).unwrap();
        assert_eq!(c.partial_sum, Polynomial::from_ints(&[1, 2]));
        assert_eq!(c.correction, Polynomial::from_ints(&[1, 2]));
        assert!(c.check);

        assert!(demoivre_canon(3, 4).unwrap().check);
        assert_eq!(
            demoivre_canon_terms(3, 4),
            ["(1 - x^4)/(1-x)^3", "- 4*x^4/(1-x)^2", "- 10*x^4/(1-x)"]
        );
    }

    #[test]
    fn canon_agrees_with_other_forms() {
        for p in 1..=10 {
            for n in 1..=10 {
                let canon = demoivre_canon(p, n).unwrap();
                assert!(canon.check, "p={p} n={n}");
                // canon (p, n) is Hering (m = p, n) is the identity at (p-1, n-1)
                assert!(hering_identity_check(p, n, &rat(2, 9)).unwrap());
                assert!(hering_to_cb(p, n).unwrap().verified);
                assert!(cb_polynomial_identity(p - 1, n - 1));
            }
        }
    }

    #[test]
    fn chances_reading() {
        let p = rat(2, 5);
        let s = cb_as_chances(3, 4, &p).unwrap();
        // p^n sum_{k<m} C(n+k-1,k)(1-p)^k
        let q = int(1) - &p;
        let mut pierre = Rational::zero();
        for k in 0..4u64 {
            pierre += binomial_q(2 + k, k) * rational_pow(&q, k as i64).unwrap();
        }
        pierre *= rational_pow(&p, 3).unwrap();
        assert_eq!(s.first, pierre);
        assert_eq!(s.sum(), int(1));
    }
}
