//! Fair-dice tail probabilities: the question of whether at least one six in
//! six throws beats two in twelve and three in eighteen, and the chance
//! `g(sn, n)` that a chosen face of an `s`-sided die shows up fewer than `n`
//! times in `sn` throws.

use num::traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial_q, rat, rational_pow, Rational};
use crate::points::GamePosition;

/// `P(X < n)` for `X ~ Binomial(throws, 1/s)`.
fn fewer_than(s: u64, throws: u64, n: u64) -> Rational {
    let hit = rat(1, s as i64);
    let miss = Rational::one() - &hit;
    (0..n.min(throws + 1))
        .map(|j| {
            binomial_q(throws, j)
                * rational_pow(&hit, j as i64).unwrap()
                * rational_pow(&miss, (throws - j) as i64).unwrap()
        })
        .sum()
}

/// Chance of at least `k` sixes among `6k` fair dice.
pub fn pepys_probability(k: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    Ok(Rational::one() - fewer_than(6, 6 * k, k))
}

fn check_faces(s: u64, n: u64) -> Result<()> {
    if s < 2 {
        return Err(Error::domain(format!("a die needs at least 2 faces, got {s}")));
    }
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    Ok(())
}

/// `g(sn, n)`: a selected face turns up fewer than `n` times in `sn` throws.
pub fn g_chance(s: u64, n: u64) -> Result<Rational> {
    check_faces(s, n)?;
    Ok(fewer_than(s, s * n, n))
}

/// Chance of at least `n` occurrences of a selected face in `sn` throws,
/// summed directly over the upper tail.
pub fn at_least_chance(s: u64, n: u64) -> Result<Rational> {
    check_faces(s, n)?;
    let throws = s * n;
    let hit = rat(1, s as i64);
    let miss = Rational::one() - &hit;
    Ok((n..=throws)
        .map(|j| {
            binomial_q(throws, j)
                * rational_pow(&hit, j as i64).unwrap()
                * rational_pow(&miss, (throws - j) as i64).unwrap()
        })
        .sum())
}

/// `g(sn, n)` as a problem-of-points position: Pierre plays the other
/// faces (round chance `(s-1)/s`) and needs `(s-1)n + 1` wins, Paul plays the
/// selected face and needs `n`. After `sn` rounds Pierre has won exactly
/// when the face came up fewer than `n` times.
pub fn g_as_points_position(s: u64, n: u64) -> Result<GamePosition> {
    check_faces(s, n)?;
    GamePosition::new((s - 1) * n + 1, n, rat(s as i64 - 1, s as i64))
}

/// One row of a monotonicity table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GRow {
    pub n: u64,
    pub value: Rational,
}

pub fn g_table(s: u64, n_max: u64) -> Result<Vec<GRow>> {
    (1..=n_max)
        .map(|n| Ok(GRow { n, value: g_chance(s, n)? }))
        .collect()
}

/// Strict increase of `g(sn, n)` in `n` over `1..=n_max`.
pub fn g_monotone_check(s: u64, n_max: u64) -> Result<bool> {
    if n_max < 2 {
        return Err(Error::domain("n_max must be at least 2"));
    }
    let table = g_table(s, n_max)?;
    Ok(table.windows(2).all(|w| w[1].value > w[0].value))
}

/// `true` when the Pepys probabilities strictly decrease over `1..=k_max`.
pub fn pepys_decreasing(k_max: u64) -> Result<bool> {
    let values = (1..=k_max).map(pepys_probability).collect::<Result<Vec<_>>>()?;
    Ok(values.windows(2).all(|w| w[1] < w[0]))
}
