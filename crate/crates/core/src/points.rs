//! The problem of points: how to divide the stake of a game interrupted when
//! Pierre still needs `n` wins and Paul `m`, each round won by Pierre with
//! probability `p`.
//!
//! Two closed forms are provided. [`chance_bernoulli`] imagines exactly
//! `m + n - 1` more rounds, after which someone has certainly won.
//! [`chance_montmort`] conditions on the decisive round instead (a negative
//! binomial reading). Both agree with each other and with a brute-force
//! enumeration, and each pair of chances sums to 1; written out, that sum is
//! the truncated binomial identity at `x = 1 - p`.

use std::collections::HashMap;

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_q, int, rational_pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GamePosition {
    /// Rounds Pierre still has to win.
    pub pierre_needs: u64,
    /// Rounds Paul still has to win.
    pub paul_needs: u64,
    /// Pierre's chance of winning a single round.
    pub p: Rational,
}

impl GamePosition {
    pub fn new(pierre_needs: u64, paul_needs: u64, p: Rational) -> Result<Self> {
        if pierre_needs == 0 || paul_needs == 0 {
            return Err(Error::domain("each player must still need at least one round"));
        }
        if p.is_negative() || p > Rational::one() {
            return Err(Error::domain(format!("round probability {p} is outside [0, 1]")));
        }
        Ok(GamePosition { pierre_needs, paul_needs, p })
    }

    fn q(&self) -> Rational {
        Rational::one() - &self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chances {
    pub pierre: Rational,
    pub paul: Rational,
}

impl Chances {
    pub fn sum(&self) -> Rational {
        &self.pierre + &self.paul
    }
}

fn pow(x: &Rational, e: u64) -> Rational {
    rational_pow(x, e as i64).expect("non-negative exponent")
}

/// Chances from playing out exactly `m + n - 1` further rounds.
pub fn chance_bernoulli(pos: &GamePosition) -> Chances {
    let (n, m) = (pos.pierre_needs, pos.paul_needs);
    let total = m + n - 1;
    let (p, q) = (&pos.p, pos.q());
    // Pierre wins when Paul takes at most m - 1 of the rounds
    let pierre = (0..m)
        .map(|k| binomial_q(total, k) * pow(p, total - k) * pow(&q, k))
        .sum();
    let paul = (0..n)
        .map(|l| binomial_q(total, l) * pow(p, l) * pow(&q, total - l))
        .sum();
    Chances { pierre, paul }
}

/// Chances from the round that decides the game: Pierre wins it after
/// already having `n - 1` wins against at most `m - 1` losses.
pub fn chance_montmort(pos: &GamePosition) -> Chances {
    let (n, m) = (pos.pierre_needs, pos.paul_needs);
    let (p, q) = (&pos.p, pos.q());
    let pierre_sum: Rational = (0..m).map(|k| binomial_q(n + k - 1, k) * pow(&q, k)).sum();
    let paul_sum: Rational = (0..n).map(|k| binomial_q(m + k - 1, k) * pow(p, k)).sum();
    Chances {
        pierre: pow(p, n) * pierre_sum,
        paul: pow(&q, m) * paul_sum,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shares {
    pub pierre: Rational,
    pub paul: Rational,
}

/// Splits `stake` in proportion to the players' chances of winning.
pub fn fair_division(pos: &GamePosition, stake: &Rational) -> Result<Shares> {
    if !stake.is_positive() {
        return Err(Error::domain(format!("stake {stake} must be positive")));
    }
    let chances = chance_montmort(pos);
    Ok(Shares {
        pierre: stake * &chances.pierre,
        paul: stake * &chances.paul,
    })
}

/// Largest `n + m` the enumeration oracle accepts.
pub const ENUMERATION_LIMIT: u64 = 22;

/// Enumerates every win/loss sequence of `m + n - 1` rounds.
pub fn enumeration_oracle(pos: &GamePosition) -> Result<Chances> {
    let (n, m) = (pos.pierre_needs, pos.paul_needs);
    if n + m > ENUMERATION_LIMIT {
        return Err(Error::Resource(format!(
            "n + m = {} exceeds the enumeration limit {ENUMERATION_LIMIT}",
            n + m
        )));
    }
    let rounds = (n + m - 1) as u32;
    // sequences with the same number of Pierre wins share a weight
    let mut pierre_count = vec![0u64; rounds as usize + 1];
    let mut paul_count = vec![0u64; rounds as usize + 1];
    for seq in 0u64..(1 << rounds) {
        let wins = seq.count_ones();
        if u64::from(wins) >= n {
            pierre_count[wins as usize] += 1;
        } else {
            paul_count[wins as usize] += 1;
        }
    }
    let (p, q) = (&pos.p, pos.q());
    let weigh = |counts: &[u64]| -> Rational {
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| int(c as i64) * pow(p, w as u64) * pow(&q, u64::from(rounds) - w as u64))
            .sum()
    };
    Ok(Chances {
        pierre: weigh(&pierre_count),
        paul: weigh(&paul_count),
    })
}

/// Several players, each needing some number of wins; `probs[i]` is player
/// i's chance of winning any one round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPosition {
    needs: Vec<u64>,
    probs: Vec<Rational>,
}

impl MultiPosition {
    pub fn new(needs: Vec<u64>, probs: Vec<Rational>) -> Result<Self> {
        if needs.len() < 2 || needs.len() != probs.len() {
            return Err(Error::domain(format!(
                "need at least two players with one probability each, got {} needs and {} probabilities",
                needs.len(),
                probs.len()
            )));
        }
        if needs.contains(&0) {
            return Err(Error::domain("every player must still need at least one round"));
        }
        if probs.iter().any(Signed::is_negative) {
            return Err(Error::domain("round probabilities must be non-negative"));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(Error::domain(format!("round probabilities sum to {total}, not 1")));
        }
        Ok(MultiPosition { needs, probs })
    }

    pub fn needs(&self) -> &[u64] {
        &self.needs
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }
}

/// Each player's chance of collecting their wins first, by dynamic
/// programming over the vector of remaining needs.
pub fn multi_player_chances(pos: &MultiPosition) -> Vec<Rational> {
    let mut memo = HashMap::new();
    multi_value(&pos.needs, &pos.probs, &mut memo)
}

fn multi_value(
    needs: &[u64],
    probs: &[Rational],
    memo: &mut HashMap<Vec<u64>, Vec<Rational>>,
) -> Vec<Rational> {
    if let Some(winner) = needs.iter().position(|&k| k == 0) {
        let mut out = vec![Rational::zero(); needs.len()];
        out[winner] = Rational::one();
        return out;
    }
    if let Some(hit) = memo.get(needs) {
        return hit.clone();
    }
    let mut out = vec![Rational::zero(); needs.len()];
    let mut next = needs.to_vec();
    for (j, pj) in probs.iter().enumerate() {
        if pj.is_zero() {
            continue;
        }
        next[j] -= 1;
        let sub = multi_value(&next, probs, memo);
        next[j] += 1;
        for (acc, v) in out.iter_mut().zip(sub) {
            *acc += pj * v;
        }
    }
    memo.insert(needs.to_vec(), out.clone());
    out
}

/// Largest number of sequences the multi-player oracle will walk.
pub const MULTI_ENUMERATION_LIMIT: u64 = 1 << 22;

/// Plays exactly `sum(needs - 1) + 1` rounds in every possible order; by
/// then someone has won, and the first to finish takes the stake.
pub fn multi_enumeration_oracle(pos: &MultiPosition) -> Result<Vec<Rational>> {
    let players = pos.needs.len();
    let rounds: u64 = pos.needs.iter().map(|k| k - 1).sum::<u64>() + 1;
    let sequences = (players as u64).checked_pow(rounds as u32).filter(|&s| s <= MULTI_ENUMERATION_LIMIT);
    let Some(sequences) = sequences else {
        return Err(Error::Resource(format!(
            "{players}^{rounds} sequences exceed the enumeration limit {MULTI_ENUMERATION_LIMIT}"
        )));
    };
    // weight depends only on how many rounds each player took overall
    let mut tally: HashMap<(usize, Vec<u64>), u64> = HashMap::new();
    let mut digits = vec![0usize; rounds as usize];
    for _ in 0..sequences {
        let mut seen = vec![0u64; players];
        let mut winner = None;
        for &d in &digits {
            seen[d] += 1;
            if winner.is_none() && seen[d] == pos.needs[d] {
                winner = Some(d);
            }
        }
        let winner = winner.expect("someone finishes within the round budget");
        *tally.entry((winner, seen)).or_default() += 1;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < players {
                break;
            }
            *d = 0;
        }
    }
    let mut out = vec![Rational::zero(); players];
    for ((winner, seen), count) in tally {
        let weight = seen
            .iter()
            .zip(&pos.probs)
            .fold(int(count as i64), |acc, (&k, p)| acc * pow(p, k));
        out[winner] += weight;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn pos(n: u64, m: u64, p: Rational) -> GamePosition {
        GamePosition::new(n, m, p).unwrap()
    }

    #[test]
    fn single_round() {
        let p = rat(3, 7);
        for c in [
            chance_bernoulli(&pos(1, 1, p.clone())),
            chance_montmort(&pos(1, 1, p.clone())),
            enumeration_oracle(&pos(1, 1, p.clone())).unwrap(),
        ] {
            assert_eq!(c.pierre, p);
            assert_eq!(c.paul, int(1) - &p);
        }
    }

    #[test]
    fn five_against_three() {
        let g = pos(5, 3, rat(1, 2));
        assert_eq!(chance_bernoulli(&g).pierre, rat(29, 128));
        assert_eq!(chance_montmort(&g).pierre, rat(29, 128));
        assert_eq!(enumeration_oracle(&g).unwrap().pierre, rat(29, 128));
    }

    #[test]
    fn two_against_two_unfair() {
        let g = pos(2, 2, rat(1, 3));
        assert_eq!(chance_bernoulli(&g).pierre, rat(7, 27));
        assert_eq!(chance_montmort(&g).pierre, rat(7, 27));
        let oracle = enumeration_oracle(&pos(3, 4, rat(2, 5))).unwrap();
        assert_eq!(oracle, chance_bernoulli(&pos(3, 4, rat(2, 5))));
        assert_eq!(oracle, chance_montmort(&pos(3, 4, rat(2, 5))));
    }

    #[test]
    fn divisions() {
        let s = fair_division(&pos(1, 1, rat(1, 2)), &int(64)).unwrap();
        assert_eq!((s.pierre, s.paul), (int(32), int(32)));
        let s = fair_division(&pos(5, 3, rat(1, 2)), &int(128)).unwrap();
        assert_eq!((s.pierre, s.paul), (int(29), int(99)));
        let s = fair_division(&pos(2, 2, rat(1, 3)), &int(27)).unwrap();
        assert_eq!((s.pierre, s.paul), (int(7), int(20)));
        assert!(fair_division(&pos(2, 2, rat(1, 3)), &int(0)).is_err());
    }

    #[test]
    fn invalid_positions() {
        assert!(GamePosition::new(0, 2, rat(1, 2)).is_err());
        assert!(GamePosition::new(1, 2, rat(3, 2)).is_err());
        assert!(GamePosition::new(1, 2, rat(-1, 2)).is_err());
        assert!(matches!(
            enumeration_oracle(&pos(12, 11, rat(1, 2))),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn degenerate_probabilities() {
        for (p, pierre) in [(int(0), int(0)), (int(1), int(1))] {
            let g = pos(3, 2, p);
            assert_eq!(chance_bernoulli(&g).pierre, pierre);
            assert_eq!(chance_montmort(&g).pierre, pierre);
        }
    }

    #[test]
    fn all_routes_agree_on_grid() {
        for n in 1..=8 {
            for m in 1..=8 {
                for p in [rat(1, 2), rat(1, 3), rat(2, 5), rat(9, 10)] {
                    let g = pos(n, m, p);
                    let b = chance_bernoulli(&g);
                    assert_eq!(b, chance_montmort(&g));
                    assert_eq!(b, enumeration_oracle(&g).unwrap());
                    assert_eq!(b.sum(), int(1));
                }
            }
        }
    }

    #[test]
    fn monotone_in_p() {
        for (n, m) in [(1, 1), (3, 2), (2, 5), (6, 6)] {
            let values: Vec<_> = (0..=20)
                .map(|j| chance_montmort(&pos(n, m, rat(j, 20))).pierre)
                .collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]), "n={n} m={m}");
        }
    }

    #[test]
    fn multi_player_examples() {
        let p = rat(2, 7);
        let two = MultiPosition::new(vec![1, 1], vec![p.clone(), int(1) - &p]).unwrap();
        assert_eq!(multi_player_chances(&two), vec![p.clone(), int(1) - &p]);

        let g = pos(4, 3, p.clone());
        let two = MultiPosition::new(vec![4, 3], vec![p.clone(), int(1) - &p]).unwrap();
        let c = chance_montmort(&g);
        assert_eq!(multi_player_chances(&two), vec![c.pierre, c.paul]);

        let third = rat(1, 3);
        let three = MultiPosition::new(vec![1, 1, 1], vec![third.clone(); 3]).unwrap();
        assert_eq!(multi_player_chances(&three), vec![third; 3]);
    }

    #[test]
    fn multi_player_matches_enumeration() {
        let cases = [
            (vec![2, 3, 2], vec![rat(1, 2), rat(1, 3), rat(1, 6)]),
            (vec![3, 1, 4], vec![rat(1, 5), rat(1, 10), rat(7, 10)]),
            (vec![2, 2, 2, 2], vec![rat(1, 4); 4]),
            (vec![3, 2, 2, 1], vec![rat(2, 5), rat(1, 5), rat(3, 10), rat(1, 10)]),
        ];
        for (needs, probs) in cases {
            let pos = MultiPosition::new(needs, probs).unwrap();
            let dp = multi_player_chances(&pos);
            assert_eq!(dp, multi_enumeration_oracle(&pos).unwrap());
            assert_eq!(dp.iter().sum::<Rational>(), int(1));
        }
    }

    #[test]
    fn multi_position_validation() {
        assert!(MultiPosition::new(vec![1], vec![int(1)]).is_err());
        assert!(MultiPosition::new(vec![1, 2], vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(MultiPosition::new(vec![1, 0], vec![rat(1, 2), rat(1, 2)]).is_err());
        assert!(MultiPosition::new(vec![1, 2], vec![rat(3, 2), rat(-1, 2)]).is_err());
    }

    fn multi_position() -> impl Strategy<Value = MultiPosition> {
        (2usize..=4)
            .prop_flat_map(|k| {
                (
                    proptest::collection::vec(1u64..=5, k),
                    proptest::collection::vec(0i64..=10, k),
                )
            })
            .prop_filter_map("some positive weight", |(needs, weights)| {
                let total: i64 = weights.iter().sum();
                (total > 0).then(|| {
                    let probs = weights.iter().map(|&w| rat(w, total)).collect();
                    MultiPosition::new(needs, probs).unwrap()
                })
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn multi_player_chances_sum_to_one(pos in multi_position()) {
            let chances = multi_player_chances(&pos);
            prop_assert_eq!(chances.iter().sum::<Rational>(), int(1));
            prop_assert!(chances.iter().all(|c| !c.is_negative()));
        }
    }
}
