//! Random strong simple games and random rule sequences.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coalition::{check_population, Coalition, CoalitionSet, SubsetSequence};
use crate::error::{Error, Result};

/// Largest population for which whole truth tables are built here.
pub const TABLE_BOUND: usize = 16;

fn check_table(n: usize) -> Result<()> {
    check_population(n)?;
    if n > TABLE_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: TABLE_BOUND,
        });
    }
    Ok(())
}

/// Minimal winning coalitions of a monotone game given by its truth table,
/// validated.
pub fn from_winning(n: usize, winning: &[bool]) -> Result<CoalitionSet> {
    check_table(n)?;
    if winning.len() != 1 << n {
        return Err(Error::DimensionMismatch {
            expected: 1 << n,
            found: winning.len(),
        });
    }
    let minimal = (1..1u64 << n).map(Coalition::from_mask).filter(|c| {
        winning[c.mask() as usize] && c.voters().all(|v| !winning[c.without(v).mask() as usize])
    });
    let mut cs = CoalitionSet::from_coalitions(n, minimal)?;
    cs.validate()?;
    Ok(cs)
}

/// The weighted game `w(C) >= q`, validated when it is strong.
pub fn weighted_game(weights: &[u64], quota: u64) -> Result<CoalitionSet> {
    let n = weights.len();
    check_table(n)?;
    let winning: Vec<bool> = (0..1u64 << n)
        .map(|m| {
            Coalition::from_mask(m)
                .voters()
                .map(|v| weights[v - 1])
                .sum::<u64>()
                >= quota
        })
        .collect();
    from_winning(n, &winning)
}

/// A random strong simple game on `n` voters: a weighted majority game with
/// odd total weight, then `flips` random exchanges of a minimal winning
/// coalition for its complement. Each exchange keeps the game monotone and
/// self-dual, so the result is M-winning and usually not weighted.
pub fn random_strong_game<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    flips: usize,
) -> Result<CoalitionSet> {
    check_table(n)?;
    let mut weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
    let total: u64 = weights.iter().sum();
    if total.is_multiple_of(2) {
        let v = rng.gen_range(0..n);
        weights[v] += 1;
    }
    let total: u64 = weights.iter().sum();
    let quota = total / 2 + 1;
    let weight = |m: u64| -> u64 {
        Coalition::from_mask(m)
            .voters()
            .map(|v| weights[v - 1])
            .sum()
    };
    let mut winning: Vec<bool> = (0..1u64 << n).map(|m| weight(m) >= quota).collect();
    let full = Coalition::full(n).mask();

    for _ in 0..flips {
        let minimal: Vec<u64> = (1..full)
            .filter(|&m| {
                winning[m as usize]
                    && Coalition::from_mask(m)
                        .voters()
                        .all(|v| !winning[(m & !(1u64 << (v - 1))) as usize])
            })
            .collect();
        let Some(&m) = minimal.choose(rng) else { break };
        winning[m as usize] = false;
        winning[(full ^ m) as usize] = true;
    }
    from_winning(n, &winning)
}

/// A random valid sequence: a backstop voter, then up to `max_len - 1`
/// distinct non-empty subsets avoiding it, in random order.
pub fn random_sequence<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_len: usize,
) -> Result<SubsetSequence> {
    check_population(n)?;
    let backstop = rng.gen_range(1..=n);
    let pool = Coalition::full(n).without(backstop);
    let available = if pool.is_empty() {
        0
    } else {
        (1u128 << pool.len()) - 1
    };
    let extra = max_len
        .saturating_sub(1)
        .min(available.min(usize::MAX as u128) as usize);
    let count = rng.gen_range(0..=extra);
    let voters = pool.to_vec();
    let mut chosen = BTreeSet::new();
    let mut sets = Vec::with_capacity(count + 1);
    while sets.len() < count {
        let s = voters
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .fold(Coalition::from_mask(0), |acc, &v| acc.with(v));
        if !s.is_empty() && chosen.insert(s) {
            sets.push(s);
        }
    }
    sets.push(Coalition::singleton(backstop));
    SubsetSequence::from_coalitions(n, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weighted_games() {
        let jm = weighted_game(&[4, 4, 2, 2, 1, 1, 1], 8).unwrap();
        assert!(jm.is_validated());
        assert_eq!(jm, crate::instances::job_market());
        // even total with a tie is not strong
        let tie = weighted_game(&[1, 1], 1).unwrap();
        assert!(!tie.is_validated());
    }

    #[test]
    fn random_games_are_m_winning() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=7 {
            for flips in [0, 3, 10] {
                let cs = random_strong_game(&mut rng, n, flips).unwrap();
                assert!(cs.is_validated(), "{cs}");
            }
        }
    }

    #[test]
    fn random_sequences_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8 {
            for _ in 0..20 {
                let seq = random_sequence(&mut rng, n, 10).unwrap();
                assert!(seq.is_valid(), "{seq}");
                assert!(seq.len() <= 10);
            }
        }
    }
}
