//! Ballots, profiles and outcomes.
//!
//! Profiles enumerate in a canonical order with voter 1 as the least
//! significant position: strict profile `k` has voter `i` voting `b` iff bit
//! `i - 1` of `k` is set; ternary profile `k` reads base-3 digits
//! `0 -> a`, `1 -> b`, `2 -> 0`.

use std::fmt;
use std::str::FromStr;

use crate::coalition::{check_population, Coalition};
use crate::error::{Error, Result};

/// A ballot or an outcome: one of the two candidates, or `0` (indifference
/// for a ballot, a tie for an outcome).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Choice {
    A,
    B,
    Zero,
}

impl Choice {
    /// The neutral permutation `a <-> b`, fixing `0`.
    pub fn swap(self) -> Choice {
        match self {
            Choice::A => Choice::B,
            Choice::B => Choice::A,
            Choice::Zero => Choice::Zero,
        }
    }

    pub fn is_strict(self) -> bool {
        self != Choice::Zero
    }

    pub fn as_char(self) -> char {
        match self {
            Choice::A => 'a',
            Choice::B => 'b',
            Choice::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Choice> {
        match c {
            'a' | 'A' => Some(Choice::A),
            'b' | 'B' => Some(Choice::B),
            '0' => Some(Choice::Zero),
            _ => None,
        }
    }

    /// Rank for a voter whose sincere ballot is `truth`: 0 is best.
    /// Strict voters order `truth > 0 > other`; indifferent voters are
    /// indifferent between everything.
    pub fn rank_for(self, truth: Choice) -> u8 {
        match truth {
            Choice::Zero => 0,
            _ if self == truth => 0,
            _ if self == Choice::Zero => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Read access to ballots, as used by the sequential evaluators.
pub trait BallotSource {
    fn voter_count(&self) -> usize;

    fn ballot(&self, voter: usize) -> Choice;

    /// The common strict ballot of every voter in `set`, if there is one.
    fn unanimous(&self, set: Coalition) -> Option<Choice> {
        let mut common = None;
        for voter in set.voters() {
            let ballot = self.ballot(voter);
            if !ballot.is_strict() {
                return None;
            }
            match common {
                None => common = Some(ballot),
                Some(c) if c != ballot => return None,
                Some(_) => {}
            }
        }
        common
    }
}

/// A profile on the strict domain `{a, b}^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrictProfile {
    n: usize,
    b_voters: u64,
}

impl StrictProfile {
    pub fn new(n: usize, ballots: &[Choice]) -> Result<Self> {
        check_population(n)?;
        if ballots.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ballots.len(),
            });
        }
        let mut b_voters = 0;
        for (pos, &c) in ballots.iter().enumerate() {
            match c {
                Choice::A => {}
                Choice::B => b_voters |= 1 << pos,
                Choice::Zero => {
                    return Err(Error::Profile(format!(
                        "voter {} is indifferent on the strict domain",
                        pos + 1
                    )))
                }
            }
        }
        Ok(StrictProfile { n, b_voters })
    }

    /// Profile number `index` in canonical order.
    pub fn from_index(n: usize, index: u64) -> Self {
        debug_assert!(n < 64 && index < (1 << n));
        StrictProfile { n, b_voters: index }
    }

    /// Profile where exactly the voters of `a_voters` vote `a`.
    pub fn with_a_voters(n: usize, a_voters: Coalition) -> Self {
        StrictProfile {
            n,
            b_voters: a_voters.complement(n).mask(),
        }
    }

    pub fn index(&self) -> u64 {
        self.b_voters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a_voters(&self) -> Coalition {
        Coalition::from_mask(self.b_voters).complement(self.n)
    }

    pub fn b_voters(&self) -> Coalition {
        Coalition::from_mask(self.b_voters)
    }

    pub fn swapped(&self) -> Self {
        StrictProfile {
            n: self.n,
            b_voters: self.a_voters().mask(),
        }
    }

    pub fn with_ballot(&self, voter: usize, choice: Choice) -> Self {
        let bit = 1u64 << (voter - 1);
        let b_voters = match choice {
            Choice::B => self.b_voters | bit,
            _ => self.b_voters & !bit,
        };
        StrictProfile {
            n: self.n,
            b_voters,
        }
    }

    pub fn to_ternary(&self) -> TernaryProfile {
        TernaryProfile {
            n: self.n,
            a: self.a_voters().mask(),
            b: self.b_voters,
        }
    }
}

impl BallotSource for StrictProfile {
    fn voter_count(&self) -> usize {
        self.n
    }

    fn ballot(&self, voter: usize) -> Choice {
        if self.b_voters & (1 << (voter - 1)) != 0 {
            Choice::B
        } else {
            Choice::A
        }
    }

    fn unanimous(&self, set: Coalition) -> Option<Choice> {
        if set.is_empty() {
            None
        } else if set.mask() & self.b_voters == 0 {
            Some(Choice::A)
        } else if set.is_subset(self.b_voters()) {
            Some(Choice::B)
        } else {
            None
        }
    }
}

impl fmt::Display for StrictProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for voter in 1..=self.n {
            write!(f, "{}", self.ballot(voter))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictProfile({self})")
    }
}

impl FromStr for StrictProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = TernaryProfile::from_str(s)?;
        t.to_strict()
            .ok_or_else(|| Error::Profile(format!("'{s}' contains indifferent ballots")))
    }
}

/// A profile on the full domain `{a, b, 0}^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryProfile {
    n: usize,
    a: u64,
    b: u64,
}

impl TernaryProfile {
    pub fn new(n: usize, ballots: &[Choice]) -> Result<Self> {
        check_population(n)?;
        if ballots.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ballots.len(),
            });
        }
        let (mut a, mut b) = (0u64, 0u64);
        for (pos, &c) in ballots.iter().enumerate() {
            match c {
                Choice::A => a |= 1 << pos,
                Choice::B => b |= 1 << pos,
                Choice::Zero => {}
            }
        }
        Ok(TernaryProfile { n, a, b })
    }

    /// Profile number `index` in canonical base-3 order.
    pub fn from_index(n: usize, mut index: u64) -> Self {
        let (mut a, mut b) = (0u64, 0u64);
        for pos in 0..n {
            match index % 3 {
                0 => a |= 1 << pos,
                1 => b |= 1 << pos,
                _ => {}
            }
            index /= 3;
        }
        TernaryProfile { n, a, b }
    }

    pub fn index(&self) -> u64 {
        (0..self.n).rev().fold(0u64, |acc, pos| {
            let digit = if self.a & (1 << pos) != 0 {
                0
            } else if self.b & (1 << pos) != 0 {
                1
            } else {
                2
            };
            acc * 3 + digit
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn voters_for(&self, choice: Choice) -> Coalition {
        Coalition::from_mask(match choice {
            Choice::A => self.a,
            Choice::B => self.b,
            Choice::Zero => !(self.a | self.b) & Coalition::full(self.n).mask(),
        })
    }

    pub fn count(&self, choice: Choice) -> usize {
        self.voters_for(choice).len()
    }

    pub fn swapped(&self) -> Self {
        TernaryProfile {
            n: self.n,
            a: self.b,
            b: self.a,
        }
    }

    pub fn with_ballot(&self, voter: usize, choice: Choice) -> Self {
        let bit = 1u64 << (voter - 1);
        let (mut a, mut b) = (self.a & !bit, self.b & !bit);
        match choice {
            Choice::A => a |= bit,
            Choice::B => b |= bit,
            Choice::Zero => {}
        }
        TernaryProfile { n: self.n, a, b }
    }

    pub fn is_strict(&self) -> bool {
        (self.a | self.b) == Coalition::full(self.n).mask()
    }

    pub fn to_strict(&self) -> Option<StrictProfile> {
        self.is_strict().then_some(StrictProfile {
            n: self.n,
            b_voters: self.b,
        })
    }

    /// True if `set` is non-empty and every member reports `0`.
    pub fn unanimous_indifferent(&self, set: Coalition) -> bool {
        !set.is_empty() && set.mask() & (self.a | self.b) == 0
    }

    /// True if some voter of `set` reports `choice`.
    pub fn has_witness(&self, set: Coalition, choice: Choice) -> bool {
        set.intersects(self.voters_for(choice))
    }
}

impl BallotSource for TernaryProfile {
    fn voter_count(&self) -> usize {
        self.n
    }

    fn ballot(&self, voter: usize) -> Choice {
        let bit = 1u64 << (voter - 1);
        if self.a & bit != 0 {
            Choice::A
        } else if self.b & bit != 0 {
            Choice::B
        } else {
            Choice::Zero
        }
    }

    fn unanimous(&self, set: Coalition) -> Option<Choice> {
        if set.is_empty() {
            None
        } else if set.mask() & !self.a == 0 {
            Some(Choice::A)
        } else if set.mask() & !self.b == 0 {
            Some(Choice::B)
        } else {
            None
        }
    }
}

impl From<StrictProfile> for TernaryProfile {
    fn from(p: StrictProfile) -> Self {
        p.to_ternary()
    }
}

impl fmt::Display for TernaryProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for voter in 1..=self.n {
            write!(f, "{}", self.ballot(voter))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryProfile({self})")
    }
}

impl FromStr for TernaryProfile {
    type Err = Error;

    /// Parses strings such as `"ab0ba"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let ballots = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .enumerate()
            .map(|(pos, c)| {
                Choice::from_char(c).ok_or_else(|| {
                    Error::Profile(format!(
                        "character '{c}' at position {} is not a, b or 0",
                        pos + 1
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if ballots.is_empty() {
            return Err(Error::Profile("empty profile".into()));
        }
        TernaryProfile::new(ballots.len(), &ballots)
    }
}

/// How an outcome was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// A coalition of the winning set was unanimous.
    Coalition(Coalition),
    /// Set `S_index` (1-based) of the sequence stopped the scan.
    Step { index: usize, set: Coalition },
    /// The default rule decided.
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    pub value: Choice,
    pub decided_by: Decision,
}

impl Outcome {
    pub fn decisive_index(&self) -> Option<usize> {
        match self.decided_by {
            Decision::Step { index, .. } => Some(index),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<Coalition> {
        match self.decided_by {
            Decision::Coalition(c) | Decision::Step { set: c, .. } => Some(c),
            Decision::Default => None,
        }
    }
}
