//! Coalitions, coalition sets and subset sequences.
//!
//! A [`Coalition`] is a bit mask over voters `1..=n` (voter `i` lives in bit
//! `i - 1`). Collections are kept in canonical order: ascending by
//! cardinality, then by numeric mask.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result, MAX_VOTERS};

/// Population bound for the exhaustive Moulin-property scan.
pub const DEFAULT_SCAN_BOUND: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u64) -> Self {
        Coalition(mask)
    }

    /// Builds a coalition from 1-based voter indices, checking each against `n`.
    pub fn from_voters(n: usize, voters: &[usize]) -> Result<Self> {
        check_population(n)?;
        let mut mask = 0u64;
        for &voter in voters {
            if voter == 0 || voter > n {
                return Err(Error::VoterOutOfRange { voter, n });
            }
            mask |= 1 << (voter - 1);
        }
        Ok(Coalition(mask))
    }

    pub fn singleton(voter: usize) -> Self {
        debug_assert!((1..=MAX_VOTERS).contains(&voter));
        Coalition(1 << (voter - 1))
    }

    /// The grand coalition `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, voter: usize) -> bool {
        (1..=MAX_VOTERS).contains(&voter) && self.0 & (1 << (voter - 1)) != 0
    }

    pub fn is_subset(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Coalition) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: Coalition) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub fn with(self, voter: usize) -> Coalition {
        self.union(Coalition::singleton(voter))
    }

    pub fn without(self, voter: usize) -> Coalition {
        self.difference(Coalition::singleton(voter))
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Coalition {
        Coalition(!self.0 & Coalition::full(n).0)
    }

    /// Largest voter index present, or 0 for the empty coalition.
    pub fn max_voter(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Voter indices in ascending order.
    pub fn voters(self) -> Voters {
        Voters(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.voters().collect()
    }

    /// Every subset of this coalition, including itself and the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }
}

impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, voter) in self.voters().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{voter}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct Voters(u64);

impl Iterator for Voters {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit + 1)
    }
}

/// Submask enumeration in ascending numeric order.
pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next?;
        self.next = if current == self.full {
            None
        } else {
            Some((current.wrapping_sub(self.full)) & self.full)
        };
        Some(Coalition(current))
    }
}

pub(crate) fn check_population(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VOTERS {
        Err(Error::PopulationSize(n))
    } else {
        Ok(())
    }
}

/// First pair `(smaller, larger)` with `smaller ⊊ larger`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalityViolation {
    pub smaller: Coalition,
    pub larger: Coalition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoulinMethod {
    /// `C` contains an element iff `C` meets every element.
    Direct,
    /// Exactly one of `C` and `N \ C` contains an element.
    Dual,
}

/// Outcome of the Moulin-property scan. The witness is the first subset, in
/// ascending mask order, where the tested condition breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoulinCheck {
    Pass,
    Counterexample(Coalition),
}

impl MoulinCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, MoulinCheck::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwcsReport {
    pub empty_collection: bool,
    pub minimality: Option<MinimalityViolation>,
    pub moulin: MoulinCheck,
}

impl MwcsReport {
    pub fn is_pass(&self) -> bool {
        !self.empty_collection && self.minimality.is_none() && self.moulin.is_pass()
    }
}

impl fmt::Display for MwcsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return f.write_str("valid M-winning coalition set");
        }
        let mut parts = Vec::new();
        if self.empty_collection {
            parts.push("collection is empty".to_string());
        }
        if let Some(v) = self.minimality {
            parts.push(format!("P1 violated: {} ⊊ {}", v.smaller, v.larger));
        }
        if let MoulinCheck::Counterexample(c) = self.moulin {
            parts.push(format!("P2 violated at {c}"));
        }
        f.write_str(&parts.join("; "))
    }
}

/// A canonical, duplicate-free collection of non-empty coalitions.
///
/// Equality ignores the validation flag.
#[derive(Clone)]
pub struct CoalitionSet {
    n: usize,
    items: Vec<Coalition>,
    validated: bool,
}

impl CoalitionSet {
    /// Builds a set from voter-index lists. Duplicates collapse; empty lists
    /// and out-of-range voters are rejected.
    pub fn new(n: usize, raw: &[Vec<usize>]) -> Result<Self> {
        check_population(n)?;
        let mut items = Vec::with_capacity(raw.len());
        for (index, voters) in raw.iter().enumerate() {
            if voters.is_empty() {
                return Err(Error::EmptyCoalition { index });
            }
            items.push(Coalition::from_voters(n, voters)?);
        }
        Ok(Self::from_parts(n, items))
    }

    pub fn from_coalitions<I>(n: usize, coalitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = Coalition>,
    {
        check_population(n)?;
        let full = Coalition::full(n);
        let mut items = Vec::new();
        for (index, c) in coalitions.into_iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyCoalition { index });
            }
            if !c.is_subset(full) {
                return Err(Error::VoterOutOfRange {
                    voter: c.max_voter(),
                    n,
                });
            }
            items.push(c);
        }
        Ok(Self::from_parts(n, items))
    }

    pub(crate) fn from_parts(n: usize, mut items: Vec<Coalition>) -> Self {
        items.sort_unstable();
        items.dedup();
        CoalitionSet {
            n,
            items,
            validated: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coalition> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Coalition] {
        &self.items
    }

    pub fn contains(&self, c: Coalition) -> bool {
        self.items.binary_search(&c).is_ok()
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// True if `c` contains some element of the set, i.e. `c` is winning in
    /// the induced simple game.
    pub fn is_winning(&self, c: Coalition) -> bool {
        self.items.iter().any(|e| e.is_subset(c))
    }

    /// True if `c` meets every element of the set.
    pub fn is_blocking(&self, c: Coalition) -> bool {
        self.items.iter().all(|e| e.intersects(c))
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.items.iter().map(|c| c.to_vec()).collect()
    }

    /// First pair in canonical order with a proper inclusion.
    pub fn check_minimality(&self) -> Option<MinimalityViolation> {
        for (pos, &smaller) in self.items.iter().enumerate() {
            for &larger in &self.items[pos + 1..] {
                if smaller.is_proper_subset(larger) {
                    return Some(MinimalityViolation { smaller, larger });
                }
            }
        }
        None
    }

    pub fn check_moulin_property(&self, method: MoulinMethod) -> Result<MoulinCheck> {
        self.check_moulin_property_bounded(method, DEFAULT_SCAN_BOUND)
    }

    pub fn check_moulin_property_bounded(
        &self,
        method: MoulinMethod,
        bound: usize,
    ) -> Result<MoulinCheck> {
        if self.n > bound || self.n >= 64 {
            return Err(Error::BoundExceeded { n: self.n, bound });
        }
        let n = self.n;
        for mask in 0..(1u64 << n) {
            let c = Coalition(mask);
            let holds = match method {
                MoulinMethod::Direct => self.is_winning(c) == self.is_blocking(c),
                MoulinMethod::Dual => self.is_winning(c) != self.is_winning(c.complement(n)),
            };
            if !holds {
                return Ok(MoulinCheck::Counterexample(c));
            }
        }
        Ok(MoulinCheck::Pass)
    }

    /// Runs P1 and P2 (direct form) and records the verdict.
    pub fn validate(&mut self) -> Result<MwcsReport> {
        self.validate_bounded(DEFAULT_SCAN_BOUND)
    }

    pub fn validate_bounded(&mut self, bound: usize) -> Result<MwcsReport> {
        let report = MwcsReport {
            empty_collection: self.items.is_empty(),
            minimality: self.check_minimality(),
            moulin: self.check_moulin_property_bounded(MoulinMethod::Direct, bound)?,
        };
        self.validated = report.is_pass();
        Ok(report)
    }

    /// Consumes the set, returning it flagged as validated or the failing report.
    pub fn validated(mut self) -> Result<std::result::Result<Self, MwcsReport>> {
        let report = self.validate()?;
        Ok(if report.is_pass() {
            Ok(self)
        } else {
            Err(report)
        })
    }

    pub(crate) fn mark_validated(mut self) -> Self {
        self.validated = true;
        self
    }
}

impl PartialEq for CoalitionSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.items == other.items
    }
}

impl Eq for CoalitionSet {}

impl std::hash::Hash for CoalitionSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.items.hash(state);
    }
}

impl fmt::Debug for CoalitionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.items.iter()).finish()
    }
}

impl fmt::Display for CoalitionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a CoalitionSet {
    type Item = &'a Coalition;
    type IntoIter = std::slice::Iter<'a, Coalition>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceIssue {
    EmptySequence,
    EmptySet { index: usize },
    Recurring { first: usize, second: usize },
    LastNotSingleton { size: usize },
    BackstopReused { voter: usize, index: usize },
}

impl fmt::Display for SequenceIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceIssue::EmptySequence => f.write_str("sequence has no sets"),
            SequenceIssue::EmptySet { index } => write!(f, "S{index} is empty"),
            SequenceIssue::Recurring { first, second } => {
                write!(f, "S{second} repeats S{first}")
            }
            SequenceIssue::LastNotSingleton { size } => {
                write!(f, "last set has {size} voters, expected 1")
            }
            SequenceIssue::BackstopReused { voter, index } => {
                write!(f, "backstop voter {voter} also appears in S{index}")
            }
        }
    }
}

/// Validation findings for a [`SubsetSequence`]; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SequenceReport {
    pub issues: Vec<SequenceIssue>,
}

impl SequenceReport {
    pub fn is_pass(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for SequenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return f.write_str("valid sequence");
        }
        let parts: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// An ordered list of coalitions `(S_1, ..., S_K)`; valid sequences end in
/// a singleton backstop.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetSequence {
    n: usize,
    sets: Vec<Coalition>,
}

impl SubsetSequence {
    /// Parses voter-index lists. Structural problems (empty sets, repeats,
    /// non-singleton end) are left to [`SubsetSequence::validate`].
    pub fn new(n: usize, raw: &[Vec<usize>]) -> Result<Self> {
        check_population(n)?;
        let sets = raw
            .iter()
            .map(|voters| Coalition::from_voters(n, voters))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubsetSequence { n, sets })
    }

    pub fn from_coalitions(n: usize, sets: Vec<Coalition>) -> Result<Self> {
        check_population(n)?;
        let full = Coalition::full(n);
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::VoterOutOfRange {
                voter: bad.max_voter(),
                n,
            });
        }
        Ok(SubsetSequence { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Coalition] {
        &self.sets
    }

    /// `S_k` for 1-based `k`.
    pub fn get(&self, k: usize) -> Option<Coalition> {
        k.checked_sub(1).and_then(|i| self.sets.get(i).copied())
    }

    pub fn backstop(&self) -> Option<usize> {
        self.sets
            .last()
            .filter(|s| s.len() == 1)
            .and_then(|s| s.voters().next())
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|c| c.to_vec()).collect()
    }

    /// The sequence with `S_k` (1-based) removed.
    pub fn without(&self, k: usize) -> SubsetSequence {
        let mut sets = self.sets.clone();
        sets.remove(k - 1);
        SubsetSequence { n: self.n, sets }
    }

    pub fn validate(&self) -> SequenceReport {
        let mut issues = Vec::new();
        if self.sets.is_empty() {
            issues.push(SequenceIssue::EmptySequence);
            return SequenceReport { issues };
        }
        for (pos, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                issues.push(SequenceIssue::EmptySet { index: pos + 1 });
            }
        }
        let mut seen = std::collections::HashMap::new();
        for (pos, &s) in self.sets.iter().enumerate() {
            if let Some(&first) = seen.get(&s) {
                issues.push(SequenceIssue::Recurring {
                    first,
                    second: pos + 1,
                });
            } else {
                seen.insert(s, pos + 1);
            }
        }
        let last = *self.sets.last().expect("non-empty");
        if last.len() != 1 {
            issues.push(SequenceIssue::LastNotSingleton { size: last.len() });
        } else {
            let voter = last.voters().next().expect("singleton");
            for (pos, s) in self.sets[..self.sets.len() - 1].iter().enumerate() {
                if s.contains(voter) && *s != last {
                    issues.push(SequenceIssue::BackstopReused {
                        voter,
                        index: pos + 1,
                    });
                }
            }
        }
        SequenceReport { issues }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_pass()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_pass() {
            Ok(())
        } else {
            Err(Error::InvalidSequence(report.to_string()))
        }
    }
}

impl fmt::Debug for SubsetSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, s) in self.sets.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for SubsetSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Inclusion-minimal members of a collection, in canonical order.
pub(crate) fn minimal_elements(items: &BTreeSet<Coalition>) -> Vec<Coalition> {
    let mut kept: Vec<Coalition> = Vec::new();
    // canonical order visits smaller sets first, so a superset always meets
    // its subsets already in `kept`
    for &c in items {
        if !kept.iter().any(|k| k.is_proper_subset(c)) {
            kept.push(c);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, raw: &[&[usize]]) -> CoalitionSet {
        let raw: Vec<Vec<usize>> = raw.iter().map(|v| v.to_vec()).collect();
        CoalitionSet::new(n, &raw).unwrap()
    }

    #[test]
    fn canonical_order_is_cardinality_then_mask() {
        let cs = set(4, &[&[1, 2, 3], &[4], &[2, 3], &[1, 4], &[1]]);
        let lists = cs.to_lists();
        assert_eq!(
            lists,
            vec![vec![1], vec![4], vec![2, 3], vec![1, 4], vec![1, 2, 3]]
        );
    }

    #[test]
    fn duplicates_collapse() {
        let cs = set(3, &[&[1], &[1]]);
        assert_eq!(cs.to_lists(), vec![vec![1]]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            CoalitionSet::new(3, &[vec![4]]),
            Err(Error::VoterOutOfRange { voter: 4, n: 3 })
        );
        assert_eq!(
            CoalitionSet::new(3, &[vec![0]]),
            Err(Error::VoterOutOfRange { voter: 0, n: 3 })
        );
        assert_eq!(
            CoalitionSet::new(3, &[vec![1], vec![]]),
            Err(Error::EmptyCoalition { index: 1 })
        );
        assert_eq!(CoalitionSet::new(0, &[]), Err(Error::PopulationSize(0)));
        assert_eq!(CoalitionSet::new(65, &[]), Err(Error::PopulationSize(65)));
        assert!(CoalitionSet::new(64, &[vec![64]]).is_ok());
    }

    #[test]
    fn minimality_reports_first_inclusion() {
        let cs = set(2, &[&[1], &[1, 2]]);
        let v = cs.check_minimality().unwrap();
        assert_eq!(v.smaller.to_vec(), vec![1]);
        assert_eq!(v.larger.to_vec(), vec![1, 2]);
    }

    #[test]
    fn disjoint_singletons_fail_moulin() {
        let cs = set(2, &[&[1], &[2]]);
        for method in [MoulinMethod::Direct, MoulinMethod::Dual] {
            assert_eq!(
                cs.check_moulin_property(method).unwrap(),
                MoulinCheck::Counterexample(Coalition::singleton(1))
            );
        }
    }

    #[test]
    fn single_pair_of_three_fails_moulin() {
        // {1,3} is one witness; any subset that meets {1,2} without
        // containing it breaks the biconditional.
        let cs = set(3, &[&[1, 2]]);
        let direct = cs.check_moulin_property(MoulinMethod::Direct).unwrap();
        let MoulinCheck::Counterexample(w) = direct else {
            panic!("expected failure")
        };
        assert_eq!(cs.is_winning(w), !cs.is_blocking(w));
        assert!(!cs
            .check_moulin_property(MoulinMethod::Dual)
            .unwrap()
            .is_pass());
    }

    #[test]
    fn scan_bound_is_enforced() {
        let cs = set(21, &[&[1]]);
        assert_eq!(
            cs.check_moulin_property(MoulinMethod::Direct),
            Err(Error::BoundExceeded { n: 21, bound: 20 })
        );
    }

    #[test]
    fn majority_of_three_validates() {
        let mut cs = set(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(cs.validate().unwrap().is_pass());
        assert!(cs.is_validated());
    }

    #[test]
    fn subsets_enumerates_every_submask() {
        let c = Coalition::from_voters(5, &[1, 3, 5]).unwrap();
        let subs: Vec<_> = c.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(c)));
        assert_eq!(subs.first().copied(), Some(Coalition::EMPTY));
        assert_eq!(subs.last().copied(), Some(c));
    }

    #[test]
    fn sequence_validation_reports() {
        let ok = SubsetSequence::new(7, &[vec![1, 2], vec![3, 4], vec![5, 6], vec![7]]).unwrap();
        assert!(ok.validate().is_pass());

        let rec = SubsetSequence::new(3, &[vec![1, 2], vec![1, 2], vec![3]]).unwrap();
        assert_eq!(
            rec.validate().issues,
            vec![SequenceIssue::Recurring {
                first: 1,
                second: 2
            }]
        );

        let reuse = SubsetSequence::new(3, &[vec![1, 3], vec![3]]).unwrap();
        assert_eq!(
            reuse.validate().issues,
            vec![SequenceIssue::BackstopReused { voter: 3, index: 1 }]
        );

        let bad_end = SubsetSequence::new(3, &[vec![1], vec![2, 3]]).unwrap();
        assert_eq!(
            bad_end.validate().issues,
            vec![SequenceIssue::LastNotSingleton { size: 2 }]
        );

        let empty = SubsetSequence::new(3, &[vec![], vec![1]]).unwrap();
        assert_eq!(
            empty.validate().issues,
            vec![SequenceIssue::EmptySet { index: 1 }]
        );
        assert_eq!(
            SubsetSequence::new(3, &[]).unwrap().validate().issues,
            vec![SequenceIssue::EmptySequence]
        );
    }

    #[test]
    fn display_formats() {
        let c = Coalition::from_voters(7, &[3, 1, 7]).unwrap();
        assert_eq!(c.to_string(), "{1,3,7}");
        let seq = SubsetSequence::new(3, &[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(seq.to_string(), "({1,2},{3})");
    }
}
