//! Conversion of an M-winning coalition set into an equivalent sequential
//! unanimity sequence.
//!
//! A backstop voter `i` is fixed first and every coalition containing it is
//! discarded. Each later iteration `k` selects a subset `N_k` with
//!
//! 1. `|N_k| >= 2`,
//! 2. `N_k ⊊ C` for some remaining coalition `C`,
//! 3. `N_k` meeting every discarded coalition,
//!
//! restricted to inclusion-minimal subsets among those satisfying 1-3. The
//! remaining proper supersets of `N_k` are then discarded. In essential mode
//! a fourth filter applies from `k = 3` on: `N_k` may not be contained in any
//! coalition discarded by iterations `2..k-1`.
//!
//! The output is the leftover coalitions followed by `N_{k*-1}, ..., N_2`
//! and the backstop singleton.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalition::{minimal_elements, Coalition, CoalitionSet, SubsetSequence};
use crate::error::{Error, Result};

/// An explicit run: backstop, the subsets for iterations `2, 3, ...` and
/// optionally the order of the leftover coalitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub backstop: usize,
    pub choices: Vec<Coalition>,
    pub leftover_order: Option<Vec<Coalition>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionMode {
    /// Voter 1 as backstop, then the first candidate in canonical order.
    Lexicographic,
    /// Uniform choices drawn from a ChaCha8 stream with this seed.
    Seeded(u64),
    Scripted(Script),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionPolicy {
    pub mode: SelectionMode,
    pub essential: bool,
}

impl SelectionPolicy {
    pub fn lexicographic() -> Self {
        SelectionPolicy {
            mode: SelectionMode::Lexicographic,
            essential: false,
        }
    }

    pub fn seeded(seed: u64) -> Self {
        SelectionPolicy {
            mode: SelectionMode::Seeded(seed),
            essential: false,
        }
    }

    pub fn scripted(script: Script) -> Self {
        SelectionPolicy {
            mode: SelectionMode::Scripted(script),
            essential: false,
        }
    }

    pub fn essential(mut self, on: bool) -> Self {
        self.essential = on;
        self
    }
}

impl Default for SelectionPolicy {
    fn default() -> Self {
        Self::lexicographic()
    }
}

/// Working state before iteration `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg1State {
    pub k: usize,
    pub backstop: usize,
    /// `N_2, ..., N_{k-1}` in selection order.
    pub chosen: Vec<Coalition>,
    /// `C_{k-1}`.
    pub remaining: CoalitionSet,
    /// `D_{k-1}`.
    pub discarded: CoalitionSet,
    /// `E_2, ..., E_{k-1}`: coalitions discarded at each iteration.
    pub batches: Vec<CoalitionSet>,
}

impl Alg1State {
    pub fn start(cs: &CoalitionSet, backstop: usize) -> Result<Self> {
        let n = cs.n();
        if backstop == 0 || backstop > n {
            return Err(Error::VoterOutOfRange { voter: backstop, n });
        }
        let (discarded, remaining): (Vec<Coalition>, Vec<Coalition>) =
            cs.iter().partition(|c| c.contains(backstop));
        Ok(Alg1State {
            k: 2,
            backstop,
            chosen: Vec::new(),
            remaining: CoalitionSet::from_parts(n, remaining),
            discarded: CoalitionSet::from_parts(n, discarded),
            batches: Vec::new(),
        })
    }

    fn n(&self) -> usize {
        self.remaining.n()
    }

    fn later_discards(&self) -> impl Iterator<Item = &Coalition> {
        self.batches.iter().flat_map(|b| b.iter())
    }

    /// Applies `N_k = subset` without checking the criteria and returns `E_k`.
    fn accept(&mut self, subset: Coalition) -> CoalitionSet {
        let n = self.n();
        let (removed, kept): (Vec<Coalition>, Vec<Coalition>) = self
            .remaining
            .iter()
            .partition(|c| subset.is_proper_subset(**c));
        let batch = CoalitionSet::from_parts(n, removed);
        let mut discarded: Vec<Coalition> = self.discarded.as_slice().to_vec();
        discarded.extend(batch.iter().copied());
        self.remaining = CoalitionSet::from_parts(n, kept);
        self.discarded = CoalitionSet::from_parts(n, discarded);
        self.batches.push(batch.clone());
        self.chosen.push(subset);
        self.k += 1;
        batch
    }

    /// Why `subset` is not an admissible `N_k`, if it is not.
    pub fn rejection(&self, subset: Coalition, essential: bool) -> Option<String> {
        if subset.len() < 2 {
            return Some(format!("(i) {subset} has fewer than two voters"));
        }
        if !self.remaining.iter().any(|c| subset.is_proper_subset(*c)) {
            return Some(format!(
                "(ii) {subset} is not a proper subset of any remaining coalition"
            ));
        }
        if let Some(d) = self.discarded.iter().find(|d| !d.intersects(subset)) {
            return Some(format!("(iii) {subset} misses discarded coalition {d}"));
        }
        let candidates = self.criteria_candidates();
        if let Some(inner) = candidates.iter().find(|c| c.is_proper_subset(subset)) {
            return Some(format!(
                "proviso: {subset} is a proper superset of admissible {inner}"
            ));
        }
        if essential && self.k >= 3 {
            if let Some(c) = self.later_discards().find(|c| subset.is_subset(**c)) {
                return Some(format!(
                    "(iv) {subset} is contained in previously discarded coalition {c}"
                ));
            }
        }
        None
    }

    /// Every subset satisfying criteria (i)-(iii), canonical order.
    fn criteria_candidates(&self) -> BTreeSet<Coalition> {
        let mut pool = BTreeSet::new();
        for &c in self.remaining.iter() {
            for sub in c.subsets() {
                if sub.len() >= 2
                    && sub != c
                    && !pool.contains(&sub)
                    && self.discarded.iter().all(|d| d.intersects(sub))
                {
                    pool.insert(sub);
                }
            }
        }
        pool
    }
}

/// Admissible choices for `N_k` in canonical order. Empty means the
/// algorithm stops.
pub fn candidate_subsets(state: &Alg1State, essential: bool) -> Vec<Coalition> {
    let minimal = minimal_elements(&state.criteria_candidates());
    if essential && state.k >= 3 {
        minimal
            .into_iter()
            .filter(|n| state.later_discards().all(|c| !n.is_subset(*c)))
            .collect()
    } else {
        minimal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg1Step {
    pub k: usize,
    pub candidates: Vec<Coalition>,
    pub chosen: Coalition,
    /// `E_k`.
    pub removed: Vec<Coalition>,
    /// `C_k` after the step.
    pub remaining: Vec<Coalition>,
    /// `D_k` after the step.
    pub discarded: Vec<Coalition>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg1Trace {
    pub backstop: usize,
    /// `C_1`.
    pub initial_remaining: Vec<Coalition>,
    /// `D_1`.
    pub initial_discarded: Vec<Coalition>,
    pub steps: Vec<Alg1Step>,
    /// `C*`, in output order.
    pub leftovers: Vec<Coalition>,
}

enum Chooser<'a> {
    Lexicographic,
    Seeded(Box<ChaCha8Rng>),
    Scripted(&'a Script, usize),
}

pub fn run_alg1(
    cs: &CoalitionSet,
    policy: &SelectionPolicy,
) -> Result<(SubsetSequence, Alg1Trace)> {
    if !cs.is_validated() {
        return Err(Error::NotValidated);
    }
    let n = cs.n();
    let mut chooser = match &policy.mode {
        SelectionMode::Lexicographic => Chooser::Lexicographic,
        SelectionMode::Seeded(seed) => Chooser::Seeded(Box::new(ChaCha8Rng::seed_from_u64(*seed))),
        SelectionMode::Scripted(script) => Chooser::Scripted(script, 0),
    };
    let backstop = match &mut chooser {
        Chooser::Lexicographic => 1,
        Chooser::Seeded(rng) => rng.gen_range(1..=n),
        Chooser::Scripted(script, _) => script.backstop,
    };
    let mut state = Alg1State::start(cs, backstop)?;
    let mut trace = Alg1Trace {
        backstop,
        initial_remaining: state.remaining.as_slice().to_vec(),
        initial_discarded: state.discarded.as_slice().to_vec(),
        steps: Vec::new(),
        leftovers: Vec::new(),
    };

    loop {
        let candidates = candidate_subsets(&state, policy.essential);
        let choice = match &mut chooser {
            Chooser::Lexicographic => candidates.first().copied(),
            Chooser::Seeded(rng) => candidates.choose(rng).copied(),
            Chooser::Scripted(script, next) => match script.choices.get(*next) {
                Some(&choice) => {
                    if let Some(reason) = state.rejection(choice, policy.essential) {
                        return Err(Error::ScriptRejected {
                            k: state.k,
                            choice,
                            reason,
                        });
                    }
                    *next += 1;
                    Some(choice)
                }
                None if candidates.is_empty() => None,
                None => {
                    return Err(Error::ScriptIncomplete {
                        k: state.k,
                        available: candidates.len(),
                    })
                }
            },
        };
        let Some(choice) = choice else { break };
        let k = state.k;
        let removed = state.accept(choice);
        debug_assert!(!removed.is_empty());
        debug_assert_eq!(state.remaining.len() + state.discarded.len(), cs.len());
        trace.steps.push(Alg1Step {
            k,
            candidates,
            chosen: choice,
            removed: removed.as_slice().to_vec(),
            remaining: state.remaining.as_slice().to_vec(),
            discarded: state.discarded.as_slice().to_vec(),
        });
    }

    let leftovers = match &policy.mode {
        SelectionMode::Scripted(Script {
            leftover_order: Some(order),
            ..
        }) => {
            let given: BTreeSet<Coalition> = order.iter().copied().collect();
            let expected: BTreeSet<Coalition> = state.remaining.iter().copied().collect();
            if given != expected || given.len() != order.len() {
                return Err(Error::LeftoverOrder(format!(
                    "expected a permutation of {}",
                    state.remaining
                )));
            }
            order.clone()
        }
        _ => state.remaining.as_slice().to_vec(),
    };
    trace.leftovers = leftovers.clone();

    let mut sets = leftovers;
    sets.extend(state.chosen.iter().rev().copied());
    sets.push(Coalition::singleton(backstop));
    let seq = SubsetSequence::from_coalitions(n, sets)?;
    let report = seq.validate();
    if !report.is_pass() {
        return Err(Error::Internal(format!(
            "produced invalid sequence: {report}"
        )));
    }
    Ok((seq, trace))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyLimits {
    pub max_sequences: usize,
    /// Cap on search-tree nodes (accepted subsets) across all backstops.
    pub max_iterations: usize,
}

impl Default for FamilyLimits {
    fn default() -> Self {
        FamilyLimits {
            max_sequences: 10_000,
            max_iterations: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    /// Distinct sequences, sorted; leftovers are in canonical order.
    pub sequences: Vec<SubsetSequence>,
    pub truncated: bool,
}

/// Every output reachable by some backstop and some sequence of admissible
/// choices, up to the ordering of leftovers.
pub fn enumerate_alg1_family(
    cs: &CoalitionSet,
    limits: FamilyLimits,
    essential: bool,
) -> Result<Family> {
    if !cs.is_validated() {
        return Err(Error::NotValidated);
    }
    struct Walk {
        found: BTreeSet<SubsetSequence>,
        nodes: usize,
        truncated: bool,
        limits: FamilyLimits,
        essential: bool,
    }

    impl Walk {
        fn visit(&mut self, state: &Alg1State) -> Result<()> {
            if self.truncated {
                return Ok(());
            }
            let candidates = candidate_subsets(state, self.essential);
            if candidates.is_empty() {
                let mut sets = state.remaining.as_slice().to_vec();
                sets.extend(state.chosen.iter().rev().copied());
                sets.push(Coalition::singleton(state.backstop));
                self.found
                    .insert(SubsetSequence::from_coalitions(state.n(), sets)?);
                if self.found.len() >= self.limits.max_sequences {
                    self.truncated = true;
                }
                return Ok(());
            }
            for choice in candidates {
                if self.nodes >= self.limits.max_iterations {
                    self.truncated = true;
                    return Ok(());
                }
                self.nodes += 1;
                let mut next = state.clone();
                next.accept(choice);
                self.visit(&next)?;
                if self.truncated {
                    return Ok(());
                }
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        found: BTreeSet::new(),
        nodes: 0,
        truncated: false,
        limits,
        essential,
    };
    for backstop in 1..=cs.n() {
        walk.visit(&Alg1State::start(cs, backstop)?)?;
        if walk.truncated {
            break;
        }
    }
    Ok(Family {
        sequences: walk.found.into_iter().collect(),
        truncated: walk.truncated,
    })
}
