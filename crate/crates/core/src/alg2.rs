//! Paths through a sequence and the conversion of a sequential unanimity
//! sequence into its M-winning coalition set.

use std::collections::BTreeSet;
use std::fmt;

use crate::coalition::{Coalition, CoalitionSet, SubsetSequence, DEFAULT_SCAN_BOUND};
use crate::error::{Error, Result};

pub const DEFAULT_PATH_LIMIT: usize = 1_000_000;

/// A parsimonious traversal from `S_l` to `S_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub voters: Vec<usize>,
    pub l: usize,
    pub k: usize,
}

impl Path {
    pub fn voter_set(&self) -> Coalition {
        self.voters
            .iter()
            .fold(Coalition::from_mask(0), |acc, &v| acc.with(v))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, v) in self.voters.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// All paths from `S_l` to `S_k` (1-based), depth first with voters tried in
/// ascending order. The window need not be a valid rule sequence.
pub fn enumerate_paths(
    seq: &SubsetSequence,
    l: usize,
    k: usize,
    limit: usize,
) -> Result<Vec<Path>> {
    let len = seq.len();
    if !(1 <= l && l < k && k <= len) {
        return Err(Error::Window { l, k, len });
    }
    let target = seq.sets()[k - 1];
    let start: Vec<Coalition> = seq.sets()[l - 1..k]
        .iter()
        .copied()
        .filter(|s| !s.intersects(target))
        .collect();
    let mut out = Vec::new();
    if start.is_empty() {
        return Ok(out);
    }
    let mut prefix = Vec::new();
    extend(&start, &mut prefix, &mut out, l, k, limit)?;
    Ok(out)
}

fn extend(
    rest: &[Coalition],
    prefix: &mut Vec<usize>,
    out: &mut Vec<Path>,
    l: usize,
    k: usize,
    limit: usize,
) -> Result<()> {
    let Some(&head) = rest.first() else {
        if out.len() >= limit {
            return Err(Error::PathLimit { limit, k });
        }
        out.push(Path {
            voters: prefix.clone(),
            l,
            k,
        });
        return Ok(());
    };
    for voter in head.voters() {
        let next: Vec<Coalition> = rest
            .iter()
            .copied()
            .filter(|s| !s.contains(voter))
            .collect();
        prefix.push(voter);
        extend(&next, prefix, out, l, k, limit)?;
        prefix.pop();
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneReason {
    /// Generated again at this iteration, or already a member.
    Duplicate,
    /// A proper superset of the given member.
    Superset(Coalition),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pruned {
    pub coalition: Coalition,
    pub reason: PruneReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg2Step {
    pub k: usize,
    pub path_count: usize,
    /// `C^p_k` as distinct voter sets, in generation order.
    pub added: Vec<Coalition>,
    pub pruned: Vec<Pruned>,
    /// `C_k`, canonical order.
    pub collection: Vec<Coalition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alg2Trace {
    pub steps: Vec<Alg2Step>,
}

impl Alg2Trace {
    pub fn all_pruned(&self) -> impl Iterator<Item = &Pruned> {
        self.steps.iter().flat_map(|s| s.pruned.iter())
    }
}

pub fn run_alg2(seq: &SubsetSequence) -> Result<(CoalitionSet, Alg2Trace)> {
    run_alg2_with_limit(seq, DEFAULT_PATH_LIMIT)
}

pub fn run_alg2_with_limit(
    seq: &SubsetSequence,
    path_limit: usize,
) -> Result<(CoalitionSet, Alg2Trace)> {
    seq.require_valid()?;
    let n = seq.n();
    let sets = seq.sets();
    let mut current: BTreeSet<Coalition> = BTreeSet::from([sets[0]]);
    let mut trace = Alg2Trace::default();
    trace.steps.push(Alg2Step {
        k: 1,
        path_count: 0,
        added: vec![sets[0]],
        pruned: Vec::new(),
        collection: vec![sets[0]],
    });

    for k in 2..=sets.len() {
        let target = sets[k - 1];
        let paths = enumerate_paths(seq, 1, k, path_limit)?;
        let generated: Vec<Coalition> = if paths.is_empty() {
            vec![target]
        } else {
            paths.iter().map(|p| p.voter_set().union(target)).collect()
        };

        let mut added = Vec::new();
        let mut pruned = Vec::new();
        let mut fresh = BTreeSet::new();
        let mut duplicates = BTreeSet::new();
        for c in generated {
            if current.contains(&c) || !fresh.insert(c) {
                duplicates.insert(c);
            } else {
                added.push(c);
            }
        }
        pruned.extend(duplicates.into_iter().map(|c| Pruned {
            coalition: c,
            reason: PruneReason::Duplicate,
        }));

        current.extend(fresh);
        let mut kept = BTreeSet::new();
        for &c in &current {
            // canonical order puts every proper subset of `c` before it
            match kept.iter().find(|m: &&Coalition| m.is_proper_subset(c)) {
                Some(&m) => pruned.push(Pruned {
                    coalition: c,
                    reason: PruneReason::Superset(m),
                }),
                None => {
                    kept.insert(c);
                }
            }
        }
        current = kept;
        trace.steps.push(Alg2Step {
            k,
            path_count: paths.len(),
            added,
            pruned,
            collection: current.iter().copied().collect(),
        });
    }

    let mut cs = CoalitionSet::from_parts(n, current.into_iter().collect());
    if n <= DEFAULT_SCAN_BOUND {
        let report = cs.validate()?;
        if !report.is_pass() {
            return Err(Error::Internal(format!(
                "converted coalition set is not M-winning: {report}"
            )));
        }
    } else {
        // too large for the exhaustive P2 scan; check what is cheap
        if let Some(v) = cs.check_minimality() {
            return Err(Error::Internal(format!(
                "converted coalition set violates minimality: {} ⊊ {}",
                v.smaller, v.larger
            )));
        }
        if !pairwise_intersecting(&cs) {
            return Err(Error::Internal(
                "converted coalition set has disjoint members".into(),
            ));
        }
        cs = cs.mark_validated();
    }
    Ok((cs, trace))
}

pub(crate) fn pairwise_intersecting(cs: &CoalitionSet) -> bool {
    let items = cs.as_slice();
    items
        .iter()
        .enumerate()
        .all(|(pos, a)| items[pos + 1..].iter().all(|b| a.intersects(*b)))
}
