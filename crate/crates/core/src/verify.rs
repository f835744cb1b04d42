//! Exhaustive checks over every profile, and certificates for and against
//! weightedness.
//!
//! Strict profiles are scanned by index `0..2^n` and ternary profiles by
//! index `0..3^n`, so the first counterexample reported is reproducible.

use std::fmt;

use crate::coalition::{Coalition, CoalitionSet, SubsetSequence};
use crate::error::{Error, Result};
use crate::full_domain::{eval_default, evaluate_mwc_default, evaluate_su_default, DefaultRule};
use crate::profile::{Choice, Decision, Outcome, StrictProfile, TernaryProfile};
use crate::rules::{check_dims, evaluate_mwc_rule, evaluate_su_rule};

/// Largest `n` scanned over the strict domain.
pub const STRICT_BOUND: usize = 20;
/// Largest `n` scanned over the ternary domain.
pub const TERNARY_BOUND: usize = 12;
/// Default cap on weight vectors tried by [`find_integer_weights`].
pub const DEFAULT_WEIGHT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Strict,
    Ternary,
}

impl Domain {
    pub fn bound(self) -> usize {
        match self {
            Domain::Strict => STRICT_BOUND,
            Domain::Ternary => TERNARY_BOUND,
        }
    }

    fn alphabet(self) -> &'static [Choice] {
        match self {
            Domain::Strict => &[Choice::A, Choice::B],
            Domain::Ternary => &[Choice::A, Choice::B, Choice::Zero],
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Strict => "strict",
            Domain::Ternary => "ternary",
        })
    }
}

impl std::str::FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Domain::Strict),
            "ternary" => Ok(Domain::Ternary),
            other => Err(Error::Domain(format!(
                "unknown domain '{other}' (expected strict or ternary)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleKind {
    Mwc(CoalitionSet),
    Su(SubsetSequence),
    MwcDefault(CoalitionSet, DefaultRule),
    SuDefault(SubsetSequence, DefaultRule),
    Builtin(DefaultRule),
    /// Always the given outcome; a test fixture for non-neutral rules.
    Constant(Choice),
}

/// A rule together with the domain it is evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleHandle {
    kind: RuleKind,
    n: usize,
    domain: Domain,
}

impl RuleHandle {
    pub fn mwc(cs: CoalitionSet) -> Result<Self> {
        if !cs.is_validated() {
            return Err(Error::NotValidated);
        }
        Ok(RuleHandle {
            n: cs.n(),
            kind: RuleKind::Mwc(cs),
            domain: Domain::Strict,
        })
    }

    pub fn su(seq: SubsetSequence) -> Result<Self> {
        seq.require_valid()?;
        Ok(RuleHandle {
            n: seq.n(),
            kind: RuleKind::Su(seq),
            domain: Domain::Strict,
        })
    }

    pub fn mwc_default(cs: CoalitionSet, f: DefaultRule, domain: Domain) -> Result<Self> {
        if !cs.is_validated() {
            return Err(Error::NotValidated);
        }
        f.check(cs.n())?;
        Ok(RuleHandle {
            n: cs.n(),
            kind: RuleKind::MwcDefault(cs, f),
            domain,
        })
    }

    pub fn su_default(seq: SubsetSequence, f: DefaultRule, domain: Domain) -> Result<Self> {
        seq.require_valid()?;
        f.check(seq.n())?;
        Ok(RuleHandle {
            n: seq.n(),
            kind: RuleKind::SuDefault(seq, f),
            domain,
        })
    }

    pub fn builtin(f: DefaultRule, n: usize, domain: Domain) -> Result<Self> {
        crate::coalition::check_population(n)?;
        f.check(n)?;
        Ok(RuleHandle {
            kind: RuleKind::Builtin(f),
            n,
            domain,
        })
    }

    pub fn constant(value: Choice, n: usize, domain: Domain) -> Result<Self> {
        crate::coalition::check_population(n)?;
        if domain == Domain::Strict && !value.is_strict() {
            return Err(Error::Domain(
                "a tie is not an outcome on the strict domain".into(),
            ));
        }
        Ok(RuleHandle {
            kind: RuleKind::Constant(value),
            n,
            domain,
        })
    }

    /// The same rule evaluated on another domain. Rules without a default
    /// are only defined on the strict domain.
    pub fn on(mut self, domain: Domain) -> Result<Self> {
        if domain == Domain::Ternary && matches!(self.kind, RuleKind::Mwc(_) | RuleKind::Su(_)) {
            return Err(Error::Domain(
                "rules without a default are not defined on the ternary domain".into(),
            ));
        }
        if domain == Domain::Strict && self.kind == RuleKind::Constant(Choice::Zero) {
            return Err(Error::Domain(
                "a tie is not an outcome on the strict domain".into(),
            ));
        }
        self.domain = domain;
        Ok(self)
    }

    pub fn kind(&self) -> &RuleKind {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn profile_count(&self) -> u64 {
        match self.domain {
            Domain::Strict => 1u64 << self.n,
            Domain::Ternary => 3u64.pow(self.n as u32),
        }
    }

    pub fn profile_at(&self, index: u64) -> AnyProfile {
        match self.domain {
            Domain::Strict => AnyProfile::Strict(StrictProfile::from_index(self.n, index)),
            Domain::Ternary => AnyProfile::Ternary(TernaryProfile::from_index(self.n, index)),
        }
    }

    pub fn evaluate(&self, profile: &AnyProfile) -> Result<Outcome> {
        check_dims(self.n, profile.n())?;
        let strict = match profile {
            AnyProfile::Strict(p) => Some(*p),
            AnyProfile::Ternary(p) => p.to_strict(),
        };
        let ternary = profile.to_ternary();
        match &self.kind {
            RuleKind::Mwc(cs) => evaluate_mwc_rule(cs, &require_strict(strict)?),
            RuleKind::Su(seq) => evaluate_su_rule(seq, &require_strict(strict)?),
            RuleKind::MwcDefault(cs, f) => evaluate_mwc_default(cs, f, &ternary),
            RuleKind::SuDefault(seq, f) => evaluate_su_default(seq, f, &ternary),
            RuleKind::Builtin(f) => eval_default(f, &ternary),
            RuleKind::Constant(value) => Ok(Outcome {
                value: *value,
                decided_by: Decision::Default,
            }),
        }
    }

    fn require_bound(&self) -> Result<()> {
        let bound = self.domain.bound();
        if self.n > bound {
            Err(Error::BoundExceeded { n: self.n, bound })
        } else {
            Ok(())
        }
    }

    /// Outcome at every profile, by profile index.
    pub fn outcome_table(&self) -> Result<Vec<Choice>> {
        self.require_bound()?;
        (0..self.profile_count())
            .map(|idx| self.evaluate(&self.profile_at(idx)).map(|o| o.value))
            .collect()
    }
}

fn require_strict(p: Option<StrictProfile>) -> Result<StrictProfile> {
    p.ok_or_else(|| Error::Domain("profile has indifferent ballots".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyProfile {
    Strict(StrictProfile),
    Ternary(TernaryProfile),
}

impl AnyProfile {
    pub fn n(&self) -> usize {
        match self {
            AnyProfile::Strict(p) => p.n(),
            AnyProfile::Ternary(p) => p.n(),
        }
    }

    pub fn to_ternary(&self) -> TernaryProfile {
        match self {
            AnyProfile::Strict(p) => p.to_ternary(),
            AnyProfile::Ternary(p) => *p,
        }
    }
}

impl fmt::Display for AnyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyProfile::Strict(p) => p.fmt(f),
            AnyProfile::Ternary(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub profile: AnyProfile,
    pub left: Outcome,
    pub right: Outcome,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {} the rules give {} and {}",
            self.profile, self.left.value, self.right.value
        )
    }
}

/// First profile, in index order, where the two rules disagree.
pub fn check_equivalence(r1: &RuleHandle, r2: &RuleHandle) -> Result<Option<Mismatch>> {
    check_dims(r1.n, r2.n)?;
    if r1.domain != r2.domain {
        return Err(Error::Domain(format!(
            "cannot compare a {} rule with a {} rule",
            r1.domain, r2.domain
        )));
    }
    r1.require_bound()?;
    for idx in 0..r1.profile_count() {
        let profile = r1.profile_at(idx);
        let left = r1.evaluate(&profile)?;
        let right = r2.evaluate(&profile)?;
        if left.value != right.value {
            return Ok(Some(Mismatch {
                profile,
                left,
                right,
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpViolation {
    pub profile: AnyProfile,
    pub voter: usize,
    pub misreport: Choice,
    pub truthful: Choice,
    pub manipulated: Choice,
}

impl fmt::Display for SpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {} voter {} gains by reporting {} ({} instead of {})",
            self.profile, self.voter, self.misreport, self.manipulated, self.truthful
        )
    }
}

fn pow3(n: usize) -> Vec<u64> {
    std::iter::successors(Some(1u64), |p| Some(p * 3))
        .take(n + 1)
        .collect()
}

fn digit(c: Choice) -> u64 {
    match c {
        Choice::A => 0,
        Choice::B => 1,
        Choice::Zero => 2,
    }
}

fn ballot_at(domain: Domain, powers: &[u64], idx: u64, voter: usize) -> Choice {
    match domain {
        Domain::Strict => {
            if idx >> (voter - 1) & 1 == 1 {
                Choice::B
            } else {
                Choice::A
            }
        }
        Domain::Ternary => match idx / powers[voter - 1] % 3 {
            0 => Choice::A,
            1 => Choice::B,
            _ => Choice::Zero,
        },
    }
}

fn neighbour(
    domain: Domain,
    powers: &[u64],
    idx: u64,
    voter: usize,
    from: Choice,
    to: Choice,
) -> u64 {
    match domain {
        Domain::Strict => idx ^ (1u64 << (voter - 1)),
        Domain::Ternary => {
            let unit = powers[voter - 1];
            idx - digit(from) * unit + digit(to) * unit
        }
    }
}

/// Looks for a voter with a strict preference who obtains a better outcome by
/// misreporting. A voter with truth `x` ranks `x` over a tie over the other
/// candidate.
pub fn check_strategy_proofness(r: &RuleHandle) -> Result<Option<SpViolation>> {
    let table = r.outcome_table()?;
    let powers = pow3(r.n);
    for (idx, &truthful) in table.iter().enumerate() {
        let idx = idx as u64;
        for voter in 1..=r.n {
            let truth = ballot_at(r.domain, &powers, idx, voter);
            if !truth.is_strict() || truthful == truth {
                continue;
            }
            for &misreport in r.domain.alphabet() {
                if misreport == truth {
                    continue;
                }
                let other = neighbour(r.domain, &powers, idx, voter, truth, misreport);
                let manipulated = table[other as usize];
                if manipulated.rank_for(truth) < truthful.rank_for(truth) {
                    return Ok(Some(SpViolation {
                        profile: r.profile_at(idx),
                        voter,
                        misreport,
                        truthful,
                        manipulated,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeutralityViolation {
    pub profile: AnyProfile,
    pub outcome: Choice,
    pub swapped_outcome: Choice,
}

impl fmt::Display for NeutralityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {} the outcome is {} but swapping a and b gives {}",
            self.profile, self.outcome, self.swapped_outcome
        )
    }
}

/// Checks `f(πR) = π(f(R))` for the swap of `a` and `b` (ties fixed).
pub fn check_neutrality(r: &RuleHandle) -> Result<Option<NeutralityViolation>> {
    let table = r.outcome_table()?;
    let full = Coalition::full(r.n).mask();
    for (idx, &outcome) in table.iter().enumerate() {
        let swapped_idx = match r.domain {
            Domain::Strict => idx as u64 ^ full,
            Domain::Ternary => TernaryProfile::from_index(r.n, idx as u64)
                .swapped()
                .index(),
        };
        let swapped_outcome = table[swapped_idx as usize];
        if swapped_outcome != outcome.swap() {
            return Ok(Some(NeutralityViolation {
                profile: r.profile_at(idx as u64),
                outcome,
                swapped_outcome,
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialReport {
    /// For each `k < K`, the first profile where dropping `S_k` changes the
    /// outcome.
    pub distinguishing: Vec<(usize, Option<StrictProfile>)>,
    /// Whether some profile is decided by the backstop `S_K`. Diagnostic
    /// only; it does not enter the verdict.
    pub backstop_reachable: bool,
}

impl EssentialReport {
    pub fn superfluous(&self) -> Vec<usize> {
        self.distinguishing
            .iter()
            .filter(|(_, p)| p.is_none())
            .map(|(k, _)| *k)
            .collect()
    }

    pub fn is_essential(&self) -> bool {
        self.distinguishing.iter().all(|(_, p)| p.is_some())
    }
}

/// Tests every `S_k`, `k < K`, for a strict profile where the sequence with
/// `S_k` removed decides differently.
///
/// Any sequence of non-empty sets ending in a singleton is accepted, since
/// the scan then always stops. Backstop exclusivity and non-recurrence are
/// not required.
pub fn check_essential(seq: &SubsetSequence) -> Result<EssentialReport> {
    let defines_rule =
        seq.sets().iter().all(|s| !s.is_empty()) && seq.sets().last().is_some_and(|s| s.len() == 1);
    if !defines_rule {
        return Err(Error::InvalidSequence(
            "essentiality needs non-empty sets and a singleton last set".into(),
        ));
    }
    let n = seq.n();
    if n > STRICT_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: STRICT_BOUND,
        });
    }
    let k_max = seq.len();
    let reduced: Vec<SubsetSequence> = (1..k_max).map(|k| seq.without(k)).collect();
    let mut distinguishing: Vec<(usize, Option<StrictProfile>)> =
        (1..k_max).map(|k| (k, None)).collect();
    let mut backstop_reachable = false;
    for idx in 0..(1u64 << n) {
        let p = StrictProfile::from_index(n, idx);
        let full = evaluate_su_rule(seq, &p)?;
        let decisive = full.decisive_index().expect("sequential outcome");
        backstop_reachable |= decisive == k_max;
        // removing a set after the decisive one cannot change the outcome
        for k in 1..=decisive.min(k_max - 1) {
            if distinguishing[k - 1].1.is_some() {
                continue;
            }
            if evaluate_su_rule(&reduced[k - 1], &p)?.value != full.value {
                distinguishing[k - 1].1 = Some(p);
            }
        }
    }
    Ok(EssentialReport {
        distinguishing,
        backstop_reachable,
    })
}

/// Two members exchanging one voter each so that neither result wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TradeCertificate {
    pub c1: Coalition,
    pub c2: Coalition,
    /// Leaves `c1` for `c2`.
    pub i: usize,
    /// Leaves `c2` for `c1`.
    pub j: usize,
}

impl TradeCertificate {
    pub fn swapped(&self) -> (Coalition, Coalition) {
        (
            self.c1.without(self.i).with(self.j),
            self.c2.without(self.j).with(self.i),
        )
    }

    pub fn verify(&self, cs: &CoalitionSet) -> bool {
        let (s1, s2) = self.swapped();
        cs.contains(self.c1)
            && cs.contains(self.c2)
            && self.c1.contains(self.i)
            && !self.c2.contains(self.i)
            && self.c2.contains(self.j)
            && !self.c1.contains(self.j)
            && !cs.is_winning(s1)
            && !cs.is_winning(s2)
    }
}

impl fmt::Display for TradeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s1, s2) = self.swapped();
        write!(
            f,
            "{} and {} swap voters {} and {}, giving losing {} and {}",
            self.c1, self.c2, self.i, self.j, s1, s2
        )
    }
}

/// First 2-trade in canonical order: pairs `(C1, C2)` with `C1 < C2`, then
/// `i ∈ C1 \ C2` and `j ∈ C2 \ C1` ascending.
pub fn find_2trade_violation(cs: &CoalitionSet) -> Result<Option<TradeCertificate>> {
    Ok(trades(cs)?.next())
}

/// Every 2-trade, in the order used by [`find_2trade_violation`].
pub fn all_2trade_violations(cs: &CoalitionSet) -> Result<Vec<TradeCertificate>> {
    Ok(trades(cs)?.collect())
}

fn trades(cs: &CoalitionSet) -> Result<impl Iterator<Item = TradeCertificate> + '_> {
    if !cs.is_validated() {
        return Err(Error::NotValidated);
    }
    let items = cs.as_slice();
    Ok(items.iter().enumerate().flat_map(move |(pos, &c1)| {
        items[pos + 1..].iter().flat_map(move |&c2| {
            c1.difference(c2).voters().flat_map(move |i| {
                c2.difference(c1)
                    .voters()
                    .map(move |j| TradeCertificate { c1, c2, i, j })
                    .filter(move |cert| cert.verify(cs))
            })
        })
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCertificate {
    pub weights: Vec<u64>,
    pub threshold: u64,
}

impl WeightCertificate {
    pub fn weight(&self, c: Coalition) -> u64 {
        c.voters().map(|v| self.weights[v - 1]).sum()
    }

    /// The members of `cs` are exactly the minimal coalitions reaching the
    /// threshold, and no two disjoint coalitions both reach it.
    ///
    /// For a validated set this follows from every member reaching the
    /// threshold together with `2q > w(N)`; up to the strict scan bound the
    /// winning families are also compared coalition by coalition.
    pub fn verify(&self, cs: &CoalitionSet) -> bool {
        let n = cs.n();
        if self.weights.len() != n || self.threshold == 0 || !cs.is_validated() {
            return false;
        }
        let total = self.weight(Coalition::full(n));
        if 2 * self.threshold <= total || cs.iter().any(|c| self.weight(*c) < self.threshold) {
            return false;
        }
        if n <= STRICT_BOUND {
            for mask in 0..(1u64 << n) {
                let c = Coalition::from_mask(mask);
                if (self.weight(c) >= self.threshold) != cs.is_winning(c) {
                    return false;
                }
            }
            for &c in cs {
                if c.voters()
                    .any(|v| self.weight(c.without(v)) >= self.threshold)
                {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for WeightCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "w = ({}), q = {}", w.join(","), self.threshold)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSearch {
    Found(WeightCertificate),
    /// No weighting constant on symmetry classes with weights in
    /// `0..=w_max` represents the set.
    NoneWithinBound {
        classes: Vec<Vec<usize>>,
        tried: u64,
    },
}

/// Partition of the voters into classes of interchangeable voters: `i` and
/// `j` share a class when exchanging them maps `cs` onto itself.
pub fn symmetry_classes(cs: &CoalitionSet) -> Vec<Vec<usize>> {
    let n = cs.n();
    let mut assigned = vec![false; n + 1];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 1..=n {
        if assigned[i] {
            continue;
        }
        let class: Vec<usize> = (i..=n)
            .filter(|&j| !assigned[j] && (j == i || interchangeable(cs, i, j)))
            .collect();
        for &j in &class {
            assigned[j] = true;
        }
        classes.push(class);
    }
    classes
}

fn interchangeable(cs: &CoalitionSet, i: usize, j: usize) -> bool {
    cs.iter().all(|&c| {
        let swapped = match (c.contains(i), c.contains(j)) {
            (true, false) => c.without(i).with(j),
            (false, true) => c.without(j).with(i),
            _ => c,
        };
        cs.contains(swapped)
    })
}

/// Searches weights constant on [`symmetry_classes`], each in `0..=w_max`,
/// trying at most `budget` vectors.
pub fn find_integer_weights(cs: &CoalitionSet, w_max: u64, budget: u64) -> Result<WeightSearch> {
    if !cs.is_validated() {
        return Err(Error::NotValidated);
    }
    let classes = symmetry_classes(cs);
    let m = classes.len();
    let space = (w_max + 1)
        .checked_pow(m as u32)
        .filter(|s| *s <= budget)
        .ok_or(Error::BudgetExceeded { budget })?;

    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let counts: Vec<Vec<u64>> = cs
        .iter()
        .map(|c| {
            classes
                .iter()
                .map(|class| class.iter().filter(|v| c.contains(**v)).count() as u64)
                .collect()
        })
        .collect();
    let dot = |a: &[u64], w: &[u64]| -> u64 { a.iter().zip(w).map(|(x, y)| x * y).sum() };

    let mut w = vec![0u64; m];
    for tried in 1..=space {
        let total = dot(&sizes, &w);
        let q = counts.iter().map(|c| dot(c, &w)).min().unwrap_or(0);
        if q > 0 && 2 * q > total {
            let mut weights = vec![0u64; cs.n()];
            for (class, &wc) in classes.iter().zip(&w) {
                for &v in class {
                    weights[v - 1] = wc;
                }
            }
            let cert = WeightCertificate {
                weights,
                threshold: q,
            };
            if !cert.verify(cs) {
                return Err(Error::Internal(format!(
                    "weight certificate failed: {cert}"
                )));
            }
            return Ok(WeightSearch::Found(cert));
        }
        if tried == space {
            break;
        }
        for slot in w.iter_mut() {
            if *slot < w_max {
                *slot += 1;
                break;
            }
            *slot = 0;
        }
    }
    Ok(WeightSearch::NoneWithinBound {
        classes,
        tried: space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::profile::BallotSource;

    fn c(n: usize, v: &[usize]) -> Coalition {
        Coalition::from_voters(n, v).unwrap()
    }

    #[test]
    fn equivalences() {
        let game = RuleHandle::mwc(instances::job_market()).unwrap();
        for seq in [instances::s1(), instances::s2(), instances::s3()] {
            let su = RuleHandle::su(seq).unwrap();
            assert_eq!(check_equivalence(&game, &su).unwrap(), None);
        }
        let s1 = RuleHandle::su(instances::s1()).unwrap();
        let s3 = RuleHandle::su(instances::s3()).unwrap();
        assert_eq!(check_equivalence(&s1, &s3).unwrap(), None);

        let d = RuleHandle::mwc(instances::dictator_one()).unwrap();
        let dseq = RuleHandle::su(SubsetSequence::new(1, &[vec![1]]).unwrap()).unwrap();
        assert_eq!(check_equivalence(&d, &dseq).unwrap(), None);
    }

    #[test]
    fn equivalence_counterexample_is_symmetric() {
        let a = RuleHandle::su(SubsetSequence::new(3, &[vec![1, 2], vec![3]]).unwrap()).unwrap();
        let b = RuleHandle::su(SubsetSequence::new(3, &[vec![1]]).unwrap()).unwrap();
        let ab = check_equivalence(&a, &b).unwrap().unwrap();
        let ba = check_equivalence(&b, &a).unwrap().unwrap();
        assert_eq!(ab.profile, ba.profile);
        assert_eq!(
            (ab.left.value, ab.right.value),
            (ba.right.value, ba.left.value)
        );
    }

    #[test]
    fn sp_and_neutrality() {
        let game = RuleHandle::mwc(instances::job_market()).unwrap();
        assert_eq!(check_strategy_proofness(&game).unwrap(), None);
        assert_eq!(check_neutrality(&game).unwrap(), None);
        let s2 = RuleHandle::su(instances::s2()).unwrap();
        assert_eq!(check_strategy_proofness(&s2).unwrap(), None);
        let s1 = RuleHandle::su(instances::s1()).unwrap();
        assert_eq!(check_neutrality(&s1).unwrap(), None);

        let always_a = RuleHandle::constant(Choice::A, 3, Domain::Strict).unwrap();
        assert_eq!(check_strategy_proofness(&always_a).unwrap(), None);
        let v = check_neutrality(&always_a).unwrap().unwrap();
        assert_eq!(v.outcome, Choice::A);
        assert_eq!(v.swapped_outcome, Choice::A);
    }

    #[test]
    fn ternary_checks() {
        let h = RuleHandle::mwc_default(
            instances::majority_of_three(),
            DefaultRule::Majority,
            Domain::Ternary,
        )
        .unwrap();
        assert_eq!(check_neutrality(&h).unwrap(), None);
        assert_eq!(check_strategy_proofness(&h).unwrap(), None);

        let always_a = RuleHandle::constant(Choice::A, 2, Domain::Ternary).unwrap();
        assert!(check_neutrality(&always_a).unwrap().is_some());

        // a voter who can turn a loss into a tie by abstaining is caught
        let minority =
            CustomTable::build(2, |r| match r.count(Choice::A).cmp(&r.count(Choice::B)) {
                std::cmp::Ordering::Greater => Choice::B,
                std::cmp::Ordering::Less => Choice::A,
                std::cmp::Ordering::Equal => Choice::Zero,
            });
        let v = check_strategy_proofness(&minority).unwrap().unwrap();
        assert!(
            v.manipulated
                .rank_for(v.profile.to_ternary().ballot(v.voter))
                < v.truthful.rank_for(v.profile.to_ternary().ballot(v.voter))
        );
    }

    struct CustomTable;

    impl CustomTable {
        fn build(n: usize, f: impl Fn(&TernaryProfile) -> Choice) -> RuleHandle {
            // bypass the checks in CustomDefault::new to build a bad rule
            let table = (0..3u64.pow(n as u32))
                .map(|i| f(&TernaryProfile::from_index(n, i)))
                .collect::<Vec<_>>();
            RuleHandle {
                kind: RuleKind::Builtin(DefaultRule::Custom(
                    crate::full_domain::CustomDefault::unchecked(n, table),
                )),
                n,
                domain: Domain::Ternary,
            }
        }
    }

    #[test]
    fn plain_rules_reject_ternary_domain() {
        let game = RuleHandle::mwc(instances::job_market()).unwrap();
        assert!(matches!(game.on(Domain::Ternary), Err(Error::Domain(_))));
    }

    #[test]
    fn bounds_are_enforced() {
        let big = RuleHandle::builtin(DefaultRule::Majority, 13, Domain::Ternary).unwrap();
        assert_eq!(
            check_neutrality(&big),
            Err(Error::BoundExceeded { n: 13, bound: 12 })
        );
        let big = RuleHandle::builtin(DefaultRule::Majority, 21, Domain::Strict).unwrap();
        assert_eq!(
            check_strategy_proofness(&big),
            Err(Error::BoundExceeded { n: 21, bound: 20 })
        );
    }

    #[test]
    fn essentiality() {
        let r = check_essential(&instances::s1()).unwrap();
        assert!(r.is_essential() && r.backstop_reachable);
        assert!(check_essential(&instances::s2()).unwrap().is_essential());

        let nested = instances::non_weighted_eight_nested();
        let r = check_essential(&nested).unwrap();
        assert_eq!(r.superfluous(), vec![10]);
        assert_eq!(nested.get(10), Some(c(8, &[1, 3, 6])));

        assert!(check_essential(&instances::s3()).unwrap().is_essential());

        // every coalition followed by {7}: those holding 7 are superfluous
        let jm = instances::job_market();
        let mut sets: Vec<Coalition> = jm.as_slice().to_vec();
        sets.push(Coalition::singleton(7));
        let listing = SubsetSequence::from_coalitions(7, sets.clone()).unwrap();
        let r = check_essential(&listing).unwrap();
        let holding_seven: Vec<usize> = (1..sets.len())
            .filter(|&k| sets[k - 1].contains(7))
            .collect();
        assert!(!r.is_essential());
        assert_eq!(r.superfluous(), holding_seven);
    }

    #[test]
    fn trades() {
        let cs = instances::non_weighted_eight();
        let cert = find_2trade_violation(&cs).unwrap().unwrap();
        assert!(cert.verify(&cs));
        let listed = TradeCertificate {
            c1: c(8, &[2, 3, 6]),
            c2: c(8, &[3, 4, 7]),
            i: 6,
            j: 7,
        };
        assert!(listed.verify(&cs));
        let all = all_2trade_violations(&cs).unwrap();
        assert_eq!(all[0], cert);
        assert!(all.contains(&listed));
        assert_eq!(
            find_2trade_violation(&instances::job_market()).unwrap(),
            None
        );
        assert_eq!(
            find_2trade_violation(&instances::five_of_nine()).unwrap(),
            None
        );
    }

    #[test]
    fn weights() {
        let jm = instances::job_market();
        let listed = WeightCertificate {
            weights: vec![4, 4, 2, 2, 1, 1, 1],
            threshold: 8,
        };
        assert!(listed.verify(&jm));
        assert_eq!(
            symmetry_classes(&jm),
            vec![vec![1, 2], vec![3, 4], vec![5, 6, 7]]
        );
        match find_integer_weights(&jm, 4, DEFAULT_WEIGHT_BUDGET).unwrap() {
            WeightSearch::Found(cert) => assert!(cert.verify(&jm)),
            other => panic!("{other:?}"),
        }

        let maj = instances::five_of_nine();
        assert_eq!(
            find_integer_weights(&maj, 1, DEFAULT_WEIGHT_BUDGET).unwrap(),
            WeightSearch::Found(WeightCertificate {
                weights: vec![1; 9],
                threshold: 5
            })
        );

        let nw = instances::non_weighted_eight();
        assert!(matches!(
            find_integer_weights(&nw, 3, DEFAULT_WEIGHT_BUDGET).unwrap(),
            WeightSearch::NoneWithinBound { .. }
        ));
        assert_eq!(
            find_integer_weights(&nw, 3, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        );
    }

    #[test]
    fn wrong_weights_fail_verification() {
        let jm = instances::job_market();
        let bad = WeightCertificate {
            weights: vec![1; 7],
            threshold: 4,
        };
        assert!(!bad.verify(&jm));
    }
}
