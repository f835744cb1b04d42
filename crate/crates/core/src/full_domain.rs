//! Rules on the full domain `{a, b, 0}^n`, where `0` is indifference on the
//! ballot side and a tie on the outcome side.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::coalition::{CoalitionSet, SubsetSequence};
use crate::error::{Error, Result};
use crate::profile::{BallotSource, Choice, Decision, Outcome, TernaryProfile};
use crate::rules::check_dims;

/// A neutral, strategy-proof rule consulted when no coalition decides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefaultRule {
    /// More `a` ballots than `b` ballots gives `a`, the reverse `b`, else a tie.
    Majority,
    /// The ballot of this voter.
    Dictator(usize),
    /// Always a tie.
    ConstantTie,
    Custom(CustomDefault),
}

/// A tabulated default over every ternary profile of `n` voters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomDefault {
    n: usize,
    table: Arc<[Choice]>,
}

impl CustomDefault {
    /// `table[r.index()]` is the outcome at `r`. The table is checked for
    /// strategy-proofness and neutrality before it is accepted.
    pub fn new(n: usize, table: Vec<Choice>) -> Result<Self> {
        if n > crate::verify::TERNARY_BOUND {
            return Err(Error::BoundExceeded {
                n,
                bound: crate::verify::TERNARY_BOUND,
            });
        }
        let expected = 3usize.pow(n as u32);
        if table.len() != expected {
            return Err(Error::Domain(format!(
                "default table has {} entries, expected {expected}",
                table.len()
            )));
        }
        let custom = CustomDefault {
            n,
            table: table.into(),
        };
        let handle = crate::verify::RuleHandle::builtin(
            DefaultRule::Custom(custom.clone()),
            n,
            crate::verify::Domain::Ternary,
        )?;
        if let Some(v) = crate::verify::check_strategy_proofness(&handle)? {
            return Err(Error::Domain(format!(
                "default rule is not strategy-proof: {v}"
            )));
        }
        if let Some(v) = crate::verify::check_neutrality(&handle)? {
            return Err(Error::Domain(format!("default rule is not neutral: {v}")));
        }
        Ok(custom)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[cfg(test)]
    pub(crate) fn unchecked(n: usize, table: Vec<Choice>) -> Self {
        CustomDefault {
            n,
            table: table.into(),
        }
    }
}

impl DefaultRule {
    /// Checks that the rule is defined for `n` voters.
    pub fn check(&self, n: usize) -> Result<()> {
        match self {
            DefaultRule::Dictator(i) if *i == 0 || *i > n => {
                Err(Error::VoterOutOfRange { voter: *i, n })
            }
            DefaultRule::Custom(c) => check_dims(c.n, n),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefaultRule::Majority => f.write_str("majority"),
            DefaultRule::Dictator(i) => write!(f, "dictator:{i}"),
            DefaultRule::ConstantTie => f.write_str("tie"),
            DefaultRule::Custom(c) => write!(f, "custom({} voters)", c.n),
        }
    }
}

impl FromStr for DefaultRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "majority" => Ok(DefaultRule::Majority),
            "tie" => Ok(DefaultRule::ConstantTie),
            other => match other.strip_prefix("dictator:") {
                Some(v) => v
                    .parse()
                    .map(DefaultRule::Dictator)
                    .map_err(|_| Error::Domain(format!("bad dictator voter '{v}'"))),
                None => Err(Error::Domain(format!(
                    "unknown default rule '{other}' (expected majority, dictator:i or tie)"
                ))),
            },
        }
    }
}

pub fn eval_default(f: &DefaultRule, r: &TernaryProfile) -> Result<Outcome> {
    f.check(r.n())?;
    let value = match f {
        DefaultRule::Majority => {
            let (a, b) = (r.count(Choice::A), r.count(Choice::B));
            match a.cmp(&b) {
                std::cmp::Ordering::Greater => Choice::A,
                std::cmp::Ordering::Less => Choice::B,
                std::cmp::Ordering::Equal => Choice::Zero,
            }
        }
        DefaultRule::Dictator(i) => r.ballot(*i),
        DefaultRule::ConstantTie => Choice::Zero,
        DefaultRule::Custom(c) => c.table[r.index() as usize],
    };
    Ok(Outcome {
        value,
        decided_by: Decision::Default,
    })
}

/// A coalition unanimous for `a` or `b` decides; otherwise `f` does.
pub fn evaluate_mwc_default(
    cs: &CoalitionSet,
    f: &DefaultRule,
    r: &TernaryProfile,
) -> Result<Outcome> {
    if !cs.is_validated() {
        return Err(Error::NotValidated);
    }
    check_dims(cs.n(), r.n())?;
    let mut found: Option<Outcome> = None;
    for &c in cs {
        if let Some(x) = r.unanimous(c) {
            match found {
                None => {
                    found = Some(Outcome {
                        value: x,
                        decided_by: Decision::Coalition(c),
                    })
                }
                Some(prev) if prev.value != x => {
                    return Err(Error::Internal(format!(
                        "coalitions {} and {c} are unanimous for different candidates",
                        prev.witness().expect("coalition witness")
                    )))
                }
                Some(_) => {}
            }
        }
    }
    match found {
        Some(out) => Ok(out),
        None => eval_default(f, r),
    }
}

/// Sequential scan with default. `S_k` decides for `x` only when it is
/// unanimous for `x` and every earlier set holds some voter reporting `x`;
/// an all-indifferent `S_k` hands the decision to `f`.
pub fn evaluate_su_default(
    seq: &SubsetSequence,
    f: &DefaultRule,
    r: &TernaryProfile,
) -> Result<Outcome> {
    check_dims(seq.n(), r.n())?;
    let sets = seq.sets();
    let Some(&first) = sets.first() else {
        return Err(Error::InvalidSequence("empty sequence".into()));
    };
    if let Some(x) = r.unanimous(first) {
        return Ok(Outcome {
            value: x,
            decided_by: Decision::Step {
                index: 1,
                set: first,
            },
        });
    }
    for (pos, &set) in sets.iter().enumerate().skip(1) {
        if let Some(x) = r.unanimous(set) {
            if sets[..pos].iter().all(|s| r.has_witness(*s, x)) {
                return Ok(Outcome {
                    value: x,
                    decided_by: Decision::Step {
                        index: pos + 1,
                        set,
                    },
                });
            }
        }
        if r.unanimous_indifferent(set) {
            return eval_default(f, r);
        }
    }
    eval_default(f, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn t(s: &str) -> TernaryProfile {
        s.parse().unwrap()
    }

    #[test]
    fn default_rules() {
        assert_eq!(
            eval_default(&DefaultRule::Majority, &t("aab"))
                .unwrap()
                .value,
            Choice::A
        );
        assert_eq!(
            eval_default(&DefaultRule::Majority, &t("ab"))
                .unwrap()
                .value,
            Choice::Zero
        );
        assert_eq!(
            eval_default(&DefaultRule::Dictator(2), &t("b0a"))
                .unwrap()
                .value,
            Choice::Zero
        );
        assert_eq!(
            eval_default(&DefaultRule::ConstantTie, &t("aaa"))
                .unwrap()
                .value,
            Choice::Zero
        );
        assert!(eval_default(&DefaultRule::Dictator(4), &t("aaa")).is_err());
    }

    #[test]
    fn parse_default_rules() {
        for s in ["majority", "tie", "dictator:3"] {
            let f: DefaultRule = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("dictator:x".parse::<DefaultRule>().is_err());
        assert!("borda".parse::<DefaultRule>().is_err());
    }

    #[test]
    fn mwc_with_default() {
        let cs = instances::job_market();
        let f = DefaultRule::Majority;
        let out = evaluate_mwc_default(&cs, &f, &t("aa00000")).unwrap();
        assert_eq!(out.value, Choice::A);
        let out = evaluate_mwc_default(&cs, &f, &t("0000000")).unwrap();
        assert_eq!(
            (out.value, out.decided_by),
            (Choice::Zero, Decision::Default)
        );

        let out = evaluate_mwc_default(&instances::five_of_nine(), &f, &t("aaaaabbbb")).unwrap();
        assert_eq!(out.value, Choice::A);
        assert!(matches!(out.decided_by, Decision::Coalition(_)));
    }

    #[test]
    fn su_with_default() {
        let seq = instances::s1();
        let f = DefaultRule::Majority;
        let out = evaluate_su_default(&seq, &f, &t("abaa000")).unwrap();
        assert_eq!((out.value, out.decisive_index()), (Choice::A, Some(2)));

        // S_2 all indifferent stops the scan; majority of (a,b) ties
        let out = evaluate_su_default(&seq, &f, &t("ab00aaa")).unwrap();
        assert_eq!((out.value, out.decided_by), (Choice::A, Decision::Default));
        let out = evaluate_su_default(&seq, &f, &t("ab00000")).unwrap();
        assert_eq!(
            (out.value, out.decided_by),
            (Choice::Zero, Decision::Default)
        );

        let out = evaluate_su_default(&seq, &f, &t("0000000")).unwrap();
        assert_eq!(out.value, Choice::Zero);
    }

    #[test]
    fn unanimous_set_without_earlier_witness_does_not_stop() {
        // S_1 = {1,2} is (0, a): no b witness, so S_2 = {3,4} unanimous b
        // is skipped; S_3 = {5,6} unanimous a with witnesses in S_1, S_2?
        // S_2 has no a, so the scan goes on to S_4 = {7}
        let seq = instances::s1();
        let out = evaluate_su_default(&seq, &DefaultRule::ConstantTie, &t("0abbaab")).unwrap();
        assert_eq!(out.decided_by, Decision::Default);
        let out = evaluate_su_default(&seq, &DefaultRule::ConstantTie, &t("babbaaa")).unwrap();
        assert_eq!((out.value, out.decisive_index()), (Choice::B, Some(2)));
    }

    #[test]
    fn custom_default_checked() {
        // majority tabulated for n = 2 is accepted
        let table: Vec<Choice> = (0..9)
            .map(|i| {
                eval_default(&DefaultRule::Majority, &TernaryProfile::from_index(2, i))
                    .unwrap()
                    .value
            })
            .collect();
        let custom = CustomDefault::new(2, table).unwrap();
        assert_eq!(
            eval_default(&DefaultRule::Custom(custom), &t("a0"))
                .unwrap()
                .value,
            Choice::A
        );
        // constant a is not neutral
        assert!(CustomDefault::new(2, vec![Choice::A; 9]).is_err());
        assert!(CustomDefault::new(2, vec![Choice::Zero; 4]).is_err());
    }
}
