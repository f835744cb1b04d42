//! Evaluators for winning-coalition rules and sequential unanimity rules on
//! the strict domain.

use crate::coalition::{CoalitionSet, SubsetSequence};
use crate::error::{Error, Result};
use crate::profile::{BallotSource, Decision, Outcome, StrictProfile};

/// Picks the candidate backed unanimously by some coalition of `cs`.
///
/// Coalitions are scanned in canonical order and the first unanimous one is
/// reported. For a validated set the winner is unique; a second coalition
/// unanimous for the other candidate is reported as an internal error.
pub fn evaluate_mwc_rule(cs: &CoalitionSet, profile: &StrictProfile) -> Result<Outcome> {
    if !cs.is_validated() {
        return Err(Error::NotValidated);
    }
    check_dims(cs.n(), profile.n())?;
    let mut found: Option<Outcome> = None;
    for &c in cs {
        if let Some(x) = profile.unanimous(c) {
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
    found.ok_or_else(|| Error::Internal(format!("no coalition is unanimous at profile {profile}")))
}

/// Scans `S_1, S_2, ...` and returns the ballot of the first unanimous set.
///
/// Only the sets up to and including the decisive one are consulted.
pub fn evaluate_su_rule<P>(seq: &SubsetSequence, profile: &P) -> Result<Outcome>
where
    P: BallotSource + ?Sized,
{
    check_dims(seq.n(), profile.voter_count())?;
    for (pos, &set) in seq.sets().iter().enumerate() {
        if let Some(x) = profile.unanimous(set) {
            return Ok(Outcome {
                value: x,
                decided_by: Decision::Step {
                    index: pos + 1,
                    set,
                },
            });
        }
    }
    Err(Error::InvalidSequence(
        "no set was unanimous; the sequence lacks a singleton backstop".into(),
    ))
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::Coalition;
    use crate::instances;
    use crate::profile::Choice;

    #[test]
    fn job_market_examples() {
        let cs = instances::job_market();
        let r: StrictProfile = "aabbbbb".parse().unwrap();
        let out = evaluate_mwc_rule(&cs, &r).unwrap();
        assert_eq!(out.value, Choice::A);
        assert_eq!(
            out.witness(),
            Some(Coalition::from_voters(7, &[1, 2]).unwrap())
        );

        // voters 1, 3, 5 and 6 prefer b
        let r: StrictProfile = "bababba".parse().unwrap();
        let out = evaluate_mwc_rule(&cs, &r).unwrap();
        assert_eq!(out.value, Choice::B);
        assert!(out.witness().unwrap().is_subset(r.b_voters()));
    }

    #[test]
    fn unanimous_profile_wins() {
        let cs = instances::job_market();
        let all_a = StrictProfile::from_index(7, 0);
        assert_eq!(evaluate_mwc_rule(&cs, &all_a).unwrap().value, Choice::A);
        let seq = instances::s1();
        let all_b = StrictProfile::from_index(7, 127);
        let out = evaluate_su_rule(&seq, &all_b).unwrap();
        assert_eq!((out.value, out.decisive_index()), (Choice::B, Some(1)));
    }

    #[test]
    fn sequential_traces() {
        let seq = instances::s1();
        // ballots a,b,a,a then anything: S1 split, S2 unanimous a
        for tail in ["aaa", "bbb", "abb", "bab"] {
            let r: StrictProfile = format!("abaa{tail}").parse().unwrap();
            let out = evaluate_su_rule(&seq, &r).unwrap();
            assert_eq!((out.value, out.decisive_index()), (Choice::A, Some(2)));
        }
        let r: StrictProfile = "ababab b".parse().unwrap();
        let out = evaluate_su_rule(&seq, &r).unwrap();
        assert_eq!((out.value, out.decisive_index()), (Choice::B, Some(4)));
    }

    #[test]
    fn unvalidated_set_is_rejected() {
        let cs = CoalitionSet::new(2, &[vec![1]]).unwrap();
        let r = StrictProfile::from_index(2, 0);
        assert_eq!(evaluate_mwc_rule(&cs, &r), Err(Error::NotValidated));
    }

    #[test]
    fn dimension_mismatch() {
        let seq = instances::s1();
        let r = StrictProfile::from_index(3, 0);
        assert_eq!(
            evaluate_su_rule(&seq, &r),
            Err(Error::DimensionMismatch {
                expected: 7,
                found: 3
            })
        );
    }
}
