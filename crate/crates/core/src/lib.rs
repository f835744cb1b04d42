//! Binary voting rules: M-winning coalition sets, sequential unanimity
//! rules, the algorithms converting between them, and exhaustive checks.
//!
//! Voters are numbered `1..=n` with `n <= 64`; a [`Coalition`] is a bit mask
//! with voter `i` in bit `i - 1`.

pub mod alg1;
pub mod alg2;
pub mod coalition;
pub mod doc;
pub mod error;
pub mod full_domain;
pub mod generate;
pub mod instances;
pub mod profile;
pub mod rules;
pub mod verify;

pub use alg1::{
    candidate_subsets, enumerate_alg1_family, run_alg1, Script, SelectionMode, SelectionPolicy,
};
pub use alg2::{enumerate_paths, run_alg2, run_alg2_with_limit, Path};
pub use coalition::{Coalition, CoalitionSet, MoulinMethod, SubsetSequence};
pub use error::{Error, Result};
pub use full_domain::{eval_default, evaluate_mwc_default, evaluate_su_default, DefaultRule};
pub use profile::{BallotSource, Choice, Decision, Outcome, StrictProfile, TernaryProfile};
pub use rules::{evaluate_mwc_rule, evaluate_su_rule};
pub use verify::{
    all_2trade_violations, check_equivalence, check_essential, check_neutrality,
    check_strategy_proofness, find_2trade_violation, find_integer_weights, Domain, RuleHandle,
    RuleKind,
};
