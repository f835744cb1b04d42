//! Reference games and sequences used throughout the tests, the docs and the
//! CLI examples.

use crate::coalition::{CoalitionSet, SubsetSequence};

fn game(n: usize, raw: &[&[usize]]) -> CoalitionSet {
    let raw: Vec<Vec<usize>> = raw.iter().map(|v| v.to_vec()).collect();
    CoalitionSet::new(n, &raw)
        .expect("well-formed reference game")
        .validated()
        .expect("within scan bound")
        .expect("reference game is an M-winning coalition set")
}

fn seq(n: usize, raw: &[&[usize]]) -> SubsetSequence {
    let raw: Vec<Vec<usize>> = raw.iter().map(|v| v.to_vec()).collect();
    SubsetSequence::new(n, &raw).expect("well-formed reference sequence")
}

/// Seven-member hiring panel: weights (4,4,2,2,1,1,1), quota 8.
pub fn job_market() -> CoalitionSet {
    game(
        7,
        &[
            &[1, 2],
            &[1, 3, 4],
            &[2, 3, 4],
            &[1, 3, 5, 6],
            &[1, 3, 5, 7],
            &[1, 3, 6, 7],
            &[1, 4, 5, 6],
            &[1, 4, 5, 7],
            &[1, 4, 6, 7],
            &[2, 3, 5, 6],
            &[2, 3, 5, 7],
            &[2, 3, 6, 7],
            &[2, 4, 5, 6],
            &[2, 4, 5, 7],
            &[2, 4, 6, 7],
        ],
    )
}

/// All 5-subsets of nine voters (simple majority).
pub fn five_of_nine() -> CoalitionSet {
    let full = crate::coalition::Coalition::full(9);
    let items = full.subsets().filter(|c| c.len() == 5);
    CoalitionSet::from_coalitions(9, items)
        .expect("in range")
        .validated()
        .expect("within scan bound")
        .expect("majority is an M-winning coalition set")
}

/// A non-weighted strong simple game on eight voters.
pub fn non_weighted_eight() -> CoalitionSet {
    game(
        8,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 2, 7],
            &[2, 3, 4],
            &[1, 3, 5, 6],
            &[1, 3, 5, 7],
            &[1, 3, 6, 7],
            &[1, 4, 5, 6, 8],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 3, 8],
            &[2, 5, 7],
            &[2, 6, 7],
            &[2, 4, 5, 6],
            &[3, 4, 7],
        ],
    )
}

/// Simple majority of three voters.
pub fn majority_of_three() -> CoalitionSet {
    game(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

/// `({1,2},{3,4},{5,6},{7})` for the hiring panel.
pub fn s1() -> SubsetSequence {
    seq(7, &[&[1, 2], &[3, 4], &[5, 6], &[7]])
}

/// `({1,2},{3,5,7},{3,6,7},{3,5,6},{4})` for the hiring panel.
pub fn s2() -> SubsetSequence {
    seq(7, &[&[1, 2], &[3, 5, 7], &[3, 6, 7], &[3, 5, 6], &[4]])
}

/// Backstop 2 on the hiring panel: the seven coalitions containing voter 1
/// other than `{1,2}`, then `{2}`.
pub fn s3() -> SubsetSequence {
    seq(
        7,
        &[
            &[7, 5, 3, 1],
            &[5, 6, 3, 1],
            &[7, 5, 4, 1],
            &[5, 6, 4, 1],
            &[7, 6, 3, 1],
            &[3, 4, 1],
            &[7, 6, 4, 1],
            &[2],
        ],
    )
}

/// Backstop 8 on [`non_weighted_eight`] with choices `{1,3}`, `{1,2}`, `{2,5,6}`.
pub fn non_weighted_eight_backstop8() -> SubsetSequence {
    seq(
        8,
        &[
            &[2, 3, 6],
            &[2, 3, 4],
            &[3, 4, 7],
            &[2, 6, 7],
            &[2, 3, 5],
            &[2, 5, 7],
            &[2, 5, 6],
            &[1, 2],
            &[1, 3],
            &[8],
        ],
    )
}

/// Like [`non_weighted_eight_backstop8`] but built without the proviso: the
/// trailing `{1,3,6}` is superfluous.
pub fn non_weighted_eight_nested() -> SubsetSequence {
    seq(
        8,
        &[
            &[2, 3, 6],
            &[2, 3, 4],
            &[3, 4, 7],
            &[2, 6, 7],
            &[2, 3, 5],
            &[2, 5, 7],
            &[2, 5, 6],
            &[1, 2],
            &[1, 3],
            &[1, 3, 6],
            &[8],
        ],
    )
}

/// Six-set window used to illustrate paths; not a valid rule sequence.
pub fn path_window() -> SubsetSequence {
    seq(
        8,
        &[&[1, 2, 3], &[6, 7], &[1, 2, 4], &[2, 5, 6], &[2, 8], &[8]],
    )
}

/// Dictatorship of voter 1 in a one-voter population.
pub fn dictator_one() -> CoalitionSet {
    game(1, &[&[1]])
}
