//! C ABI over `binvote`.
//!
//! Games and sequences live behind opaque handles created by the
//! `*_from_json` and conversion functions and released with the matching
//! `*_free`. Every fallible call returns a [`BvStatus`]; on failure the
//! message is available from [`bv_last_error`] on the same thread. Strings
//! returned through out-pointers are owned by the caller and released with
//! [`bv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use binvote::doc::{DocError, GameDocument, SequenceDocument};
use binvote::{
    check_equivalence, evaluate_mwc_default, evaluate_mwc_rule, evaluate_su_default,
    evaluate_su_rule, run_alg1, run_alg2, CoalitionSet, DefaultRule, Error, Outcome, RuleHandle,
    SelectionPolicy, StrictProfile, SubsetSequence, TernaryProfile,
};

/// Status codes, numerically equal to the CLI exit codes where they overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BvStatus {
    Ok = 0,
    /// A semantic failure: invalid game or sequence, rejected choice.
    Fail = 1,
    /// Malformed JSON, bad profile string, out-of-range voter.
    Input = 2,
    /// An exhaustive scan or search exceeded its bound.
    Bound = 3,
    NullPointer = 4,
    /// A broken invariant or a caught panic.
    Internal = 5,
}

/// Selection policy for [`bv_game_to_sequence`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BvPolicy {
    /// Draw choices from `seed`; otherwise pick lexicographically.
    pub seeded: bool,
    pub seed: u64,
    /// Enforce the essentiality condition.
    pub essential: bool,
}

/// A coalition set. Opaque to C.
pub struct BvGame {
    inner: CoalitionSet,
}

/// A subset sequence. Opaque to C.
pub struct BvSequence {
    inner: SubsetSequence,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(BvStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::BoundExceeded { .. } | Error::BudgetExceeded { .. } => BvStatus::Bound,
            Error::PopulationSize(_)
            | Error::VoterOutOfRange { .. }
            | Error::EmptyCoalition { .. }
            | Error::DimensionMismatch { .. }
            | Error::Profile(_)
            | Error::Domain(_)
            | Error::Window { .. } => BvStatus::Input,
            Error::Internal(_) => BvStatus::Internal,
            _ => BvStatus::Fail,
        };
        Failure(status, e.to_string())
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        match e {
            DocError::Model(inner) => inner.into(),
            other => Failure(BvStatus::Input, other.to_string()),
        }
    }
}

fn null() -> Failure {
    Failure(BvStatus::NullPointer, "null pointer argument".into())
}

/// Runs `body`, recording any failure or panic as the last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BvStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            BvStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside binvote");
            BvStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(BvStatus::Input, "string is not valid UTF-8".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    *out = CString::new(s)
        .map_err(|_| Failure(BvStatus::Internal, "interior NUL".into()))?
        .into_raw();
    Ok(())
}

unsafe fn game<'a>(g: *const BvGame) -> Result<&'a BvGame, Failure> {
    g.as_ref().ok_or_else(null)
}

unsafe fn sequence<'a>(s: *const BvSequence) -> Result<&'a BvSequence, Failure> {
    s.as_ref().ok_or_else(null)
}

fn outcome_char(out: Outcome) -> c_char {
    out.value.as_char() as c_char
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn bv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a game document. The game is not validated.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_game_from_json(json: *const c_char, out: *mut *mut BvGame) -> BvStatus {
    guard(|| {
        let doc = GameDocument::parse(text(json)?)?;
        put(
            out,
            BvGame {
                inner: doc.to_set()?,
            },
        )
    })
}

/// Checks minimality and the Moulin property; on success the game is
/// marked validated. `valid` receives the verdict.
///
/// # Safety
/// `g` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_game_validate(g: *mut BvGame, valid: *mut bool) -> BvStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(null)?;
        let valid = valid.as_mut().ok_or_else(null)?;
        *valid = g.inner.validate()?.is_pass();
        Ok(())
    })
}

/// Number of voters, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bv_game_voters(g: *const BvGame) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Number of coalitions, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bv_game_len(g: *const BvGame) -> usize {
    g.as_ref().map_or(0, |g| g.inner.len())
}

/// Canonical JSON document for the game.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_game_to_json(g: *const BvGame, out: *mut *mut c_char) -> BvStatus {
    guard(|| put_string(out, GameDocument::from_set(&game(g)?.inner).to_json()))
}

/// Converts a validated game into an equivalent sequence.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_game_to_sequence(
    g: *const BvGame,
    policy: BvPolicy,
    out: *mut *mut BvSequence,
) -> BvStatus {
    guard(|| {
        let base = if policy.seeded {
            SelectionPolicy::seeded(policy.seed)
        } else {
            SelectionPolicy::lexicographic()
        };
        let (seq, _) = run_alg1(&game(g)?.inner, &base.essential(policy.essential))?;
        put(out, BvSequence { inner: seq })
    })
}

/// Outcome (`'a'`, `'b'` or `'0'`) of the coalition rule at `profile`, a
/// string over `a`, `b` and `0`. `default_rule` is `"majority"`, `"tie"`,
/// `"dictator:i"` or null; without one the profile must be strict.
///
/// # Safety
/// `g` must be a live handle; strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bv_game_eval(
    g: *const BvGame,
    profile: *const c_char,
    default_rule: *const c_char,
    out: *mut c_char,
) -> BvStatus {
    guard(|| {
        let cs = &game(g)?.inner;
        let out = out.as_mut().ok_or_else(null)?;
        let profile = text(profile)?;
        *out = if default_rule.is_null() {
            outcome_char(evaluate_mwc_rule(cs, &profile.parse::<StrictProfile>()?)?)
        } else {
            let f: DefaultRule = text(default_rule)?.parse()?;
            outcome_char(evaluate_mwc_default(
                cs,
                &f,
                &profile.parse::<TernaryProfile>()?,
            )?)
        };
        Ok(())
    })
}

/// Releases a game. Null is ignored.
///
/// # Safety
/// `g` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bv_game_free(g: *mut BvGame) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a sequence document. Validity is not required here.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_from_json(
    json: *const c_char,
    out: *mut *mut BvSequence,
) -> BvStatus {
    guard(|| {
        let doc = SequenceDocument::parse(text(json)?)?;
        put(
            out,
            BvSequence {
                inner: doc.to_sequence()?,
            },
        )
    })
}

/// Whether the sequence defines a rule: a singleton backstop last, no
/// repeated sets, no set holding the backstop voter.
///
/// # Safety
/// `s` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_is_valid(s: *const BvSequence, valid: *mut bool) -> BvStatus {
    guard(|| {
        *valid.as_mut().ok_or_else(null)? = sequence(s)?.inner.is_valid();
        Ok(())
    })
}

/// Number of sets, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_len(s: *const BvSequence) -> usize {
    s.as_ref().map_or(0, |s| s.inner.len())
}

/// JSON document for the sequence.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_to_json(
    s: *const BvSequence,
    out: *mut *mut c_char,
) -> BvStatus {
    guard(|| {
        put_string(
            out,
            SequenceDocument::from_sequence(&sequence(s)?.inner).to_json(),
        )
    })
}

/// Converts a valid sequence into its validated coalition set.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_to_game(
    s: *const BvSequence,
    out: *mut *mut BvGame,
) -> BvStatus {
    guard(|| {
        let (cs, _) = run_alg2(&sequence(s)?.inner)?;
        put(out, BvGame { inner: cs })
    })
}

/// Outcome of the sequential rule; arguments as for [`bv_game_eval`].
///
/// # Safety
/// `s` must be a live handle; strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_eval(
    s: *const BvSequence,
    profile: *const c_char,
    default_rule: *const c_char,
    out: *mut c_char,
) -> BvStatus {
    guard(|| {
        let seq = &sequence(s)?.inner;
        let out = out.as_mut().ok_or_else(null)?;
        let profile = text(profile)?;
        *out = if default_rule.is_null() {
            outcome_char(evaluate_su_rule(seq, &profile.parse::<StrictProfile>()?)?)
        } else {
            let f: DefaultRule = text(default_rule)?.parse()?;
            outcome_char(evaluate_su_default(
                seq,
                &f,
                &profile.parse::<TernaryProfile>()?,
            )?)
        };
        Ok(())
    })
}

/// Whether the coalition rule and the sequential rule agree on every strict
/// profile.
///
/// # Safety
/// Handles must be live; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bv_equivalent(
    g: *const BvGame,
    s: *const BvSequence,
    equal: *mut bool,
) -> BvStatus {
    guard(|| {
        let equal = equal.as_mut().ok_or_else(null)?;
        let a = RuleHandle::mwc(game(g)?.inner.clone())?;
        let b = RuleHandle::su(sequence(s)?.inner.clone())?;
        *equal = check_equivalence(&a, &b)?.is_none();
        Ok(())
    })
}

/// Releases a sequence. Null is ignored.
///
/// # Safety
/// `s` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bv_sequence_free(s: *mut BvSequence) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
