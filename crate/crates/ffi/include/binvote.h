#ifndef BINVOTE_H
#define BINVOTE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes, numerically equal to the CLI exit codes where they overlap.
 */
typedef enum BvStatus {
  BV_STATUS_OK = 0,
  /*
   A semantic failure: invalid game or sequence, rejected choice.
   */
  BV_STATUS_FAIL = 1,
  /*
   Malformed JSON, bad profile string, out-of-range voter.
   */
  BV_STATUS_INPUT = 2,
  /*
   An exhaustive scan or search exceeded its bound.
   */
  BV_STATUS_BOUND = 3,
  BV_STATUS_NULL_POINTER = 4,
  /*
   A broken invariant or a caught panic.
   */
  BV_STATUS_INTERNAL = 5,
} BvStatus;

/*
 A coalition set. Opaque to C.
 */
typedef struct BvGame BvGame;

/*
 A subset sequence. Opaque to C.
 */
typedef struct BvSequence BvSequence;

/*
 Selection policy for [`bv_game_to_sequence`].
 */
typedef struct BvPolicy {
  /*
   Draw choices from `seed`; otherwise pick lexicographically.
   */
  bool seeded;
  uint64_t seed;
  /*
   Enforce the essentiality condition.
   */
  bool essential;
} BvPolicy;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after a success.
 The pointer stays valid until the next call into this library on the
 same thread.
 */
const char *bv_last_error(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *bv_version(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void bv_string_free(char *s);

/*
 Parses a game document. The game is not validated.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum BvStatus bv_game_from_json(const char *json, struct BvGame **out);

/*
 Checks minimality and the Moulin property; on success the game is
 marked validated. `valid` receives the verdict.

 # Safety
 `g` must be a live handle; `valid` must be writable.
 */
enum BvStatus bv_game_validate(struct BvGame *g, bool *valid);

/*
 Number of voters, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t bv_game_voters(const struct BvGame *g);

/*
 Number of coalitions, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t bv_game_len(const struct BvGame *g);

/*
 Canonical JSON document for the game.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum BvStatus bv_game_to_json(const struct BvGame *g, char **out);

/*
 Converts a validated game into an equivalent sequence.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum BvStatus bv_game_to_sequence(const struct BvGame *g,
                                  struct BvPolicy policy,
                                  struct BvSequence **out);

/*
 Outcome (`'a'`, `'b'` or `'0'`) of the coalition rule at `profile`, a
 string over `a`, `b` and `0`. `default_rule` is `"majority"`, `"tie"`,
 `"dictator:i"` or null; without one the profile must be strict.

 # Safety
 `g` must be a live handle; strings NUL-terminated; `out` writable.
 */
enum BvStatus bv_game_eval(const struct BvGame *g,
                           const char *profile,
                           const char *default_rule,
                           char *out);

/*
 Releases a game. Null is ignored.

 # Safety
 `g` must be null or a live handle, not used afterwards.
 */
void bv_game_free(struct BvGame *g);

/*
 Parses a sequence document. Validity is not required here.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum BvStatus bv_sequence_from_json(const char *json, struct BvSequence **out);

/*
 Whether the sequence defines a rule: a singleton backstop last, no
 repeated sets, no set holding the backstop voter.

 # Safety
 `s` must be a live handle; `valid` must be writable.
 */
enum BvStatus bv_sequence_is_valid(const struct BvSequence *s, bool *valid);

/*
 Number of sets, or 0 for a null handle.

 # Safety
 `s` must be null or a live handle.
 */
size_t bv_sequence_len(const struct BvSequence *s);

/*
 JSON document for the sequence.

 # Safety
 `s` must be a live handle; `out` must be writable.
 */
enum BvStatus bv_sequence_to_json(const struct BvSequence *s, char **out);

/*
 Converts a valid sequence into its validated coalition set.

 # Safety
 `s` must be a live handle; `out` must be writable.
 */
enum BvStatus bv_sequence_to_game(const struct BvSequence *s, struct BvGame **out);

/*
 Outcome of the sequential rule; arguments as for [`bv_game_eval`].

 # Safety
 `s` must be a live handle; strings NUL-terminated; `out` writable.
 */
enum BvStatus bv_sequence_eval(const struct BvSequence *s,
                               const char *profile,
                               const char *default_rule,
                               char *out);

/*
 Whether the coalition rule and the sequential rule agree on every strict
 profile.

 # Safety
 Handles must be live; `equal` must be writable.
 */
enum BvStatus bv_equivalent(const struct BvGame *g, const struct BvSequence *s, bool *equal);

/*
 Releases a sequence. Null is ignored.

 # Safety
 `s` must be null or a live handle, not used afterwards.
 */
void bv_sequence_free(struct BvSequence *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BINVOTE_H */
