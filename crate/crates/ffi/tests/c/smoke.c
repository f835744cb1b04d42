#include <stdio.h>
#include <string.h>

#include "binvote.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,          \
              bv_last_error());                                       \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  const char *doc =
      "{\"schema_version\":1,\"n\":3,\"coalitions\":[[1,2],[1,3],[2,3]]}";
  BvGame *game = NULL;
  CHECK(bv_game_from_json(doc, &game) == BV_STATUS_OK);
  bool valid = false;
  CHECK(bv_game_validate(game, &valid) == BV_STATUS_OK && valid);

  BvPolicy policy = {false, 0, false};
  BvSequence *seq = NULL;
  CHECK(bv_game_to_sequence(game, policy, &seq) == BV_STATUS_OK);

  bool equal = false;
  CHECK(bv_equivalent(game, seq, &equal) == BV_STATUS_OK && equal);

  char out = 0;
  CHECK(bv_sequence_eval(seq, "abb", NULL, &out) == BV_STATUS_OK && out == 'b');
  CHECK(bv_game_eval(game, "a00", "tie", &out) == BV_STATUS_OK && out == '0');
  CHECK(bv_game_eval(game, "a0b", NULL, &out) == BV_STATUS_INPUT);
  CHECK(strlen(bv_last_error()) > 0);

  char *json = NULL;
  CHECK(bv_sequence_to_json(seq, &json) == BV_STATUS_OK);
  CHECK(strstr(json, "\"sequence\"") != NULL);
  bv_string_free(json);

  CHECK(bv_game_from_json("{", &game) == BV_STATUS_INPUT);
  bv_sequence_free(seq);
  bv_game_free(game);
  printf("ok %s\n", bv_version());
  return 0;
}
