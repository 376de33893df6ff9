#ifndef VARDLE_H
#define VARDLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Number of tiles written by the scoring functions.
 */
#define VARDLE_WORD_LEN 5

typedef enum VardleStatus {
  VARDLE_STATUS_OK = 0,
  VARDLE_STATUS_NULL_POINTER = 1,
  VARDLE_STATUS_INVALID_UTF8 = 2,
  VARDLE_STATUS_INVALID_WORD = 3,
  VARDLE_STATUS_GAME_OVER = 4,
  VARDLE_STATUS_NOT_FINISHED = 5,
  VARDLE_STATUS_INVALID_DATE = 6,
  VARDLE_STATUS_BEFORE_START = 7,
  VARDLE_STATUS_EMPTY_SCHEDULE = 8,
  VARDLE_STATUS_PANIC = 9,
} VardleStatus;

typedef enum VardleTile {
  VARDLE_TILE_GREY = 0,
  VARDLE_TILE_ORANGE = 1,
  VARDLE_TILE_GREEN = 2,
} VardleTile;

typedef enum VardleGameStatus {
  VARDLE_GAME_STATUS_IN_PROGRESS = 0,
  VARDLE_GAME_STATUS_WON = 1,
  VARDLE_GAME_STATUS_LOST = 2,
} VardleGameStatus;

/**
 * A game in progress or finished. Opaque to C.
 */
typedef struct VardleGame VardleGame;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a success.
 * The pointer stays valid until the next vardle call on this thread.
 */
const char *vardle_last_error_message(void);

/**
 * Checks that `word` is five letters of the Latvian alphabet after normalization.
 *
 * # Safety
 * `word` must be NULL or a NUL-terminated string.
 */
enum VardleStatus vardle_validate_word(const char *word);

/**
 * Scores `guess` against `answer`, writing five tiles to `out_tiles`.
 *
 * # Safety
 * String arguments must be NULL or NUL-terminated; `out_tiles` must be NULL
 * or point to room for five tiles.
 */
enum VardleStatus vardle_score_guess(const char *answer,
                                     const char *guess,
                                     enum VardleTile *out_tiles);

/**
 * Starts a game. On success `*out_game` owns a handle for vardle_game_free.
 *
 * # Safety
 * `answer` must be NULL or NUL-terminated; `out_game` must be NULL or writable.
 */
enum VardleStatus vardle_game_new(uint32_t puzzle_id,
                                  const char *answer,
                                  struct VardleGame **out_game);

/**
 * Plays `guess`. `out_tiles` may be NULL if the row is not needed.
 * The caller is responsible for checking the guess against a word list.
 *
 * # Safety
 * `game` must come from vardle_game_new; `out_tiles` must be NULL or hold five tiles.
 */
enum VardleStatus vardle_game_guess(struct VardleGame *game,
                                    const char *guess,
                                    enum VardleTile *out_tiles);

/**
 * # Safety
 * `game` must come from vardle_game_new; `out_status` must be writable.
 */
enum VardleStatus vardle_game_status(const struct VardleGame *game,
                                     enum VardleGameStatus *out_status);

/**
 * Number of guesses played so far.
 *
 * # Safety
 * `game` must come from vardle_game_new; `out_count` must be writable.
 */
enum VardleStatus vardle_game_guess_count(const struct VardleGame *game, uint32_t *out_count);

/**
 * Spoiler-free share text for a finished game. Free with vardle_string_free.
 *
 * # Safety
 * `game` must come from vardle_game_new; `title` must be NULL or
 * NUL-terminated; `out_text` must be writable.
 */
enum VardleStatus vardle_game_share_text(const struct VardleGame *game,
                                         const char *title,
                                         char **out_text);

/**
 * Releases a game. NULL is ignored.
 *
 * # Safety
 * `game` must be NULL or come from vardle_game_new, and not be used again.
 */
void vardle_game_free(struct VardleGame *game);

/**
 * Index into a main list of `list_len` words for the given calendar date.
 *
 * # Safety
 * `out_index` must be NULL or writable.
 */
enum VardleStatus vardle_daily_index(int32_t start_year,
                                     uint32_t start_month,
                                     uint32_t start_day,
                                     int32_t year,
                                     uint32_t month,
                                     uint32_t day,
                                     uint32_t list_len,
                                     uint32_t *out_index);

/**
 * Thesaurus URL for `word`. Free with vardle_string_free.
 *
 * # Safety
 * `word` must be NULL or NUL-terminated; `out_url` must be writable.
 */
enum VardleStatus vardle_thesaurus_link(const char *word, char **out_url);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library, not freed before.
 */
void vardle_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VARDLE_H */
