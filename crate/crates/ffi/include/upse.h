#ifndef UPSE_H
#define UPSE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum UpseStatus {
  /**
   * Success, or a decision answered true.
   */
  UpseStatus_Ok = 0,
  /**
   * A decision answered false.
   */
  UpseStatus_False = 1,
  /**
   * Malformed input or a null pointer.
   */
  UpseStatus_InvalidArgument = 2,
  /**
   * Well-formed input violating an algorithm's preconditions.
   */
  UpseStatus_Precondition = 3,
  /**
   * An internal invariant failed.
   */
  UpseStatus_Internal = 4,
} UpseStatus;

typedef struct UpseDigraph UpseDigraph;

typedef struct UpseEmbedding UpseEmbedding;

typedef struct UpseEmbeddingList UpseEmbeddingList;

typedef struct UpsePointSet UpsePointSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next `upse_*` call on this thread.
 */
const char *upse_last_error(void);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum UpseStatus upse_point_set_from_json(const char *json, struct UpsePointSet **out);

/**
 * # Safety
 * `s` must be null or a handle from this library, not yet freed.
 */
void upse_point_set_free(struct UpsePointSet *s);

/**
 * # Safety
 * `s` must be a live handle.
 */
uintptr_t upse_point_set_len(const struct UpsePointSet *s);

/**
 * Classification flags; `convex` and `one_sided` are false unless the set is
 * in general position.
 *
 * # Safety
 * `s` must be a live handle; the flag pointers must be writable.
 */
enum UpseStatus upse_classify(const struct UpsePointSet *s,
                              bool *general,
                              bool *convex,
                              bool *one_sided);

/**
 * Accepts `{"n", "edges"}`, `{"path": "+-"}` or a bare sign string.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum UpseStatus upse_digraph_from_json(const char *json, struct UpseDigraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void upse_digraph_free(struct UpseDigraph *g);

/**
 * An embedding of `g` on `s` from `len` point indices.
 *
 * # Safety
 * `mapping` must point to `len` readable values; handles must be live.
 */
enum UpseStatus upse_embedding_new(const struct UpseDigraph *g,
                                   const struct UpsePointSet *s,
                                   const uintptr_t *mapping,
                                   uintptr_t len,
                                   struct UpseEmbedding **out);

/**
 * # Safety
 * `e` must be null or a handle from this library, not yet freed.
 */
void upse_embedding_free(struct UpseEmbedding *e);

/**
 * # Safety
 * `e` must be a live handle.
 */
uintptr_t upse_embedding_len(const struct UpseEmbedding *e);

/**
 * Copy up to `cap` point indices into `buf`; returns the full length.
 *
 * # Safety
 * `e` must be a live handle; `buf` must have room for `cap` values.
 */
uintptr_t upse_embedding_mapping(const struct UpseEmbedding *e, uintptr_t *buf, uintptr_t cap);

/**
 * # Safety
 * `l` must be null or a handle from this library, not yet freed.
 */
void upse_embedding_list_free(struct UpseEmbeddingList *l);

/**
 * # Safety
 * `l` must be a live handle.
 */
uintptr_t upse_embedding_list_len(const struct UpseEmbeddingList *l);

/**
 * A borrowed view of entry `i`, valid while the list lives; null if out of range.
 *
 * # Safety
 * `l` must be a live handle.
 */
const struct UpseEmbedding *upse_embedding_list_get(const struct UpseEmbeddingList *l, uintptr_t i);

/**
 * `Ok` if `e` is a UPSE of `g` on `s`, `False` otherwise.
 *
 * # Safety
 * All handles must be live.
 */
enum UpseStatus upse_is_upse(const struct UpseDigraph *g,
                             const struct UpsePointSet *s,
                             const struct UpseEmbedding *e);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum UpseStatus upse_count(const struct UpseDigraph *g,
                           const struct UpsePointSet *s,
                           uint64_t *out);

/**
 * All UPSEs in lexicographic mapping order.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum UpseStatus upse_enumerate(const struct UpseDigraph *g,
                               const struct UpsePointSet *s,
                               struct UpseEmbeddingList **out);

/**
 * `Ok` if some UPSE maps vertex `v` to point `p`, `False` otherwise.
 *
 * # Safety
 * Handles must be live.
 */
enum UpseStatus upse_decide_fixed_vertex(const struct UpseDigraph *g,
                                         const struct UpsePointSet *s,
                                         uintptr_t v,
                                         uintptr_t p);

/**
 * All UPSEs of a path on a one-sided convex set of equal size.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum UpseStatus upse_embed_path_one_sided(const struct UpseDigraph *g,
                                          const struct UpsePointSet *s,
                                          struct UpseEmbeddingList **out);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum UpseStatus upse_embed_three_section(const struct UpseDigraph *g,
                                         const struct UpsePointSet *s,
                                         struct UpseEmbedding **out);

/**
 * Uses the canonical backbone of the caterpillar `g`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum UpseStatus upse_embed_caterpillar(const struct UpseDigraph *g,
                                       const struct UpsePointSet *s,
                                       struct UpseEmbedding **out);

/**
 * The reduction bundle for a 3-Partition instance as a JSON string, to be
 * released with `upse_string_free`.
 *
 * # Safety
 * `values` must point to `len` readable values; `out` must be writable.
 */
enum UpseStatus upse_reduce_3partition(const uint64_t *values, uintptr_t len, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void upse_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UPSE_H */
