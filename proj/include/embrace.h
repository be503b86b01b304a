/*
 * C interface to the embracing-bases library: parse or generate
 * instances (directed graphs, rational point sets, or explicit signed
 * circuit lists with an anchor and two bases), then run axiom
 * validation, exact exchange-distance searches, the constructive
 * two-phase exchange sequence, conjecture audits, and the built-in
 * worked-example reproductions.
 *
 * Conventions:
 *  - every function returns emb_status; EMB_OK means success;
 *  - on failure, emb_last_error() holds a thread-local message;
 *  - strings returned through `char **` are heap-allocated and must be
 *    released with emb_string_free();
 *  - instances are opaque handles released with emb_instance_free().
 */

#ifndef EMBRACE_H
#define EMBRACE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emb_status {
    EMB_OK = 0,
    EMB_ERR_PARSE = 1,
    EMB_ERR_INVALID_ARGUMENT = 2,
    EMB_ERR_ANCHOR_IN_BASIS = 3,
    EMB_ERR_ANCHOR_NOT_SPANNED = 4,
    EMB_ERR_NOT_A_TREE = 5,
    EMB_ERR_NOT_A_BASIS = 6,
    EMB_ERR_NOT_EMBRACING = 7,
    EMB_ERR_PRECONDITION = 8,
    EMB_ERR_NOT_A_CIRCUIT = 9,
    EMB_ERR_DEGENERATE_SIMPLEX = 10,
    EMB_ERR_ANCHOR_ON_FACE = 11,
    EMB_ERR_CARDINALITY = 12,
    EMB_ERR_GENERATION = 13,
    EMB_ERR_IO = 14,
    EMB_ERR_INTERNAL = 15,
    EMB_ERR_UNKNOWN = 16
} emb_status;

typedef struct emb_instance emb_instance;

/* Message describing the most recent failure on this thread. Never
 * NULL; empty before any failure. */
const char* emb_last_error(void);

void emb_string_free(char* text);
void emb_instance_free(emb_instance* instance);

/* ---- instance plumbing ---------------------------------------- */

emb_status emb_instance_parse(const char* text, emb_instance** out);
emb_status emb_instance_read_file(const char* path, emb_instance** out);
emb_status emb_instance_to_text(const emb_instance* instance, char** out);

/* "graphic", "affine" or "explicit"; NULL when instance is NULL. */
const char* emb_instance_kind(const emb_instance* instance);

/* Deterministic random instances. */
emb_status emb_generate_graphic(size_t vertices, size_t arcs, uint64_t seed,
                                emb_instance** out);
emb_status emb_generate_affine(size_t dimension, size_t points, uint64_t seed,
                               emb_instance** out);

/* ---- analyses --------------------------------------------------- */

/* Runs the signed-circuit axiom checker over the instance's circuits
 * (listed circuits for explicit instances, enumerated ones otherwise).
 * *passed is 1 when all axioms hold. The report is human-readable. */
emb_status emb_validate_axioms(const emb_instance* instance, char** report, int* passed);

/* Flags for emb_distance. */
#define EMB_DISTANCE_FULL_GROUND 1u /* otherwise: union of the endpoint bases */
#define EMB_DISTANCE_MONOTONE 2u    /* restrict to monotone sequences */

/* Exact shortest embracing exchange distance between the instance's
 * bases A and B. *distance receives the length, -1 for infinite.
 * The report holds the witness in the start/step/distance format. */
emb_status emb_distance(const emb_instance* instance, uint32_t flags, char** report,
                        int64_t* distance);

/* Constructive two-phase monotone exchange sequence from A to B for
 * graphic instances with a vertex-pair anchor; the report lists the
 * steps, the length and the verification outcome. *length receives the
 * number of exchanges. */
emb_status emb_exchange_sequence(const emb_instance* instance, char** report,
                                 int64_t* length);

/* Flags for emb_audit. */
#define EMB_AUDIT_UNION_MODE 1u
#define EMB_AUDIT_FULL_MODE 2u
#define EMB_AUDIT_REQUIRE_MONOTONE 4u

/* Audits a batch of instances against the distance-at-most-rank bound.
 * dump_dir may be NULL (environment/default applies); inject_rank >= 0
 * replaces the true rank in every verdict, to test the dump path.
 * *violations receives the number of dumped instances. */
emb_status emb_audit(const emb_instance* const* instances, size_t count, uint32_t flags,
                     size_t workers, const char* dump_dir, int64_t inject_rank,
                     char** report, size_t* violations);

/* Reproduces a built-in worked example; name is "example1" or
 * "example2". *passed is 1 when every check succeeded. */
emb_status emb_repro(const char* name, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* EMBRACE_H */
