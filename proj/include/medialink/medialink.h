#ifndef MEDIALINK_H
#define MEDIALINK_H

/* C interface to the medialink invariant engine.
 *
 * Handles are opaque. Every function returns ML_OK or an error status; on
 * error, ml_last_error() describes it (per thread). Strings returned through
 * char** out-parameters are owned by the caller and released with
 * ml_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  define ML_API __declspec(dllexport)
#else
#  define ML_API __attribute__((visibility("default")))
#endif

typedef struct ml_diagram ml_diagram;
typedef struct ml_config ml_config;

typedef enum ml_status {
  ML_OK = 0,
  ML_ERR_USAGE = 1,
  ML_ERR_PARSE = 2,
  ML_ERR_VALIDATION = 3,
  ML_ERR_DOMAIN = 4,
  ML_ERR_CAP = 5,
  ML_ERR_INTERNAL = 6
} ml_status;

ML_API const char* ml_last_error(void);
ML_API const char* ml_status_name(ml_status s);
ML_API void ml_string_free(char* s);

/* Diagrams */
ML_API ml_status ml_diagram_parse(const char* text, ml_diagram** out);
/* "fixture:NAME" or a file path */
ML_API ml_status ml_diagram_load(const char* source, ml_diagram** out);
ML_API void ml_diagram_free(ml_diagram* d);
ML_API ml_status ml_diagram_render(const ml_diagram* d, char** json);
ML_API int ml_diagram_mu(const ml_diagram* d);
ML_API size_t ml_diagram_crossings(const ml_diagram* d);
/* Parses without validating, then writes a JSON list of violations.
 * *valid is 1 when the list is empty. */
ML_API ml_status ml_validate_text(const char* text, int* valid, char** violations_json);
ML_API ml_status ml_fixture_names(char** json);

/* Config: path may be NULL for defaults (honouring MEDIALINK_CONFIG). */
ML_API ml_status ml_config_load(const char* path, ml_config** out);
ML_API void ml_config_free(ml_config* c);
ML_API ml_status ml_config_set_seed(ml_config* c, uint64_t seed);
ML_API ml_status ml_config_render(const ml_config* c, char** json);

/* Invariants */
ML_API ml_status ml_invariants(const ml_diagram* d, const ml_config* c, char** json);
ML_API ml_status ml_presentation(const ml_diagram* d, int reduced, char** json);
/* Decimal count of colorings by Z_n with x ▷ y = ux + (1-u)y. */
ML_API ml_status ml_colorings(const ml_diagram* d, uint64_t n, uint64_t u, char** count);
/* Same by exhaustive search; ML_ERR_CAP above `limit` assignments. */
ML_API ml_status ml_colorings_brute(const ml_diagram* d, uint64_t n, uint64_t u, uint64_t limit,
                                    char** count);
ML_API ml_status ml_compare(const ml_diagram* a, const ml_diagram* b, const ml_config* c,
                            int allow_permutations, int* distinguished, char** report_json,
                            char** table);

/* Rewriting */
ML_API ml_status ml_make_alternating(const ml_diagram* d, ml_diagram** out);
ML_API int ml_has_alternating_writhes(const ml_diagram* d);
/* Applies `moves` seeded random Reidemeister moves; *moves_json lists them. */
ML_API ml_status ml_random_moves(const ml_diagram* d, int moves, uint64_t seed, ml_diagram** out,
                                 char** moves_json);

#ifdef __cplusplus
}
#endif

#endif
