#ifndef MONOCOMP_H
#define MONOCOMP_H

/*
 * C interface to libmonocomp. Every query fills an opaque mc_result holding
 * one JSON object per record. Integers cross the boundary as decimal
 * strings so nothing is limited to machine words.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(MONOCOMP_BUILDING_LIBRARY)
#define MC_API __attribute__((visibility("default")))
#else
#define MC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mc_context mc_context;
typedef struct mc_result mc_result;

typedef enum mc_status {
    MC_OK = 0,
    MC_ERR_NULL = 1,        /* required pointer was NULL */
    MC_ERR_ARGUMENT = 2,    /* malformed integer, range or option */
    MC_ERR_PARSE = 3,       /* malformed polynomial literal */
    MC_ERR_NOT_PRIME = 4,   /* modulus is not a prime */
    MC_ERR_DOMAIN = 5,      /* instance outside the supported domain */
    MC_ERR_INTERNAL = 6     /* consistency check failed */
} mc_status;

typedef struct mc_range {
    long lo;
    long hi;
} mc_range;

MC_API char const* mc_version(void);
MC_API char const* mc_status_string(mc_status status);

MC_API mc_status mc_context_create(mc_context** out);
MC_API void mc_context_destroy(mc_context* ctx);
/* Message for the last failed call on ctx, "" if none. */
MC_API char const* mc_context_last_error(mc_context const* ctx);

MC_API mc_status mc_context_set_seed(mc_context* ctx, uint64_t seed);
/* "low", "default" or "high". */
MC_API mc_status mc_context_set_budget(mc_context* ctx, char const* level);
MC_API mc_status mc_context_set_verify(mc_context* ctx, int on);
MC_API mc_status mc_context_set_assume_irreducible(mc_context* ctx, int on);
MC_API mc_status mc_context_set_shards(mc_context* ctx, unsigned shards);

MC_API mc_status mc_check(mc_context* ctx, long m, long n, char const* a, char const* b, mc_result** out);
MC_API mc_status mc_disc(mc_context* ctx, long m, long n, char const* a, char const* b, mc_result** out);
/* poly uses the ascending coefficient format, e.g. "[-5, 0, 1]". */
MC_API mc_status mc_dedekind(mc_context* ctx, char const* poly, char const* p, mc_result** out);
MC_API mc_status mc_binom(mc_context* ctx, long n, char const* b, mc_result** out);
MC_API mc_status mc_search(mc_context* ctx, mc_range m, mc_range n, mc_range a, mc_range b, int require_pair,
                           mc_result** out);
MC_API mc_status mc_example(mc_context* ctx, unsigned long p_max, mc_result** out);

MC_API size_t mc_result_count(mc_result const* r);
/* Record i as a JSON object; NULL when out of range. Owned by r. */
MC_API char const* mc_result_record(mc_result const* r, size_t i);
/* All records as a JSON array. Owned by r. */
MC_API char const* mc_result_json(mc_result const* r);
/* Nonzero when some record could not be decided within budget. */
MC_API int mc_result_has_unknown(mc_result const* r);
MC_API void mc_result_destroy(mc_result* r);

#ifdef __cplusplus
}
#endif

#endif /* MONOCOMP_H */
