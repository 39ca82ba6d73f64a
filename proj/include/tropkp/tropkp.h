/* C interface to the tropkp library. All handles are opaque; every
 * function returning tropkp_status leaves a message for tropkp_last_error()
 * on failure. */
#ifndef TROPKP_H
#define TROPKP_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TROPKP_API __declspec(dllexport)
#else
#define TROPKP_API __attribute__((visibility("default")))
#endif

typedef struct tropkp_config tropkp_config;
typedef struct tropkp_result tropkp_result;

typedef enum tropkp_status {
  TROPKP_OK = 0,
  TROPKP_E_INVALID_ARGUMENT = 1,
  TROPKP_E_CONFIG = 2,
  TROPKP_E_DEGENERATE = 3,
  TROPKP_E_DOMAIN = 4,
  TROPKP_E_NUMERIC = 5,
  TROPKP_E_INTERNAL = 6,
  TROPKP_E_UNKNOWN = 99
} tropkp_status;

TROPKP_API const char* tropkp_version(void);
/* Message of the last failure on the calling thread; empty if none. */
TROPKP_API const char* tropkp_last_error(void);

/* Working precision of numeric evaluation in decimal digits (>= 16). */
TROPKP_API tropkp_status tropkp_set_precision(unsigned digits);

TROPKP_API tropkp_status tropkp_config_parse(const char* json_text, tropkp_config** out);
TROPKP_API tropkp_status tropkp_config_load(const char* path, tropkp_config** out);
/* Overrides; negative samples or nonpositive tolerance leave the field unchanged. */
TROPKP_API tropkp_status tropkp_config_set_sampling(tropkp_config* cfg, int samples, unsigned long long seed,
                                                   int set_seed, double tolerance);
TROPKP_API void tropkp_config_free(tropkp_config* cfg);

TROPKP_API tropkp_status tropkp_voronoi(int genus, tropkp_result** out);
TROPKP_API tropkp_status tropkp_delaunay(int genus, tropkp_result** out);
TROPKP_API tropkp_status tropkp_orient(int genus, tropkp_result** out);
TROPKP_API tropkp_status tropkp_matroid(int genus, tropkp_result** out);
TROPKP_API tropkp_status tropkp_limits(const tropkp_config* cfg, tropkp_result** out);
TROPKP_API tropkp_status tropkp_param(const tropkp_config* cfg, tropkp_result** out);
TROPKP_API tropkp_status tropkp_certify(const tropkp_config* cfg, tropkp_result** out);
TROPKP_API tropkp_status tropkp_eqs(int k, int n, tropkp_result** out);
TROPKP_API tropkp_status tropkp_field(const tropkp_config* cfg, double lo, double hi, int steps, double t,
                                      tropkp_result** out);

/* JSON (or CSV for field) owned by the result. */
TROPKP_API const char* tropkp_result_text(const tropkp_result* r);
/* 1 unless the result is a failed certification. */
TROPKP_API int tropkp_result_passed(const tropkp_result* r);
TROPKP_API void tropkp_result_free(tropkp_result* r);

#ifdef __cplusplus
}
#endif

#endif /* TROPKP_H */
