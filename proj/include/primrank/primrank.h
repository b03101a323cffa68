#ifndef PRIMRANK_PRIMRANK_H
#define PRIMRANK_PRIMRANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(PRK_BUILDING_LIBRARY)
#define PRK_API __attribute__((visibility("default")))
#else
#define PRK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prk_status {
  PRK_OK = 0,
  PRK_INVALID_ARGUMENT = 1,
  PRK_UNSUPPORTED_FLAVOR = 2,
  PRK_IO = 3,
  PRK_AUDIT_FAILED = 4,
  PRK_STEM_UNKNOWN = 5,
  PRK_SIZE_LIMIT = 6,
  PRK_DIMENSION_MISMATCH = 7,
  PRK_FRAME_FAILURE = 8,
  PRK_BUFFER_TOO_SMALL = 9,
  PRK_NULL_ARGUMENT = 10,
  PRK_INTERNAL = 11
} prk_status;

typedef enum prk_flavor {
  PRK_FLAVOR_ORIENTED = 0,
  PRK_FLAVOR_QUATERNIONIC = 1,
  PRK_FLAVOR_UNORIENTED = 2
} prk_flavor;

typedef struct prk_config {
  int truncation_degree;
  int grid_height;
  int i_max;
  size_t sphere_samples;
  size_t injectivity_pairs;
  uint64_t seed;
  double frame_tolerance;
  size_t partition_memo_limit;
} prk_config;

typedef struct prk_context prk_context;
typedef struct prk_report prk_report;

PRK_API void prk_config_default(prk_config* cfg);

/* cfg may be NULL for defaults. */
PRK_API prk_status prk_context_create(const prk_config* cfg, prk_context** out);
PRK_API void prk_context_destroy(prk_context* ctx);
PRK_API prk_status prk_context_config(const prk_context* ctx, prk_config* out);

/* Stable stem extensions: {"8": {"free_rank": 0, "torsion": [2, 2], "source": "..."}}. */
PRK_API prk_status prk_context_load_stems_file(prk_context* ctx, const char* path);
PRK_API prk_status prk_context_load_stems_json(prk_context* ctx, const char* json);

/* Message of the last failing call on this thread; empty after success. */
PRK_API const char* prk_last_error(void);
PRK_API const char* prk_status_name(prk_status status);

/* Accepts so/oriented, sp/quaternionic, o/unoriented. */
PRK_API prk_status prk_parse_flavor(const char* name, prk_flavor* out);

/* Integer results are written as decimal strings. When cap is too small the
   call returns PRK_BUFFER_TOO_SMALL; *needed always receives the length
   including the terminator when non-NULL. */
PRK_API prk_status prk_count_partitions(prk_context* ctx, long m_num, long m_den,
                                        uint64_t max_part, char* buf, size_t cap,
                                        size_t* needed);
PRK_API prk_status prk_rank_pi(prk_flavor flavor, int k, int r, int j, char* buf, size_t cap,
                               size_t* needed);
PRK_API prk_status prk_corollary_eval(int k, int r, int j, char* buf, size_t cap,
                                      size_t* needed);
PRK_API prk_status prk_segal_index(int p, char* buf, size_t cap, size_t* needed);
PRK_API prk_status prk_infinite_group_criterion(int r, int n, int* out);

/* Report constructors. On PRK_OK *out owns a JSON document; its outcome is
   read with prk_report_status (PRK_OK, PRK_AUDIT_FAILED or PRK_STEM_UNKNOWN). */
PRK_API prk_status prk_report_ranks(prk_context* ctx, prk_flavor flavor, int k, int r,
                                    int max_degree, prk_report** out);
PRK_API prk_status prk_report_cobordism_rank(prk_context* ctx, prk_flavor flavor, int k, int r,
                                             const char* betti_path, prk_report** out);
PRK_API prk_status prk_report_cobordism_rank_json(prk_context* ctx, prk_flavor flavor, int k,
                                                  int r, const char* betti_json,
                                                  prk_report** out);
PRK_API prk_status prk_report_e1_page(prk_context* ctx, int p_max, int q_max, int include_p0,
                                      prk_report** out);
PRK_API prk_status prk_report_segal_audit(prk_context* ctx, int p, int include_p0,
                                          prk_report** out);
PRK_API prk_status prk_report_odd_torsion_audit(prk_context* ctx, int i_max, prk_report** out);
PRK_API prk_status prk_report_umbrella_verify(prk_context* ctx, int height, prk_report** out);
PRK_API prk_status prk_report_corollary_compare(prk_context* ctx, int k, int r, int max_degree,
                                                prk_report** out);

PRK_API const char* prk_report_json(const prk_report* report);
PRK_API prk_status prk_report_status(const prk_report* report);
PRK_API void prk_report_destroy(prk_report* report);

#ifdef __cplusplus
}
#endif

#endif
