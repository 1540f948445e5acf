/*
 * quivext: Hom and Ext of quiver representations with relations over the
 * rationals and prime fields.
 *
 * All handles are opaque. Functions returning qx_status set a thread-local
 * message readable with qx_last_error(). Strings handed out by the library
 * are released with qx_string_free().
 */
#ifndef QUIVEXT_QUIVEXT_H
#define QUIVEXT_QUIVEXT_H

#include <stddef.h>
#include <stdint.h>

#if defined(QX_BUILDING_LIBRARY)
#define QX_API __attribute__((visibility("default")))
#else
#define QX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qx_status {
    QX_OK = 0,
    QX_ERR_PARSE = 1,          /* malformed JSON or scalar */
    QX_ERR_SCHEMA = 2,         /* document does not match the schema */
    QX_ERR_RELATION = 3,       /* bad relation, or a representation violates one */
    QX_ERR_NOT_ADMISSIBLE = 4, /* the algebra is infinite-dimensional or too large */
    QX_ERR_SHAPE = 5,
    QX_ERR_MATH = 6,           /* a construction failed a mathematical check */
    QX_ERR_UNSUPPORTED = 7,
    QX_ERR_INVALID_ARGUMENT = 8,
    QX_ERR_INTERNAL = 9
} qx_status;

typedef enum qx_output_mode { QX_OUTPUT_TABLE = 0, QX_OUTPUT_JSON = 1 } qx_output_mode;

typedef struct qx_problem qx_problem;
typedef struct qx_report qx_report;

/* Overrides for values stored in the problem file. */
typedef struct qx_run_options {
    const char* field; /* "rational" or "prime:P"; NULL keeps the file's field */
    int64_t max_degree; /* Ext degree P; negative keeps the file value */
    int64_t margin;     /* extra cutoff degrees checked; negative keeps the file value */
    int has_seed;
    uint64_t seed;
} qx_run_options;

QX_API const char* qx_version(void);
QX_API const char* qx_last_error(void);
QX_API const char* qx_status_name(qx_status status);

QX_API void qx_run_options_init(qx_run_options* opts);

QX_API qx_status qx_problem_load_file(const char* path, qx_problem** out);
QX_API qx_status qx_problem_load_string(const char* json, qx_problem** out);
QX_API void qx_problem_free(qx_problem* problem);
/* Normalized JSON form of the problem; parse(canonical) reproduces it. */
QX_API qx_status qx_problem_canonical_json(const qx_problem* problem, char** out);

/* command: check, hom, ext, oracle, coresolve, adhm, serre. opts may be NULL. */
QX_API qx_status qx_run(const qx_problem* problem, const char* command, const qx_run_options* opts,
                        qx_report** out);
/* 0 when every checked property holds, 2 otherwise. */
QX_API int qx_report_exit_code(const qx_report* report);
QX_API qx_status qx_report_format(const qx_report* report, qx_output_mode mode, char** out);
QX_API void qx_report_free(qx_report* report);

/* Error document in the same formats as reports. */
QX_API qx_status qx_format_error(qx_status status, const char* message, qx_output_mode mode, char** out);
/* Process exit code for a failed call: 2 for QX_ERR_MATH, 1 otherwise. */
QX_API int qx_status_exit_code(qx_status status);

QX_API void qx_string_free(char* s);

/*
 * Direct queries on named objects of a problem. dims receives up to
 * capacity values; *count is the number available (P + 1 for Ext).
 */
QX_API qx_status qx_ext_dims(const qx_problem* problem, const char* V, const char* W, const qx_run_options* opts,
                             size_t* dims, size_t capacity, size_t* count);
QX_API qx_status qx_oracle_dims(const qx_problem* problem, const char* V, const char* W,
                                const qx_run_options* opts, size_t* dims, size_t capacity, size_t* count);
QX_API qx_status qx_hom_dim(const qx_problem* problem, const char* V, const char* W, const qx_run_options* opts,
                            size_t* dim);
QX_API qx_status qx_adhm_ext(const qx_problem* problem, const char* V, const char* W, const qx_run_options* opts,
                             size_t dims[3]);

#ifdef __cplusplus
}
#endif

#endif
