#include "quivext/quivext.h"

#include <cstring>
#include <new>
#include <string>

#include "problem.hpp"

struct qx_problem {
    quivext::Problem problem;
};

struct qx_report {
    quivext::Report report;
};

namespace {

thread_local std::string g_last_error;

qx_status status_of(quivext::ErrorCode code) {
    using quivext::ErrorCode;
    switch (code) {
        case ErrorCode::ParseError: return QX_ERR_PARSE;
        case ErrorCode::SchemaViolation:
        case ErrorCode::MissingTwistEntry: return QX_ERR_SCHEMA;
        case ErrorCode::InhomogeneousRelation:
        case ErrorCode::NonParallelRelation:
        case ErrorCode::InvalidRelation:
        case ErrorCode::RelationViolated:
        case ErrorCode::NotCommuting: return QX_ERR_RELATION;
        case ErrorCode::NotAdmissible:
        case ErrorCode::CutoffExceeded: return QX_ERR_NOT_ADMISSIBLE;
        case ErrorCode::ShapeMismatch:
        case ErrorCode::BlockInconsistency: return QX_ERR_SHAPE;
        case ErrorCode::ComplexBroken:
        case ErrorCode::SingularConnectingMap: return QX_ERR_MATH;
        case ErrorCode::HasRelations:
        case ErrorCode::UnsupportedRank: return QX_ERR_UNSUPPORTED;
        case ErrorCode::InvalidArgument: return QX_ERR_INVALID_ARGUMENT;
    }
    return QX_ERR_INTERNAL;
}

template <class Fn>
qx_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QX_OK;
    } catch (const quivext::Error& e) {
        g_last_error = std::string(quivext::error_code_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return QX_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QX_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qx_status invalid(const char* msg) {
    g_last_error = msg;
    return QX_ERR_INVALID_ARGUMENT;
}

quivext::Problem with_options(const quivext::Problem& p, const qx_run_options* opts) {
    quivext::Problem out = p;
    if (!opts) return out;
    quivext::RunOverrides o;
    if (opts->field) o.field = quivext::FieldSpec::parse(opts->field);
    if (opts->max_degree >= 0) o.max_degree = static_cast<std::size_t>(opts->max_degree);
    if (opts->margin >= 0) o.margin = static_cast<std::size_t>(opts->margin);
    if (opts->has_seed) o.seed = opts->seed;
    quivext::apply_overrides(out, o);
    return out;
}

quivext::OutputMode mode_of(qx_output_mode m) {
    return m == QX_OUTPUT_JSON ? quivext::OutputMode::json : quivext::OutputMode::table;
}

qx_status copy_dims(const std::vector<std::size_t>& d, size_t* dims, size_t capacity, size_t* count) {
    if (count) *count = d.size();
    if (dims)
        for (std::size_t i = 0; i < d.size() && i < capacity; ++i) dims[i] = d[i];
    return QX_OK;
}

}  // namespace

extern "C" {

QX_API const char* qx_version(void) { return "1.0.0"; }

QX_API const char* qx_last_error(void) { return g_last_error.c_str(); }

QX_API const char* qx_status_name(qx_status status) {
    switch (status) {
        case QX_OK: return "QX_OK";
        case QX_ERR_PARSE: return "QX_ERR_PARSE";
        case QX_ERR_SCHEMA: return "QX_ERR_SCHEMA";
        case QX_ERR_RELATION: return "QX_ERR_RELATION";
        case QX_ERR_NOT_ADMISSIBLE: return "QX_ERR_NOT_ADMISSIBLE";
        case QX_ERR_SHAPE: return "QX_ERR_SHAPE";
        case QX_ERR_MATH: return "QX_ERR_MATH";
        case QX_ERR_UNSUPPORTED: return "QX_ERR_UNSUPPORTED";
        case QX_ERR_INVALID_ARGUMENT: return "QX_ERR_INVALID_ARGUMENT";
        case QX_ERR_INTERNAL: return "QX_ERR_INTERNAL";
    }
    return "QX_UNKNOWN";
}

QX_API void qx_run_options_init(qx_run_options* opts) {
    if (!opts) return;
    opts->field = nullptr;
    opts->max_degree = -1;
    opts->margin = -1;
    opts->has_seed = 0;
    opts->seed = 0;
}

QX_API qx_status qx_problem_load_file(const char* path, qx_problem** out) {
    if (!path || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = new qx_problem{quivext::load_problem(path)}; });
}

QX_API qx_status qx_problem_load_string(const char* json, qx_problem** out) {
    if (!json || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = new qx_problem{quivext::parse_problem(json)}; });
}

QX_API void qx_problem_free(qx_problem* problem) { delete problem; }

QX_API qx_status qx_problem_canonical_json(const qx_problem* problem, char** out) {
    if (!problem || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(quivext::canonical_json(problem->problem).dump(2) + "\n"); });
}

QX_API qx_status qx_run(const qx_problem* problem, const char* command, const qx_run_options* opts,
                        qx_report** out) {
    if (!problem || !command || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto p = with_options(problem->problem, opts);
        *out = new qx_report{quivext::run_command(command, p)};
    });
}

QX_API int qx_report_exit_code(const qx_report* report) { return report ? report->report.exit_code : 1; }

QX_API qx_status qx_report_format(const qx_report* report, qx_output_mode mode, char** out) {
    if (!report || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(quivext::format_output(report->report, mode_of(mode))); });
}

QX_API void qx_report_free(qx_report* report) { delete report; }

QX_API qx_status qx_format_error(qx_status status, const char* message, qx_output_mode mode, char** out) {
    if (!out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        std::string text;
        if (mode == QX_OUTPUT_JSON) {
            nlohmann::ordered_json doc;
            doc["schema_version"] = "1";
            doc["error"] = {{"status", qx_status_name(status)}, {"message", message ? message : ""}};
            text = doc.dump(2) + "\n";
        } else {
            text = std::string("error: ") + qx_status_name(status) + ": " + (message ? message : "") + "\n";
        }
        *out = dup_string(text);
    });
}

QX_API int qx_status_exit_code(qx_status status) {
    if (status == QX_OK) return 0;
    return status == QX_ERR_MATH ? 2 : 1;
}

QX_API void qx_string_free(char* s) { delete[] s; }

QX_API qx_status qx_ext_dims(const qx_problem* problem, const char* V, const char* W, const qx_run_options* opts,
                             size_t* dims, size_t capacity, size_t* count) {
    if (!problem || !V || !W) return invalid("null argument");
    return guarded([&] {
        copy_dims(quivext::problem_ext_dims(with_options(problem->problem, opts), V, W), dims, capacity, count);
    });
}

QX_API qx_status qx_oracle_dims(const qx_problem* problem, const char* V, const char* W,
                                const qx_run_options* opts, size_t* dims, size_t capacity, size_t* count) {
    if (!problem || !V || !W) return invalid("null argument");
    return guarded([&] {
        copy_dims(quivext::problem_oracle_dims(with_options(problem->problem, opts), V, W), dims, capacity, count);
    });
}

QX_API qx_status qx_hom_dim(const qx_problem* problem, const char* V, const char* W, const qx_run_options* opts,
                            size_t* dim) {
    if (!problem || !V || !W || !dim) return invalid("null argument");
    return guarded([&] { *dim = quivext::problem_hom_dim(with_options(problem->problem, opts), V, W); });
}

QX_API qx_status qx_adhm_ext(const qx_problem* problem, const char* V, const char* W, const qx_run_options* opts,
                             size_t dims[3]) {
    if (!problem || !V || !W || !dims) return invalid("null argument");
    return guarded([&] {
        auto h = quivext::problem_adhm_ext(with_options(problem->problem, opts), V, W);
        for (int i = 0; i < 3; ++i) dims[i] = h[i];
    });
}

}  // extern "C"
