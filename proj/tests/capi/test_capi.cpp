#include <doctest.h>

#include <cstring>
#include <string>

#include "quivext/quivext.h"

namespace {

std::string data(const std::string& name) { return std::string(QUIVEXT_TEST_DATA) + "/" + name; }

const char* kJordan = R"({
  "schema_version": "1",
  "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "tail": "1", "head": "1"}]},
  "relations": [[{"word": "x x"}]],
  "representations": {"S": {"dims": {"1": 1}}},
  "options": {"max_degree": 4}
})";

std::string take(char* s) {
    std::string out = s ? s : "";
    qx_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(qx_version()) > 0);
    CHECK(std::string(qx_status_name(QX_ERR_SCHEMA)) == "QX_ERR_SCHEMA");
    CHECK(qx_status_exit_code(QX_OK) == 0);
    CHECK(qx_status_exit_code(QX_ERR_PARSE) == 1);
    CHECK(qx_status_exit_code(QX_ERR_RELATION) == 1);
    CHECK(qx_status_exit_code(QX_ERR_MATH) == 2);
}

TEST_CASE("null arguments") {
    qx_problem* p = nullptr;
    CHECK(qx_problem_load_string(nullptr, &p) == QX_ERR_INVALID_ARGUMENT);
    CHECK(qx_run(nullptr, "ext", nullptr, nullptr) == QX_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(qx_last_error()) > 0);
    qx_problem_free(nullptr);
    qx_report_free(nullptr);
    qx_string_free(nullptr);
}

TEST_CASE("load errors map to status codes") {
    qx_problem* p = nullptr;
    CHECK(qx_problem_load_file(data("bad_syntax.json").c_str(), &p) == QX_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(std::string(qx_last_error()).find("line") != std::string::npos);
    CHECK(qx_problem_load_file(data("inhomogeneous.json").c_str(), &p) == QX_ERR_RELATION);
    CHECK(qx_problem_load_string("{\"schema_version\": \"1\"}", &p) == QX_ERR_SCHEMA);
}

TEST_CASE("ext and oracle queries") {
    qx_problem* p = nullptr;
    REQUIRE(qx_problem_load_string(kJordan, &p) == QX_OK);
    size_t dims[8] = {0};
    size_t count = 0;
    REQUIRE(qx_ext_dims(p, "S", "S", nullptr, dims, 8, &count) == QX_OK);
    CHECK(count == 5);
    for (size_t i = 0; i < count; ++i) CHECK(dims[i] == 1);

    qx_run_options opts;
    qx_run_options_init(&opts);
    opts.max_degree = 6;
    opts.field = "prime:101";
    REQUIRE(qx_oracle_dims(p, "S", "S", &opts, dims, 8, &count) == QX_OK);
    CHECK(count == 7);
    CHECK(dims[6] == 1);

    // capacity smaller than the answer still reports the full count
    size_t two[2];
    REQUIRE(qx_ext_dims(p, "S", "S", &opts, two, 2, &count) == QX_OK);
    CHECK(count == 7);

    size_t h = 0;
    REQUIRE(qx_hom_dim(p, "S", "S", nullptr, &h) == QX_OK);
    CHECK(h == 1);
    CHECK(qx_hom_dim(p, "S", "T", nullptr, &h) == QX_ERR_SCHEMA);

    opts.field = "prime:4";
    CHECK(qx_ext_dims(p, "S", "S", &opts, dims, 8, &count) != QX_OK);
    qx_problem_free(p);
}

TEST_CASE("reports") {
    qx_problem* p = nullptr;
    REQUIRE(qx_problem_load_file(data("adhm.json").c_str(), &p) == QX_OK);

    qx_report* r = nullptr;
    REQUIRE(qx_run(p, "adhm", nullptr, &r) == QX_OK);
    CHECK(qx_report_exit_code(r) == 0);
    char* text = nullptr;
    REQUIRE(qx_report_format(r, QX_OUTPUT_JSON, &text) == QX_OK);
    auto json = take(text);
    CHECK(json.find("\"schema_version\": \"1\"") != std::string::npos);
    qx_report_free(r);

    REQUIRE(qx_run(p, "check", nullptr, &r) == QX_OK);
    CHECK(qx_report_exit_code(r) == 2);
    qx_report_free(r);

    CHECK(qx_run(p, "ext", nullptr, &r) == QX_ERR_RELATION);
    CHECK(r == nullptr);
    CHECK(qx_run(p, "nope", nullptr, &r) == QX_ERR_INVALID_ARGUMENT);

    size_t h[3];
    REQUIRE(qx_adhm_ext(p, "origin", "origin", nullptr, h) == QX_OK);
    CHECK(h[0] == 1);
    CHECK(h[1] == 2);
    CHECK(h[2] == 1);

    REQUIRE(qx_problem_canonical_json(p, &text) == QX_OK);
    auto canon = take(text);
    qx_problem* again = nullptr;
    REQUIRE(qx_problem_load_string(canon.c_str(), &again) == QX_OK);
    REQUIRE(qx_problem_canonical_json(again, &text) == QX_OK);
    CHECK(take(text) == canon);
    qx_problem_free(again);
    qx_problem_free(p);
}

TEST_CASE("error documents") {
    char* text = nullptr;
    REQUIRE(qx_format_error(QX_ERR_SCHEMA, "bad \"key\"", QX_OUTPUT_JSON, &text) == QX_OK);
    auto json = take(text);
    CHECK(json.find("QX_ERR_SCHEMA") != std::string::npos);
    CHECK(json.find("bad \\\"key\\\"") != std::string::npos);
    REQUIRE(qx_format_error(QX_ERR_PARSE, "oops", QX_OUTPUT_TABLE, &text) == QX_OK);
    CHECK(take(text) == "error: QX_ERR_PARSE: oops\n");
}
