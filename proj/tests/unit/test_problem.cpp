#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "problem.hpp"

using namespace qt;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(QUIVEXT_TEST_DATA) + "/" + name; }

std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(QUIVEXT_CORPUS_DIR))
        if (e.path().extension() == ".json" && e.path().filename() != "expected.json") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

const char* kJordan = R"({
  "schema_version": "1",
  "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "tail": "1", "head": "1"}]},
  "relations": [[{"word": "x x"}]],
  "representations": {"S": {"dims": {"1": 1}}},
  "options": {"max_degree": 4}
})";

}  // namespace

TEST_CASE("parse_problem accepts the fixtures") {
    auto m = load_problem(data("minimal.json"));
    CHECK(m.quiver.num_vertices() == 1);
    CHECK(m.relations.generators.empty());
    CHECK(m.field == FieldSpec::rationals());
    CHECK(m.options.max_degree == 3);

    auto a = load_problem(data("adhm.json"));
    CHECK(a.adhm.size() == 2);
    CHECK(a.relations.generators.size() == 1);
    CHECK(a.queries.size() == 2);

    auto j = parse_problem(kJordan);
    CHECK(j.representations[0].dims == std::vector<std::size_t>{1});
    CHECK_FALSE(j.representations[0].maps[0].has_value());
    CHECK(j.options.max_degree == 4);
}

TEST_CASE("parse_problem errors") {
    CHECK_ERROR_CODE(load_problem(data("inhomogeneous.json")), ErrorCode::InhomogeneousRelation);
    CHECK_ERROR_CODE(load_problem(data("no_such_file.json")), ErrorCode::ParseError);
    try {
        load_problem(data("bad_syntax.json"));
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    CHECK_ERROR_CODE(parse_problem(R"({"quiver": {"vertices": ["1"]}})"), ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "2", "quiver": {"vertices": ["1"]}})"),
                     ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "1", "quiver": {"vertices": ["1"]}, "extra": 1})"),
                     ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "1", "field": "prime:12", "quiver": {"vertices": ["1"]}})"),
                     ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "1",
        "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "tail": "1", "head": "1"}]},
        "representations": {"V": {"dims": {"1": 2}, "maps": {"x": [["1"]]}}}})"),
                     ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "1",
        "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "tail": "1", "head": "1"}]},
        "representations": {"V": {"dims": {"1": 1}, "maps": {"x": [["0.5"]]}}}})"),
                     ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "1", "quiver": {"vertices": ["1"]},
        "representations": {"V": {"dims": {"1": 1}}}, "queries": [{"V": "V", "W": "U"}]})"),
                     ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(parse_problem(R"({"schema_version": "1",
        "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "tail": "1", "head": "1"}]},
        "twist": {"y": ["y1"]}})"),
                     ErrorCode::MissingTwistEntry);
}

TEST_CASE("run_command") {
    auto j = parse_problem(kJordan);
    auto ext = run_command("ext", j);
    CHECK(ext.exit_code == 0);
    CHECK(ext.body["results"][0]["dims"] == nlohmann::ordered_json::parse("[1,1,1,1,1]"));
    auto oracle = run_command("oracle", j);
    CHECK(oracle.body["results"][0]["agree"] == true);

    auto a = load_problem(data("adhm.json"));
    auto adhm = run_command("adhm", a);
    CHECK(adhm.body["results"][0]["dims"] == nlohmann::ordered_json::parse("[1,2,1]"));
    CHECK(adhm.body["results"][1]["dims"] == nlohmann::ordered_json::parse("[0,0,0]"));
    CHECK(run_command("serre", a).body["results"][0]["serre"] == true);

    auto check = run_command("check", a);
    CHECK(check.exit_code == 2);
    CHECK(check.body["results"][0]["ok"] == false);

    CHECK_ERROR_CODE(run_command("ext", a), ErrorCode::RelationViolated);
    CHECK_ERROR_CODE(run_command("frobnicate", a), ErrorCode::InvalidArgument);

    RunOverrides o;
    o.field = FieldSpec::prime(101);
    o.max_degree = 2;
    apply_overrides(j, o);
    auto e2 = run_command("ext", j);
    CHECK(e2.body["field"] == "prime:101");
    CHECK(e2.body["results"][0]["dims"].size() == 3);
}

TEST_CASE("format_output") {
    auto m = load_problem(data("minimal.json"));
    auto hom = run_command("hom", m);
    auto table = format_output(hom, OutputMode::table);
    CHECK(table.find("status: ok") != std::string::npos);
    auto json = nlohmann::json::parse(format_output(hom, OutputMode::json));
    CHECK(json["results"].empty());

    auto j = parse_problem(kJordan);
    auto t = format_output(run_command("oracle", j), OutputMode::table);
    CHECK(t.find("agree") != std::string::npos);
}

TEST_CASE("property: canonical round trip and byte-stable output on the corpus") {
    auto files = corpus_files();
    REQUIRE(files.size() == 25);
    for (const auto& path : files) {
        CAPTURE(path);
        auto p = load_problem(path);
        auto canon = canonical_json(p).dump(2);
        auto again = parse_problem(canon);
        CHECK(canonical_json(again).dump(2) == canon);
        CHECK(again.representations == p.representations);
        CHECK(again.options == p.options);

        auto r1 = format_output(run_command("ext", p), OutputMode::json);
        auto r2 = format_output(run_command("ext", again), OutputMode::json);
        CHECK(r1 == r2);
    }
}
