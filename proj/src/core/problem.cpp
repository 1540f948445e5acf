#include "problem.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "adhm.hpp"
#include "ext_engine.hpp"
#include "resolution_oracle.hpp"

namespace quivext {

using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
    fail(ErrorCode::SchemaViolation, where + ": " + msg);
}

void only_keys(const ojson& obj, const std::string& where, std::initializer_list<const char*> keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) schema(where, "unknown key '" + it.key() + "'");
    }
}

const ojson& member(const ojson& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(where, std::string("missing key '") + key + "'");
    return *it;
}

std::string as_string(const ojson& v, const std::string& where) {
    if (!v.is_string()) schema(where, "expected a string");
    return v.get<std::string>();
}

std::uint64_t as_count(const ojson& v, const std::string& where) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
        if (v.get<long long>() < 0) schema(where, "expected a nonnegative integer");
        return static_cast<std::uint64_t>(v.get<long long>());
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
            schema(where, "expected a nonnegative integer");
        return std::stoull(s);
    }
    schema(where, "expected a nonnegative integer");
}

std::string scalar_text(const ojson& v, const std::string& where) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_number_integer())
        s = v.dump();
    else
        schema(where, "scalars must be strings such as \"-3/4\" or integers");
    try {
        return parse_rational(s).get_str();
    } catch (const Error& e) {
        fail(ErrorCode::ParseError, where + ": " + e.what());
    }
}

bool is_scalar(const ojson& v) { return v.is_string() || v.is_number_integer(); }

MatrixText parse_matrix(const ojson& v, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!v.is_array()) schema(where, "expected a matrix (array of rows)");
    if (v.size() != rows)
        schema(where, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                          std::to_string(v.size()) + " rows");
    MatrixText m{rows, cols, {}};
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = v[r];
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!row.is_array()) schema(rw, "expected a row array");
        if (row.size() != cols)
            schema(rw, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c) m.entries.push_back(scalar_text(row[c], rw + "[" + std::to_string(c) + "]"));
    }
    return m;
}

ojson matrix_json(const MatrixText& m) {
    ojson out = ojson::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.entries[r * m.cols + c]);
        out.push_back(std::move(row));
    }
    return out;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

void parse_quiver(Problem& p, const ojson& q) {
    const std::string w = "quiver";
    if (!q.is_object()) schema(w, "expected an object");
    only_keys(q, w, {"vertices", "arrows"});
    const auto& vs = member(q, "vertices", w);
    if (!vs.is_array()) schema(w + ".vertices", "expected an array of labels");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], w + ".vertices[" + std::to_string(i) + "]"));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    if (q.contains("arrows")) {
        const auto& as = q["arrows"];
        if (!as.is_array()) schema(w + ".arrows", "expected an array");
        for (std::size_t i = 0; i < as.size(); ++i) {
            const std::string aw = w + ".arrows[" + std::to_string(i) + "]";
            if (!as[i].is_object()) schema(aw, "expected {name, tail, head}");
            only_keys(as[i], aw, {"name", "tail", "head"});
            arrows.emplace_back(as_string(member(as[i], "name", aw), aw + ".name"),
                                as_string(member(as[i], "tail", aw), aw + ".tail"),
                                as_string(member(as[i], "head", aw), aw + ".head"));
        }
    }
    try {
        p.quiver = Quiver(std::move(vertices), arrows);
    } catch (const Error& e) {
        fail(e.code(), w + ": " + e.what());
    }
}

void parse_twist(Problem& p, const ojson& t) {
    const std::string w = "twist";
    if (!t.is_object()) schema(w, "expected an object mapping arrows to basis names");
    Twist tw;
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string aw = w + "." + it.key();
        if (!it->is_array()) schema(aw, "expected an array of basis names");
        std::vector<std::string> names;
        for (std::size_t k = 0; k < it->size(); ++k) names.push_back(as_string((*it)[k], aw + "[" + std::to_string(k) + "]"));
        tw.basis[it.key()] = std::move(names);
    }
    try {
        p.expanded = expand_twist(p.quiver, tw);
    } catch (const Error& e) {
        fail(e.code(), w + ": " + e.what());
    }
    p.twist = std::move(tw);
}

void parse_relations(Problem& p, const ojson& rels) {
    const std::string w = "relations";
    if (!rels.is_array()) schema(w, "expected an array of relations");
    for (std::size_t r = 0; r < rels.size(); ++r) {
        const std::string rw = w + "[" + std::to_string(r) + "]";
        if (!rels[r].is_array()) schema(rw, "expected an array of {coeff, word} terms");
        std::vector<RelationTermSpec> terms;
        for (std::size_t k = 0; k < rels[r].size(); ++k) {
            const auto& term = rels[r][k];
            const std::string tw = rw + "[" + std::to_string(k) + "]";
            if (!term.is_object()) schema(tw, "expected {coeff, word}");
            only_keys(term, tw, {"coeff", "word"});
            std::string coeff = term.contains("coeff") ? scalar_text(term["coeff"], tw + ".coeff") : "1";
            std::string text = as_string(member(term, "word", tw), tw + ".word");
            Word word;
            try {
                word = p.expanded.parse_word(text);
            } catch (const Error& e) {
                fail(e.code(), tw + ".word: " + e.what());
            }
            terms.push_back({coeff, std::move(word)});
        }
        p.relations.generators.push_back(std::move(terms));
    }
    // validates composability, homogeneity and parallelism
    (void)bind_relations(p.expanded, p.relations, Rationals{});
}

void parse_representations(Problem& p, const ojson& reps) {
    const std::string w = "representations";
    if (!reps.is_object()) schema(w, "expected an object of named representations");
    const Quiver& q = p.expanded;
    for (auto it = reps.begin(); it != reps.end(); ++it) {
        const std::string rw = w + "." + it.key();
        const auto& r = *it;
        if (!r.is_object()) schema(rw, "expected {dims, maps}");
        only_keys(r, rw, {"dims", "maps"});
        RepresentationText rt;
        rt.name = it.key();
        rt.dims.assign(q.num_vertices(), 0);
        if (r.contains("dims")) {
            const auto& d = r["dims"];
            if (!d.is_object()) schema(rw + ".dims", "expected an object vertex -> dimension");
            for (auto dv = d.begin(); dv != d.end(); ++dv) {
                auto v = q.find_vertex(dv.key());
                if (!v) schema(rw + ".dims", "unknown vertex '" + dv.key() + "'");
                rt.dims[*v] = as_count(*dv, rw + ".dims." + dv.key());
            }
        }
        rt.maps.assign(q.num_arrows(), std::nullopt);
        if (r.contains("maps")) {
            const auto& m = r["maps"];
            if (!m.is_object()) schema(rw + ".maps", "expected an object arrow -> matrix");
            for (auto mv = m.begin(); mv != m.end(); ++mv) {
                auto a = q.find_arrow(mv.key());
                if (!a) schema(rw + ".maps", "unknown arrow '" + mv.key() + "'");
                const Arrow& arr = q.arrow(*a);
                rt.maps[*a] = parse_matrix(*mv, rt.dims[arr.head], rt.dims[arr.tail], rw + ".maps." + mv.key());
            }
        }
        p.representations.push_back(std::move(rt));
    }
}

std::vector<MatrixText> parse_matrix_list(const ojson& v, std::size_t n, const std::string& where) {
    if (!v.is_array()) schema(where, "expected a matrix or a list of matrices");
    bool single = v.empty() || (v[0].is_array() && (v[0].empty() || is_scalar(v[0][0])));
    if (single) return {parse_matrix(v, n, n, where)};
    std::vector<MatrixText> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(parse_matrix(v[k], n, n, where + "[" + std::to_string(k) + "]"));
    return out;
}

void parse_adhm(Problem& p, const ojson& adhm) {
    const std::string w = "adhm";
    if (!adhm.is_object()) schema(w, "expected an object of named instances");
    for (auto it = adhm.begin(); it != adhm.end(); ++it) {
        const std::string aw = w + "." + it.key();
        if (!it->is_object()) schema(aw, "expected {n, X, Y}");
        only_keys(*it, aw, {"n", "X", "Y"});
        AdhmText a;
        a.name = it.key();
        a.n = as_count(member(*it, "n", aw), aw + ".n");
        a.X = parse_matrix_list(member(*it, "X", aw), a.n, aw + ".X");
        a.Y = parse_matrix_list(member(*it, "Y", aw), a.n, aw + ".Y");
        p.adhm.push_back(std::move(a));
    }
}

void parse_options(Problem& p, const ojson& o) {
    const std::string w = "options";
    if (!o.is_object()) schema(w, "expected an object");
    only_keys(o, w, {"max_degree", "margin", "seed", "nilpotency_bound"});
    if (o.contains("max_degree")) p.options.max_degree = as_count(o["max_degree"], w + ".max_degree");
    if (o.contains("margin")) p.options.margin = as_count(o["margin"], w + ".margin");
    if (o.contains("seed")) p.options.seed = as_count(o["seed"], w + ".seed");
    if (o.contains("nilpotency_bound")) p.options.nilpotency_bound = as_count(o["nilpotency_bound"], w + ".nilpotency_bound");
}

template <class T>
bool has_name(const std::vector<T>& v, const std::string& name) {
    for (const auto& x : v)
        if (x.name == name) return true;
    return false;
}

void parse_queries(Problem& p, const ojson& qs) {
    const std::string w = "queries";
    if (!qs.is_array()) schema(w, "expected an array of {V, W}");
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const std::string qw = w + "[" + std::to_string(i) + "]";
        if (!qs[i].is_object()) schema(qw, "expected {V, W}");
        only_keys(qs[i], qw, {"V", "W"});
        Query q{as_string(member(qs[i], "V", qw), qw + ".V"), as_string(member(qs[i], "W", qw), qw + ".W")};
        bool rep = has_name(p.representations, q.V) && has_name(p.representations, q.W);
        bool adhm = has_name(p.adhm, q.V) && has_name(p.adhm, q.W);
        if (!rep && !adhm) schema(qw, "V and W must both name representations or both name adhm instances");
        p.queries.push_back(std::move(q));
    }
}

}  // namespace

Problem parse_problem(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        auto pos = what.find("syntax error");
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                        (pos == std::string::npos ? what : what.substr(pos)));
    }
    if (!doc.is_object()) schema("document", "expected a JSON object");
    only_keys(doc, "document",
              {"schema_version", "field", "quiver", "twist", "relations", "representations", "adhm", "options", "queries"});
    Problem p;
    std::string version = as_string(member(doc, "schema_version", "document"), "schema_version");
    if (version != kSchemaVersion) schema("schema_version", "unsupported version '" + version + "', expected \"1\"");
    if (doc.contains("field")) {
        try {
            p.field = FieldSpec::parse(as_string(doc["field"], "field"));
        } catch (const Error& e) {
            schema("field", e.what());
        }
    }
    parse_quiver(p, member(doc, "quiver", "document"));
    p.expanded = p.quiver;
    if (doc.contains("twist")) parse_twist(p, doc["twist"]);
    if (doc.contains("relations")) parse_relations(p, doc["relations"]);
    if (doc.contains("representations")) parse_representations(p, doc["representations"]);
    if (doc.contains("adhm")) parse_adhm(p, doc["adhm"]);
    for (const auto& r : p.representations)
        if (has_name(p.adhm, r.name)) schema("adhm." + r.name, "name already used by a representation");
    if (doc.contains("options")) parse_options(p, doc["options"]);
    if (doc.contains("queries")) parse_queries(p, doc["queries"]);
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_problem(ss.str());
    } catch (const Error& e) {
        fail(e.code(), path + ": " + e.what());
    }
}

ojson canonical_json(const Problem& p) {
    ojson doc;
    doc["schema_version"] = kSchemaVersion;
    doc["field"] = p.field.to_string();
    ojson q;
    q["vertices"] = p.quiver.vertices();
    q["arrows"] = ojson::array();
    for (const auto& a : p.quiver.arrows())
        q["arrows"].push_back({{"name", a.name}, {"tail", p.quiver.vertices()[a.tail]}, {"head", p.quiver.vertices()[a.head]}});
    doc["quiver"] = std::move(q);
    if (p.twist) {
        ojson t = ojson::object();
        for (const auto& a : p.quiver.arrows()) {
            auto it = p.twist->basis.find(a.name);
            if (it != p.twist->basis.end()) t[a.name] = it->second;
        }
        doc["twist"] = std::move(t);
    }
    doc["relations"] = ojson::array();
    for (const auto& g : p.relations.generators) {
        ojson r = ojson::array();
        for (const auto& t : g) r.push_back({{"coeff", t.coeff}, {"word", p.expanded.word_name(t.word)}});
        doc["relations"].push_back(std::move(r));
    }
    ojson reps = ojson::object();
    for (const auto& r : p.representations) {
        ojson dims = ojson::object(), maps = ojson::object();
        for (std::size_t v = 0; v < r.dims.size(); ++v) dims[p.expanded.vertices()[v]] = r.dims[v];
        for (std::size_t a = 0; a < r.maps.size(); ++a)
            if (r.maps[a]) maps[p.expanded.arrow(a).name] = matrix_json(*r.maps[a]);
        reps[r.name] = {{"dims", std::move(dims)}, {"maps", std::move(maps)}};
    }
    doc["representations"] = std::move(reps);
    ojson adhm = ojson::object();
    for (const auto& a : p.adhm) {
        auto list = [](const std::vector<MatrixText>& ms) {
            if (ms.size() == 1) return matrix_json(ms[0]);
            ojson out = ojson::array();
            for (const auto& m : ms) out.push_back(matrix_json(m));
            return out;
        };
        adhm[a.name] = {{"n", a.n}, {"X", list(a.X)}, {"Y", list(a.Y)}};
    }
    doc["adhm"] = std::move(adhm);
    doc["options"] = {{"max_degree", p.options.max_degree},
                      {"margin", p.options.margin},
                      {"seed", std::to_string(p.options.seed)},
                      {"nilpotency_bound", p.options.nilpotency_bound}};
    doc["queries"] = ojson::array();
    for (const auto& qq : p.queries) doc["queries"].push_back({{"V", qq.V}, {"W", qq.W}});
    return doc;
}

void apply_overrides(Problem& p, const RunOverrides& o) {
    if (o.field) p.field = *o.field;
    if (o.max_degree) p.options.max_degree = *o.max_degree;
    if (o.margin) p.options.margin = *o.margin;
    if (o.seed) p.options.seed = *o.seed;
}

namespace {

/** Field-bound view of a problem; builds the algebra lazily. */
template <class F>
class Session {
public:
    Session(const Problem& p, F f) : p_(p), f_(std::move(f)) {}

    const F& field() const { return f_; }
    const Quiver& quiver() const { return p_.expanded; }

    Mat<F> matrix(const MatrixText& m) const {
        Mat<F> out(f_, m.rows, m.cols);
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t c = 0; c < m.cols; ++c) {
                const auto& s = m.entries[r * m.cols + c];
                if (s != "0") out.set(r, c, f_.parse(s));
            }
        return out;
    }

    const Representation<F>& rep(const std::string& name) {
        auto it = reps_.find(name);
        if (it != reps_.end()) return it->second;
        for (const auto& rt : p_.representations)
            if (rt.name == name) {
                Representation<F> r;
                r.field = f_;
                r.dims = rt.dims;
                for (std::size_t a = 0; a < quiver().num_arrows(); ++a) {
                    const Arrow& arr = quiver().arrow(a);
                    r.maps.push_back(rt.maps[a] ? matrix(*rt.maps[a]) : Mat<F>(f_, r.dims[arr.head], r.dims[arr.tail]));
                }
                return reps_.emplace(name, std::move(r)).first->second;
            }
        fail(ErrorCode::SchemaViolation, "unknown representation '" + name + "'");
    }

    ADHMInstance<F> adhm(const std::string& name) const {
        for (const auto& a : p_.adhm)
            if (a.name == name) {
                ADHMInstance<F> inst;
                inst.field = f_;
                inst.n = a.n;
                for (const auto& m : a.X) inst.X.push_back(matrix(m));
                for (const auto& m : a.Y) inst.Y.push_back(matrix(m));
                return inst;
            }
        fail(ErrorCode::SchemaViolation, "unknown adhm instance '" + name + "'");
    }

    const RelationSet<F>& relations() {
        if (!rels_) rels_ = bind_relations(p_.expanded, p_.relations, f_);
        return *rels_;
    }

    const AlgebraModel<F>& algebra() {
        if (!model_) {
            BuildOptions bo;
            bo.max_degree = p_.options.nilpotency_bound;
            model_ = build_algebra(p_.quiver, p_.twist ? *p_.twist : Twist::trivial(p_.quiver), p_.relations, f_, bo);
        }
        return *model_;
    }

    /** Representation that must satisfy the relations. */
    const Representation<F>& module(const std::string& name) {
        const auto& r = rep(name);
        auto bad = violated_relations(quiver(), r, relations());
        if (!bad.empty())
            fail(ErrorCode::RelationViolated,
                 "representation '" + name + "' violates relation " + std::to_string(bad.front()));
        return r;
    }

    CoresolutionOptions coresolution_options(bool random = false) const {
        CoresolutionOptions o;
        o.slice.margin = p_.options.margin;
        o.random_complement = random;
        o.seed = p_.options.seed;
        return o;
    }

    const std::vector<GradedSlice<F>>& slices() {
        if (slices_.empty()) slices_ = slices_for(algebra(), p_.options.max_degree, coresolution_options().slice);
        return slices_;
    }

    const CoresolutionSegment<F>& segment(const std::string& W) {
        auto it = segments_.find(W);
        if (it != segments_.end()) return it->second;
        auto seg = coresolution(algebra(), slices(), module(W), p_.options.max_degree, coresolution_options());
        return segments_.emplace(W, std::move(seg)).first->second;
    }

    std::vector<std::size_t> ext(const std::string& V, const std::string& W) {
        const auto& seg = segment(W);
        return ext_from_segment(algebra(), seg, module(V)).dims;
    }

    std::vector<std::size_t> oracle(const std::string& V, const std::string& W) {
        return ext_dims_oracle(algebra(), module(V), module(W), p_.options.max_degree);
    }

private:
    const Problem& p_;
    F f_;
    std::optional<RelationSet<F>> rels_;
    std::optional<AlgebraModel<F>> model_;
    std::map<std::string, Representation<F>> reps_;
    std::vector<GradedSlice<F>> slices_;
    std::map<std::string, CoresolutionSegment<F>> segments_;
};

std::vector<Query> queries_of_kind(const Problem& p, bool adhm) {
    std::vector<Query> out;
    for (const auto& q : p.queries)
        if (adhm == has_name(p.adhm, q.V)) out.push_back(q);
    if (!out.empty()) return out;
    std::vector<std::string> names;
    if (adhm)
        for (const auto& a : p.adhm) names.push_back(a.name);
    else
        for (const auto& r : p.representations) names.push_back(r.name);
    for (const auto& v : names)
        for (const auto& w : names) out.push_back({v, w});
    return out;
}

template <class F>
ojson matrix_out(const Mat<F>& m) {
    const F& f = m.field();
    ojson out = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(f.format(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

ojson dims_json(const std::vector<std::size_t>& d) {
    ojson out = ojson::array();
    for (auto x : d) out.push_back(x);
    return out;
}

template <class F>
Report run_with(const std::string& cmd, const Problem& p, const F& f) {
    Session<F> s(p, f);
    Report rep;
    rep.command = cmd;
    ojson& b = rep.body;
    b["schema_version"] = kSchemaVersion;
    b["command"] = cmd;
    b["field"] = p.field.to_string();
    const bool uses_degree = cmd == "ext" || cmd == "oracle" || cmd == "coresolve";
    if (uses_degree) b["max_degree"] = p.options.max_degree;
    ojson results = ojson::array();
    bool ok = true;

    if (cmd == "check") {
        for (const auto& rt : p.representations) {
            const auto& r = s.rep(rt.name);
            auto bad = violated_relations(s.quiver(), r, s.relations());
            ojson v = ojson::array();
            for (auto i : bad) v.push_back(i);
            ok = ok && bad.empty();
            results.push_back({{"name", rt.name}, {"kind", "representation"}, {"ok", bad.empty()}, {"violated", v}});
        }
        for (const auto& at : p.adhm) {
            bool c = check_adhm(s.adhm(at.name));
            ok = ok && c;
            results.push_back({{"name", at.name}, {"kind", "adhm"}, {"ok", c}, {"violated", ojson::array()}});
        }
    } else if (cmd == "hom") {
        for (const auto& q : queries_of_kind(p, false)) {
            const auto& V = s.rep(q.V);
            const auto& W = s.rep(q.W);
            auto h = hom_basis(s.quiver(), V, W);
            ojson basis = ojson::array();
            for (std::size_t k = 0; k < h.dim(); ++k) {
                ojson comps = ojson::object();
                auto blocks = hom_components(V, W, h.basis.row(k));
                for (std::size_t i = 0; i < blocks.size(); ++i) comps[s.quiver().vertices()[i]] = matrix_out(blocks[i]);
                basis.push_back(std::move(comps));
            }
            results.push_back({{"V", q.V}, {"W", q.W}, {"dim", h.dim()}, {"basis", std::move(basis)}});
        }
    } else if (cmd == "ext") {
        for (const auto& q : queries_of_kind(p, false))
            results.push_back({{"V", q.V}, {"W", q.W}, {"dims", dims_json(s.ext(q.V, q.W))}});
    } else if (cmd == "oracle") {
        for (const auto& q : queries_of_kind(p, false)) {
            auto e = s.ext(q.V, q.W);
            auto o = s.oracle(q.V, q.W);
            ok = ok && e == o;
            results.push_back({{"V", q.V}, {"W", q.W}, {"engine", dims_json(e)}, {"oracle", dims_json(o)}, {"agree", e == o}});
        }
    } else if (cmd == "coresolve") {
        std::vector<std::string> Ws;
        for (const auto& q : queries_of_kind(p, false))
            if (std::find(Ws.begin(), Ws.end(), q.W) == Ws.end()) Ws.push_back(q.W);
        for (const auto& w : Ws) {
            const auto& seg = s.segment(w);
            auto report = verify_coresolution(s.algebra(), seg, s.module(w));
            auto alt = coresolution(s.algebra(), s.slices(), s.module(w), p.options.max_degree, s.coresolution_options(true));
            bool same = true;
            for (std::size_t k = 1; k < seg.differentials.size(); k += 2)
                same = same && seg.differentials[k] == alt.differentials[k];
            ojson terms = ojson::array();
            for (const auto& t : seg.terms) terms.push_back(t.layout.dim());
            ojson checks = ojson::array();
            for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            checks.push_back({{"name", "random_complement_agrees"}, {"ok", same}, {"detail", same ? "" : "odd differentials differ"}});
            ok = ok && report.ok() && same;
            results.push_back({{"W", w}, {"term_dims", terms}, {"ok", report.ok() && same}, {"checks", checks}});
        }
    } else if (cmd == "adhm") {
        for (const auto& q : queries_of_kind(p, true)) {
            auto V = s.adhm(q.V), W = s.adhm(q.W);
            auto h = ext_adhm(V, W);
            results.push_back({{"V", q.V}, {"W", q.W}, {"dims", dims_json({h[0], h[1], h[2]})}, {"euler", euler_char(V, W)}});
        }
    } else if (cmd == "serre") {
        for (const auto& q : queries_of_kind(p, true)) {
            auto V = s.adhm(q.V), W = s.adhm(q.W);
            auto a = ext_adhm(V, W), c = ext_adhm(W, V);
            bool sc = serre_check(V, W);
            ok = ok && sc;
            results.push_back({{"V", q.V},
                               {"W", q.W},
                               {"dims_VW", dims_json({a[0], a[1], a[2]})},
                               {"dims_WV", dims_json({c[0], c[1], c[2]})},
                               {"serre", sc}});
        }
    } else {
        fail(ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
    }
    b["results"] = std::move(results);
    b["ok"] = ok;
    rep.exit_code = ok ? 0 : 2;
    return rep;
}

}  // namespace

Report run_command(const std::string& command, const Problem& p) {
    if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
        fail(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    return with_field(p.field, [&](const auto& f) { return run_with(command, p, f); });
}

namespace {

std::string join_dims(const ojson& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(a[i].get<std::size_t>());
    }
    return out;
}

std::string yes_no(const ojson& v) { return v.get<bool>() ? "yes" : "no"; }

class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string render() const {
        std::vector<std::size_t> w(header_.size(), 0);
        auto widen = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
        };
        widen(header_);
        for (const auto& r : rows_) widen(r);
        std::string out;
        auto line = [&](const std::vector<std::string>& r) {
            std::string l;
            for (std::size_t c = 0; c < r.size(); ++c) {
                l += r[c];
                if (c + 1 < r.size()) l += std::string(w[c] - r[c].size() + 2, ' ');
            }
            l.erase(l.find_last_not_of(' ') + 1);
            out += l + "\n";
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        return out;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string render_table(const Report& r) {
    const ojson& b = r.body;
    std::string out = b["command"].get<std::string>() + "  field " + b["field"].get<std::string>();
    if (b.contains("max_degree")) out += "  P " + std::to_string(b["max_degree"].get<std::size_t>());
    out += "\n\n";
    const ojson& res = b["results"];
    const std::string cmd = r.command;
    if (cmd == "check") {
        Table t({"name", "kind", "ok", "violated"});
        for (const auto& x : res) t.add({x["name"], x["kind"], yes_no(x["ok"]), x["violated"].empty() ? "-" : join_dims(x["violated"])});
        out += t.render();
    } else if (cmd == "hom") {
        Table t({"V", "W", "dim Hom"});
        for (const auto& x : res) t.add({x["V"], x["W"], std::to_string(x["dim"].get<std::size_t>())});
        out += t.render();
    } else if (cmd == "ext") {
        Table t({"V", "W", "p", "dim Ext^p"});
        for (const auto& x : res)
            for (std::size_t p = 0; p < x["dims"].size(); ++p)
                t.add({x["V"], x["W"], std::to_string(p), std::to_string(x["dims"][p].get<std::size_t>())});
        out += t.render();
    } else if (cmd == "oracle") {
        Table t({"V", "W", "p", "dim Ext^p", "oracle", "agree"});
        for (const auto& x : res)
            for (std::size_t p = 0; p < x["engine"].size(); ++p) {
                auto e = x["engine"][p].get<std::size_t>(), o = x["oracle"][p].get<std::size_t>();
                t.add({x["V"], x["W"], std::to_string(p), std::to_string(e), std::to_string(o), e == o ? "yes" : "no"});
            }
        out += t.render();
    } else if (cmd == "coresolve") {
        Table t({"W", "check", "ok", "detail"});
        for (const auto& x : res) {
            t.add({x["W"], "term_dims", "", join_dims(x["term_dims"])});
            for (const auto& c : x["checks"]) t.add({x["W"], c["name"], yes_no(c["ok"]), c["detail"]});
        }
        out += t.render();
    } else if (cmd == "adhm") {
        Table t({"V", "W", "h0", "h1", "h2", "euler"});
        for (const auto& x : res)
            t.add({x["V"], x["W"], std::to_string(x["dims"][0].get<std::size_t>()),
                   std::to_string(x["dims"][1].get<std::size_t>()), std::to_string(x["dims"][2].get<std::size_t>()),
                   std::to_string(x["euler"].get<long long>())});
        out += t.render();
    } else if (cmd == "serre") {
        Table t({"V", "W", "h(V,W)", "h(W,V)", "serre"});
        for (const auto& x : res) t.add({x["V"], x["W"], join_dims(x["dims_VW"]), join_dims(x["dims_WV"]), yes_no(x["serre"])});
        out += t.render();
    }
    out += "\nstatus: " + std::string(b["ok"].get<bool>() ? "ok" : "FAILED") + "\n";
    return out;
}

}  // namespace

std::string format_output(const Report& r, OutputMode mode) {
    if (mode == OutputMode::json) return (r.body.empty() ? ojson::object() : r.body).dump(2) + "\n";
    if (r.body.empty()) return "";
    return render_table(r);
}

template <class F>
AlgebraModel<F> problem_algebra(const Problem& p, const F& f) {
    return Session<F>(p, f).algebra();
}

template <class F>
Representation<F> problem_representation(const Problem& p, const std::string& name, const F& f) {
    return Session<F>(p, f).rep(name);
}

template AlgebraModel<Rationals> problem_algebra(const Problem&, const Rationals&);
template AlgebraModel<PrimeField> problem_algebra(const Problem&, const PrimeField&);
template Representation<Rationals> problem_representation(const Problem&, const std::string&, const Rationals&);
template Representation<PrimeField> problem_representation(const Problem&, const std::string&, const PrimeField&);

std::vector<std::size_t> problem_ext_dims(const Problem& p, const std::string& V, const std::string& W) {
    return with_field(p.field, [&](const auto& f) { return Session(p, f).ext(V, W); });
}

std::vector<std::size_t> problem_oracle_dims(const Problem& p, const std::string& V, const std::string& W) {
    return with_field(p.field, [&](const auto& f) { return Session(p, f).oracle(V, W); });
}

std::size_t problem_hom_dim(const Problem& p, const std::string& V, const std::string& W) {
    return with_field(p.field, [&](const auto& f) {
        Session s(p, f);
        return hom_basis(s.quiver(), s.rep(V), s.rep(W)).dim();
    });
}

std::vector<std::size_t> problem_adhm_ext(const Problem& p, const std::string& V, const std::string& W) {
    return with_field(p.field, [&](const auto& f) {
        Session s(p, f);
        auto h = ext_adhm(s.adhm(V), s.adhm(W));
        return std::vector<std::size_t>{h[0], h[1], h[2]};
    });
}

}  // namespace quivext
