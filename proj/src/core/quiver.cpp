#include "quiver.hpp"

#include <set>
#include <sstream>

namespace quivext {

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
    : vertices_(std::move(vertices)) {
    for (const auto& [name, tail, head] : arrows) {
        auto t = find_vertex(tail);
        auto h = find_vertex(head);
        if (!t || !h)
            fail(ErrorCode::SchemaViolation, "arrow '" + name + "' references an unknown vertex");
        arrows_.push_back({name, *t, *h});
    }
    validate();
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    validate();
}

void Quiver::validate() {
    if (vertices_.empty()) fail(ErrorCode::SchemaViolation, "a quiver needs at least one vertex");
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) fail(ErrorCode::SchemaViolation, "duplicate vertex '" + v + "'");
    seen.clear();
    for (const auto& a : arrows_) {
        if (a.name.empty() || a.name.find(' ') != std::string::npos)
            fail(ErrorCode::SchemaViolation, "arrow names must be nonempty and contain no spaces");
        if (!seen.insert(a.name).second) fail(ErrorCode::SchemaViolation, "duplicate arrow '" + a.name + "'");
        if (a.tail >= vertices_.size() || a.head >= vertices_.size())
            fail(ErrorCode::SchemaViolation, "arrow '" + a.name + "' references an unknown vertex");
    }
}

std::optional<std::uint32_t> Quiver::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

std::optional<std::uint32_t> Quiver::find_arrow(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

std::uint32_t Quiver::vertex_index(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) fail(ErrorCode::SchemaViolation, "unknown vertex '" + name + "'");
    return *v;
}

std::uint32_t Quiver::arrow_index(const std::string& name) const {
    auto a = find_arrow(name);
    if (!a) fail(ErrorCode::SchemaViolation, "unknown arrow '" + name + "'");
    return *a;
}

bool Quiver::composable(const Word& w) const {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (arrows_[w[k]].tail != arrows_[w[k + 1]].head) return false;
    return true;
}

Word Quiver::parse_word(const std::string& text) const {
    std::istringstream in(text);
    Word w;
    std::string tok;
    while (in >> tok) w.push_back(arrow_index(tok));
    return w;
}

std::string Quiver::word_name(const Word& w) const {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += arrows_[w[k]].name;
    }
    return out;
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name != o.arrows_[i].name || arrows_[i].tail != o.arrows_[i].tail ||
            arrows_[i].head != o.arrows_[i].head)
            return false;
    return true;
}

Twist Twist::trivial(const Quiver& q) {
    Twist t;
    for (const auto& a : q.arrows()) t.basis[a.name] = {a.name};
    return t;
}

std::size_t Twist::rank(const std::string& arrow) const {
    auto it = basis.find(arrow);
    return it == basis.end() ? 0 : it->second.size();
}

Quiver expand_twist(const Quiver& q, const Twist& t) {
    std::vector<Arrow> expanded;
    for (const auto& a : q.arrows()) {
        auto it = t.basis.find(a.name);
        if (it == t.basis.end()) fail(ErrorCode::MissingTwistEntry, "twist has no entry for arrow '" + a.name + "'");
        if (it->second.empty())
            fail(ErrorCode::MissingTwistEntry, "twist entry for arrow '" + a.name + "' has rank 0");
        for (const auto& name : it->second) expanded.push_back({name, a.tail, a.head});
    }
    for (const auto& [name, names] : t.basis)
        if (!q.find_arrow(name)) fail(ErrorCode::SchemaViolation, "twist names unknown arrow '" + name + "'");
    return Quiver(q.vertices(), std::move(expanded));
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t d, std::optional<std::uint32_t> src,
                                  std::optional<std::uint32_t> tgt) {
    std::vector<Path> out;
    PathTable table(q);
    table.extend_to(d);
    for (std::size_t b = 0; b < table.num_blocks(); ++b) {
        if (src && table.block_source(b) != *src) continue;
        if (tgt && table.block_target(b) != *tgt) continue;
        for (std::uint32_t i = 0; i < table.block_size(d, b); ++i)
            out.push_back({table.word(d, b, i), table.block_source(b), table.block_target(b)});
    }
    return out;
}

std::uint64_t count_paths(const Quiver& q, std::size_t d) {
    constexpr std::uint64_t cap = ~std::uint64_t{0};
    std::size_t n = q.num_vertices();
    // ends[v] = number of paths of the current length ending at v
    std::vector<std::uint64_t> ends(n, 1);
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::uint64_t> next(n, 0);
        for (const auto& a : q.arrows()) {
            std::uint64_t add = ends[a.tail];
            next[a.head] = (cap - next[a.head] < add) ? cap : next[a.head] + add;
        }
        ends = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto v : ends) total = (cap - total < v) ? cap : total + v;
    return total;
}

PathTable::PathTable(Quiver q, std::size_t path_budget)
    : q_(std::move(q)), nv_(q_.num_vertices()), na_(q_.num_arrows()), budget_(path_budget) {
    Degree d0;
    d0.first.resize(num_blocks());
    d0.rest.resize(num_blocks());
    for (std::uint32_t i = 0; i < nv_; ++i) {
        d0.first[block_id(i, i)].push_back(kNone);
        d0.rest[block_id(i, i)].push_back(kNone);
    }
    degrees_.push_back(std::move(d0));
}

std::size_t PathTable::degree_size(std::size_t d) const {
    std::size_t n = 0;
    for (const auto& b : degrees_[d].first) n += b.size();
    return n;
}

void PathTable::extend_to(std::size_t d) {
    while (max_degree() < d) grow();
}

void PathTable::grow() {
    std::size_t d = max_degree();
    Degree next;
    next.first.resize(num_blocks());
    next.rest.resize(num_blocks());
    Degree& cur = degrees_[d];
    cur.prepend.assign(num_blocks(), {});
    for (std::size_t b = 0; b < num_blocks(); ++b) cur.prepend[b].assign(cur.first[b].size() * na_, kNone);

    std::size_t total = 0;
    for (std::uint32_t t = 0; t < nv_; ++t)
        for (std::uint32_t s = 0; s < nv_; ++s) {
            std::size_t nb = block_id(t, s);
            for (std::uint32_t a = 0; a < na_; ++a) {
                if (q_.arrow(a).head != t) continue;
                std::size_t src_block = block_id(q_.arrow(a).tail, s);
                for (std::uint32_t i = 0; i < cur.first[src_block].size(); ++i) {
                    cur.prepend[src_block][static_cast<std::size_t>(i) * na_ + a] =
                        static_cast<std::uint32_t>(next.first[nb].size());
                    next.first[nb].push_back(a);
                    next.rest[nb].push_back(i);
                }
            }
            total += next.first[nb].size();
        }
    if (total > budget_)
        fail(ErrorCode::CutoffExceeded, "path enumeration at degree " + std::to_string(d + 1) + " exceeds the budget of " +
                                            std::to_string(budget_) + " paths");

    cur.append.assign(num_blocks(), {});
    for (std::size_t b = 0; b < num_blocks(); ++b) {
        cur.append[b].assign(cur.first[b].size() * na_, kNone);
        std::uint32_t s = block_source(b);
        for (std::uint32_t i = 0; i < cur.first[b].size(); ++i)
            for (std::uint32_t a = 0; a < na_; ++a) {
                const Arrow& arr = q_.arrow(a);
                if (arr.head != s) continue;
                std::uint32_t res;
                if (d == 0) {
                    res = degrees_[0].prepend[block_id(arr.tail, arr.tail)][a];
                } else {
                    std::uint32_t f = cur.first[b][i];
                    std::uint32_t r = cur.rest[b][i];
                    std::size_t rest_block = block_id(q_.arrow(f).tail, s);
                    std::uint32_t x = degrees_[d - 1].append[rest_block][static_cast<std::size_t>(r) * na_ + a];
                    res = cur.prepend[block_id(q_.arrow(f).tail, arr.tail)][static_cast<std::size_t>(x) * na_ + f];
                }
                cur.append[b][static_cast<std::size_t>(i) * na_ + a] = res;
            }
    }
    degrees_.push_back(std::move(next));
}

std::uint32_t PathTable::concat(std::size_t d1, std::size_t b1, std::uint32_t i1, std::size_t d2, std::size_t b2,
                                std::uint32_t i2) const {
    // Peel the letters of u from the left, then prepend them onto v from the right.
    std::uint32_t letters[64];
    std::vector<std::uint32_t> spill;
    std::uint32_t* buf = letters;
    if (d1 > 64) {
        spill.resize(d1);
        buf = spill.data();
    }
    std::size_t d = d1, b = b1;
    std::uint32_t i = i1;
    for (std::size_t k = 0; k < d1; ++k) {
        std::uint32_t f = degrees_[d].first[b][i];
        buf[k] = f;
        i = degrees_[d].rest[b][i];
        b = block_id(q_.arrow(f).tail, block_source(b));
        --d;
    }
    std::size_t cd = d2, cb = b2;
    std::uint32_t ci = i2;
    for (std::size_t k = d1; k-- > 0;) {
        std::uint32_t a = buf[k];
        ci = degrees_[cd].prepend[cb][static_cast<std::size_t>(ci) * na_ + a];
        cb = block_id(q_.arrow(a).head, block_source(cb));
        ++cd;
    }
    return ci;
}

Word PathTable::word(std::size_t d, std::size_t b, std::uint32_t i) const {
    Word w;
    w.reserve(d);
    while (d > 0) {
        std::uint32_t f = degrees_[d].first[b][i];
        w.push_back(f);
        i = degrees_[d].rest[b][i];
        b = block_id(q_.arrow(f).tail, block_source(b));
        --d;
    }
    return w;
}

std::pair<std::size_t, std::uint32_t> PathTable::locate(const Word& w) {
    if (w.empty()) fail(ErrorCode::InvalidArgument, "locate needs a nonempty word");
    if (!q_.composable(w)) fail(ErrorCode::InvalidArgument, "word is not composable");
    extend_to(w.size());
    std::uint32_t v = q_.arrow(w.back()).tail;
    std::size_t b = block_id(v, v);
    std::uint32_t i = 0;
    for (std::size_t k = w.size(), d = 0; k-- > 0; ++d) {
        i = prepend(d, b, i, w[k]);
        b = block_id(q_.arrow(w[k]).head, block_source(b));
    }
    return {b, i};
}

}  // namespace quivext
