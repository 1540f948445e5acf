#include "field.hpp"

#include <cctype>

namespace quivext {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::MissingTwistEntry: return "MissingTwistEntry";
        case ErrorCode::InhomogeneousRelation: return "InhomogeneousRelation";
        case ErrorCode::NonParallelRelation: return "NonParallelRelation";
        case ErrorCode::InvalidRelation: return "InvalidRelation";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::CutoffExceeded: return "CutoffExceeded";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::BlockInconsistency: return "BlockInconsistency";
        case ErrorCode::ComplexBroken: return "ComplexBroken";
        case ErrorCode::SingularConnectingMap: return "SingularConnectingMap";
        case ErrorCode::HasRelations: return "HasRelations";
        case ErrorCode::UnsupportedRank: return "UnsupportedRank";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::RelationViolated: return "RelationViolated";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31))
        fail(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) +
                                             " is not a prime below 2^31");
    FieldSpec s;
    s.kind = Kind::prime;
    s.p = p;
    return s;
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "rationals" || text == "Q") return rationals();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        if (digits.empty() || digits.size() > 10)
            fail(ErrorCode::InvalidArgument, "bad field spec '" + std::string(text) + "'");
        std::uint64_t p = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(ErrorCode::InvalidArgument, "bad field spec '" + std::string(text) + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (p >= (1ull << 31))
            fail(ErrorCode::InvalidArgument, "field characteristic too large");
        return prime(static_cast<std::uint32_t>(p));
    }
    fail(ErrorCode::InvalidArgument,
         "bad field spec '" + std::string(text) + "' (expected rational or prime:P)");
}

std::string FieldSpec::to_string() const {
    return kind == Kind::rationals ? "rational" : "prime:" + std::to_string(p);
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        fail(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

Rationals::value_type Rationals::parse(std::string_view text) const {
    return parse_rational(text);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31))
        fail(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) +
                                             " is not a prime below 2^31");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) fail(ErrorCode::InvalidArgument, "division by zero");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
    mpq_class q = parse_rational(text);
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % pz;
    mpz_class den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0)
        fail(ErrorCode::ParseError,
             "scalar '" + std::string(text) + "' has a denominator divisible by " + std::to_string(p_));
    return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

}  // namespace quivext
