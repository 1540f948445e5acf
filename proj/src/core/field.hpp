#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace quivext {

/** Ground field selector: the rationals or GF(p). */
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    /** Accepts "rational" (or "Q") and "prime:P". */
    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

class Rationals {
public:
    using value_type = mpq_class;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (is_zero(a)) fail(ErrorCode::InvalidArgument, "division by zero");
        return 1 / a;
    }
    void add_assign(value_type& y, const value_type& x) const { y += x; }
    /** y -= a*x */
    void sub_mul(value_type& y, const value_type& a, const value_type& x) const {
        mpq_class t;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x.get_mpq_t());
        mpq_sub(y.get_mpq_t(), y.get_mpq_t(), t.get_mpq_t());
    }
    /** y += a*x */
    void add_mul(value_type& y, const value_type& a, const value_type& x) const {
        mpq_class t;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x.get_mpq_t());
        mpq_add(y.get_mpq_t(), y.get_mpq_t(), t.get_mpq_t());
    }
    void mul_assign(value_type& y, const value_type& a) const { y *= a; }

    value_type parse(std::string_view text) const;
    std::string format(const value_type& a) const { return a.get_str(); }
    FieldSpec spec() const { return FieldSpec::rationals(); }
    bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    /** GF(2); exists so that empty containers of matrices can be default-built. */
    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint32_t p);
    std::uint32_t characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    bool equal(value_type a, value_type b) const { return a == b; }

    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;
    void add_assign(value_type& y, value_type x) const { y = add(y, x); }
    void sub_mul(value_type& y, value_type a, value_type x) const { y = sub(y, mul(a, x)); }
    void add_mul(value_type& y, value_type a, value_type x) const { y = add(y, mul(a, x)); }
    void mul_assign(value_type& y, value_type a) const { y = mul(y, a); }

    value_type parse(std::string_view text) const;
    std::string format(value_type a) const { return std::to_string(a); }
    FieldSpec spec() const { return FieldSpec::prime(p_); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/** Calls fn with a Rationals or PrimeField instance selected by spec. */
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rationals) return fn(Rationals{});
    return fn(PrimeField(spec.p));
}

/** Parses "a", "-a", "a/b" as an exact rational; throws ParseError otherwise. */
mpq_class parse_rational(std::string_view text);

}  // namespace quivext
