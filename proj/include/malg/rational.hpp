#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "malg/error.hpp"

namespace malg {

// Exact signed rational. Arbitrary precision so kernel solves and repeated
// products never overflow.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rational& r);

// Accepts "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

bool is_dyadic(const Rational& r); // denominator a power of two

// Value on the extended half-line [0, inf]. Implements the measure-theoretic
// conventions: 0*inf = 0, finite*inf = inf, x+inf = inf, and inf compares
// strictly above every finite value. Negative finite values are rejected at
// construction.
class ExtRational {
public:
    ExtRational() = default; // zero
    ExtRational(const Rational& v) : value_(v) {
        if (v < 0) throw Error("negative value on the extended half-line");
    }
    ExtRational(long v) : ExtRational(Rational(v)) {}
    ExtRational(int v) : ExtRational(Rational(v)) {}

    static ExtRational infinity() {
        ExtRational x;
        x.inf_ = true;
        return x;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    bool is_zero() const { return !inf_ && value_ == 0; }
    bool is_positive() const { return inf_ || value_ > 0; }

    // Finite value; throws if infinite.
    const Rational& value() const {
        if (inf_) throw Error("infinite value has no rational part");
        return value_;
    }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.value_ + b.value_);
    }
    ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }

    friend ExtRational operator*(const ExtRational& a, const ExtRational& b) {
        // 0*inf = inf*0 = 0 by convention.
        if (a.is_zero() || b.is_zero()) return ExtRational();
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.value_ * b.value_);
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return inf_ ? "inf" : rat_str(value_); }

private:
    bool inf_ = false;
    Rational value_{};
};

// Accepts what parse_rational does, plus "inf". Rejects negatives.
std::optional<ExtRational> parse_ext_rational(const std::string& text);

} // namespace malg
