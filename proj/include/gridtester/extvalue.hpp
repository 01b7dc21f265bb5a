#pragma once

#include <string>

#include "gridtester/rational.hpp"

namespace gridtester {

// Extended exact value: -inf < every finite rational < +inf.
//
// Arithmetic rules used throughout:
//   * (+inf) + (-inf) is a hard error; nothing in the library should produce it.
//   * scaling by a non-negative integer count obeys 0 * (+-inf) = 0, which is
//     what keeps the pseudo-distance closed form finite when one leg is empty.
class ExtValue {
public:
    enum class Tag : signed char { NegInf = -1, Finite = 0, PosInf = 1 };

    constexpr ExtValue() : tag_(Tag::Finite), v_() {}
    ExtValue(Rational v) : tag_(Tag::Finite), v_(std::move(v)) {}  // NOLINT implicit
    ExtValue(std::int64_t v) : tag_(Tag::Finite), v_(v) {}         // NOLINT implicit

    static ExtValue neg_inf() { return ExtValue(Tag::NegInf); }
    static ExtValue pos_inf() { return ExtValue(Tag::PosInf); }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    const Rational& finite() const {
        if (!is_finite()) throw InternalError("finite() on infinite value");
        return v_;
    }

    ExtValue operator-() const;
    ExtValue operator+(const ExtValue& o) const;
    ExtValue operator-(const ExtValue& o) const { return *this + (-o); }

    // value * count for integer count >= 0, with 0 * (+-inf) = 0.
    ExtValue scaled(std::int64_t count) const;

    bool operator==(const ExtValue& o) const;
    bool operator!=(const ExtValue& o) const { return !(*this == o); }
    bool operator<(const ExtValue& o) const;
    bool operator>(const ExtValue& o) const { return o < *this; }
    bool operator<=(const ExtValue& o) const { return !(o < *this); }
    bool operator>=(const ExtValue& o) const { return !(*this < o); }

    // "p", "p/q", "+inf" or "-inf"; round-trips through parse().
    std::string str() const;
    static ExtValue parse(std::string_view text);

private:
    explicit ExtValue(Tag t) : tag_(t), v_() {}
    Tag tag_;
    Rational v_;
};

// f(x) - f(y) under the violation-weight convention: two infinite values of
// the same sign never witness a violation, so their gap is taken to be -inf.
ExtValue value_gap(const ExtValue& fx, const ExtValue& fy);

// Exact value with one infinitesimal: real + eps_coeff * epsilon, compared
// lexicographically. Infinite reals carry no infinitesimal part.
struct DualValue {
    ExtValue real;
    Rational eps;

    DualValue() = default;
    DualValue(ExtValue r) : real(std::move(r)), eps() {}  // NOLINT implicit
    DualValue(ExtValue r, Rational e);

    bool is_finite() const { return real.is_finite(); }

    DualValue operator-() const { return {-real, -eps}; }
    DualValue operator+(const DualValue& o) const;
    DualValue operator-(const DualValue& o) const { return *this + (-o); }

    bool operator==(const DualValue& o) const { return real == o.real && eps == o.eps; }
    bool operator!=(const DualValue& o) const { return !(*this == o); }
    bool operator<(const DualValue& o) const {
        return real < o.real || (real == o.real && eps < o.eps);
    }
    bool operator>(const DualValue& o) const { return o < *this; }
    bool operator<=(const DualValue& o) const { return !(o < *this); }
    bool operator>=(const DualValue& o) const { return !(*this < o); }

    int sign() const;
    std::string str() const;
};

DualValue value_gap(const DualValue& fx, const DualValue& fy);

}  // namespace gridtester
