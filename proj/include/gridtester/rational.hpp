#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gridtester {

// Bad inputs, violated preconditions, exceeded exact-solve caps.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Reaching one of these means the library
// disagrees with itself; callers should treat it as a counterexample, not
// recover.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Exact rational on checked 64-bit words. All values in this library are
// desk-scale; anything that overflows int64 after reduction is reported as a
// usage error rather than silently wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT implicit
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

    // Accepts "p", "p/q", and exact decimals like "-0.25".
    static Rational parse(std::string_view text);

    double to_double() const { return double(num_) / double(den_); }

private:
    static Rational make(__int128 num, __int128 den);
    std::int64_t num_;  // reduced, sign carried here
    std::int64_t den_;  // > 0
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace gridtester
