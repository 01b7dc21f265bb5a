#include "gridtester/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace gridtester {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kI64Min = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kI64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(__int128 v) {
    if (v < kI64Min || v > kI64Max)
        throw UsageError("rational overflow: value does not fit exact 64-bit arithmetic");
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_i64(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError("cannot parse rational: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-__int128(num_));
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return make(__int128(num_) * o.den_ + __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make(__int128(num_) * o.den_ - __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make(__int128(num_) * o.num_, __int128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw UsageError("rational division by zero");
    return make(__int128(num_) * o.den_, __int128(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return __int128(num_) * o.den_ < __int128(o.num_) * den_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw UsageError("cannot parse rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t p = parse_i64(text.substr(0, slash), text);
        std::int64_t q = parse_i64(text.substr(slash + 1), text);
        return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (fp.empty()) throw UsageError("cannot parse rational: '" + std::string(text) + "'");
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip.remove_prefix(1);
        __int128 scale = 1;
        for (char c : fp) {
            if (c < '0' || c > '9')
                throw UsageError("cannot parse rational: '" + std::string(text) + "'");
            scale *= 10;
            if (scale > kI64Max) throw UsageError("decimal literal too long: '" + std::string(text) + "'");
        }
        std::int64_t whole = ip.empty() ? 0 : parse_i64(ip, text);
        std::int64_t frac = parse_i64(fp, text);
        __int128 num = __int128(whole) * scale + frac;
        if (neg) num = -num;
        return make(num, scale);
    }
    return Rational(parse_i64(text, text), 1);
}

}  // namespace gridtester
