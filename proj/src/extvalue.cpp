#include "gridtester/extvalue.hpp"

namespace gridtester {

ExtValue ExtValue::operator-() const {
    switch (tag_) {
        case Tag::NegInf: return pos_inf();
        case Tag::PosInf: return neg_inf();
        case Tag::Finite: return ExtValue(-v_);
    }
    throw InternalError("bad ExtValue tag");
}

ExtValue ExtValue::operator+(const ExtValue& o) const {
    if (is_finite() && o.is_finite()) return ExtValue(v_ + o.v_);
    if (is_finite()) return o;
    if (o.is_finite()) return *this;
    if (tag_ != o.tag_) throw UsageError("undefined sum (+inf) + (-inf)");
    return *this;
}

ExtValue ExtValue::scaled(std::int64_t count) const {
    if (count < 0) throw InternalError("scaled() needs a non-negative count");
    if (count == 0) return ExtValue(Rational(0));
    if (!is_finite()) return *this;
    return ExtValue(v_ * Rational(count));
}

bool ExtValue::operator==(const ExtValue& o) const {
    if (tag_ != o.tag_) return false;
    return !is_finite() || v_ == o.v_;
}

bool ExtValue::operator<(const ExtValue& o) const {
    if (tag_ != o.tag_) return static_cast<int>(tag_) < static_cast<int>(o.tag_);
    return is_finite() && v_ < o.v_;
}

std::string ExtValue::str() const {
    switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::PosInf: return "+inf";
        case Tag::Finite: return v_.str();
    }
    throw InternalError("bad ExtValue tag");
}

ExtValue ExtValue::parse(std::string_view text) {
    if (text == "+inf" || text == "inf") return pos_inf();
    if (text == "-inf") return neg_inf();
    return ExtValue(Rational::parse(text));
}

ExtValue value_gap(const ExtValue& fx, const ExtValue& fy) {
    if (!fx.is_finite() && fx.tag() == fy.tag()) return ExtValue::neg_inf();
    return fx - fy;
}

DualValue::DualValue(ExtValue r, Rational e) : real(std::move(r)), eps(std::move(e)) {
    if (!real.is_finite() && !eps.is_zero())
        throw InternalError("infinite dual value with nonzero infinitesimal part");
}

DualValue DualValue::operator+(const DualValue& o) const {
    ExtValue r = real + o.real;
    if (!r.is_finite()) return DualValue(r);
    return DualValue(r, eps + o.eps);
}

int DualValue::sign() const {
    if (real.is_pos_inf()) return 1;
    if (real.is_neg_inf()) return -1;
    int s = real.finite().sign();
    return s != 0 ? s : eps.sign();
}

std::string DualValue::str() const {
    if (!real.is_finite() || eps.is_zero()) return real.str();
    std::string s = real.str();
    s += (eps.sign() > 0) ? " + " : " - ";
    s += abs(eps).str();
    s += "*eps";
    return s;
}

DualValue value_gap(const DualValue& fx, const DualValue& fy) {
    if (!fx.real.is_finite() && fx.real.tag() == fy.real.tag())
        return DualValue(ExtValue::neg_inf());
    return fx - fy;
}

}  // namespace gridtester
