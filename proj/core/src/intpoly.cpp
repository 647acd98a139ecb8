#include "crepant/intpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crepant {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::monomial(int degree, Int c) {
    std::vector<Int> v(degree + 1);
    v[degree] = std::move(c);
    return IntPoly(std::move(v));
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Int IntPoly::leading() const {
    if (c_.empty()) return 0;
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic requires a monic divisor");
    std::vector<Int> rem = c_;
    int dd = divisor.degree();
    if (static_cast<int>(rem.size()) - 1 < dd) return {IntPoly(), *this};
    std::vector<Int> quot(rem.size() - dd);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    auto [q, r] = divmod_monic(divisor);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.str();
        if (i > 0) {
            out << "X";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace crepant
